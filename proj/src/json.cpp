#include "qparity/json.hpp"

namespace qparity {

void to_json(nlohmann::ordered_json& j, const VerificationReport& r) {
  j = nlohmann::ordered_json::object();
  j["id"] = r.id;
  j["order"] = r.order;
  j["status"] = r.passed ? "pass" : "fail";
  if (r.first_failure) {
    j["first_failure"] = *r.first_failure;
  } else {
    j["first_failure"] = nullptr;
  }
  j["elapsed_ms"] = r.elapsed_ms;
}

void to_json(nlohmann::ordered_json& j, const PartitionInstance& p) {
  j = nlohmann::ordered_json{{"j", p.j}, {"parts", p.parts}};
}

void to_json(nlohmann::ordered_json& j, const PartitionList& list) {
  j = nlohmann::ordered_json::object();
  j["id"] = list.id;
  j["n"] = list.n;
  j["pairs"] = nlohmann::ordered_json::array();
  for (const auto& p : list.pairs) j["pairs"].push_back(p);
}

}  // namespace qparity
