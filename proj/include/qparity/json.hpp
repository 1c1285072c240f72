#pragma once

// JSON encodings shared by the CLI and the tests.
//
//   report:     {"id":"T-c8","order":4900,"status":"pass","first_failure":null,"elapsed_ms":12}
//   partitions: {"id":"c2","n":7,"pairs":[{"j":1,"parts":[6,1]},{"j":1,"parts":[3,3,1]}]}

#include <json.hpp>

#include "qparity/analysis.hpp"
#include "qparity/partitions.hpp"

namespace qparity {

void to_json(nlohmann::ordered_json& j, const VerificationReport& r);
void to_json(nlohmann::ordered_json& j, const PartitionInstance& p);
void to_json(nlohmann::ordered_json& j, const PartitionList& list);

}  // namespace qparity
