#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <stdexcept>
#include <string_view>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "qparity/analysis.hpp"
#include "qparity/identities.hpp"
#include "qparity/json.hpp"
#include "qparity/partitions.hpp"
#include "qparity/theorems.hpp"

namespace qparity::cli {

namespace {

using json = nlohmann::ordered_json;

class UnknownId : public std::runtime_error {
 public:
  UnknownId(const std::string& what, std::vector<std::string> known)
      : std::runtime_error(what), known_(std::move(known)) {}
  const std::vector<std::string>& known() const noexcept { return known_; }

 private:
  std::vector<std::string> known_;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += sep;
    out += items[i];
  }
  return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& items, std::string_view sep) {
  std::vector<std::string> parts;
  for (const auto& v : items) parts.push_back(std::to_string(v));
  return join(parts, sep);
}

bool contains(const std::vector<std::string>& ids, std::string_view id) {
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

void require_partition(std::string_view id) {
  const auto ids = partition_ids();
  if (!contains(ids, id)) throw UnknownId("unknown partition id: " + std::string(id), ids);
}

const IdentityEntry& require_identity(std::string_view id) {
  try {
    return find_identity(id);
  } catch (const std::invalid_argument&) {
    throw UnknownId("unknown identity id: " + std::string(id), identity_ids());
  }
}

const Theorem& require_theorem(std::string_view id) {
  try {
    return find_theorem(id);
  } catch (const std::invalid_argument&) {
    throw UnknownId("unknown theorem id: " + std::string(id), theorem_ids());
  }
}

/// Runs tasks on up to `jobs` threads; results come back in task order.
std::vector<VerificationReport> run_all(const std::vector<std::function<VerificationReport()>>& tasks,
                                        int jobs) {
  std::vector<VerificationReport> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
  };
  const auto threads = static_cast<std::size_t>(std::max(1, jobs));
  if (threads == 1 || tasks.size() <= 1) {
    worker();
    return results;
  }
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < std::min(threads, tasks.size()); ++t) pool.emplace_back(worker);
  pool.clear();
  return results;
}

void emit_reports(std::vector<VerificationReport> reports, const RunConfig& cfg,
                  std::ostream& out) {
  if (cfg.format == Format::csv) out << "id,order,status,first_failure,elapsed_ms\n";
  for (auto& r : reports) {
    if (!cfg.timing) r.elapsed_ms = 0;
    switch (cfg.format) {
      case Format::json:
        out << json(r).dump() << '\n';
        break;
      case Format::csv:
        out << r.id << ',' << r.order << ',' << (r.passed ? "pass" : "fail") << ','
            << (r.first_failure ? std::to_string(*r.first_failure) : "") << ',' << r.elapsed_ms
            << '\n';
        break;
      case Format::text:
        out << (r.passed ? "PASS " : "FAIL ") << r.id << " (checked up to q^" << r.order << ")";
        if (r.first_failure) out << ": first failure at n = " << *r.first_failure;
        out << '\n';
        break;
    }
  }
}

int verdict(const std::vector<VerificationReport>& reports) {
  const bool ok =
      std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
  return ok ? success : verification_failed;
}

void emit_residue_list(const json& header, const std::vector<std::int64_t>& residues,
                       const RunConfig& cfg, std::ostream& out) {
  switch (cfg.format) {
    case Format::json: {
      json j = header;
      j["residues"] = residues;
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "residue\n";
      for (auto r : residues) out << r << '\n';
      break;
    case Format::text:
      out << "residues: " << join_numbers(residues, ", ") << '\n';
      break;
  }
}

int cmd_coeffs(const std::string& target, bool mod2, const RunConfig& cfg, std::ostream& out) {
  const auto order = static_cast<std::size_t>(cfg.order);
  std::vector<std::string> values;
  auto push_parity = [&](const ParitySeries& p) {
    for (std::size_t n = 0; n <= p.order(); ++n) values.emplace_back(p[n] ? "1" : "0");
  };
  auto push_exact = [&](const Series& s) {
    for (const auto& c : s.coefficients()) values.push_back(c.get_str());
  };

  if (contains(partition_ids(), target)) {
    mod2 ? push_parity(gf_parity(target, order)) : push_exact(gf_series(target, order));
  } else {
    const auto colon = target.rfind(':');
    std::string id = target;
    IdentitySide side = IdentitySide::lhs;
    if (colon != std::string::npos) {
      id = target.substr(0, colon);
      const std::string s = target.substr(colon + 1);
      if (s == "rhs") {
        side = IdentitySide::rhs;
      } else if (s != "lhs") {
        throw UsageError("identity side must be lhs or rhs, got '" + s + "'");
      }
    }
    std::vector<std::string> known = partition_ids();
    for (const auto& i : identity_ids()) known.push_back(i + ":lhs"), known.push_back(i + ":rhs");
    const IdentityEntry* entry = nullptr;
    try {
      entry = &find_identity(id);
    } catch (const std::invalid_argument&) {
      throw UnknownId("unknown series id: " + target, known);
    }
    mod2 ? push_parity(evaluate_parity(*entry, side, order))
         : push_exact(evaluate_exact(*entry, side, order));
  }

  if (cfg.format == Format::csv) out << "n,value\n";
  for (std::size_t n = 0; n < values.size(); ++n) {
    switch (cfg.format) {
      case Format::json:
        out << json{{"n", n}, {"value", values[n]}}.dump() << '\n';
        break;
      case Format::csv:
        out << n << ',' << values[n] << '\n';
        break;
      case Format::text:
        out << "q^" << n << ": " << values[n] << '\n';
        break;
    }
  }
  return success;
}

int cmd_verify(const std::vector<std::string>& what, bool all, const RunConfig& cfg,
               std::ostream& out) {
  const auto order = static_cast<std::size_t>(cfg.order);
  std::vector<std::function<VerificationReport()>> tasks;
  if (all) {
    if (!what.empty()) throw UsageError("verify --all takes no further arguments");
    for (const auto& e : identity_catalog()) {
      tasks.emplace_back([&e, order] { return verify_identity(e, order); });
    }
    for (const auto& t : theorem_registry()) {
      tasks.emplace_back([&t, order] { return verify_theorem(t, order); });
    }
  } else {
    if (what.size() != 2) throw UsageError("usage: verify identity|theorem <id> | verify --all");
    if (what[0] == "identity") {
      const auto& e = require_identity(what[1]);
      tasks.emplace_back([&e, order] { return verify_identity(e, order); });
    } else if (what[0] == "theorem") {
      const auto& t = require_theorem(what[1]);
      tasks.emplace_back([&t, order] { return verify_theorem(t, order); });
    } else {
      throw UsageError("verify expects 'identity' or 'theorem', got '" + what[0] + "'");
    }
  }
  auto reports = run_all(tasks, cfg.jobs);
  const int code = verdict(reports);
  emit_reports(std::move(reports), cfg, out);
  return code;
}

int cmd_scan(const std::string& id, std::int64_t modulus, const RunConfig& cfg,
             std::ostream& out) {
  require_partition(id);
  if (modulus < 2) throw UsageError("--mod must be >= 2");
  const auto residues = scan_zero_progressions(gf_parity(id, static_cast<std::size_t>(cfg.order)),
                                               modulus, cfg.min_support);
  json header{{"id", id}, {"modulus", modulus}, {"order", cfg.order},
              {"min_support", cfg.min_support}};
  emit_residue_list(header, residues, cfg, out);
  return success;
}

int cmd_enumerate(const std::string& id, std::int64_t n, const RunConfig& cfg,
                  std::ostream& out) {
  require_partition(id);
  if (n < 0) throw UsageError("n must be non-negative");
  if (n > cfg.oracle_bound) {
    throw UsageError("n = " + std::to_string(n) + " exceeds the oracle bound " +
                     std::to_string(cfg.oracle_bound) + " (raise --oracle-bound)");
  }
  const PartitionList list{id, n, bruteforce_list(id, n, cfg.oracle_bound)};
  switch (cfg.format) {
    case Format::json:
      out << json(list).dump() << '\n';
      break;
    case Format::csv:
      out << "j,parts\n";
      for (const auto& p : list.pairs) out << p.j << ',' << join_numbers(p.parts, " ") << '\n';
      break;
    case Format::text:
      out << id << "(" << n << ") = " << list.pairs.size() << '\n';
      for (const auto& p : list.pairs) {
        out << "  j=" << p.j << ": " << (p.parts.empty() ? "()" : join_numbers(p.parts, "+"))
            << '\n';
      }
      break;
  }
  return success;
}

int cmd_residues(std::int64_t alpha, std::int64_t beta, std::int64_t gamma,
                 std::int64_t denominator, std::int64_t modulus, const RunConfig& cfg,
                 std::ostream& out) {
  if (modulus < 2) throw UsageError("--mod must be >= 2");
  if (denominator < 1) throw UsageError("--delta must be >= 1");
  const auto residues = quad_residues_mod(alpha, beta, modulus, IndexDomain::all, gamma,
                                          denominator);
  json header{{"alpha", alpha}, {"beta", beta},       {"gamma", gamma},
              {"delta", denominator}, {"modulus", modulus}};
  emit_residue_list(header, residues, cfg, out);
  return success;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncated q-series engine and mod-2 congruence checker for restricted partitions",
               "qparity"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  const std::map<std::string, Format> formats{
      {"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};
  bool no_timing = false;
  app.add_option("--order,-N", cfg.order, "Truncation order N")
      ->envname("QPARITY_ORDER")
      ->check(CLI::PositiveNumber);
  auto* oracle_opt = app.add_option("--oracle-bound", cfg.oracle_bound, "Largest n the brute-force enumerator accepts")
      ->envname("QPARITY_ORACLE_BOUND")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "Output format: json, csv or text")
      ->envname("QPARITY_FORMAT")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--jobs,-j", cfg.jobs, "Parallel verification workers")
      ->envname("QPARITY_JOBS")
      ->check(CLI::PositiveNumber);
  app.add_option("--min-support", cfg.min_support,
                 "Checked indices a progression needs before scan may report it")
      ->envname("QPARITY_MIN_SUPPORT")
      ->check(CLI::PositiveNumber);
  app.add_flag("--no-timing", no_timing, "Report elapsed_ms as 0 for byte-stable output");

  std::string target;
  bool mod2 = false;
  auto* coeffs = app.add_subcommand("coeffs", "Expand a generating function or identity side");
  coeffs->add_option("target", target, "c1..c12, or <identity-id>[:lhs|:rhs]")->required();
  coeffs->add_flag("--mod2", mod2, "Emit coefficients reduced mod 2");

  std::vector<std::string> verify_args;
  bool verify_all = false;
  auto* verify = app.add_subcommand("verify", "Verify identities or theorems up to the order");
  verify->add_option("what", verify_args, "identity <id> | theorem <id>");
  verify->add_flag("--all", verify_all, "Verify every identity and theorem");

  std::string scan_id;
  std::int64_t scan_mod = 0;
  auto* scan = app.add_subcommand("scan", "Find progressions m n + r with only even coefficients");
  scan->add_option("id", scan_id, "Partition function id")->required();
  scan->add_option("--mod", scan_mod, "Modulus m")->required();

  std::string enum_id;
  std::int64_t enum_n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "List the (j, partition) pairs counted at n");
  enumerate->add_option("id", enum_id, "Partition function id")->required();
  enumerate->add_option("n", enum_n, "Size")->required();

  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::int64_t gamma = 0;
  std::int64_t delta = 1;
  std::int64_t res_mod = 0;
  auto* residues = app.add_subcommand("residues", "Residues of (a j^2 + b j + c)/d modulo m");
  residues->add_option("--alpha", alpha)->required();
  residues->add_option("--beta", beta)->required();
  residues->add_option("--gamma", gamma);
  residues->add_option("--delta", delta);
  residues->add_option("--mod", res_mod)->required();

  std::vector<const char*> argv{"qparity"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? success : usage_error;
  }
  cfg.timing = !no_timing;

  try {
    // The default bound shrinks with a small order; an explicit one must fit.
    if (oracle_opt->count() == 0) cfg.oracle_bound = std::min(cfg.oracle_bound, cfg.order);
    if (cfg.oracle_bound > cfg.order) {
      throw UsageError("--oracle-bound may not exceed --order");
    }
    if (*coeffs) return cmd_coeffs(target, mod2, cfg, out);
    if (*verify) return cmd_verify(verify_args, verify_all, cfg, out);
    if (*scan) return cmd_scan(scan_id, scan_mod, cfg, out);
    if (*enumerate) return cmd_enumerate(enum_id, enum_n, cfg, out);
    if (*residues) return cmd_residues(alpha, beta, gamma, delta, res_mod, cfg, out);
  } catch (const UnknownId& e) {
    err << "error: " << e.what() << "\nknown ids: " << join(e.known(), " ") << '\n';
    return usage_error;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  return usage_error;
}

}  // namespace qparity::cli
