#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace qparity::cli {

enum class Format { json, csv, text };

struct RunConfig {
  std::int64_t order = 2000;
  std::int64_t oracle_bound = 60;
  Format format = Format::json;
  int jobs = 1;
  std::int64_t min_support = 20;
  bool timing = true;
};

enum ExitCode : int { success = 0, verification_failed = 1, usage_error = 2 };

/// Entry point behind the qparity executable. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qparity::cli
