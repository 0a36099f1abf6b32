#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sft::cli {

/// Exit codes: 0 success or verdict reached, 1 domain failure (invalid
/// input object, failed check), 2 usage error.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// as `KEY: value` lines (or one JSON document with --json); diagnostics
/// go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sft::cli
