#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ein::cli {

enum class Command { kEnumerate, kClassify, kVerifyMonad, kCohomologyTable };
enum class Format { kJson, kMarkdown };

enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

struct RunConfig {
  Command command = Command::kEnumerate;
  std::optional<int> e, a, b, c;
  std::optional<std::int64_t> n, n_max;
  std::optional<int> m_min, m_max;
  std::uint32_t prime = 32003;
  std::uint64_t seed = 0;
  int trials = 3;
  int max_retries = 16;
  Format format = Format::kJson;
  std::optional<std::string> output_path;
};

struct Report {
  int exit_code = kExitOk;
  std::string text;
};

// Each command validates the parameters it needs before computing anything;
// usage and precondition failures come back as kExitUsage with a message.
Report cmd_enumerate(const RunConfig& config);
Report cmd_classify(const RunConfig& config);
Report cmd_verify_monad(const RunConfig& config);
Report cmd_cohomology_table(const RunConfig& config);

// Full front end: parses `args` (args[0] is the program name), honours
// EIN_PRIME, runs the command and writes the report to `out` or --output.
// Diagnostics and usage go to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ein::cli
