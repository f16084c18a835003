#ifndef VACBROWN_TOOLS_CLI_HPP
#define VACBROWN_TOOLS_CLI_HPP

#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vacbrown/quantities.hpp"

namespace vacbrown::cli {

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,  // adjudication grid did not pass
  kDomain = 2,
  kSingular = 3,
  kConvergence = 4,
  kRegime = 5,
};

struct CommandResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name).
CommandResult run(const std::vector<std::string>& args);

/// Exit code for an exception thrown by the library.
int exit_code_for(const std::exception& e);
/// Status word used in sweep rows for the same exception.
std::string status_for(const std::exception& e);

/// Parses "1.5", "2um", "3e-10m", "1A": bare numbers are natural units
/// (hbar/mc); suffixed values are converted with the particle, which is then
/// required. Suffixes: m, cm, mm, um, nm, A.
double parse_length(std::string_view text, const std::optional<ParticleParams>& particle);
/// Same for times; suffixes: s, ms, us, ns, ps, fs.
double parse_time(std::string_view text, const std::optional<ParticleParams>& particle);

inline constexpr const char* kDefaultReportPath = "vacbrown_adjudication.json";

}  // namespace vacbrown::cli

#endif  // VACBROWN_TOOLS_CLI_HPP
