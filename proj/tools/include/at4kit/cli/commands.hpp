#ifndef AT4KIT_CLI_COMMANDS_HPP
#define AT4KIT_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace at4kit::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFindings = 1,
  kUsage = 2,
  kInput = 3,
};

/// Entry point of the `at4` tool. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace at4kit::cli

#endif  // AT4KIT_CLI_COMMANDS_HPP
