#ifndef WARING_TOOLS_CLI_HPP
#define WARING_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace waring::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

/// argv[0] is the program name.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace waring::cli

#endif
