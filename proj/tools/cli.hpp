#ifndef XLIE_TOOLS_CLI_HPP_
#define XLIE_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace xlie::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kNegative = 1;  // invalid, violated, not isoclinic
constexpr int kUsage = 2;     // usage or document error
constexpr int kBudget = 3;

constexpr int kSchemaVersion = 1;

// args excludes the program name. The report goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xlie::cli

#endif  // XLIE_TOOLS_CLI_HPP_
