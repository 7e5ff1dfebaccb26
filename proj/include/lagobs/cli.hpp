#ifndef LAGOBS_CLI_HPP
#define LAGOBS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lagobs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitFormat = 2;

/// Runs one command line (args excludes the program name). Exit codes:
/// 0 verdict produced, 1 usage or domain error, 2 input format error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lagobs::cli

#endif  // LAGOBS_CLI_HPP
