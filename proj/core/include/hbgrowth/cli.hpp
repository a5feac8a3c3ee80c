#ifndef HBGROWTH_CLI_HPP_
#define HBGROWTH_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace hbg::cli {

// Command-line front end. `args` excludes the program name. Exit codes:
//   0  success (including inconclusive/inconsistent reports)
//   2  malformed JSON input (message carries the byte position)
//   3  schema violation (message carries the field path)
//   4  domain error from one of the library modules
// Usage errors are reported by the option parser with its own codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hbg::cli

#endif  // HBGROWTH_CLI_HPP_
