#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace topmono {

// Command-line driver behind the topmono binary. `args` excludes the
// program name. Returns the process exit code:
//   0  success, or a positive answer (top monotone / satisfiable / ok)
//   1  a negative answer (not top monotone / unsatisfiable / violation)
//   2  malformed input or bad usage
//   3  search budget exhausted
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace topmono
