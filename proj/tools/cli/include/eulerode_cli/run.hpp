#ifndef EULERODE_CLI_RUN_HPP
#define EULERODE_CLI_RUN_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "eulerode/errors.hpp"

namespace eulerode::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kResonance = 2,
  kInvalid = 3,
  kDegenerate = 4,
  kResidual = 5,
};

int exit_code_for(ErrorKind kind);

// Runs one command line (without the program name). Documents go to out,
// diagnostics to err; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulerode::cli

#endif  // EULERODE_CLI_RUN_HPP
