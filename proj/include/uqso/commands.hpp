#pragma once

// Command-line front end. Verbs: relations-verify, pbw-reduce,
// commrel-verify, assoc-fuzz, rep-build, rep-verify, rep-commutant,
// embed-verify, psi-verify, params-sample.

#include <ostream>
#include <string>
#include <vector>

#include "uqso/error.hpp"

namespace uqso::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kInternal = 3,
};

/// 10 + the error kind's position; distinct for every ErrorKind.
int exit_code_for(ErrorKind kind);

/// Parses and runs one command (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace uqso::cli
