#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mvlab::cli {

// Entry point shared by the binary and the tests. `args` excludes the
// program name. Exit codes: 0 success / all axioms hold, 2 some axiom
// failed, 1 usage or parameter error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mvlab::cli
