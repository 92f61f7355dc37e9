#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace multitile {

// Front door used by the multitile binary and by the tests.
// args excludes the program name. JSON report goes to out, human summary
// to err. Exit code: 0 affirmative, 1 negative verdict, 2 usage/input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multitile
