#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symdg {

// Exit codes: 0 all pass, 1 counterexample found, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symdg
