#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringplane {

// Full command-line driver. args excludes the program name. All output goes
// to the given streams and is byte-deterministic for a fixed invocation.
//
// Exit codes: 0 success, 1 a verification came back false (or an internal
// invariant broke), 2 usage or input error, 3 capacity bound exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringplane
