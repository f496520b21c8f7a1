#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gaptrack::interface {

// Runs one CLI invocation (args exclude the program name) and returns the
// process exit code: 0 success or supported, 1 usage or validation error,
// 2 verification failure.
int dispatch(std::vector<std::string> args, std::ostream& out,
             std::ostream& err);

}  // namespace gaptrack::interface
