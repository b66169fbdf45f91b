#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conred::cli {

// Dispatch one invocation. Results go to out (JSON by default), errors to err
// as JSON. Returns the process exit code: 0 success, 1 failed gate or domain
// error, 2 malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace conred::cli
