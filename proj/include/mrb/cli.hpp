#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mrb::cli {

enum ExitCode : int { pass = 0, fail = 1, input_error = 2 };

// args excludes the program name. JSON goes to out, a short summary to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mrb::cli
