#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dops {

/// Runs one command. `args` excludes the program name.
/// Exit codes: 0 success / positive verdict, 1 negative verdict, 2 usage or validation error.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace dops
