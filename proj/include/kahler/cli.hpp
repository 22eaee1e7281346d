#pragma once

// Command-line front end. Exit codes: 0 all claims pass, 1 a claim failed,
// 2 usage, parse or input error, 3 budget or dimension cap exceeded.

#include <ostream>
#include <string>
#include <vector>

namespace kahler::cli {

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kahler::cli
