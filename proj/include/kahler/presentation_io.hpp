#pragma once

// Line-oriented presentation files:
//
//   field QQ | Fp 5 | FpX 2 [var]
//   ring X:1 Y:1
//   rel X^2*Y^2 + X^5 + Y^5
//   mode local | graded | plain
//
// plus the optional lines `order grevlex | lex` and `base field | degree0`.
// `#` starts a comment at the start of a line or after whitespace.

#include <string>
#include <string_view>

#include "kahler/algebra.hpp"

namespace kahler {

// Errors are ParseError with 1-based line and column.
Presentation parse_presentation(std::string_view text);
Presentation read_presentation_file(const std::string& path);
// Reparses to an identical presentation.
std::string format_presentation(const Presentation& p);

}  // namespace kahler
