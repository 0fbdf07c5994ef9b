#pragma once

#include "seqring/ratfunc.hpp"

#include <string_view>

namespace seqring {

// Parses `+ - * / ^` expressions over integer literals and the variable z,
// with parentheses; `^` takes a non-negative integer exponent. Division by a
// sub-expression that reduces to the zero polynomial is rejected. Errors are
// reported as ParseError with the byte offset of the offending token.
RatFunc parse_ratfunc(std::string_view text);

} // namespace seqring
