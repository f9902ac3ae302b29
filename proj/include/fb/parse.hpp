#pragma once

#include <span>
#include <string>
#include <string_view>

#include "fb/polynomial.hpp"

namespace fb {

// Parses integer literals, variable names, + - * ^ and parentheses; '^'
// binds tightest and takes a non-negative integer literal. Errors carry the
// 1-based column within `text`; `line` is echoed into ParseError for callers
// parsing multi-line files.
Polynomial parse_polynomial(std::string_view text, const PrimeField& field,
                            std::span<const std::string> names, std::size_t line = 1);

bool is_identifier(std::string_view name);

}  // namespace fb
