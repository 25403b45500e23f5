#pragma once

#include <cstddef>
#include <string_view>

#include "mixlink/mixed_poly.hpp"

namespace mixlink {

/// Parses the polynomial input grammar.
///
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor (['*'] factor)*     juxtaposition before z, w, ~, (, i
///   factor  := ['-'|'+'] power
///   power   := primary ['^' e]            e >= 1
///   primary := 'zK' | 'wK' | '~' primary | number | 'i' | '(' expr ')'
///   number  := digits ['/' digits] ['i']
///
/// Variables are 1-based; `wK` and `zK` are interchangeable; whitespace is
/// ignored. A coefficient such as `(1/2+3/4 i)` is an ordinary parenthesised
/// expression. If `n` is 0 the dimension is the largest variable index seen.
///
/// Throws ParseError (with byte offset) on syntax errors, out-of-range
/// variable indices and non-positive exponents.
MixedPolynomial parse_polynomial(std::string_view text, std::size_t n = 0);

/// Largest variable index referenced in `text` (0 if none).
std::size_t infer_dimension(std::string_view text);

}  // namespace mixlink
