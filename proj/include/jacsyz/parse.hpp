#pragma once

#include <string_view>

#include "jacsyz/poly.hpp"

namespace jacsyz {

/// Parses a homogeneous polynomial over Q.
///
/// Grammar: integer or rational literals (`3`, `-2/5` via unary minus), the
/// variables x, y, z, binary `+ - *`, unary `+ -`, parentheses, and `^` with
/// a positive integer exponent. Multiplication must be explicit.
/// Throws SyntaxError (with the offending position) or NotHomogeneous.
/// The zero polynomial parses as degree 0.
HomogPoly<RationalField> parse_poly(std::string_view text);

}  // namespace jacsyz
