#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extalg/rational_function.hpp"

namespace extalg {

// Parses the scalar expression syntax used by catalog files and the CLI:
// rational literals ("5", "-3/4"), symbols, infix + - * /, integer powers
// with '^' (negative exponents allowed), unary minus, parentheses.
//
// `allowed_symbols` limits which names may appear; by default only the
// deformation parameter "t" and the family parameter "a" are admitted, which
// is the full scalar language of the data files. Wider symbol sets are used
// internally (automorphism parameters in action formulas).
RationalFunction parse_scalar(std::string_view text);
RationalFunction parse_scalar(std::string_view text,
                              const std::vector<std::string>& allowed_symbols);

// Parses an expression that must reduce to a rational constant.
Rational parse_rational(std::string_view text);

}  // namespace extalg
