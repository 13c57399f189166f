#pragma once

#include <string_view>
#include <vector>

#include "extalg/matrix.hpp"
#include "extalg/rational.hpp"
#include "extalg/rational_function.hpp"

namespace extalg {

// Parses the bilinear-form notation of the catalog files: linear
// combinations of the basis forms Dij (value 1 on the pair (e_i, e_j)),
// with scalar coefficients in the shared expression syntax. Examples:
// "D12+D21+D33", "a*D11+D21+D22", "a1*(D12+D21)+a2*D13".
// Coefficients may use any name in `symbols`; D followed by two digits is
// reserved for the basis forms.
Matrix<RationalFunction> parse_form(std::string_view text, std::size_t dim,
                                    const std::vector<std::string>& symbols);

// Same, restricted to constant coefficients.
Matrix<Rational> parse_constant_form(std::string_view text, std::size_t dim);

// Renders a form back into D-notation, entries in row-major order:
// "D12+D21-2*D33". The zero form renders as "0".
std::string form_str(const Matrix<Rational>& form);
std::string form_str(const Matrix<RationalFunction>& form);

}  // namespace extalg
