#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "extalg/algebra.hpp"
#include "extalg/convert.hpp"
#include "extalg/identity.hpp"
#include "extalg/rational_function.hpp"
#include "extalg/rng.hpp"

namespace extalg {

// Rows are the parametric basis vectors E_i^t expressed in the source basis,
// the same row convention change_basis uses.
using ParametricBasis = Matrix<RationalFunction>;

struct PoleEntry {
    std::size_t i = 0, j = 0, k = 0;
};

struct PoleReport {
    std::vector<PoleEntry> entries;
    std::string str() const;
};

Algebra<RationalFunction> apply_parametric_basis(const Algebra<RationalFunction>& a,
                                                 const ParametricBasis& e);

// Entrywise limit of the transformed constants as t goes to 0. The result
// may still involve other symbols (a parametric family stays parametric).
using LimitOutcome = std::variant<Algebra<RationalFunction>, PoleReport>;
LimitOutcome degeneration_limit(const Algebra<RationalFunction>& a, const ParametricBasis& e);

struct DegenerationRow {
    std::string name;
    std::string source;
    std::string target;
    ParametricBasis basis;
    std::vector<Rational> alpha_samples;
};

struct DegenerationOutcome {
    bool verified = false;
    // "symbolic" or "alpha samples 2, 3, 5" on success; pole or entrywise
    // mismatch description on failure.
    std::string detail;
};

// Symbolic check first; when a pole blocks the fully symbolic limit the row
// is retried at each alpha sample. Equality with the target is exact.
DegenerationOutcome verify_degeneration_row(const Algebra<RationalFunction>& source,
                                            const Algebra<RationalFunction>& target,
                                            const ParametricBasis& basis,
                                            const std::vector<Rational>& alpha_samples);

struct BasisSearchResult {
    std::optional<Matrix<Rational>> basis;
    std::uint64_t trials_used = 0;

    bool found() const { return basis.has_value(); }
};

// Trial 0 is the identity matrix; later trials draw entries from the box
// {-3..3} over denominators 1 and 2, resampling until invertible. A miss
// after the budget is evidence, never proof.
BasisSearchResult closed_set_basis_search(const Algebra<Rational>& a, const ClosedSet& set,
                                          std::uint64_t trials, std::uint64_t seed);

// Random invertible lower-triangular matrix, used by the stability spot
// tests for closed sets.
Matrix<Rational> random_lower_triangular(std::size_t n, Rng& rng);

}  // namespace extalg
