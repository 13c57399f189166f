#pragma once

#include <string>
#include <vector>

#include "extalg/algebra.hpp"
#include "extalg/cohomology.hpp"
#include "extalg/rational.hpp"
#include "extalg/rational_function.hpp"
#include "extalg/rng.hpp"

namespace extalg {

// One displayed component of an automorphism action on cocycles: the
// coefficient of `form` in the transformed cocycle is claimed to equal
// `formula`. Claims recorded from sources with known misprints carry
// expected_match = false; the checker flags them either way.
struct ActionClaim {
    std::string label;
    std::string form;     // constant D-notation pattern
    std::string formula;  // scalar expression in the declared symbols
    bool expected_match = true;
};

struct ActionClaimResult {
    std::string label;
    bool matched = false;
    bool as_expected = false;
    std::string actual;
    std::string claimed;
};

struct ActionCheck {
    // Whether the transformed cocycle decomposes over the claim patterns
    // modulo coboundaries; claim coefficients are undefined otherwise.
    bool decomposed = false;
    std::vector<ActionClaimResult> claims;
    bool all_as_expected = false;
    std::string detail;
};

// Computes phi^T theta phi symbolically and compares its coefficients over
// the claim patterns, modulo the coboundary space of the base algebra, with
// the claimed formulas. Exact comparison over the rational-function field.
ActionCheck check_action_claims(const Algebra<Rational>& base,
                                const Matrix<RationalFunction>& phi,
                                const Matrix<RationalFunction>& theta,
                                const std::vector<ActionClaim>& claims,
                                const std::vector<std::string>& symbols);

// Substitutes random small rationals for the shape parameters until the
// result is invertible and an automorphism of `base`. Throws
// PreconditionError when no valid sample is found within the retry budget,
// which indicates a wrong shape rather than bad luck.
Matrix<Rational> sample_automorphism(const Matrix<RationalFunction>& shape,
                                     const std::vector<std::string>& parameters,
                                     const Algebra<Rational>& base, Rng& rng);

struct OrbitEvidence {
    bool equivalence_found = false;
    std::size_t samples_used = 0;
    std::string detail;
};

// Sampling evidence that theta_a and theta_b lie in distinct orbits of the
// automorphism action on cocycle classes: draws `samples` automorphisms from
// the shape and compares the projective class coordinates of phi . theta_a
// against those of theta_b. Finding a match proves equivalence; exhausting
// the samples without one is evidence of distinctness, not proof.
OrbitEvidence orbit_distinctness_evidence(const Algebra<Rational>& base,
                                          const Matrix<RationalFunction>& shape,
                                          const std::vector<std::string>& parameters,
                                          const Matrix<Rational>& theta_a,
                                          const Matrix<Rational>& theta_b, std::size_t samples,
                                          Rng& rng);

}  // namespace extalg
