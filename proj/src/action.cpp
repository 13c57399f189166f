#include "extalg/action.hpp"

#include "extalg/convert.hpp"
#include "extalg/errors.hpp"
#include "extalg/forms.hpp"
#include "extalg/scalar_expr.hpp"
#include "extalg/subspace.hpp"

namespace extalg {

ActionCheck check_action_claims(const Algebra<Rational>& base,
                                const Matrix<RationalFunction>& phi,
                                const Matrix<RationalFunction>& theta,
                                const std::vector<ActionClaim>& claims,
                                const std::vector<std::string>& symbols) {
    const std::size_t n = base.dim();
    Matrix<RationalFunction> transformed = act_on_cocycle(phi, theta);

    std::vector<Matrix<Rational>> patterns;
    patterns.reserve(claims.size());
    for (const ActionClaim& claim : claims) {
        patterns.push_back(parse_constant_form(claim.form, n));
    }

    const Subspace<Rational> b2 = coboundary_space(base);
    const std::size_t k = claims.size();
    const std::size_t unknowns = k + b2.dim();

    Matrix<Rational> columns(n * n, unknowns);
    for (std::size_t s = 0; s < k; ++s) {
        std::vector<Rational> v = vectorize_form(patterns[s]);
        for (std::size_t r = 0; r < n * n; ++r) columns(r, s) = v[r];
    }
    for (std::size_t s = 0; s < b2.dim(); ++s) {
        for (std::size_t r = 0; r < n * n; ++r) columns(r, k + s) = b2.basis()(s, r);
    }
    if (rank(columns) != unknowns) {
        throw PreconditionError("claim patterns are dependent modulo coboundaries");
    }

    Matrix<RationalFunction> augmented(n * n, unknowns + 1);
    for (std::size_t r = 0; r < n * n; ++r) {
        for (std::size_t s = 0; s < unknowns; ++s) {
            augmented(r, s) = RationalFunction(columns(r, s));
        }
    }
    std::vector<RationalFunction> target = vectorize_form(transformed);
    for (std::size_t r = 0; r < n * n; ++r) augmented(r, unknowns) = target[r];

    RrefResult<RationalFunction> solved = rref(augmented);
    ActionCheck out;
    out.decomposed = true;
    for (std::size_t p : solved.pivot_columns) {
        if (p == unknowns) out.decomposed = false;
    }
    if (!out.decomposed) {
        out.detail = "transformed cocycle does not decompose over the claim patterns";
        return out;
    }

    std::vector<RationalFunction> coefficients(unknowns);
    for (std::size_t r = 0; r < solved.pivot_columns.size(); ++r) {
        coefficients[solved.pivot_columns[r]] = solved.matrix(r, unknowns);
    }

    out.all_as_expected = true;
    for (std::size_t s = 0; s < k; ++s) {
        RationalFunction expected = parse_scalar(claims[s].formula, symbols);
        ActionClaimResult r;
        r.label = claims[s].label;
        r.matched = coefficients[s] == expected;
        r.as_expected = r.matched == claims[s].expected_match;
        r.actual = coefficients[s].str();
        r.claimed = expected.str();
        if (!r.as_expected) out.all_as_expected = false;
        out.claims.push_back(std::move(r));
    }
    return out;
}

Matrix<Rational> sample_automorphism(const Matrix<RationalFunction>& shape,
                                     const std::vector<std::string>& parameters,
                                     const Algebra<Rational>& base, Rng& rng) {
    std::size_t n = shape.rows();
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::map<SymbolId, Rational> assignment;
        for (const std::string& p : parameters) {
            assignment[symbols::intern(p)] = rng.nonzero_rational(3, 2);
        }
        Matrix<Rational> phi(n, n);
        bool singular_entry = false;
        for (std::size_t r = 0; r < n && !singular_entry; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                try {
                    phi(r, c) = shape(r, c).evaluate(assignment);
                } catch (const ZeroDivisionError&) {
                    singular_entry = true;
                    break;
                }
            }
        }
        if (singular_entry) continue;
        if (rref(phi).rank != n) continue;
        if (!verify_automorphism(base, phi)) continue;
        return phi;
    }
    throw PreconditionError("no invertible automorphism found in the shape after 200 samples");
}

OrbitEvidence orbit_distinctness_evidence(const Algebra<Rational>& base,
                                          const Matrix<RationalFunction>& shape,
                                          const std::vector<std::string>& parameters,
                                          const Matrix<Rational>& theta_a,
                                          const Matrix<Rational>& theta_b, std::size_t samples,
                                          Rng& rng) {
    Subspace<Rational> b2 = coboundary_space(base);
    std::vector<Rational> target = projective_class_coordinates(b2, theta_b);
    OrbitEvidence out;
    for (std::size_t s = 0; s < samples; ++s) {
        Matrix<Rational> phi = sample_automorphism(shape, parameters, base, rng);
        Matrix<Rational> moved = act_on_cocycle(phi, theta_a);
        out.samples_used = s + 1;
        if (projective_class_coordinates(b2, moved) == target) {
            out.equivalence_found = true;
            out.detail = "sample " + std::to_string(s + 1) +
                         " maps the first class onto the second";
            return out;
        }
    }
    out.detail = "no equivalence found in " + std::to_string(samples) + " samples";
    return out;
}

}  // namespace extalg
