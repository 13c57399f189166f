#include <doctest.h>

#include <cstdlib>

#include "extalg/action.hpp"
#include "extalg/catalog.hpp"
#include "extalg/convert.hpp"
#include "extalg/forms.hpp"
#include "extalg/rng.hpp"

using namespace extalg;

namespace {

const Catalog& shared_catalog() {
    static Catalog cat = [] {
        const char* dir = std::getenv("EXTALG_CATALOG");
        return load_catalog(dir ? dir : "catalog");
    }();
    return cat;
}

}  // namespace

TEST_CASE("sampled automorphisms preserve the product") {
    const Catalog& cat = shared_catalog();
    Algebra<Rational> base = to_rational(cat.require("R3s_1").algebra);
    const AutomorphismShapeRecord& shape = cat.require_shape("R3s_1");
    Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix<Rational> phi = sample_automorphism(shape.matrix, shape.parameters, base, rng);
        CHECK_FALSE(determinant(phi).is_zero());
        // Columns are images: phi(e_i) phi(e_j) must equal phi(e_i e_j).
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                std::vector<Rational> lhs =
                    base.multiply(phi.transpose().row(i), phi.transpose().row(j));
                std::vector<Rational> rhs = mat_vec(phi, base.basis_product(i, j));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("action claims match the recomputation") {
    const Catalog& cat = shared_catalog();
    Algebra<Rational> base = to_rational(cat.require("R3s_1").algebra);
    const AutomorphismShapeRecord& shape = cat.require_shape("R3s_1");

    std::vector<std::string> symbols = shape.parameters;
    symbols.push_back("c1");
    Matrix<RationalFunction> theta = parse_form("c1*(D12+D21)", 3, symbols);
    std::vector<ActionClaim> claims{{"leading", "D12+D21", "c1*x^3", true},
                                    {"upper", "D13", "c1*w*x", true},
                                    {"lower", "D31", "c1*w*x", true},
                                    {"corner", "D33", "0", true}};
    ActionCheck chk = check_action_claims(base, shape.matrix, theta, claims, symbols);
    CHECK(chk.decomposed);
    CHECK(chk.all_as_expected);
    for (const ActionClaimResult& r : chk.claims) CHECK(r.matched);

    // A wrong formula is flagged, and a misprint recorded with
    // expected_match = false counts as behaving as expected.
    claims[0].formula = "c1*x^2";
    chk = check_action_claims(base, shape.matrix, theta, claims, symbols);
    CHECK_FALSE(chk.claims[0].matched);
    CHECK_FALSE(chk.all_as_expected);
    claims[0].expected_match = false;
    chk = check_action_claims(base, shape.matrix, theta, claims, symbols);
    CHECK_FALSE(chk.claims[0].matched);
    CHECK(chk.all_as_expected);
}

TEST_CASE("orbit sampling recognizes a manufactured equivalence") {
    const Catalog& cat = shared_catalog();
    Algebra<Rational> base = to_rational(cat.require("R3s_1").algebra);
    const AutomorphismShapeRecord& shape = cat.require_shape("R3s_1");
    Matrix<Rational> theta = parse_constant_form("D12+D21+D33", 3);

    Rng pick(7);
    Matrix<Rational> phi = sample_automorphism(shape.matrix, shape.parameters, base, pick);
    Matrix<Rational> moved = act_on_cocycle(phi, theta);

    Rng replay(7);
    OrbitEvidence ev = orbit_distinctness_evidence(base, shape.matrix, shape.parameters,
                                                   theta, moved, 5, replay);
    CHECK(ev.equivalence_found);
    CHECK(ev.samples_used == 1);
}

TEST_CASE("orbit sampling reports distinctness as evidence") {
    const Catalog& cat = shared_catalog();
    Algebra<Rational> base = to_rational(cat.require("R3s_1").algebra);
    const AutomorphismShapeRecord& shape = cat.require_shape("R3s_1");
    Matrix<Rational> a = parse_constant_form("D12+D21+D33", 3);
    Matrix<Rational> b = parse_constant_form("D12+D21+D31", 3);
    Rng rng(21);
    OrbitEvidence ev =
        orbit_distinctness_evidence(base, shape.matrix, shape.parameters, a, b, 50, rng);
    CHECK_FALSE(ev.equivalence_found);
    CHECK(ev.samples_used == 50);
    CHECK(ev.detail == "no equivalence found in 50 samples");
}
