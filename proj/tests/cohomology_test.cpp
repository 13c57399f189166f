#include <doctest.h>

#include "extalg/algebra.hpp"
#include "extalg/cohomology.hpp"
#include "extalg/forms.hpp"
#include "extalg/identity.hpp"
#include "extalg/rng.hpp"

using namespace extalg;

namespace {

const Identity& ra() { return Identity::builtin("right-alternative"); }

Algebra<Rational> r2s1() {
    Algebra<Rational> a(2);
    a.c(0, 0, 1) = Rational(1);
    return a;
}

Algebra<Rational> r3s1() {
    Algebra<Rational> a(3);
    a.c(0, 0, 1) = Rational(1);
    return a;
}

Matrix<Rational> random_form(std::size_t n, Rng& rng) {
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(rng.int_in(-3, 3));
    }
    return m;
}

}  // namespace

TEST_CASE("cohomology of the zero algebra is unconstrained") {
    Algebra<Rational> zero(2);
    CohomologySummary<Rational> s = cohomology(zero, ra());
    CHECK(s.z2.dim() == 4);
    CHECK(s.b2.dim() == 0);
    CHECK(s.h2_dim == 4);
}

TEST_CASE("cohomology of e1*e1 = e2 by hand") {
    CohomologySummary<Rational> s = cohomology(r2s1(), ra());
    CHECK(s.z2.dim() == 2);
    CHECK(s.b2.dim() == 1);
    CHECK(s.h2_dim == 1);
    CHECK(s.b2.contains(vectorize_form(parse_constant_form("D11", 2))));
    CHECK(form_str(s.representatives[0]) == "D12+D21");

    // Extending by that class gives the one-generated dimension 3 algebra.
    Algebra<Rational> ext = central_extension(r2s1(), s.representatives);
    Algebra<Rational> expected(3);
    expected.c(0, 0, 1) = Rational(1);
    expected.c(0, 1, 2) = Rational(1);
    expected.c(1, 0, 2) = Rational(1);
    CHECK(ext == expected);
}

TEST_CASE("coboundaries are cocycles") {
    CohomologySummary<Rational> s = cohomology(r3s1(), ra());
    CHECK(s.z2.contains(s.b2));
    CHECK(s.h2_dim == s.z2.dim() - s.b2.dim());
}

TEST_CASE("cohomology refuses a base that breaks the identity") {
    Algebra<Rational> a = r2s1();
    CHECK_THROWS_AS(cohomology(a, Identity::builtin("anticommutative")), PreconditionError);
}

TEST_CASE("extension by a cocycle keeps the identity, a non-cocycle breaks it") {
    Algebra<Rational> a = r3s1();
    CohomologySummary<Rational> s = cohomology(a, ra());
    Rng rng(19);
    int cocycles_seen = 0, outsiders_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        Matrix<Rational> theta = random_form(3, rng);
        bool inside = s.z2.contains(vectorize_form(theta));
        Algebra<Rational> ext = central_extension(a, {theta});
        CHECK(check_identity(ext, ra()).holds == inside);
        (inside ? cocycles_seen : outsiders_seen) += 1;
    }
    CHECK(outsiders_seen > 0);

    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> coords(9, Rational(0));
        for (std::size_t i = 0; i < s.z2.dim(); ++i) {
            vec_add_scaled(coords, Rational(rng.int_in(-3, 3)), s.z2.basis().row(i));
        }
        Algebra<Rational> ext = central_extension(a, {form_from_coordinates(3, coords)});
        CHECK(check_identity(ext, ra()).holds);
        ++cocycles_seen;
    }
    CHECK(cocycles_seen >= 40);
}

TEST_CASE("extension structure") {
    Algebra<Rational> a = r3s1();
    Matrix<Rational> theta = parse_constant_form("D12+D21+D33", 3);
    Algebra<Rational> ext = central_extension(a, {theta});
    CHECK(ext.dim() == 4);
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t k = 0; k < 4; ++k) {
            CHECK(ext.c(3, j, k) == Rational(0));
            CHECK(ext.c(j, 3, k) == Rational(0));
        }
    }
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(ext.c(i, j, 3) == theta(i, j));
            for (std::size_t k = 0; k < 3; ++k) CHECK(ext.c(i, j, k) == a.c(i, j, k));
        }
    }

    CHECK_THROWS_AS(central_extension(a, {parse_constant_form("D11", 2)}), DimensionError);
    CHECK_THROWS_AS(central_extension_checked(a, ra(), {parse_constant_form("D23", 3)}),
                    CocycleError);
    CHECK(central_extension_checked(a, ra(), {theta}) == ext);
}

TEST_CASE("cocycle annihilator") {
    Matrix<Rational> theta = parse_constant_form("D12+D21", 3);
    Subspace<Rational> ann = cocycle_annihilator(3, std::vector<Matrix<Rational>>{theta});
    CHECK(ann.dim() == 1);
    CHECK(ann.contains(std::vector<Rational>{Rational(0), Rational(0), Rational(1)}));

    Subspace<Rational> both = cocycle_annihilator(
        3, std::vector<Matrix<Rational>>{theta, parse_constant_form("D33", 3)});
    CHECK(both.dim() == 0);
}

TEST_CASE("annihilator of an extension splits") {
    Algebra<Rational> a = r3s1();
    Rng rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix<Rational> theta = random_form(3, rng);
        Algebra<Rational> ext = central_extension(a, {theta});
        Subspace<Rational> core =
            intersect(annihilator(a), cocycle_annihilator(3, std::vector<Matrix<Rational>>{theta}));
        std::vector<std::vector<Rational>> gens;
        for (auto v : core.basis_vectors()) {
            v.push_back(Rational(0));
            gens.push_back(std::move(v));
        }
        gens.push_back({Rational(0), Rational(0), Rational(0), Rational(1)});
        CHECK(annihilator(ext) == Subspace<Rational>::span_of_vectors(4, gens));
    }
}
