#include <doctest.h>

#include "extalg/algebra.hpp"
#include "extalg/catalog.hpp"
#include "extalg/invariants.hpp"
#include "extalg/rng.hpp"

using namespace extalg;

namespace {

Algebra<Rational> r3_1() {
    Algebra<Rational> a(3);
    a.c(0, 0, 1) = Rational(1);
    a.c(0, 1, 2) = Rational(1);
    a.c(1, 0, 2) = Rational(1);
    return a;
}

Matrix<Rational> random_invertible(std::size_t n, Rng& rng) {
    while (true) {
        Matrix<Rational> m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(rng.int_in(-3, 3));
        }
        if (!determinant(m).is_zero()) return m;
    }
}

}  // namespace

TEST_CASE("invariants of the zero algebra") {
    Algebra<Rational> zero(3);
    InvariantVector v = invariant_vector(zero);
    CHECK(v.dim == 3);
    CHECK(v.dim_a2 == 0);
    CHECK(v.nil_index == 2);
    CHECK(v.dim_ann == 3);
    CHECK(v.dim_der == 9);
    CHECK(v.commutative);
    CHECK(v.associative);
    CHECK(v.right_alternative);
}

TEST_CASE("invariants of e1*e1 = e2") {
    Algebra<Rational> a(2);
    a.c(0, 0, 1) = Rational(1);
    InvariantVector v = invariant_vector(a);
    CHECK(v.dim_a2 == 1);
    CHECK(v.dim_a3 == 0);
    CHECK(v.nil_index == 3);
    CHECK(v.dim_ann == 1);
    // D(e1) = c1 e1 + c2 e2 forces D(e2) = 2 c1 e2, nothing else.
    CHECK(v.dim_der == 2);
    CHECK(v.commutative);
    CHECK(v.associative);
}

TEST_CASE("derivations close under commutator") {
    DerivationAlgebra<Rational> der = derivation_algebra(r3_1());
    CHECK(der.dim == der.basis.size());
    Matrix<Rational> sys = derivation_constraints(r3_1());
    for (const Matrix<Rational>& d : der.basis) {
        CHECK(vec_is_zero(mat_vec(sys, d.data())));
    }
    for (const Matrix<Rational>& x : der.basis) {
        for (const Matrix<Rational>& y : der.basis) {
            Matrix<Rational> bracket = x * y - y * x;
            CHECK(vec_is_zero(mat_vec(sys, bracket.data())));
        }
    }
}

TEST_CASE("power chain of the chain algebra") {
    Algebra<Rational> a = generate_Rn(4);
    PowerChain<Rational> chain = power_chain(a);
    CHECK(chain.dims() == std::vector<std::size_t>{4, 3, 2, 1, 0});
    CHECK(chain.nil_index == 5);
    CHECK(is_nilpotent(a));

    Algebra<Rational> loop(1);
    loop.c(0, 0, 0) = Rational(1);
    CHECK_FALSE(is_nilpotent(loop));
    CHECK_FALSE(invariant_vector(loop).nil_index.has_value());
}

TEST_CASE("generated subalgebra detects one-generated algebras") {
    Algebra<Rational> a = generate_Rn(4);
    std::vector<Rational> e1{Rational(1), Rational(0), Rational(0), Rational(0)};
    CHECK(generated_subalgebra(a, {e1}) == Subspace<Rational>::full(4));

    Algebra<Rational> flat(3);
    flat.c(0, 0, 2) = Rational(1);
    CHECK(generated_subalgebra(flat, {{Rational(1), Rational(0), Rational(0)}}).dim() == 2);
}

TEST_CASE("change of basis follows the row convention") {
    Algebra<Rational> a(2);
    a.c(0, 0, 1) = Rational(1);
    Matrix<Rational> swap(2, 2);
    swap(0, 1) = Rational(1);
    swap(1, 0) = Rational(1);
    Algebra<Rational> moved = change_basis(a, swap);
    CHECK(moved.c(1, 1, 0) == Rational(1));
    CHECK(moved.c(0, 0, 1) == Rational(0));
    CHECK_THROWS_AS(change_basis(a, Matrix<Rational>(2, 2)), SingularMatrixError);
}

TEST_CASE("invariant vector is a basis invariant") {
    Rng rng(13);
    Algebra<Rational> a = r3_1();
    InvariantVector v = invariant_vector(a);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix<Rational> p = random_invertible(3, rng);
        CHECK(invariant_vector(change_basis(a, p)) == v);
    }
}

TEST_CASE("first difference names the separating field") {
    InvariantVector a = invariant_vector(generate_Rn(4));
    InvariantVector b = a;
    CHECK(a.first_difference(b).empty());
    b.dim_der += 1;
    CHECK(a.first_difference(b) == "dim Der");
    b = a;
    b.commutative = !b.commutative;
    CHECK(a.first_difference(b) == "commutative");
}
