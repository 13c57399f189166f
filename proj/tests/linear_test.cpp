#include <doctest.h>

#include "extalg/matrix.hpp"
#include "extalg/rational_function.hpp"
#include "extalg/rng.hpp"
#include "extalg/subspace.hpp"

using namespace extalg;

namespace {

Matrix<Rational> random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix<Rational> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(rng.int_in(-9, 9));
    }
    return m;
}

Matrix<Rational> random_invertible(std::size_t n, Rng& rng) {
    while (true) {
        Matrix<Rational> m = random_matrix(n, n, rng);
        if (!determinant(m).is_zero()) return m;
    }
}

}  // namespace

TEST_CASE("rref of a known matrix") {
    Matrix<Rational> m(3, 4, {Rational(0), Rational(2), Rational(4), Rational(2),
                              Rational(1), Rational(1), Rational(1), Rational(1),
                              Rational(2), Rational(4), Rational(6), Rational(4)});
    RrefResult<Rational> r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1});
    Matrix<Rational> expected(3, 4, {Rational(1), Rational(0), Rational(-1), Rational(0),
                                     Rational(0), Rational(1), Rational(2), Rational(1),
                                     Rational(0), Rational(0), Rational(0), Rational(0)});
    CHECK(r.matrix == expected);
    CHECK(rref(r.matrix).matrix == r.matrix);
}

TEST_CASE("rank plus nullity is the column count") {
    Rng rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t rows = 1 + rng.below(6);
        std::size_t cols = 1 + rng.below(7);
        Matrix<Rational> m = random_matrix(rows, cols, rng);
        RrefResult<Rational> r = rref(m);
        Matrix<Rational> null_basis = kernel(m);
        CHECK(r.rank + null_basis.rows() == cols);
        for (std::size_t k = 0; k < null_basis.rows(); ++k) {
            CHECK(vec_is_zero(mat_vec(m, null_basis.row(k))));
        }
    }
}

TEST_CASE("inverse and determinant") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + rng.below(5);
        Matrix<Rational> p = random_invertible(n, rng);
        CHECK(p * inverse(p) == Matrix<Rational>::identity(n));
        CHECK(inverse(p) * p == Matrix<Rational>::identity(n));
    }
    Matrix<Rational> singular(2, 2, {Rational(1), Rational(2), Rational(2), Rational(4)});
    CHECK(determinant(singular) == Rational(0));
    CHECK_THROWS_AS(inverse(singular), SingularMatrixError);
}

TEST_CASE("subspace canonical basis") {
    std::vector<std::vector<Rational>> gens{{Rational(2), Rational(0), Rational(2)},
                                            {Rational(1), Rational(0), Rational(1)},
                                            {Rational(0), Rational(0), Rational(0)}};
    Subspace<Rational> s = Subspace<Rational>::span_of_vectors(3, gens);
    CHECK(s.dim() == 1);
    CHECK(s.basis()(0, 0) == Rational(1));
    CHECK(s.contains(std::vector<Rational>{Rational(-3), Rational(0), Rational(-3)}));
    CHECK_FALSE(s.contains(std::vector<Rational>{Rational(1), Rational(1), Rational(1)}));

    // The same span from different generators produces the same object.
    std::vector<std::vector<Rational>> other{{Rational(-5), Rational(0), Rational(-5)}};
    CHECK(s == Subspace<Rational>::span_of_vectors(3, other));
}

TEST_CASE("subspace dimension formula") {
    Rng rng(33);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t ambient = 2 + rng.below(5);
        Subspace<Rational> u =
            Subspace<Rational>::span(random_matrix(1 + rng.below(4), ambient, rng));
        Subspace<Rational> w =
            Subspace<Rational>::span(random_matrix(1 + rng.below(4), ambient, rng));
        CHECK(sum(u, w).dim() + intersect(u, w).dim() == u.dim() + w.dim());
        CHECK(sum(u, w).contains(u));
        CHECK(sum(u, w).contains(w));
        CHECK(u.contains(intersect(u, w)));
    }
}

TEST_CASE("reduction modulo a subspace is canonical") {
    Rng rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        Subspace<Rational> s = Subspace<Rational>::span(random_matrix(2, 4, rng));
        std::vector<Rational> v = random_matrix(1, 4, rng).row(0);
        std::vector<Rational> shifted = v;
        for (std::size_t i = 0; i < s.dim(); ++i) {
            vec_add_scaled(shifted, Rational(rng.int_in(-5, 5)), s.basis().row(i));
        }
        CHECK(s.reduce(v) == s.reduce(shifted));
        CHECK(s.contains(s.reduce(v)) == s.contains(v));
    }
}

TEST_CASE("complement representatives extend the small space") {
    Rng rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t ambient = 3 + rng.below(4);
        Subspace<Rational> sup = Subspace<Rational>::span(random_matrix(ambient, ambient, rng));
        Subspace<Rational> sub = Subspace<Rational>::span_of_vectors(
            ambient, {sup.dim() > 0 ? sup.basis().row(0) : std::vector<Rational>(ambient)});
        std::vector<std::vector<Rational>> reps = complement_representatives(sub, sup);
        CHECK(reps.size() == sup.dim() - sub.dim());
        Subspace<Rational> rebuilt = sub;
        for (const auto& v : reps) {
            CHECK_FALSE(rebuilt.contains(v));
            rebuilt = sum(rebuilt, Subspace<Rational>::span_of_vectors(ambient, {v}));
        }
        CHECK(rebuilt == sup);
    }
}

TEST_CASE("linear algebra over the rational function field") {
    RationalFunction t = RationalFunction::variable(symbols::t());
    Matrix<RationalFunction> m(2, 2);
    m(0, 0) = t;
    m(0, 1) = RationalFunction(1);
    m(1, 0) = RationalFunction(1);
    m(1, 1) = t;
    // Invertible as a matrix over Q(t) even though it degenerates at t = 1.
    CHECK(rref(m).rank == 2);
    CHECK(kernel(m).rows() == 0);
    CHECK(determinant(m) == t * t - RationalFunction(1));
    CHECK(inverse(m) * m == Matrix<RationalFunction>::identity(2));

    Subspace<RationalFunction> line = Subspace<RationalFunction>::span_of_vectors(
        2, {{t, RationalFunction(1)}});
    CHECK(line.contains(std::vector<RationalFunction>{t * t, t}));
    CHECK_FALSE(line.contains(std::vector<RationalFunction>{t, t}));
}
