#pragma once

#include <map>

#include "extalg/algebra.hpp"
#include "extalg/matrix.hpp"
#include "extalg/rational_function.hpp"

namespace extalg {

// Lifts and specializations between the two scalar levels. Catalog data is
// stored over RationalFunction (entries may mention t or a); most concrete
// computation happens over Rational after substituting parameter values.

inline Matrix<RationalFunction> lift(const Matrix<Rational>& m) {
    Matrix<RationalFunction> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = RationalFunction(m(i, j));
    }
    return out;
}

inline Algebra<RationalFunction> lift(const Algebra<Rational>& a) {
    Algebra<RationalFunction> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            for (std::size_t k = 0; k < a.dim(); ++k) {
                out.c(i, j, k) = RationalFunction(a.c(i, j, k));
            }
        }
    }
    return out;
}

// Every entry must be free of symbols; throws otherwise.
inline Matrix<Rational> to_rational(const Matrix<RationalFunction>& m) {
    Matrix<Rational> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).constant_value();
    }
    return out;
}

inline Algebra<Rational> to_rational(const Algebra<RationalFunction>& a) {
    Algebra<Rational> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            for (std::size_t k = 0; k < a.dim(); ++k) {
                out.c(i, j, k) = a.c(i, j, k).constant_value();
            }
        }
    }
    return out;
}

inline Algebra<RationalFunction> substitute(const Algebra<RationalFunction>& a,
                                            SymbolId s, const Rational& value) {
    Algebra<RationalFunction> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            for (std::size_t k = 0; k < a.dim(); ++k) {
                out.c(i, j, k) = a.c(i, j, k).substitute(s, value);
            }
        }
    }
    return out;
}

inline Matrix<RationalFunction> substitute(const Matrix<RationalFunction>& m,
                                           SymbolId s, const Rational& value) {
    Matrix<RationalFunction> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(i, j) = m(i, j).substitute(s, value);
        }
    }
    return out;
}

}  // namespace extalg
