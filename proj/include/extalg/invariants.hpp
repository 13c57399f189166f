#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extalg/algebra.hpp"
#include "extalg/identity.hpp"

namespace extalg {

// Constraint matrix of the derivation equations D(e_i e_j) = D(e_i)e_j +
// e_i D(e_j). Unknowns are the n^2 entries of D in row-major order with
// D(e_i) = sum_k D(i,k) e_k; rows are indexed by (i, j, coordinate m).
template <FieldScalar S>
Matrix<S> derivation_constraints(const Algebra<S>& a) {
    std::size_t n = a.dim();
    Matrix<S> sys(n * n * n, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t m = 0; m < n; ++m) {
                std::size_t row = (i * n + j) * n + m;
                // sum_k c(i,j,k) D(k,m) - sum_k D(i,k) c(k,j,m)
                //                       - sum_k D(j,k) c(i,k,m) = 0
                for (std::size_t k = 0; k < n; ++k) {
                    sys(row, k * n + m) = sys(row, k * n + m) + a.c(i, j, k);
                    sys(row, i * n + k) = sys(row, i * n + k) - a.c(k, j, m);
                    sys(row, j * n + k) = sys(row, j * n + k) - a.c(i, k, m);
                }
            }
        }
    }
    return sys;
}

template <FieldScalar S>
struct DerivationAlgebra {
    std::size_t dim = 0;
    std::vector<Matrix<S>> basis;  // D(i,k) matrices, row convention as above
};

template <FieldScalar S>
DerivationAlgebra<S> derivation_algebra(const Algebra<S>& a) {
    std::size_t n = a.dim();
    Matrix<S> null_basis = kernel(derivation_constraints(a));
    DerivationAlgebra<S> out;
    out.dim = null_basis.rows();
    for (std::size_t r = 0; r < null_basis.rows(); ++r) {
        Matrix<S> d(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) d(i, k) = null_basis(r, i * n + k);
        }
        out.basis.push_back(std::move(d));
    }
    return out;
}

// Isomorphism invariants aggregated into one comparable record. Equality is
// necessary but not sufficient for isomorphism.
struct InvariantVector {
    std::size_t dim = 0;
    std::size_t dim_a2 = 0;
    std::size_t dim_a3 = 0;
    std::optional<std::size_t> nil_index;  // empty = not nilpotent
    std::size_t dim_ann = 0;
    std::size_t dim_der = 0;
    bool commutative = false;
    bool associative = false;
    bool right_alternative = false;

    friend bool operator==(const InvariantVector&, const InvariantVector&) = default;

    std::string str() const;
    // Name of the first field in which *this and other differ, empty when
    // equal; the "separating invariant" language of distinctness reports.
    std::string first_difference(const InvariantVector& other) const;
};

template <FieldScalar S>
InvariantVector invariant_vector(const Algebra<S>& a) {
    InvariantVector v;
    v.dim = a.dim();
    PowerChain<S> chain = power_chain(a);
    v.dim_a2 = chain.powers.size() > 1 ? chain.powers[1].dim() : 0;
    v.dim_a3 = chain.powers.size() > 2 ? chain.powers[2].dim() : 0;
    v.nil_index = chain.nil_index;
    v.dim_ann = annihilator(a).dim();
    v.dim_der = derivation_algebra(a).dim;
    v.commutative = true;
    for (std::size_t i = 0; i < a.dim() && v.commutative; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (a.basis_product(i, j) != a.basis_product(j, i)) {
                v.commutative = false;
                break;
            }
        }
    }
    v.associative = check_identity(a, Identity::builtin("associative")).holds;
    v.right_alternative = check_identity(a, Identity::builtin("right-alternative")).holds;
    return v;
}

}  // namespace extalg
