#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "extalg/subspace.hpp"

namespace extalg {

// Finite-dimensional (not necessarily associative) algebra over S, given by
// its structure constants: e_i e_j = sum_k c(i,j,k) e_k. Indices here are
// 0-based; the catalog and all rendered output use the 1-based labels e1..en.
template <FieldScalar S>
class Algebra {
public:
    Algebra() : dim_(0) {}
    explicit Algebra(std::size_t dim)
        : dim_(dim), c_(dim * dim * dim, S::zero()) {}

    std::size_t dim() const { return dim_; }

    const S& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }
    S& c(std::size_t i, std::size_t j, std::size_t k) {
        return c_[(i * dim_ + j) * dim_ + k];
    }

    // e_i * e_j as a coordinate vector.
    std::vector<S> basis_product(std::size_t i, std::size_t j) const {
        std::vector<S> v(dim_, S::zero());
        for (std::size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
        return v;
    }

    std::vector<S> multiply(const std::vector<S>& x, const std::vector<S>& y) const {
        if (x.size() != dim_ || y.size() != dim_) {
            throw DimensionError("vector dimension does not match the algebra");
        }
        std::vector<S> out(dim_, S::zero());
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                S f = x[i] * y[j];
                for (std::size_t k = 0; k < dim_; ++k) {
                    if (!c(i, j, k).is_zero()) out[k] = out[k] + f * c(i, j, k);
                }
            }
        }
        return out;
    }

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }

    bool is_zero_algebra() const {
        for (const S& x : c_) {
            if (!x.is_zero()) return false;
        }
        return true;
    }

    // Human-readable nonzero products, e.g. "e1*e1 = e2".
    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                std::string rhs;
                for (std::size_t k = 0; k < dim_; ++k) {
                    if (c(i, j, k).is_zero()) continue;
                    if (!rhs.empty()) rhs += " + ";
                    const S& v = c(i, j, k);
                    if (!(v == S::one())) rhs += "(" + v.str() + ")*";
                    rhs += "e" + std::to_string(k + 1);
                }
                if (!rhs.empty()) {
                    if (!out.empty()) out += ", ";
                    out += "e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1) +
                           " = " + rhs;
                }
            }
        }
        return out.empty() ? "(zero product)" : out;
    }

private:
    std::size_t dim_;
    std::vector<S> c_;
};

// Two-sided annihilator Ann(A) = {x : xA = Ax = 0}, the kernel of the stacked
// left- and right-multiplication constraints.
template <FieldScalar S>
Subspace<S> annihilator(const Algebra<S>& a) {
    std::size_t n = a.dim();
    if (n == 0) return Subspace<S>::zero(0);
    // Unknown x in S^n; conditions indexed by (j, k): sum_i x_i c(i,j,k) = 0
    // and sum_i x_i c(j,i,k) = 0.
    Matrix<S> sys(2 * n * n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                sys(j * n + k, i) = a.c(i, j, k);
                sys(n * n + j * n + k, i) = a.c(j, i, k);
            }
        }
    }
    return Subspace<S>::span(kernel(sys));
}

// Span of all products u*w with u in U, w in W.
template <FieldScalar S>
Subspace<S> product_space(const Algebra<S>& a, const Subspace<S>& u, const Subspace<S>& w) {
    std::vector<std::vector<S>> products;
    for (std::size_t i = 0; i < u.dim(); ++i) {
        for (std::size_t j = 0; j < w.dim(); ++j) {
            products.push_back(a.multiply(u.basis().row(i), w.basis().row(j)));
        }
    }
    return Subspace<S>::span_of_vectors(a.dim(), products);
}

template <FieldScalar S>
struct PowerChain {
    // powers[k] = A^{k+1}: powers[0] is the full space, and
    // A^m = sum_{i+j=m} A^i A^j.
    std::vector<Subspace<S>> powers;
    // Smallest m with A^m = 0, if the chain reaches zero within dim+1 steps.
    std::optional<std::size_t> nil_index;

    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> d;
        d.reserve(powers.size());
        for (const auto& p : powers) d.push_back(p.dim());
        return d;
    }
};

template <FieldScalar S>
PowerChain<S> power_chain(const Algebra<S>& a) {
    PowerChain<S> chain;
    std::size_t n = a.dim();
    chain.powers.push_back(Subspace<S>::full(n));
    // The chain is descending; a nilpotent algebra reaches zero by step
    // dim+1, so stop there or at the first repeat.
    for (std::size_t m = 2; m <= n + 2; ++m) {
        Subspace<S> next = Subspace<S>::zero(n);
        for (std::size_t i = 1; i <= m - 1; ++i) {
            std::size_t j = m - i;
            next = sum(next, product_space(a, chain.powers[i - 1], chain.powers[j - 1]));
        }
        chain.powers.push_back(next);
        if (next.dim() == 0) {
            chain.nil_index = m;
            break;
        }
        if (next == chain.powers[chain.powers.size() - 2]) break;
    }
    return chain;
}

template <FieldScalar S>
bool is_nilpotent(const Algebra<S>& a) {
    return power_chain(a).nil_index.has_value();
}

// Structure constants in the new basis E_i = sum_j P(i,j) e_j; rows of P are
// the new basis vectors expressed in the old one. P must be invertible.
template <FieldScalar S>
Algebra<S> change_basis(const Algebra<S>& a, const Matrix<S>& p) {
    std::size_t n = a.dim();
    if (p.rows() != n || p.cols() != n) throw DimensionError("basis matrix shape mismatch");
    Matrix<S> pinv = inverse(p);  // throws SingularMatrixError if not a basis
    Algebra<S> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<S> prod = a.multiply(p.row(i), p.row(j));
            std::vector<S> coords = vec_mat(prod, pinv);
            for (std::size_t k = 0; k < n; ++k) out.c(i, j, k) = coords[k];
        }
    }
    return out;
}

// A + S^k with zero products on the added coordinates.
template <FieldScalar S>
Algebra<S> direct_sum_with_zero(const Algebra<S>& a, std::size_t k) {
    std::size_t n = a.dim();
    Algebra<S> out(n + k);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t m = 0; m < n; ++m) out.c(i, j, m) = a.c(i, j, m);
        }
    }
    return out;
}

// Smallest subalgebra containing the given vectors: closes the span under
// products until it stabilizes.
template <FieldScalar S>
Subspace<S> generated_subalgebra(const Algebra<S>& a, const std::vector<std::vector<S>>& generators) {
    std::size_t n = a.dim();
    Subspace<S> current = Subspace<S>::span_of_vectors(n, generators);
    while (true) {
        std::vector<std::vector<S>> vectors = current.basis_vectors();
        std::vector<std::vector<S>> extended = vectors;
        for (const auto& u : vectors) {
            for (const auto& w : vectors) {
                extended.push_back(a.multiply(u, w));
            }
        }
        Subspace<S> next = Subspace<S>::span_of_vectors(n, extended);
        if (next.dim() == current.dim()) return current;
        current = std::move(next);
    }
}

}  // namespace extalg
