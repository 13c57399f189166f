#pragma once

#include <vector>

#include "extalg/matrix.hpp"

namespace extalg {

// Linear subspace of S^n, stored as its unique RREF basis. Two subspaces are
// equal iff their stored bases are structurally equal, which makes span
// comparison exact and cheap.
template <FieldScalar S>
class Subspace {
public:
    Subspace() : ambient_(0) {}

    static Subspace zero(std::size_t ambient) {
        Subspace s;
        s.ambient_ = ambient;
        s.basis_ = Matrix<S>(0, ambient);
        return s;
    }

    static Subspace full(std::size_t ambient) {
        return span(Matrix<S>::identity(ambient));
    }

    // Span of the rows of a spanning matrix (rows may be dependent or zero).
    static Subspace span(const Matrix<S>& spanning) {
        Subspace s;
        s.ambient_ = spanning.cols();
        RrefResult<S> r = rref(spanning);
        Matrix<S> basis(r.rank, spanning.cols());
        for (std::size_t i = 0; i < r.rank; ++i) {
            for (std::size_t j = 0; j < spanning.cols(); ++j) basis(i, j) = r.matrix(i, j);
        }
        s.basis_ = std::move(basis);
        s.pivots_.assign(r.pivot_columns.begin(), r.pivot_columns.end());
        return s;
    }

    static Subspace span_of_vectors(std::size_t ambient, const std::vector<std::vector<S>>& vecs) {
        if (vecs.empty()) return zero(ambient);
        return span(Matrix<S>::from_rows(vecs));
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix<S>& basis() const { return basis_; }
    std::vector<std::vector<S>> basis_vectors() const {
        std::vector<std::vector<S>> out;
        out.reserve(dim());
        for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
        return out;
    }

    // Residue of v after reduction by the RREF basis; zero iff v lies in the
    // subspace. This is the canonical representative of v modulo the subspace.
    std::vector<S> reduce(std::vector<S> v) const {
        if (v.size() != ambient_) throw DimensionError("vector/subspace ambient mismatch");
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            // Copy, not a reference: the loop below overwrites the pivot slot.
            const S c = v[pivots_[i]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < ambient_; ++j) {
                v[j] = v[j] - c * basis_(i, j);
            }
        }
        return v;
    }

    bool contains(const std::vector<S>& v) const { return vec_is_zero(reduce(v)); }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw DimensionError("subspace ambient mismatch");
        for (std::size_t i = 0; i < other.dim(); ++i) {
            if (!contains(other.basis_.row(i))) return false;
        }
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    friend Subspace sum(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw DimensionError("subspace ambient mismatch");
        Matrix<S> stacked(a.dim() + b.dim(), a.ambient_);
        for (std::size_t i = 0; i < a.dim(); ++i) stacked.set_row(i, a.basis_.row(i));
        for (std::size_t i = 0; i < b.dim(); ++i) stacked.set_row(a.dim() + i, b.basis_.row(i));
        return span(stacked);
    }

    friend Subspace intersect(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw DimensionError("subspace ambient mismatch");
        if (a.dim() == 0 || b.dim() == 0) return zero(a.ambient_);
        // Solve lambda * A = mu * B: right kernel of the n x (p+q) matrix
        // [A^T | -B^T]; each solution's lambda part spans one intersection
        // vector.
        std::size_t p = a.dim();
        std::size_t q = b.dim();
        Matrix<S> sys(a.ambient_, p + q);
        for (std::size_t j = 0; j < a.ambient_; ++j) {
            for (std::size_t i = 0; i < p; ++i) sys(j, i) = a.basis_(i, j);
            for (std::size_t i = 0; i < q; ++i) sys(j, p + i) = -b.basis_(i, j);
        }
        Matrix<S> null_basis = kernel(sys);
        std::vector<std::vector<S>> vectors;
        for (std::size_t k = 0; k < null_basis.rows(); ++k) {
            std::vector<S> v(a.ambient_, S::zero());
            for (std::size_t i = 0; i < p; ++i) {
                if (!null_basis(k, i).is_zero()) {
                    vec_add_scaled(v, null_basis(k, i), a.basis_.row(i));
                }
            }
            vectors.push_back(std::move(v));
        }
        return span_of_vectors(a.ambient_, vectors);
    }

private:
    std::size_t ambient_;
    Matrix<S> basis_;
    std::vector<std::size_t> pivots_;
};

// dim(U / W); requires W to be contained in U.
template <FieldScalar S>
std::size_t quotient_dim(const Subspace<S>& u, const Subspace<S>& w) {
    if (!u.contains(w)) throw DimensionError("quotient by a non-subspace");
    return u.dim() - w.dim();
}

// Vectors from sup's canonical basis that extend sub's basis to a basis of
// sup; the deterministic choice of coset representatives used everywhere a
// complement is needed.
template <FieldScalar S>
std::vector<std::vector<S>> complement_representatives(const Subspace<S>& sub,
                                                       const Subspace<S>& sup) {
    if (!sup.contains(sub)) throw DimensionError("complement of a non-subspace");
    std::vector<std::vector<S>> reps;
    Subspace<S> current = sub;
    for (std::size_t i = 0; i < sup.dim(); ++i) {
        std::vector<S> v = sup.basis().row(i);
        if (!current.contains(v)) {
            reps.push_back(v);
            Matrix<S> stacked(current.dim() + 1, sup.ambient());
            for (std::size_t r = 0; r < current.dim(); ++r) {
                stacked.set_row(r, current.basis().row(r));
            }
            stacked.set_row(current.dim(), v);
            current = Subspace<S>::span(stacked);
        }
    }
    return reps;
}

}  // namespace extalg
