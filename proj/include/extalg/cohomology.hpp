#pragma once

#include <string>
#include <vector>

#include "extalg/algebra.hpp"
#include "extalg/identity.hpp"
#include "extalg/subspace.hpp"

namespace extalg {

// Bilinear forms on an n-dimensional algebra are n x n matrices over S; as
// vectors they are row-major: entry (p, q) sits at index p*n + q. All spaces
// of forms (Z^2, B^2) live in this coordinate system.

template <FieldScalar S>
std::vector<S> vectorize_form(const Matrix<S>& theta) {
    return theta.data();
}

template <FieldScalar S>
Matrix<S> form_from_coordinates(std::size_t n, const std::vector<S>& v) {
    if (v.size() != n * n) throw DimensionError("form coordinate length mismatch");
    return Matrix<S>(n, n, v);
}

// B^2(A): the span of the coboundaries delta_f(x, y) = f(xy) over linear
// functionals f. The basis functional e_k^* gives the form (p,q) -> c(p,q,k).
template <FieldScalar S>
Subspace<S> coboundary_space(const Algebra<S>& a) {
    std::size_t n = a.dim();
    std::vector<std::vector<S>> gens;
    gens.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<S> v(n * n, S::zero());
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = 0; q < n; ++q) v[p * n + q] = a.c(p, q, k);
        }
        gens.push_back(std::move(v));
    }
    return Subspace<S>::span_of_vectors(n * n, gens);
}

// Z^2(A, identity): forms whose central extension still satisfies the
// identity; the kernel of the linearized constraints.
template <FieldScalar S>
Subspace<S> cocycle_space(const Algebra<S>& a, const Identity& id) {
    return Subspace<S>::span(kernel(cocycle_constraint_matrix(a, id)));
}

template <FieldScalar S>
struct CohomologySummary {
    Subspace<S> z2;
    Subspace<S> b2;
    std::size_t h2_dim = 0;
    // Cocycle forms whose classes are a basis of H^2 = Z^2/B^2, chosen
    // deterministically from Z^2's canonical basis.
    std::vector<Matrix<S>> representatives;
};

template <FieldScalar S>
CohomologySummary<S> cohomology(const Algebra<S>& a, const Identity& id) {
    IdentityCheck<S> chk = check_identity(a, id);
    if (!chk.holds) {
        throw PreconditionError("the base algebra does not satisfy " + id.name() + ": " +
                                chk.describe(id));
    }
    CohomologySummary<S> out;
    out.z2 = cocycle_space(a, id);
    out.b2 = coboundary_space(a);
    // delta_f is always a cocycle once A satisfies the identity, so B^2 is a
    // subspace of Z^2 and the complement is well defined.
    std::vector<std::vector<S>> reps = complement_representatives(out.b2, out.z2);
    out.h2_dim = reps.size();
    for (auto& v : reps) out.representatives.push_back(form_from_coordinates(a.dim(), v));
    return out;
}

// A_theta = A + S^r with product (x, v)(y, w) = (xy, theta_1(x,y), ...,
// theta_r(x,y)); the new coordinates annihilate everything. No cocycle check
// here; pair with cocycle_space when validation is wanted.
template <FieldScalar S>
Algebra<S> central_extension(const Algebra<S>& a, const std::vector<Matrix<S>>& thetas) {
    std::size_t n = a.dim();
    std::size_t r = thetas.size();
    Algebra<S> out(n + r);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) out.c(i, j, k) = a.c(i, j, k);
        }
    }
    for (std::size_t s = 0; s < r; ++s) {
        if (thetas[s].rows() != n || thetas[s].cols() != n) {
            throw DimensionError("cocycle shape does not match the algebra");
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) out.c(i, j, n + s) = thetas[s](i, j);
        }
    }
    return out;
}

// Validating variant: every theta must lie in Z^2(A, identity).
template <FieldScalar S>
Algebra<S> central_extension_checked(const Algebra<S>& a, const Identity& id,
                                     const std::vector<Matrix<S>>& thetas) {
    Subspace<S> z2 = cocycle_space(a, id);
    for (std::size_t s = 0; s < thetas.size(); ++s) {
        if (!z2.contains(vectorize_form(thetas[s]))) {
            throw CocycleError("form " + std::to_string(s + 1) +
                               " is not a cocycle for " + id.name());
        }
    }
    return central_extension(a, thetas);
}

// Ann(theta) = {x : theta(x, -) = theta(-, x) = 0}, intersected over all the
// given forms.
template <FieldScalar S>
Subspace<S> cocycle_annihilator(std::size_t n, const std::vector<Matrix<S>>& thetas) {
    Matrix<S> sys(2 * n * thetas.size(), n);
    std::size_t row = 0;
    for (const Matrix<S>& th : thetas) {
        if (th.rows() != n || th.cols() != n) {
            throw DimensionError("cocycle shape does not match the ambient dimension");
        }
        for (std::size_t q = 0; q < n; ++q, ++row) {
            for (std::size_t p = 0; p < n; ++p) sys(row, p) = th(p, q);
        }
        for (std::size_t p = 0; p < n; ++p, ++row) {
            for (std::size_t q = 0; q < n; ++q) sys(row, q) = th(p, q);
        }
    }
    return Subspace<S>::span(kernel(sys));
}

// phi theta (x, y) = theta(phi(x), phi(y)); with phi in columns-are-images
// convention this is phi^T theta phi.
template <FieldScalar S>
Matrix<S> act_on_cocycle(const Matrix<S>& phi, const Matrix<S>& theta) {
    return phi.transpose() * theta * phi;
}

// phi is an automorphism iff it is invertible and phi(e_i)phi(e_j) =
// phi(e_i e_j) for all basis pairs; columns of phi are the images.
template <FieldScalar S>
bool verify_automorphism(const Algebra<S>& a, const Matrix<S>& phi) {
    std::size_t n = a.dim();
    if (phi.rows() != n || phi.cols() != n) return false;
    if (rank(phi) != n) return false;
    std::vector<std::vector<S>> images(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<S> col(n, S::zero());
        for (std::size_t i = 0; i < n; ++i) col[i] = phi(i, j);
        images[j] = std::move(col);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<S> lhs = a.multiply(images[i], images[j]);
            std::vector<S> rhs = mat_vec(phi, a.basis_product(i, j));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

// Canonical coordinates of a cocycle's class in H^2: reduce modulo B^2, then
// scale the first nonzero coordinate to 1. Two classes are proportional
// (define the same extension up to the scalar action) iff these agree.
template <FieldScalar S>
std::vector<S> projective_class_coordinates(const Subspace<S>& b2, const Matrix<S>& theta) {
    std::vector<S> r = b2.reduce(vectorize_form(theta));
    for (const S& x : r) {
        if (!x.is_zero()) {
            S inv = S::one() / x;
            for (S& y : r) y = y * inv;
            break;
        }
    }
    return r;
}

}  // namespace extalg
