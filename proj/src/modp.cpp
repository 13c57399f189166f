#include "extalg/modp.hpp"

#include <array>

#include "extalg/errors.hpp"

namespace extalg {

namespace {

std::uint8_t mul_mod(std::uint32_t x, std::uint32_t y, std::uint32_t p) {
    return static_cast<std::uint8_t>((x * y) % p);
}

std::uint8_t inv_mod(std::uint32_t x, std::uint32_t p) {
    for (std::uint32_t y = 1; y < p; ++y) {
        if ((x * y) % p == 1) return static_cast<std::uint8_t>(y);
    }
    throw EvaluationError("no inverse mod p");
}

using Row = std::vector<std::uint8_t>;

// Rows already in echelon form; returns the reduced candidate, empty when
// dependent.
bool independent(std::vector<Row>& echelon, Row v, std::uint32_t p) {
    const std::size_t n = v.size();
    for (const Row& e : echelon) {
        std::size_t pivot = 0;
        while (pivot < n && e[pivot] == 0) ++pivot;
        if (pivot < n && v[pivot] != 0) {
            std::uint32_t f = p - v[pivot];
            for (std::size_t m = 0; m < n; ++m) {
                v[m] = static_cast<std::uint8_t>((v[m] + f * e[m]) % p);
            }
        }
    }
    std::size_t pivot = 0;
    while (pivot < n && v[pivot] == 0) ++pivot;
    if (pivot == n) return false;
    std::uint8_t s = inv_mod(v[pivot], p);
    for (std::size_t m = 0; m < n; ++m) v[m] = mul_mod(v[m], s, p);
    echelon.push_back(std::move(v));
    return true;
}

Row multiply_rows(const ModPAlgebra& a, const Row& u, const Row& v) {
    const std::size_t n = a.dim;
    Row out(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        if (u[s] == 0) continue;
        for (std::size_t t = 0; t < n; ++t) {
            if (v[t] == 0) continue;
            std::uint32_t f = (static_cast<std::uint32_t>(u[s]) * v[t]) % a.p;
            if (f == 0) continue;
            for (std::size_t m = 0; m < n; ++m) {
                out[m] = static_cast<std::uint8_t>((out[m] + f * a.at(s, t, m)) % a.p);
            }
        }
    }
    return out;
}

// change_basis(A, P) = B restricted to the rows fixed so far: for every pair
// (i, j) with max(i, j) = r the product P_i P_j taken in A must match
// sum_k B(i,j,k) P_k.
bool products_consistent(const ModPAlgebra& a, const ModPAlgebra& b,
                         const std::vector<Row>& rows, std::size_t r) {
    const std::size_t n = a.dim;
    for (std::size_t i = 0; i <= r; ++i) {
        for (std::size_t j = 0; j <= r; ++j) {
            if (i != r && j != r) continue;
            // A pair whose right side needs rows beyond r cannot be decided
            // yet; the full-depth check settles it later.
            bool decidable = true;
            for (std::size_t k = r + 1; k < n; ++k) {
                if (b.at(i, j, k) != 0) decidable = false;
            }
            if (!decidable) continue;
            Row lhs = multiply_rows(a, rows[i], rows[j]);
            Row rhs(n, 0);
            for (std::size_t k = 0; k <= r; ++k) {
                std::uint8_t f = b.at(i, j, k);
                if (f == 0) continue;
                for (std::size_t m = 0; m < n; ++m) {
                    rhs[m] = static_cast<std::uint8_t>((rhs[m] + f * rows[k][m]) % a.p);
                }
            }
            if (lhs != rhs) return false;
        }
    }
    return true;
}

struct Search {
    const ModPAlgebra& a;
    const ModPAlgebra& b;
    std::vector<Row> rows;
    std::uint64_t nodes = 0;
    std::optional<std::vector<std::uint8_t>> witness;

    bool descend(std::vector<Row> echelon) {
        const std::size_t n = a.dim;
        const std::size_t r = rows.size();
        if (r == n) {
            // Pairs whose right side involved later rows were skipped on the
            // way down; settle them all now.
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    Row lhs = multiply_rows(a, rows[i], rows[j]);
                    Row rhs(n, 0);
                    for (std::size_t k = 0; k < n; ++k) {
                        std::uint8_t f = b.at(i, j, k);
                        if (f == 0) continue;
                        for (std::size_t m = 0; m < n; ++m) {
                            rhs[m] = static_cast<std::uint8_t>((rhs[m] + f * rows[k][m]) % a.p);
                        }
                    }
                    if (lhs != rhs) return false;
                }
            }
            std::vector<std::uint8_t> flat;
            flat.reserve(n * n);
            for (const Row& row : rows) flat.insert(flat.end(), row.begin(), row.end());
            witness = std::move(flat);
            return true;
        }
        std::uint64_t total = 1;
        for (std::size_t m = 0; m < n; ++m) total *= a.p;
        Row v(n, 0);
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t rem = code;
            for (std::size_t m = n; m-- > 0;) {
                v[m] = static_cast<std::uint8_t>(rem % a.p);
                rem /= a.p;
            }
            ++nodes;
            std::vector<Row> next_echelon = echelon;
            if (!independent(next_echelon, v, a.p)) continue;
            rows.push_back(v);
            if (products_consistent(a, b, rows, r) && descend(std::move(next_echelon))) {
                return true;
            }
            rows.pop_back();
        }
        return false;
    }
};

}  // namespace

ModPAlgebra reduce_mod_p(const Algebra<Rational>& a, std::uint32_t p) {
    if (p != 2 && p != 3 && p != 5) {
        throw UnsupportedError("finite-field reduction supports p in {2, 3, 5}");
    }
    const std::size_t n = a.dim();
    ModPAlgebra out;
    out.dim = n;
    out.p = p;
    out.c.resize(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                std::uint32_t r;
                try {
                    r = a.c(i, j, k).mod_p(p);
                } catch (const EvaluationError&) {
                    throw UnsupportedError("structure constant is not p-integral for p=" +
                                           std::to_string(p));
                }
                out.c[(i * n + j) * n + k] = static_cast<std::uint8_t>(r);
            }
        }
    }
    return out;
}

std::string FfIsoResult::witness_str(std::size_t dim) const {
    if (!witness) return "none";
    std::string out = "[";
    for (std::size_t i = 0; i < dim; ++i) {
        if (i) out += "; ";
        for (std::size_t j = 0; j < dim; ++j) {
            if (j) out += " ";
            out += std::to_string((*witness)[i * dim + j]);
        }
    }
    out += "]";
    return out;
}

FfIsoResult ff_iso_evidence(const ModPAlgebra& a, const ModPAlgebra& b) {
    if (a.p != b.p) throw PreconditionError("mod-p algebras over different primes");
    if (a.dim != b.dim) throw PreconditionError("mod-p algebras of different dimensions");
    if (a.dim > 4) throw UnsupportedError("exhaustive search is limited to dimension <= 4");
    Search search{a, b, {}, 0, std::nullopt};
    search.rows.reserve(a.dim);
    search.descend({});
    FfIsoResult result;
    result.witness = std::move(search.witness);
    result.nodes_visited = search.nodes;
    return result;
}

FfIsoResult ff_iso_evidence(const Algebra<Rational>& a, const Algebra<Rational>& b,
                            std::uint32_t p) {
    return ff_iso_evidence(reduce_mod_p(a, p), reduce_mod_p(b, p));
}

}  // namespace extalg
