#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extalg/algebra.hpp"
#include "extalg/rational.hpp"

namespace extalg {

// Structure constants reduced modulo a small prime; the playground of the
// brute-force isomorphism oracle.
struct ModPAlgebra {
    std::size_t dim = 0;
    std::uint32_t p = 2;
    std::vector<std::uint8_t> c;  // (i*dim + j)*dim + k

    std::uint8_t at(std::size_t i, std::size_t j, std::size_t k) const {
        return c[(i * dim + j) * dim + k];
    }
};

// Reduces every constant mod p; throws UnsupportedError when a denominator
// is divisible by p (the reduction is undefined there).
ModPAlgebra reduce_mod_p(const Algebra<Rational>& a, std::uint32_t p);

struct FfIsoResult {
    // Witness rows, row-major, when found: the change-of-basis matrix P with
    // change_basis(A mod p, P) = B mod p. The enumeration is depth-first in
    // lexicographic row order, so a found witness is the smallest one.
    std::optional<std::vector<std::uint8_t>> witness;
    std::uint64_t nodes_visited = 0;

    bool found() const { return witness.has_value(); }
    std::string witness_str(std::size_t dim) const;
};

// Exhaustive search over GL_dim(F_p) with incremental-rank and product
// pruning. Evidence only: a mod-p answer neither proves nor refutes the
// characteristic-zero question.
FfIsoResult ff_iso_evidence(const ModPAlgebra& a, const ModPAlgebra& b);

// Convenience wrapper: reduces both and searches. dim <= 4 and p in {2,3,5}.
FfIsoResult ff_iso_evidence(const Algebra<Rational>& a, const Algebra<Rational>& b,
                            std::uint32_t p);

}  // namespace extalg
