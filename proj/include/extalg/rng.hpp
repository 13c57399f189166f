#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "extalg/rational.hpp"

namespace extalg {

// Deterministic random source for evidence-level sampling. Built on
// mt19937_64 (whose output sequence is fixed by the standard) with explicit
// modulo range reduction, so identical seeds give identical draws on every
// platform. The slight modulo bias is irrelevant for sampling search boxes.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Stable per-task stream: mixes a label into the root seed so reordering
    // one task's draws never perturbs another's.
    static Rng derive(std::uint64_t root_seed, std::string_view task) {
        std::uint64_t h = 1469598103934665603ull;
        for (char c : task) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        return Rng(root_seed ^ h);
    }

    std::uint64_t next() { return eng_(); }

    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }

    long int_in(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Nonzero numerator in [-max_num, max_num], denominator in [1, max_den].
    Rational nonzero_rational(long max_num, long max_den) {
        long num = 0;
        while (num == 0) num = int_in(-max_num, max_num);
        return Rational(num, int_in(1, max_den));
    }

    // Numerator in [-max_num, max_num] (zero allowed), denominator in
    // [1, max_den].
    Rational small_rational(long max_num, long max_den) {
        return Rational(int_in(-max_num, max_num), int_in(1, max_den));
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace extalg
