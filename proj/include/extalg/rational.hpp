#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "extalg/errors.hpp"

namespace extalg {

// Arbitrary-precision rational number, always stored canonically
// (reduced, positive denominator). Thin value wrapper over GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}            // NOLINT: implicit by design
    Rational(long n) : v_(static_cast<long int>(n)) {}
    Rational(long n, long d) {
        if (d == 0) throw ZeroDivisionError("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q" with optional sign on p; q must be positive
    // decimal. This is the scalar literal syntax used by catalog files.
    static Rational parse(std::string_view text);

    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ZeroDivisionError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const {
        if (is_zero()) throw ZeroDivisionError("inverse of zero");
        mpq_class r;
        mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
        return Rational(r);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.v_ == b.v_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "p" when the denominator is 1, else "p/q".
    std::string str() const {
        mpq_class c = v_;
        return c.get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

    // Residue mod a small prime; the denominator must be invertible mod p.
    // Used by the finite-field isomorphism oracle.
    std::uint32_t mod_p(std::uint32_t p) const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace extalg
