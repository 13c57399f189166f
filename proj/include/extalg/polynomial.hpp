#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "extalg/rational.hpp"

namespace extalg {

using SymbolId = std::uint32_t;

// Process-wide interned symbol names. "t" and "a" are interned at startup so
// their ids (0 and 1) and hence all canonical term orders are stable across
// runs regardless of what other symbols a computation introduces.
namespace symbols {
SymbolId intern(std::string_view name);
const std::string& name(SymbolId id);
SymbolId t();      // deformation parameter
SymbolId alpha();  // family parameter, spelled "a" in scalar expressions
}  // namespace symbols

// Exponent vector indexed by SymbolId, trailing zeros trimmed away. The
// all-zero monomial is the constant 1.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(SymbolId s, std::uint32_t e = 1);

    std::uint32_t exponent(SymbolId s) const {
        return s < exps_.size() ? exps_[s] : 0;
    }
    std::uint64_t total_degree() const;
    bool is_constant() const { return exps_.empty(); }

    Monomial times(const Monomial& o) const;
    bool divisible_by(const Monomial& o) const;
    Monomial divided_by(const Monomial& o) const;

    // Graded lexicographic: higher total degree first, ties broken by the
    // exponent of the lowest-id symbol.
    static int compare(const Monomial& x, const Monomial& y);

    friend bool operator==(const Monomial& x, const Monomial& y) {
        return x.exps_ == y.exps_;
    }

    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    std::string str() const;

private:
    void trim();
    std::vector<std::uint32_t> exps_;
};

// Sparse multivariate polynomial over Rational. Terms are kept sorted in
// descending graded-lex order with no zero coefficients, so equal polynomials
// have equal representations.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c);  // NOLINT: implicit constant embedding
    Polynomial(int c) : Polynomial(Rational(c)) {}
    static Polynomial variable(SymbolId s);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(Rational(1)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_constant());
    }
    // Requires is_constant().
    Rational constant_value() const;

    std::size_t term_count() const { return terms_.size(); }
    const std::vector<std::pair<Monomial, Rational>>& terms() const { return terms_; }

    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;
    std::uint64_t total_degree() const;
    std::uint32_t degree_in(SymbolId s) const;
    bool contains(SymbolId s) const { return degree_in(s) > 0; }
    std::vector<SymbolId> symbols() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial pow(std::uint32_t e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }

    // Replaces s by a rational constant.
    Polynomial substitute(SymbolId s, const Rational& value) const;
    // Replaces s by another polynomial (used for composing with expressions).
    Polynomial substitute(SymbolId s, const Polynomial& value) const;
    // Full evaluation; every symbol present must be assigned.
    Rational evaluate(const std::map<SymbolId, Rational>& assignment) const;

    // Exact division; throws Error if the divisor does not divide exactly.
    Polynomial divided_exactly_by(const Polynomial& d) const;

    // GCD normalized to integer-primitive form with positive leading
    // coefficient (so gcd results are canonical, not just up to units).
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    // Integer-primitive part and rational content: *this = content * primitive,
    // primitive has coprime integer coefficients and positive leading one.
    Rational content() const;
    Polynomial primitive_part() const;

    std::string str() const;

private:
    friend class PolynomialBuilder;
    // Descending graded-lex, no zero coefficients.
    std::vector<std::pair<Monomial, Rational>> terms_;
};

// Accumulates monomial/coefficient pairs in any order, then normalizes once.
class PolynomialBuilder {
public:
    void add(Monomial m, Rational c);
    Polynomial build();

private:
    std::vector<std::pair<Monomial, Rational>> raw_;
};

}  // namespace extalg
