#pragma once

#include <map>
#include <string>
#include <vector>

#include "extalg/polynomial.hpp"

namespace extalg {

// Element of the rational function field Q(t, a, ...). Canonical form:
// gcd(num, den) = 1, den monic in graded-lex leading coefficient, zero is 0/1.
// Equality of canonical forms is therefore structural equality.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::one()) {}
    RationalFunction(const Rational& c) : num_(c), den_(Polynomial::one()) {}
    RationalFunction(int c) : num_(Rational(c)), den_(Polynomial::one()) {}
    RationalFunction(Polynomial num) : num_(std::move(num)), den_(Polynomial::one()) {}
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction zero() { return RationalFunction(); }
    static RationalFunction one() { return RationalFunction(1); }
    static RationalFunction variable(SymbolId s) {
        return RationalFunction(Polynomial::variable(s));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const {
        return num_.constant_value() / den_.constant_value();
    }
    bool is_polynomial() const { return den_ == Polynomial::one(); }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) {
        return a += b;
    }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) {
        return a -= b;
    }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) {
        return a *= b;
    }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) {
        return a /= b;
    }
    RationalFunction inverse() const;
    RationalFunction pow(int e) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Substitutes a rational constant for s; throws EvaluationError if the
    // denominator vanishes under the substitution.
    RationalFunction substitute(SymbolId s, const Rational& value) const;

    // lim_{t -> 0}. Exists iff t does not divide the reduced denominator;
    // throws PoleError otherwise.
    RationalFunction limit_t_zero() const;

    // Full evaluation at a point; throws EvaluationError on a vanishing
    // denominator, and the assignment must cover every symbol present.
    Rational evaluate(const std::map<SymbolId, Rational>& assignment) const;

    std::vector<SymbolId> symbols() const;
    std::string str() const;

private:
    void canonicalize();
    Polynomial num_;
    Polynomial den_;
};

}  // namespace extalg
