#include "extalg/rational_function.hpp"

#include <algorithm>

#include "extalg/errors.hpp"

namespace extalg {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroDivisionError("rational function with zero denominator");
    canonicalize();
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::one();
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = Polynomial::gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.divided_exactly_by(g);
            den_ = den_.divided_exactly_by(g);
        }
    }
    Rational lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        num_ = num_ * Polynomial(inv);
        den_ = den_ * Polynomial(inv);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        canonicalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero() || o.is_zero()) return *this = RationalFunction();
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw ZeroDivisionError("rational function division by zero");
    return *this *= o.inverse();
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw ZeroDivisionError("inverse of the zero rational function");
    RationalFunction r;
    r.num_ = den_;
    r.den_ = num_;
    r.canonicalize();
    return r;
}

RationalFunction RationalFunction::pow(int e) const {
    if (e == 0) return RationalFunction::one();
    RationalFunction base = e < 0 ? inverse() : *this;
    std::uint32_t k = static_cast<std::uint32_t>(e < 0 ? -static_cast<long>(e) : e);
    RationalFunction r;
    r.num_ = base.num_.pow(k);
    r.den_ = base.den_.pow(k);
    // num and den were coprime, so their powers are too; only renormalize.
    r.canonicalize();
    return r;
}

RationalFunction RationalFunction::substitute(SymbolId s, const Rational& value) const {
    Polynomial d = den_.substitute(s, value);
    if (d.is_zero()) {
        throw EvaluationError("denominator " + den_.str() + " vanishes at " +
                              symbols::name(s) + " = " + value.str());
    }
    return RationalFunction(num_.substitute(s, value), std::move(d));
}

RationalFunction RationalFunction::limit_t_zero() const {
    Polynomial d = den_.substitute(symbols::t(), Rational(0));
    if (d.is_zero()) {
        throw PoleError("pole at t = 0: denominator " + den_.str() +
                        " is divisible by t");
    }
    return RationalFunction(num_.substitute(symbols::t(), Rational(0)), std::move(d));
}

Rational RationalFunction::evaluate(const std::map<SymbolId, Rational>& assignment) const {
    Rational d = den_.evaluate(assignment);
    if (d.is_zero()) {
        throw EvaluationError("denominator " + den_.str() + " vanishes at the given point");
    }
    return num_.evaluate(assignment) / d;
}

std::vector<SymbolId> RationalFunction::symbols() const {
    std::vector<SymbolId> out = num_.symbols();
    for (SymbolId s : den_.symbols()) {
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {
// True when the printed form needs no parentheses as a '/' right operand:
// a bare power like "t^3" or a lone variable.
bool atomic_denominator(const Polynomial& p) {
    if (p.term_count() != 1) return false;
    const auto& [m, c] = p.terms()[0];
    if (!c.is_one()) return false;
    int distinct = 0;
    for (std::uint32_t e : m.exponents()) {
        if (e > 0) ++distinct;
    }
    return distinct <= 1;
}
}  // namespace

std::string RationalFunction::str() const {
    if (is_polynomial()) return num_.str();
    std::string n = num_.term_count() > 1 ? "(" + num_.str() + ")" : num_.str();
    std::string d = atomic_denominator(den_) ? den_.str() : "(" + den_.str() + ")";
    return n + "/" + d;
}

}  // namespace extalg
