#include "extalg/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "extalg/errors.hpp"

namespace extalg {

namespace symbols {

namespace {
struct Registry {
    std::vector<std::string> names;
    std::unordered_map<std::string, SymbolId> ids;
    std::mutex mu;

    Registry() {
        names = {"t", "a"};
        ids = {{"t", 0}, {"a", 1}};
    }
};

Registry& registry() {
    static Registry r;
    return r;
}
}  // namespace

SymbolId intern(std::string_view name) {
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    std::string key(name);
    auto it = r.ids.find(key);
    if (it != r.ids.end()) return it->second;
    SymbolId id = static_cast<SymbolId>(r.names.size());
    r.names.push_back(key);
    r.ids.emplace(std::move(key), id);
    return id;
}

const std::string& name(SymbolId id) {
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    if (id >= r.names.size()) throw Error("unknown symbol id");
    return r.names[id];
}

SymbolId t() { return 0; }
SymbolId alpha() { return 1; }

}  // namespace symbols

void Monomial::trim() {
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

Monomial Monomial::var(SymbolId s, std::uint32_t e) {
    Monomial m;
    if (e > 0) {
        m.exps_.assign(s + 1, 0);
        m.exps_[s] = e;
    }
    return m;
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (std::uint32_t e : exps_) d += e;
    return d;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    r.exps_.resize(std::max(exps_.size(), o.exps_.size()), 0);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += exps_[i];
    for (std::size_t i = 0; i < o.exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
    if (o.exps_.size() > exps_.size()) return false;
    for (std::size_t i = 0; i < o.exps_.size(); ++i) {
        if (exps_[i] < o.exps_[i]) return false;
    }
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    if (!divisible_by(o)) throw Error("monomial division is not exact");
    Monomial r;
    r.exps_ = exps_;
    for (std::size_t i = 0; i < o.exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
    r.trim();
    return r;
}

int Monomial::compare(const Monomial& x, const Monomial& y) {
    std::uint64_t dx = x.total_degree();
    std::uint64_t dy = y.total_degree();
    if (dx != dy) return dx < dy ? -1 : 1;
    std::size_t n = std::max(x.exps_.size(), y.exps_.size());
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t ex = i < x.exps_.size() ? x.exps_[i] : 0;
        std::uint32_t ey = i < y.exps_.size() ? y.exps_[i] : 0;
        if (ex != ey) return ex < ey ? -1 : 1;
    }
    return 0;
}

std::string Monomial::str() const {
    if (is_constant()) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << symbols::name(static_cast<SymbolId>(i));
        if (exps_[i] > 1) os << "^" << exps_[i];
    }
    return os.str();
}

Polynomial::Polynomial(const Rational& c) {
    if (!c.is_zero()) terms_.emplace_back(Monomial(), c);
}

Polynomial Polynomial::variable(SymbolId s) {
    Polynomial p;
    p.terms_.emplace_back(Monomial::var(s), Rational(1));
    return p;
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() != 1 || !terms_[0].first.is_constant()) {
        throw Error("polynomial is not constant: " + str());
    }
    return terms_[0].second;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading monomial");
    return terms_[0].first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading coefficient");
    return terms_[0].second;
}

std::uint64_t Polynomial::total_degree() const {
    return terms_.empty() ? 0 : terms_[0].first.total_degree();
}

std::uint32_t Polynomial::degree_in(SymbolId s) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(s));
    return d;
}

std::vector<SymbolId> Polynomial::symbols() const {
    std::vector<SymbolId> out;
    for (const auto& [m, c] : terms_) {
        const auto& e = m.exponents();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) {
                SymbolId s = static_cast<SymbolId>(i);
                if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    std::vector<std::pair<Monomial, Rational>> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = Monomial::compare(terms_[i].first, o.terms_[j].first);
        if (c > 0) {
            merged.push_back(std::move(terms_[i++]));
        } else if (c < 0) {
            merged.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].second + o.terms_[j].second;
            if (!s.is_zero()) merged.emplace_back(terms_[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    while (i < terms_.size()) merged.push_back(std::move(terms_[i++]));
    while (j < o.terms_.size()) merged.push_back(o.terms_[j++]);
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    PolynomialBuilder builder;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            builder.add(ma.times(mb), ca * cb);
        }
    }
    return builder.build();
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial r = Polynomial::one();
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return r;
}

Polynomial Polynomial::substitute(SymbolId s, const Rational& value) const {
    PolynomialBuilder builder;
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m.exponent(s);
        if (e == 0) {
            builder.add(m, c);
            continue;
        }
        Rational scaled = c;
        for (std::uint32_t k = 0; k < e; ++k) scaled *= value;
        if (scaled.is_zero()) continue;
        Monomial rest = m.divided_by(Monomial::var(s, e));
        builder.add(std::move(rest), std::move(scaled));
    }
    return builder.build();
}

Polynomial Polynomial::substitute(SymbolId s, const Polynomial& value) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m.exponent(s);
        Polynomial term;
        if (e == 0) {
            term.terms_.emplace_back(m, c);
        } else {
            Monomial rest = m.divided_by(Monomial::var(s, e));
            Polynomial base;
            base.terms_.emplace_back(std::move(rest), c);
            term = base * value.pow(e);
        }
        out += term;
    }
    return out;
}

Rational Polynomial::evaluate(const std::map<SymbolId, Rational>& assignment) const {
    Polynomial p = *this;
    for (const auto& [s, v] : assignment) p = p.substitute(s, v);
    return p.constant_value();
}

Polynomial Polynomial::divided_exactly_by(const Polynomial& d) const {
    if (d.is_zero()) throw ZeroDivisionError("polynomial division by zero");
    Polynomial q;
    Polynomial r = *this;
    const Monomial& dm = d.leading_monomial();
    const Rational& dc = d.leading_coefficient();
    while (!r.is_zero()) {
        if (!r.leading_monomial().divisible_by(dm)) {
            throw Error("polynomial division is not exact");
        }
        Polynomial t;
        t.terms_.emplace_back(r.leading_monomial().divided_by(dm),
                              r.leading_coefficient() / dc);
        q += t;
        r -= t * d;
    }
    return q;
}

Rational Polynomial::content() const {
    if (terms_.empty()) return Rational(0);
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        mpz_class n = c.num();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_class d = c.den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    mpq_class q(num_gcd, den_lcm);
    q.canonicalize();
    Rational c(q);
    return leading_coefficient().sign() < 0 ? -c : c;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    Polynomial r = *this;
    for (auto& [m, coeff] : r.terms_) coeff /= c;
    return r;
}

namespace {

// Coefficients of p viewed as a univariate polynomial in v; index = degree,
// entries do not contain v.
std::vector<Polynomial> coefficients_in(const Polynomial& p, SymbolId v) {
    std::vector<PolynomialBuilder> builders(p.degree_in(v) + 1);
    for (const auto& [m, c] : p.terms()) {
        std::uint32_t e = m.exponent(v);
        Monomial rest = e == 0 ? m : m.divided_by(Monomial::var(v, e));
        builders[e].add(std::move(rest), c);
    }
    std::vector<Polynomial> out;
    out.reserve(builders.size());
    for (auto& b : builders) out.push_back(b.build());
    return out;
}

Polynomial assemble_in(const std::vector<Polynomial>& coeffs, SymbolId v) {
    Polynomial out;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        if (coeffs[e].is_zero()) continue;
        Polynomial pe = coeffs[e];
        if (e > 0) pe = pe * Polynomial::variable(v).pow(static_cast<std::uint32_t>(e));
        out += pe;
    }
    return out;
}

int degree_of(const std::vector<Polynomial>& coeffs) {
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        if (!coeffs[i].is_zero()) return i;
    }
    return -1;
}

// GCD of the v-coefficients; the content of p in (Q[others])[v].
Polynomial content_in(const Polynomial& p, SymbolId v) {
    Polynomial g;
    for (const Polynomial& c : coefficients_in(p, v)) {
        if (c.is_zero()) continue;
        g = Polynomial::gcd(g, c);
        if (g.is_constant()) break;
    }
    return g.is_zero() ? Polynomial::one() : g;
}

// Pseudo-remainder of a by b in the variable v (both must contain v,
// deg_v a >= deg_v b >= 1). The result is some lc(b)^k * a mod b, which is all
// the primitive PRS below needs.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, SymbolId v) {
    std::vector<Polynomial> r = coefficients_in(a, v);
    std::vector<Polynomial> d = coefficients_in(b, v);
    int n = degree_of(d);
    const Polynomial& lead = d[static_cast<std::size_t>(n)];
    int k = degree_of(r);
    while (k >= n) {
        Polynomial rk = r[static_cast<std::size_t>(k)];
        for (int i = 0; i <= k; ++i) {
            Polynomial scaled = r[static_cast<std::size_t>(i)] * lead;
            int j = i - (k - n);
            if (j >= 0 && j <= n) scaled -= rk * d[static_cast<std::size_t>(j)];
            r[static_cast<std::size_t>(i)] = std::move(scaled);
        }
        r[static_cast<std::size_t>(k)] = Polynomial();
        k = degree_of(r);
    }
    return assemble_in(r, v);
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.is_zero() ? Polynomial() : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_constant() || b.is_constant()) return Polynomial::one();

    std::vector<SymbolId> syms = a.symbols();
    for (SymbolId s : b.symbols()) {
        if (std::find(syms.begin(), syms.end(), s) == syms.end()) syms.push_back(s);
    }
    SymbolId v = *std::max_element(syms.begin(), syms.end());

    if (!a.contains(v)) return gcd(a, content_in(b, v));
    if (!b.contains(v)) return gcd(content_in(a, v), b);

    Polynomial ca = content_in(a, v);
    Polynomial cb = content_in(b, v);
    Polynomial c = gcd(ca, cb);
    Polynomial pa = a.divided_exactly_by(ca);
    Polynomial pb = b.divided_exactly_by(cb);

    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    Polynomial g;
    while (true) {
        Polynomial r = pseudo_remainder(pa, pb, v);
        if (r.is_zero()) {
            g = pb.divided_exactly_by(content_in(pb, v));
            break;
        }
        if (r.degree_in(v) == 0) {
            g = Polynomial::one();
            break;
        }
        pa = std::move(pb);
        pb = r.divided_exactly_by(content_in(r, v));
    }
    return (c * g).primitive_part();
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                mag = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) mag = -c;
        }
        first = false;
        if (m.is_constant()) {
            os << mag.str();
        } else if (mag.is_one()) {
            os << m.str();
        } else {
            os << mag.str() << "*" << m.str();
        }
    }
    return os.str();
}

void PolynomialBuilder::add(Monomial m, Rational c) {
    if (c.is_zero()) return;
    raw_.emplace_back(std::move(m), std::move(c));
}

Polynomial PolynomialBuilder::build() {
    std::sort(raw_.begin(), raw_.end(), [](const auto& x, const auto& y) {
        return Monomial::compare(x.first, y.first) > 0;
    });
    Polynomial p;
    for (auto& [m, c] : raw_) {
        if (!p.terms_.empty() && p.terms_.back().first == m) {
            p.terms_.back().second += c;
            if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
        } else {
            p.terms_.emplace_back(std::move(m), std::move(c));
        }
    }
    raw_.clear();
    return p;
}

}  // namespace extalg
