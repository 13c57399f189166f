#include "extalg/rational.hpp"

#include <cctype>
#include <ostream>

namespace extalg {

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational literal");
    std::size_t i = 0;
    auto read_digits = [&](std::string& out) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            out.push_back(text[i++]);
        }
        if (i == start) throw ParseError("expected digits in rational literal", i);
    };

    std::string num;
    if (text[i] == '+' || text[i] == '-') {
        if (text[i] == '-') num.push_back('-');
        ++i;
    }
    read_digits(num);

    std::string den = "1";
    if (i < text.size() && text[i] == '/') {
        ++i;
        den.clear();
        read_digits(den);
    }
    if (i != text.size()) throw ParseError("trailing characters in rational literal", i);

    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw ZeroDivisionError("rational literal with zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

std::uint32_t Rational::mod_p(std::uint32_t p) const {
    mpz_class n = v_.get_num() % p;
    if (n < 0) n += p;
    mpz_class d = v_.get_den() % p;
    if (d == 0) {
        throw EvaluationError("denominator not invertible mod " + std::to_string(p));
    }
    mpz_class dinv;
    mpz_class pz(p);
    if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t()) == 0) {
        throw EvaluationError("denominator not invertible mod " + std::to_string(p));
    }
    mpz_class r = (n * dinv) % p;
    return static_cast<std::uint32_t>(r.get_ui());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace extalg
