#include "extalg/scalar_expr.hpp"

#include <cctype>

#include "extalg/errors.hpp"

namespace extalg {

namespace {

class ScalarParser {
public:
    ScalarParser(std::string_view text, const std::vector<std::string>& allowed)
        : text_(text), allowed_(allowed) {}

    RationalFunction parse() {
        RationalFunction v = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) {
            throw ParseError("unexpected trailing input in scalar expression", pos_);
        }
        return v;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    RationalFunction parse_sum() {
        RationalFunction v = parse_product();
        while (true) {
            if (eat('+')) {
                v += parse_product();
            } else if (eat('-')) {
                v -= parse_product();
            } else {
                return v;
            }
        }
    }

    RationalFunction parse_product() {
        RationalFunction v = parse_factor();
        while (true) {
            if (eat('*')) {
                v *= parse_factor();
            } else if (eat('/')) {
                RationalFunction d = parse_factor();
                if (d.is_zero()) throw ZeroDivisionError("division by zero in scalar expression");
                v /= d;
            } else {
                return v;
            }
        }
    }

    RationalFunction parse_factor() {
        if (eat('-')) return -parse_factor();
        RationalFunction base = parse_primary();
        if (eat('^')) {
            int e = parse_exponent();
            if (e < 0 && base.is_zero()) {
                throw ZeroDivisionError("zero raised to a negative power");
            }
            return base.pow(e);
        }
        return base;
    }

    int parse_exponent() {
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        skip_ws();
        std::size_t start = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1000000) throw ParseError("exponent out of range", pos_);
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected integer exponent after '^'", pos_);
        return neg ? -static_cast<int>(value) : static_cast<int>(value);
    }

    RationalFunction parse_primary() {
        char c = peek();
        if (c == '(') {
            eat('(');
            RationalFunction v = parse_sum();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_symbol();
        throw ParseError("expected number, symbol or '(' in scalar expression", pos_);
    }

    RationalFunction parse_number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        mpz_class n(std::string(text_.substr(start, pos_ - start)), 10);
        mpq_class q(n);
        return RationalFunction(Rational(q));
    }

    RationalFunction parse_symbol() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        std::string name(text_.substr(start, pos_ - start));
        for (const std::string& s : allowed_) {
            if (s == name) return RationalFunction::variable(symbols::intern(name));
        }
        throw ParseError("unknown symbol '" + name + "' in scalar expression", start);
    }

    std::string_view text_;
    const std::vector<std::string>& allowed_;
    std::size_t pos_ = 0;
};

const std::vector<std::string> kDefaultSymbols = {"t", "a"};

}  // namespace

RationalFunction parse_scalar(std::string_view text) {
    return ScalarParser(text, kDefaultSymbols).parse();
}

RationalFunction parse_scalar(std::string_view text,
                              const std::vector<std::string>& allowed_symbols) {
    return ScalarParser(text, allowed_symbols).parse();
}

Rational parse_rational(std::string_view text) {
    RationalFunction v = parse_scalar(text, {});
    if (!v.is_constant()) throw ParseError("expected a rational constant");
    return v.constant_value();
}

}  // namespace extalg
