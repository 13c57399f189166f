#include "extalg/forms.hpp"

#include <cctype>
#include <optional>
#include <string>

#include "extalg/convert.hpp"
#include "extalg/errors.hpp"
#include "extalg/polynomial.hpp"
#include "extalg/scalar_expr.hpp"

namespace extalg {

namespace {

// Values are scalars or forms; products may mix the two kinds but never
// multiply two forms.
struct Value {
    RationalFunction scalar;
    std::optional<Matrix<RationalFunction>> form;

    bool is_form() const { return form.has_value(); }
};

class FormParser {
public:
    FormParser(std::string_view text, std::size_t dim, const std::vector<std::string>& allowed)
        : text_(text), dim_(dim), allowed_(allowed) {}

    Matrix<RationalFunction> parse() {
        Value v = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) {
            throw ParseError("unexpected trailing input in form expression", pos_);
        }
        if (!v.is_form()) {
            throw ParseError("expression is a scalar, not a bilinear form", pos_);
        }
        return *v.form;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
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

    static Value negate(Value v) {
        if (v.is_form()) {
            *v.form = v.form->scaled(RationalFunction(Rational(-1)));
        } else {
            v.scalar = -v.scalar;
        }
        return v;
    }

    Value add(Value a, Value b, bool subtract) {
        if (subtract) b = negate(std::move(b));
        if (a.is_form() != b.is_form()) {
            throw ParseError("cannot add a scalar to a bilinear form", pos_);
        }
        if (a.is_form()) {
            *a.form = *a.form + *b.form;
            return a;
        }
        a.scalar += b.scalar;
        return a;
    }

    Value multiply(Value a, Value b) {
        if (a.is_form() && b.is_form()) {
            throw ParseError("bilinear forms cannot be multiplied together", pos_);
        }
        if (a.is_form()) std::swap(a, b);
        if (b.is_form()) {
            *b.form = b.form->scaled(a.scalar);
            return b;
        }
        a.scalar *= b.scalar;
        return a;
    }

    Value parse_sum() {
        Value v = parse_product();
        while (true) {
            if (eat('+')) {
                v = add(std::move(v), parse_product(), false);
            } else if (eat('-')) {
                v = add(std::move(v), parse_product(), true);
            } else {
                return v;
            }
        }
    }

    Value parse_product() {
        Value v = parse_factor();
        while (true) {
            if (eat('*')) {
                v = multiply(std::move(v), parse_factor());
            } else if (eat('/')) {
                Value d = parse_factor();
                if (d.is_form()) throw ParseError("cannot divide by a bilinear form", pos_);
                if (d.scalar.is_zero()) throw ZeroDivisionError("division by zero in form expression");
                v = multiply(std::move(v), Value{d.scalar.inverse(), std::nullopt});
            } else {
                return v;
            }
        }
    }

    Value parse_factor() {
        if (eat('-')) return negate(parse_factor());
        Value base = parse_primary();
        if (eat('^')) {
            if (base.is_form()) throw ParseError("bilinear forms cannot be raised to powers", pos_);
            skip_ws();
            bool neg = eat('-');
            std::size_t start = pos_;
            long e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + (text_[pos_] - '0');
                ++pos_;
            }
            if (pos_ == start) throw ParseError("expected integer exponent", pos_);
            if (neg) e = -e;
            if (e < 0 && base.scalar.is_zero()) {
                throw ZeroDivisionError("zero raised to a negative power");
            }
            base.scalar = base.scalar.pow(static_cast<int>(e));
        }
        return base;
    }

    Value parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of form expression", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = parse_sum();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) {
                ++pos_;
            }
            return {RationalFunction(Rational::parse(text_.substr(start, pos_ - start))),
                    std::nullopt};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            std::string name(text_.substr(start, pos_ - start));
            if (name.size() == 3 && name[0] == 'D' &&
                std::isdigit(static_cast<unsigned char>(name[1])) &&
                std::isdigit(static_cast<unsigned char>(name[2]))) {
                std::size_t i = static_cast<std::size_t>(name[1] - '0');
                std::size_t j = static_cast<std::size_t>(name[2] - '0');
                if (i < 1 || j < 1 || i > dim_ || j > dim_) {
                    throw ParseError("form index out of range in " + name, start);
                }
                Matrix<RationalFunction> m(dim_, dim_);
                m(i - 1, j - 1) = RationalFunction(Rational(1));
                return {RationalFunction(), std::move(m)};
            }
            for (const std::string& allowed : allowed_) {
                if (name == allowed) {
                    return {RationalFunction(Polynomial::variable(symbols::intern(name))),
                            std::nullopt};
                }
            }
            throw ParseError("unknown symbol '" + name + "' in form expression", start);
        }
        throw ParseError(std::string("unexpected character '") + c + "' in form expression", pos_);
    }

    std::string_view text_;
    std::size_t dim_;
    const std::vector<std::string>& allowed_;
    std::size_t pos_ = 0;
};

}  // namespace

Matrix<RationalFunction> parse_form(std::string_view text, std::size_t dim,
                                    const std::vector<std::string>& symbols) {
    return FormParser(text, dim, symbols).parse();
}

Matrix<Rational> parse_constant_form(std::string_view text, std::size_t dim) {
    Matrix<RationalFunction> m = parse_form(text, dim, {});
    return to_rational(m);
}

std::string form_str(const Matrix<Rational>& form) {
    std::string out;
    for (std::size_t i = 0; i < form.rows(); ++i) {
        for (std::size_t j = 0; j < form.cols(); ++j) {
            const Rational& c = form(i, j);
            if (c.is_zero()) continue;
            std::string name = "D" + std::to_string(i + 1) + std::to_string(j + 1);
            if (c == Rational(1)) {
                out += out.empty() ? name : "+" + name;
            } else if (c == Rational(-1)) {
                out += "-" + name;
            } else {
                std::string coef = c.str();
                if (!out.empty() && coef[0] != '-') out += "+";
                out += coef + "*" + name;
            }
        }
    }
    return out.empty() ? "0" : out;
}

std::string form_str(const Matrix<RationalFunction>& form) {
    RationalFunction one(Rational(1));
    std::string out;
    for (std::size_t i = 0; i < form.rows(); ++i) {
        for (std::size_t j = 0; j < form.cols(); ++j) {
            const RationalFunction& c = form(i, j);
            if (c.is_zero()) continue;
            std::string name = "D" + std::to_string(i + 1) + std::to_string(j + 1);
            if (c == one) {
                out += out.empty() ? name : "+" + name;
            } else if (c == -one) {
                out += "-" + name;
            } else {
                std::string coef = c.str();
                bool plain = coef.find_first_of("+- ") == std::string::npos;
                if (!plain) coef = "(" + coef + ")";
                if (!out.empty() && coef[0] != '-') out += "+";
                out += coef + "*" + name;
            }
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace extalg
