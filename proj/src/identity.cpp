#include "extalg/identity.hpp"

#include <cctype>
#include <map>
#include <mutex>

#include "extalg/errors.hpp"

namespace extalg {

Word Word::leaf(std::size_t var) {
    auto n = std::make_shared<Node>();
    n->var = var;
    return Word(std::move(n));
}

Word Word::node(Word left, Word right) {
    auto n = std::make_shared<Node>();
    n->left = left.node_;
    n->right = right.node_;
    return Word(std::move(n));
}

Word Word::left() const {
    if (is_leaf()) throw Error("leaf word has no children");
    return Word(node_->left);
}

Word Word::right() const {
    if (is_leaf()) throw Error("leaf word has no children");
    return Word(node_->right);
}

std::size_t Word::degree() const {
    if (is_leaf()) return 1;
    return left().degree() + right().degree();
}

void Word::collect_vars(std::vector<std::size_t>& out) const {
    if (is_leaf()) {
        out.push_back(var());
        return;
    }
    left().collect_vars(out);
    right().collect_vars(out);
}

std::string Word::str(const std::vector<char>& names) const {
    if (is_leaf()) return std::string(1, names[var()]);
    auto wrap = [&](const Word& w) {
        std::string s = w.str(names);
        return w.is_leaf() ? s : "(" + s + ")";
    };
    return wrap(left()) + "*" + wrap(right());
}

std::string Word::key() const {
    if (is_leaf()) return std::to_string(var());
    return "(" + left().key() + " " + right().key() + ")";
}

namespace {

class IdentityTextParser {
public:
    explicit IdentityTextParser(std::string_view text) : text_(text) {}

    std::vector<Identity::Term> parse() {
        parse_side(false);
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '=') {
            ++pos_;
            parse_side(true);
        }
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected input in identity", pos_);
        if (terms_.empty()) throw ParseError("identity has no terms");
        finalize();
        return std::move(terms_);
    }

    const std::vector<char>& vars() const { return vars_; }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void parse_side(bool negate) {
        skip_ws();
        // A side may be the literal 0, as in "x*(y*z) = 0".
        if (peek() == '0') {
            ++pos_;
            return;
        }
        bool first = true;
        while (true) {
            skip_ws();
            Rational sign(1);
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                if (text_[pos_] == '-') sign = Rational(-1);
                ++pos_;
            } else if (!first) {
                break;
            }
            parse_term(negate ? -sign : sign);
            first = false;
            char c = peek();
            if (c != '+' && c != '-') break;
        }
    }

    void parse_term(const Rational& sign) {
        skip_ws();
        Rational coef = sign;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            coef = coef * parse_rational_literal();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != '*') {
                throw ParseError("expected '*' between coefficient and word", pos_);
            }
            ++pos_;
        }
        Word w = parse_word();
        register_term(coef, std::move(w));
    }

    Rational parse_rational_literal() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        std::string num(text_.substr(start, pos_ - start));
        std::string den = "1";
        if (pos_ < text_.size() && text_[pos_] == '/') {
            // Only consume the '/' if digits follow; otherwise it is not part
            // of a rational literal.
            std::size_t save = pos_;
            ++pos_;
            std::size_t dstart = pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (pos_ == dstart) {
                pos_ = save;
            } else {
                den = std::string(text_.substr(dstart, pos_ - dstart));
            }
        }
        return Rational::parse(num + (den == "1" ? "" : "/" + den));
    }

    // word := factor ('*' factor)?  -- at most one top-level product, so
    // every deeper association must be written with parentheses.
    Word parse_word() {
        Word lhs = parse_factor();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '*') {
            ++pos_;
            Word rhs = parse_factor();
            return Word::node(std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Word parse_factor() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of identity", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Word w = parse_word();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')') {
                throw ParseError("expected ')'", pos_);
            }
            ++pos_;
            return w;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) && std::islower(static_cast<unsigned char>(c))) {
            ++pos_;
            return Word::leaf(var_index(c));
        }
        throw ParseError("expected variable or '(' in identity", pos_);
    }

    std::size_t var_index(char c) {
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (vars_[i] == c) return i;
        }
        vars_.push_back(c);
        return vars_.size() - 1;
    }

    void register_term(Rational coef, Word w) {
        if (coef.is_zero()) return;
        std::string key = w.key();
        for (auto& term : terms_) {
            if (term.word.key() == key) {
                term.coefficient += coef;
                return;
            }
        }
        terms_.push_back({std::move(coef), std::move(w)});
    }

    void finalize() {
        // Drop terms cancelled during merging.
        std::vector<Identity::Term> kept;
        for (auto& t : terms_) {
            if (!t.coefficient.is_zero()) kept.push_back(std::move(t));
        }
        terms_ = std::move(kept);
        if (terms_.empty()) {
            throw ParseError("identity is trivially zero after collecting terms");
        }
        for (const auto& t : terms_) {
            std::vector<std::size_t> seen;
            t.word.collect_vars(seen);
            std::vector<bool> used(vars_.size(), false);
            for (std::size_t v : seen) {
                if (used[v]) {
                    throw MultilinearityError(
                        std::string("variable '") + vars_[v] +
                        "' appears twice in the term " + t.word.str(vars_));
                }
                used[v] = true;
            }
            for (std::size_t v = 0; v < used.size(); ++v) {
                if (!used[v]) {
                    throw MultilinearityError(
                        std::string("term ") + t.word.str(vars_) +
                        " is missing variable '" + vars_[v] + "'");
                }
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::vector<char> vars_;
    std::vector<Identity::Term> terms_;
};

}  // namespace

Identity Identity::parse(std::string_view text) {
    IdentityTextParser parser(text);
    Identity id;
    id.terms_ = parser.parse();
    id.vars_ = parser.vars();
    id.name_ = std::string(text);
    return id;
}

namespace {
const std::vector<std::pair<std::string, std::string>>& builtin_table() {
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"right-alternative", "(x*y)*z - x*(y*z) + (x*z)*y - x*(z*y)"},
        {"associative", "(x*y)*z - x*(y*z)"},
        {"anticommutative", "x*y + y*x"},
        {"minus-one-one-cyclic",
         "(x*y)*z - x*(y*z) + (y*z)*x - y*(z*x) + (z*x)*y - z*(x*y)"},
        {"xyz-zero-left", "(x*y)*z"},
        {"xyz-zero-right", "x*(y*z)"},
    };
    return table;
}
}  // namespace

const Identity& Identity::builtin(std::string_view name) {
    static std::map<std::string, Identity, std::less<>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    for (const auto& [n, text] : builtin_table()) {
        if (n == name) {
            Identity id = parse(text);
            id.name_ = n;
            return cache.emplace(n, std::move(id)).first->second;
        }
    }
    throw CatalogError("unknown builtin identity '" + std::string(name) + "'");
}

const std::vector<std::string>& Identity::builtin_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [n, text] : builtin_table()) out.push_back(n);
        return out;
    }();
    return names;
}

Identity Identity::named_or_parsed(std::string_view text) {
    for (const auto& [n, t] : builtin_table()) {
        if (n == text) return builtin(text);
    }
    return parse(text);
}

std::string Identity::str() const {
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        Rational mag = t.coefficient;
        if (i == 0) {
            if (mag.sign() < 0) {
                out += "-";
                mag = -mag;
            }
        } else {
            out += mag.sign() < 0 ? " - " : " + ";
            if (mag.sign() < 0) mag = -mag;
        }
        if (!mag.is_one()) out += mag.str() + "*";
        out += t.word.str(vars_);
    }
    return out;
}

}  // namespace extalg
