#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "extalg/algebra.hpp"
#include "extalg/matrix.hpp"
#include "extalg/rational.hpp"

namespace extalg {

// Fully parenthesized nonassociative word in the identity variables, e.g.
// (x*y)*z. Immutable; nodes are shared on copy.
class Word {
public:
    static Word leaf(std::size_t var);
    static Word node(Word left, Word right);

    bool is_leaf() const { return node_->left == nullptr; }
    std::size_t var() const { return node_->var; }
    Word left() const;
    Word right() const;
    std::size_t degree() const;  // number of leaves

    // Leaf variables in order, e.g. (x*y)*z -> {0, 1, 2}.
    void collect_vars(std::vector<std::size_t>& out) const;

    std::string str(const std::vector<char>& names) const;
    // Canonical structural key; equal keys mean equal words.
    std::string key() const;

private:
    struct Node {
        std::size_t var = 0;
        std::shared_ptr<const Node> left, right;
    };
    explicit Word(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Multilinear polynomial identity: a formal rational combination of words in
// a fixed variable list, asserted to vanish identically. Every term must use
// every variable exactly once.
class Identity {
public:
    struct Term {
        Rational coefficient;
        Word word;
    };

    // Accepts e.g. "(x*y)*z - x*(y*z) + (x*z)*y - x*(z*y)" or "x*y = y*x"
    // (an '=' moves the right side over with negated signs). Coefficients are
    // optional rational literals attached with '*': "2*(x*y)*z".
    static Identity parse(std::string_view text);

    // The named identities understood everywhere an identity can be passed:
    // right-alternative, associative, anticommutative, minus-one-one-cyclic,
    // xyz-zero-left, xyz-zero-right.
    static const Identity& builtin(std::string_view name);
    static const std::vector<std::string>& builtin_names();
    // Resolves a builtin name, otherwise parses the text as an identity.
    static Identity named_or_parsed(std::string_view text);

    const std::string& name() const { return name_; }
    const std::vector<char>& variables() const { return vars_; }
    std::size_t degree() const { return vars_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::string str() const;

private:
    friend class IdentityParser;
    std::string name_;  // builtin name or the source text
    std::vector<char> vars_;
    std::vector<Term> terms_;
};

template <FieldScalar S>
struct IdentityCheck {
    bool holds = true;
    // Basis indices (0-based) of the first violating substitution and the
    // nonzero value the identity evaluates to there.
    std::vector<std::size_t> counterexample;
    std::vector<S> value;

    std::string describe(const Identity& id) const {
        if (holds) return "holds";
        std::string s = "violated at (";
        for (std::size_t k = 0; k < counterexample.size(); ++k) {
            if (k > 0) s += ", ";
            s += id.variables()[k];
            s += " = e" + std::to_string(counterexample[k] + 1);
        }
        s += ")";
        return s;
    }
};

// Coefficient embedding for both scalar levels.
template <typename S>
struct RationalFunctionCompatible {
    static S embed(const Rational& c) { return S(c); }
};

namespace detail {
template <FieldScalar S>
std::vector<S> eval_word(const Algebra<S>& a, const Word& w,
                         const std::vector<std::size_t>& tuple) {
    if (w.is_leaf()) {
        std::vector<S> v(a.dim(), S::zero());
        v[tuple[w.var()]] = S::one();
        return v;
    }
    return a.multiply(eval_word(a, w.left(), tuple), eval_word(a, w.right(), tuple));
}
}  // namespace detail

// Checks the identity on all basis substitutions; by multilinearity this is
// equivalent to checking it on the whole algebra.
template <FieldScalar S>
IdentityCheck<S> check_identity(const Algebra<S>& a, const Identity& id) {
    std::size_t n = a.dim();
    std::size_t d = id.degree();
    std::vector<std::size_t> tuple(d, 0);
    IdentityCheck<S> result;
    while (true) {
        std::vector<S> acc(n, S::zero());
        for (const auto& term : id.terms()) {
            std::vector<S> v = detail::eval_word(a, term.word, tuple);
            vec_add_scaled(acc, RationalFunctionCompatible<S>::embed(term.coefficient), v);
        }
        if (!vec_is_zero(acc)) {
            result.holds = false;
            result.counterexample = tuple;
            result.value = std::move(acc);
            return result;
        }
        std::size_t k = 0;
        while (k < d && ++tuple[k] == n) tuple[k++] = 0;
        if (k == d) break;
    }
    return result;
}

// Linear constraints a bilinear form theta must satisfy for the identity to
// survive the central extension by theta: every top-level product mu(U, V) in
// a term becomes theta(value(U), value(V)), evaluated on all basis tuples.
// Rows are indexed by the substitution tuple, columns by the vectorized form
// entry (p, q) -> p*dim + q.
template <FieldScalar S>
Matrix<S> cocycle_constraint_matrix(const Algebra<S>& a, const Identity& id) {
    std::size_t n = a.dim();
    std::size_t d = id.degree();
    if (d < 2) throw UnsupportedError("cocycle constraints need an identity of degree >= 2");
    for (const auto& term : id.terms()) {
        if (term.word.is_leaf()) {
            throw UnsupportedError("cocycle constraints need every term to be a product");
        }
    }
    std::size_t row_count = 1;
    for (std::size_t k = 0; k < d; ++k) row_count *= n;

    Matrix<S> sys(row_count, n * n);
    std::vector<std::size_t> tuple(d, 0);
    for (std::size_t row = 0; row < row_count; ++row) {
        for (const auto& term : id.terms()) {
            std::vector<S> u = detail::eval_word(a, term.word.left(), tuple);
            std::vector<S> v = detail::eval_word(a, term.word.right(), tuple);
            S coef = RationalFunctionCompatible<S>::embed(term.coefficient);
            for (std::size_t p = 0; p < n; ++p) {
                if (u[p].is_zero()) continue;
                for (std::size_t q = 0; q < n; ++q) {
                    if (v[q].is_zero()) continue;
                    sys(row, p * n + q) = sys(row, p * n + q) + coef * u[p] * v[q];
                }
            }
        }
        std::size_t k = 0;
        while (k < d && ++tuple[k] == n) tuple[k++] = 0;
    }
    return sys;
}

// --- closed sets -------------------------------------------------------------

// c(i,j,k) = 0 whenever i >= p, j >= q, k < r, all 1-based; the coordinate
// form of "the product of the basis flags A_p A_q lies in A_r", where A_m is
// spanned by e_m, ..., e_n.
struct FlagProductCondition {
    std::size_t p = 1, q = 1, r = 1;
};

// Linear equation among structure constants: sum of coef * c(i,j,k) = 0,
// indices 1-based.
struct StructureEquation {
    struct Entry {
        Rational coefficient;
        std::size_t i, j, k;
    };
    std::vector<Entry> entries;
};

using ClosedSetCondition = std::variant<FlagProductCondition, StructureEquation>;

struct ClosedSet {
    std::string name;
    std::size_t ambient_dim = 0;
    std::vector<ClosedSetCondition> conditions;
};

struct ClosedSetCheck {
    bool satisfied = true;
    std::string violation;  // description of the first failed condition
};

template <FieldScalar S>
ClosedSetCheck check_closed_set(const Algebra<S>& a, const ClosedSet& set) {
    if (set.ambient_dim != a.dim()) {
        throw DimensionError("closed set is defined in a different dimension");
    }
    std::size_t n = a.dim();
    ClosedSetCheck out;
    for (const ClosedSetCondition& cond : set.conditions) {
        if (const auto* flag = std::get_if<FlagProductCondition>(&cond)) {
            for (std::size_t i = flag->p; i <= n; ++i) {
                for (std::size_t j = flag->q; j <= n; ++j) {
                    for (std::size_t k = 1; k < flag->r && k <= n; ++k) {
                        if (!a.c(i - 1, j - 1, k - 1).is_zero()) {
                            out.satisfied = false;
                            out.violation = "c(" + std::to_string(i) + "," + std::to_string(j) +
                                            "," + std::to_string(k) + ") = " +
                                            a.c(i - 1, j - 1, k - 1).str() +
                                            " violates A" + std::to_string(flag->p) + "*A" +
                                            std::to_string(flag->q) + " in A" +
                                            std::to_string(flag->r);
                            return out;
                        }
                    }
                }
            }
        } else {
            const auto& eq = std::get<StructureEquation>(cond);
            S acc = S::zero();
            std::string text;
            for (const auto& e : eq.entries) {
                acc = acc + RationalFunctionCompatible<S>::embed(e.coefficient) *
                                a.c(e.i - 1, e.j - 1, e.k - 1);
                if (!text.empty()) text += " + ";
                text += "(" + e.coefficient.str() + ")*c(" + std::to_string(e.i) + "," +
                        std::to_string(e.j) + "," + std::to_string(e.k) + ")";
            }
            if (!acc.is_zero()) {
                out.satisfied = false;
                out.violation = text + " = " + acc.str() + ", expected 0";
                return out;
            }
        }
    }
    return out;
}

}  // namespace extalg
