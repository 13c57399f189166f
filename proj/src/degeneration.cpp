#include "extalg/degeneration.hpp"

#include "extalg/errors.hpp"

namespace extalg {

std::string PoleReport::str() const {
    std::string out = "pole at";
    for (const PoleEntry& e : entries) {
        out += " c(" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) + "," +
               std::to_string(e.k + 1) + ")";
    }
    return out;
}

Algebra<RationalFunction> apply_parametric_basis(const Algebra<RationalFunction>& a,
                                                 const ParametricBasis& e) {
    return change_basis(a, e);
}

LimitOutcome degeneration_limit(const Algebra<RationalFunction>& a, const ParametricBasis& e) {
    Algebra<RationalFunction> transformed = apply_parametric_basis(a, e);
    std::size_t n = transformed.dim();
    Algebra<RationalFunction> limit(n);
    PoleReport report;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                try {
                    limit.c(i, j, k) = transformed.c(i, j, k).limit_t_zero();
                } catch (const PoleError&) {
                    report.entries.push_back({i, j, k});
                }
            }
        }
    }
    if (!report.entries.empty()) return report;
    return limit;
}

namespace {

std::string mismatch_detail(const Algebra<RationalFunction>& got,
                            const Algebra<RationalFunction>& want) {
    std::string out = "mismatch at";
    std::size_t n = got.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (!(got.c(i, j, k) == want.c(i, j, k))) {
                    out += " c(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                           std::to_string(k + 1) + ")=" + got.c(i, j, k).str() +
                           " (expected " + want.c(i, j, k).str() + ")";
                }
            }
        }
    }
    return out;
}

DegenerationOutcome verify_exact(const Algebra<RationalFunction>& source,
                                 const Algebra<RationalFunction>& target,
                                 const ParametricBasis& basis, const std::string& mode) {
    LimitOutcome outcome = degeneration_limit(source, basis);
    if (const auto* report = std::get_if<PoleReport>(&outcome)) {
        return {false, mode + ": " + report->str()};
    }
    const auto& limit = std::get<Algebra<RationalFunction>>(outcome);
    if (limit == target) return {true, mode};
    return {false, mode + ": " + mismatch_detail(limit, target)};
}

}  // namespace

DegenerationOutcome verify_degeneration_row(const Algebra<RationalFunction>& source,
                                            const Algebra<RationalFunction>& target,
                                            const ParametricBasis& basis,
                                            const std::vector<Rational>& alpha_samples) {
    if (source.dim() != target.dim() || basis.rows() != source.dim() ||
        basis.cols() != source.dim()) {
        throw DimensionError("degeneration row shapes disagree");
    }
    DegenerationOutcome symbolic = verify_exact(source, target, basis, "symbolic");
    if (symbolic.verified || alpha_samples.empty()) return symbolic;

    SymbolId alpha = symbols::alpha();
    std::string detail = "alpha samples";
    for (const Rational& value : alpha_samples) {
        DegenerationOutcome sample =
            verify_exact(substitute(source, alpha, value), substitute(target, alpha, value),
                         substitute(basis, alpha, value), "alpha=" + value.str());
        if (!sample.verified) return sample;
        detail += " " + value.str();
    }
    return {true, detail};
}

Matrix<Rational> random_lower_triangular(std::size_t n, Rng& rng) {
    while (true) {
        Matrix<Rational> p(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j <= i; ++j) p(i, j) = rng.small_rational(3, 2);
        }
        bool invertible = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (p(i, i).is_zero()) invertible = false;
        }
        if (invertible) return p;
    }
}

BasisSearchResult closed_set_basis_search(const Algebra<Rational>& a, const ClosedSet& set,
                                          std::uint64_t trials, std::uint64_t seed) {
    std::size_t n = a.dim();
    Rng rng = Rng::derive(seed, "closed-set-basis-search");
    BasisSearchResult result;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        Matrix<Rational> p = Matrix<Rational>::identity(n);
        if (trial > 0) {
            while (true) {
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) p(i, j) = rng.small_rational(3, 2);
                }
                if (!determinant(p).is_zero()) break;
            }
        }
        result.trials_used = trial + 1;
        if (check_closed_set(change_basis(a, p), set).satisfied) {
            result.basis = std::move(p);
            return result;
        }
    }
    return result;
}

}  // namespace extalg
