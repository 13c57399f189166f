#include <doctest.h>

#include <cstdlib>

#include "extalg/catalog.hpp"
#include "extalg/convert.hpp"
#include "extalg/degeneration.hpp"
#include "extalg/scalar_expr.hpp"

using namespace extalg;

namespace {

const Catalog& shared_catalog() {
    static Catalog cat = [] {
        const char* dir = std::getenv("EXTALG_CATALOG");
        return load_catalog(dir ? dir : "catalog");
    }();
    return cat;
}

ParametricBasis diagonal_basis(const std::vector<std::string>& entries) {
    ParametricBasis p(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) p(i, i) = parse_scalar(entries[i]);
    return p;
}

}  // namespace

TEST_CASE("a parametric basis rescales the structure constants") {
    Algebra<RationalFunction> a(2);
    a.c(0, 0, 1) = RationalFunction(1);
    ParametricBasis p = diagonal_basis({"1", "1/t"});

    Algebra<RationalFunction> moved = apply_parametric_basis(a, p);
    CHECK(moved.c(0, 0, 1) == parse_scalar("t"));

    LimitOutcome limit = degeneration_limit(a, p);
    REQUIRE(std::holds_alternative<Algebra<RationalFunction>>(limit));
    CHECK(std::get<Algebra<RationalFunction>>(limit).is_zero_algebra());
}

TEST_CASE("poles are reported entrywise") {
    Algebra<RationalFunction> a(2);
    a.c(0, 0, 1) = RationalFunction(1);
    LimitOutcome limit = degeneration_limit(a, diagonal_basis({"1", "t"}));
    REQUIRE(std::holds_alternative<PoleReport>(limit));
    const PoleReport& report = std::get<PoleReport>(limit);
    REQUIRE(report.entries.size() == 1);
    CHECK(report.entries[0].i == 0);
    CHECK(report.entries[0].j == 0);
    CHECK(report.entries[0].k == 1);
    CHECK(report.str().find("c(1,1,2)") != std::string::npos);
}

TEST_CASE("row verification distinguishes right and wrong targets") {
    const Catalog& cat = shared_catalog();
    const Algebra<RationalFunction>& source = cat.require("R4_9").algebra;
    ParametricBasis p = diagonal_basis({"1", "1", "1", "1/t"});

    DegenerationOutcome good = verify_degeneration_row(
        source, cat.require("R4_1").algebra, p, {});
    CHECK(good.verified);
    CHECK(good.detail == "symbolic");

    DegenerationOutcome bad = verify_degeneration_row(
        source, cat.require("R4_2").algebra, p, {});
    CHECK_FALSE(bad.verified);
    CHECK_FALSE(bad.detail.empty());
}

TEST_CASE("alpha samples rescue a symbolic pole") {
    const Catalog& cat = shared_catalog();
    const DegenerationRecord* family_row = nullptr;
    for (const DegenerationRecord& rec : cat.degenerations) {
        if (rec.target == "N2_alpha") family_row = &rec;
    }
    REQUIRE(family_row != nullptr);
    DegenerationOutcome out = verify_degeneration_row(
        cat.require(family_row->source).algebra, cat.require(family_row->target).algebra,
        family_row->matrix, family_row->alpha_samples);
    CHECK(out.verified);
}

TEST_CASE("closed set membership in the stored basis") {
    const Catalog& cat = shared_catalog();
    const ClosedSet& set = cat.find_closed_set("R")->set;
    Algebra<Rational> r48 = to_rational(cat.require("R4_8").algebra);
    CHECK(check_closed_set(r48, set).satisfied);

    Algebra<Rational> r45 = to_rational(cat.require("R4_5").algebra);
    ClosedSetCheck chk = check_closed_set(r45, set);
    CHECK_FALSE(chk.satisfied);
    CHECK_FALSE(chk.violation.empty());

    Algebra<Rational> small(2);
    CHECK_THROWS_AS(check_closed_set(small, set), DimensionError);
}

TEST_CASE("the conditions are stable under the triangular subgroup") {
    // The flag conditions survive any change of basis whose matrix is upper
    // triangular in the row convention, so membership is basis independent
    // along that subgroup.
    const Catalog& cat = shared_catalog();
    const ClosedSet& set = cat.find_closed_set("R")->set;
    Algebra<Rational> r48 = to_rational(cat.require("R4_8").algebra);
    Rng rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix<Rational> upper = random_lower_triangular(4, rng).transpose();
        CHECK(check_closed_set(change_basis(r48, upper), set).satisfied);
    }
}

TEST_CASE("basis search hits an interior point immediately") {
    const Catalog& cat = shared_catalog();
    const ClosedSet& set = cat.find_closed_set("R")->set;
    Algebra<Rational> r48 = to_rational(cat.require("R4_8").algebra);
    BasisSearchResult hit = closed_set_basis_search(r48, set, 100, 1);
    CHECK(hit.found());
    CHECK(hit.trials_used == 1);
    CHECK(*hit.basis == Matrix<Rational>::identity(4));
}

TEST_CASE("basis search misses are reported as used budget") {
    const Catalog& cat = shared_catalog();
    const ClosedSet& set = cat.find_closed_set("R")->set;
    Algebra<Rational> r45 = to_rational(cat.require("R4_5").algebra);
    BasisSearchResult miss = closed_set_basis_search(r45, set, 200, 1);
    CHECK_FALSE(miss.found());
    CHECK(miss.trials_used == 200);

    BasisSearchResult repeat = closed_set_basis_search(r45, set, 200, 1);
    CHECK(repeat.trials_used == miss.trials_used);
}

TEST_CASE("random lower triangular matrices are invertible") {
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix<Rational> m = random_lower_triangular(4, rng);
        CHECK_FALSE(determinant(m).is_zero());
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = i + 1; j < 4; ++j) CHECK(m(i, j) == Rational(0));
        }
    }
}
