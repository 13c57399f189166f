#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "extalg/catalog.hpp"
#include "extalg/convert.hpp"
#include "extalg/identity.hpp"

using namespace extalg;

namespace {

const Catalog& shared_catalog() {
    static Catalog cat = [] {
        const char* dir = std::getenv("EXTALG_CATALOG");
        return load_catalog(dir ? dir : "catalog");
    }();
    return cat;
}

// Builds a throwaway catalog directory holding a single algebras file.
struct TempCatalog {
    std::filesystem::path root;

    explicit TempCatalog(const std::string& algebras_json) {
        root = std::filesystem::temp_directory_path() /
               ("extalg-test-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        std::filesystem::create_directories(root / "algebras");
        std::ofstream out(root / "algebras" / "data.json");
        out << algebras_json;
    }
    ~TempCatalog() { std::filesystem::remove_all(root); }
};

}  // namespace

TEST_CASE("the bundled catalog loads with the expected shape") {
    const Catalog& cat = shared_catalog();
    CHECK(cat.entries.size() == 21);
    CHECK(cat.named_count() == 18);
    CHECK(cat.goldens.size() == 6);
    CHECK(cat.extensions.size() == 13);
    CHECK(cat.shapes.size() == 3);
    CHECK(cat.actions.size() == 4);
    CHECK(cat.orbits.size() == 1);
    CHECK(cat.degenerations.size() == 6);
    CHECK(cat.closed_sets.size() == 1);
    CHECK(cat.find("R4_5") != nullptr);
    CHECK(cat.find("R4_99") == nullptr);
    CHECK(cat.find_closed_set("R") != nullptr);
}

TEST_CASE("lookups fail with the available names") {
    const Catalog& cat = shared_catalog();
    try {
        cat.require("missing");
        FAIL("expected CatalogError");
    } catch (const CatalogError& e) {
        std::string msg = e.what();
        CHECK(msg.find("missing") != std::string::npos);
        CHECK(msg.find("R4_1") != std::string::npos);
    }
    CHECK_THROWS_AS(cat.require_shape("missing"), CatalogError);
}

TEST_CASE("parametric resolution") {
    const Catalog& cat = shared_catalog();
    Algebra<RationalFunction> generic = cat.resolve("N2_alpha", std::nullopt);
    CHECK(generic.c(1, 0, 2).symbols().size() == 1);

    Algebra<RationalFunction> at2 = cat.resolve("N2_alpha", Rational(2));
    CHECK(at2.c(1, 0, 2) == RationalFunction(Rational(-2)));
    CHECK_THROWS_AS(cat.resolve("N2_alpha", Rational(0)), CatalogError);
    CHECK_THROWS_AS(cat.resolve("N2_alpha", Rational(1)), CatalogError);
    CHECK_THROWS_AS(cat.resolve("R4_1", Rational(2)), CatalogError);
    CHECK(to_rational(cat.resolve("R4_1", std::nullopt)).dim() == 4);
}

TEST_CASE("malformed files are rejected with context") {
    TempCatalog zero_den(R"({"algebras": [{"name": "bad", "dim": 2,
        "constants": [{"i": 1, "j": 1, "k": 2, "value": "1/0"}]}]})");
    CHECK_THROWS_WITH_AS(load_catalog(zero_den.root.string()),
                         doctest::Contains("bad"), CatalogError);

    TempCatalog dup(R"({"algebras": [{"name": "dup", "dim": 2, "constants": [
        {"i": 1, "j": 1, "k": 2, "value": "1"},
        {"i": 1, "j": 1, "k": 2, "value": "2"}]}]})");
    CHECK_THROWS_WITH_AS(load_catalog(dup.root.string()),
                         doctest::Contains("duplicate"), CatalogError);

    TempCatalog range(R"({"algebras": [{"name": "range", "dim": 2,
        "constants": [{"i": 1, "j": 1, "k": 3, "value": "1"}]}]})");
    CHECK_THROWS_AS(load_catalog(range.root.string()), CatalogError);

    TempCatalog tag(R"({"algebras": [{"name": "tagged", "dim": 1,
        "tags": ["shiny"]}]})");
    CHECK_THROWS_WITH_AS(load_catalog(tag.root.string()),
                         doctest::Contains("tag"), CatalogError);

    TempCatalog symbol(R"({"algebras": [{"name": "sym", "dim": 2,
        "constants": [{"i": 1, "j": 1, "k": 2, "value": "a"}]}]})");
    CHECK_THROWS_AS(load_catalog(symbol.root.string()), CatalogError);

    TempCatalog broken(R"({"algebras": )");
    CHECK_THROWS_AS(load_catalog(broken.root.string()), CatalogError);
}

TEST_CASE("a missing directory is an error") {
    CHECK_THROWS_AS(load_catalog("/nonexistent/catalog/path"), CatalogError);
}

TEST_CASE("generate_Rn") {
    Algebra<Rational> r3 = generate_Rn(3);
    CHECK(r3.str() == "e1*e1 = e2, e1*e2 = e3, e2*e1 = e3");
    CHECK(generate_Rn(1).is_zero_algebra());
    const Catalog& cat = shared_catalog();
    CHECK(lift(generate_Rn(4)) == cat.require("R4_9").algebra);
}
