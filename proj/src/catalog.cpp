#include "extalg/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "extalg/convert.hpp"
#include "extalg/errors.hpp"
#include "extalg/forms.hpp"
#include "extalg/scalar_expr.hpp"

namespace extalg {

namespace {

using nlohmann::json;

json load_json(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw CatalogError("cannot open " + file.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw CatalogError(file.string() + ": " + e.what());
    }
}

std::vector<std::filesystem::path> sorted_json_files(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    if (!std::filesystem::exists(dir)) return files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

[[noreturn]] void fail(const std::string& context, const std::string& message) {
    throw CatalogError(context + ": " + message);
}

const json& field(const json& j, const char* key, const std::string& context) {
    auto it = j.find(key);
    if (it == j.end()) fail(context, std::string("missing field '") + key + "'");
    return *it;
}

std::string string_field(const json& j, const char* key, const std::string& context) {
    const json& v = field(j, key, context);
    if (!v.is_string()) fail(context, std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

std::size_t index_field(const json& j, const char* key, std::size_t dim,
                        const std::string& context) {
    const json& v = field(j, key, context);
    if (!v.is_number_unsigned() || v.get<std::size_t>() < 1 || v.get<std::size_t>() > dim) {
        fail(context, std::string("field '") + key + "' must be an index in 1.." +
                          std::to_string(dim));
    }
    return v.get<std::size_t>();
}

Rational rational_field(const json& v, const std::string& context) {
    try {
        if (v.is_number_integer()) return Rational(v.get<long>());
        if (v.is_string()) return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
        fail(context, e.what());
    }
    fail(context, "expected a rational value");
}

std::vector<Rational> rational_list(const json& j, const char* key, const std::string& context) {
    std::vector<Rational> out;
    auto it = j.find(key);
    if (it == j.end()) return out;
    if (!it->is_array()) fail(context, std::string("field '") + key + "' must be an array");
    for (const json& v : *it) out.push_back(rational_field(v, context));
    return out;
}

std::vector<std::string> string_list(const json& j, const char* key, const std::string& context) {
    std::vector<std::string> out;
    auto it = j.find(key);
    if (it == j.end()) return out;
    if (!it->is_array()) fail(context, std::string("field '") + key + "' must be an array");
    for (const json& v : *it) {
        if (!v.is_string()) fail(context, std::string("entries of '") + key + "' must be strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

std::optional<Rational> optional_alpha(const json& j, const char* key,
                                       const std::string& context) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    return rational_field(*it, context);
}

CatalogEntry parse_entry(const json& j, const std::string& file) {
    std::string context = file;
    std::string name = string_field(j, "name", context);
    context = file + ", entry " + name;

    const json& dim_v = field(j, "dim", context);
    if (!dim_v.is_number_unsigned() || dim_v.get<std::size_t>() < 1) {
        fail(context, "field 'dim' must be a positive integer");
    }
    std::size_t dim = dim_v.get<std::size_t>();

    CatalogEntry entry;
    entry.name = std::move(name);
    entry.parametric = j.value("parametric", false);
    entry.auxiliary = j.value("auxiliary", false);
    entry.algebra = Algebra<RationalFunction>(dim);

    std::vector<std::string> symbols;
    if (entry.parametric) symbols.push_back("a");
    if (auto it = j.find("constants"); it != j.end()) {
        if (!it->is_array()) fail(context, "field 'constants' must be an array");
        for (const json& c : *it) {
            std::size_t i = index_field(c, "i", dim, context);
            std::size_t jj = index_field(c, "j", dim, context);
            std::size_t k = index_field(c, "k", dim, context);
            std::string value = string_field(c, "value", context);
            RationalFunction parsed;
            try {
                parsed = parse_scalar(value, symbols);
            } catch (const Error& e) {
                fail(context, "constant c(" + std::to_string(i) + "," + std::to_string(jj) + "," +
                                  std::to_string(k) + "): " + e.what());
            }
            if (!entry.algebra.c(i - 1, jj - 1, k - 1).is_zero()) {
                fail(context, "duplicate constant c(" + std::to_string(i) + "," +
                                  std::to_string(jj) + "," + std::to_string(k) + ")");
            }
            entry.algebra.c(i - 1, jj - 1, k - 1) = std::move(parsed);
        }
    }

    static const std::set<std::string> known_tags = {
        "zero",        "nilpotent",         "right-alternative",    "associative",
        "non-associative", "commutative",   "anticommutative",      "minus-one-one-cyclic",
        "pure",        "non-pure",          "one-generated"};
    for (const std::string& tag : string_list(j, "tags", context)) {
        if (!known_tags.count(tag)) fail(context, "unknown tag '" + tag + "'");
        entry.tags.insert(tag);
    }
    entry.provenance = j.value("provenance", std::string());
    entry.excluded_alpha = rational_list(j, "excluded_alpha", context);
    if (auto it = j.find("expected"); it != j.end()) {
        if (auto d = it->find("der_dim"); d != it->end()) {
            entry.expected_der_dim = d->get<std::size_t>();
        }
        if (auto d = it->find("nil_index"); d != it->end()) {
            entry.expected_nil_index = d->get<std::size_t>();
        }
        if (auto d = it->find("ann_contains"); d != it->end()) {
            for (const json& v : *d) {
                std::size_t idx = v.get<std::size_t>();
                if (idx < 1 || idx > dim) fail(context, "ann_contains index out of range");
                entry.ann_contains.push_back(idx);
            }
        }
    }
    return entry;
}

void parse_algebra_file(Catalog& catalog, const std::filesystem::path& file) {
    json j = load_json(file);
    const json& list = field(j, "algebras", file.string());
    for (const json& e : list) {
        CatalogEntry entry = parse_entry(e, file.filename().string());
        for (const CatalogEntry& existing : catalog.entries) {
            if (existing.name == entry.name) {
                fail(file.filename().string(), "duplicate algebra name " + entry.name);
            }
        }
        catalog.entries.push_back(std::move(entry));
    }
}

void parse_cocycle_file(Catalog& catalog, const std::filesystem::path& file) {
    json j = load_json(file);
    std::string fname = file.filename().string();
    if (auto it = j.find("extensions"); it != j.end()) {
        for (const json& e : *it) {
            ExtensionRecord rec;
            rec.name = string_field(e, "name", fname);
            std::string context = fname + ", extension " + rec.name;
            rec.base = string_field(e, "base", context);
            rec.target = string_field(e, "target", context);
            rec.cocycle = string_field(e, "cocycle", context);
            rec.base_alpha = optional_alpha(e, "base_alpha", context);
            rec.parametric = e.value("parametric", false);
            catalog.extensions.push_back(std::move(rec));
        }
    }
    if (auto it = j.find("cohomology"); it != j.end()) {
        for (const json& e : *it) {
            CohomologyGolden rec;
            rec.name = string_field(e, "name", fname);
            std::string context = fname + ", cohomology row " + rec.name;
            rec.algebra = string_field(e, "algebra", context);
            rec.identity = string_field(e, "identity", context);
            rec.z2 = string_list(e, "z2", context);
            rec.b2 = string_list(e, "b2", context);
            rec.h2_dim = field(e, "h2_dim", context).get<std::size_t>();
            rec.alpha_samples = rational_list(e, "alpha_samples", context);
            rec.parametric_spans = e.value("parametric_spans", false);
            catalog.goldens.push_back(std::move(rec));
        }
    }
    if (auto it = j.find("actions"); it != j.end()) {
        for (const json& e : *it) {
            ActionRecord rec;
            rec.name = string_field(e, "name", fname);
            std::string context = fname + ", action " + rec.name;
            rec.algebra = string_field(e, "algebra", context);
            rec.alpha = optional_alpha(e, "alpha", context);
            rec.shape = string_field(e, "shape", context);
            rec.cocycle = string_field(e, "cocycle", context);
            rec.symbols = string_list(e, "symbols", context);
            const json& claims = field(e, "claims", context);
            for (const json& c : claims) {
                ActionClaim claim;
                claim.label = string_field(c, "label", context);
                claim.form = string_field(c, "form", context);
                claim.formula = string_field(c, "formula", context);
                claim.expected_match = c.value("expected_match", true);
                rec.claims.push_back(std::move(claim));
            }
            catalog.actions.push_back(std::move(rec));
        }
    }
    if (auto it = j.find("orbits"); it != j.end()) {
        for (const json& e : *it) {
            OrbitRecord rec;
            rec.name = string_field(e, "name", fname);
            std::string context = fname + ", orbit record " + rec.name;
            rec.algebra = string_field(e, "algebra", context);
            rec.shape = string_field(e, "shape", context);
            rec.alpha = optional_alpha(e, "alpha", context);
            rec.representatives = string_list(e, "representatives", context);
            rec.samples = e.value("samples", std::size_t{1000});
            if (rec.representatives.size() < 2) {
                fail(context, "orbit distinctness needs at least two representatives");
            }
            catalog.orbits.push_back(std::move(rec));
        }
    }
}

void parse_automorphism_file(Catalog& catalog, const std::filesystem::path& file) {
    json j = load_json(file);
    std::string fname = file.filename().string();
    const json& list = field(j, "shapes", fname);
    for (const json& e : list) {
        AutomorphismShapeRecord rec;
        rec.name = string_field(e, "name", fname);
        std::string context = fname + ", shape " + rec.name;
        rec.algebra = string_field(e, "algebra", context);
        rec.alpha = optional_alpha(e, "alpha", context);
        rec.parameters = string_list(e, "parameters", context);
        rec.nonzero = e.value("nonzero", std::string());
        const json& rows = field(e, "entries", context);
        if (!rows.is_array() || rows.empty()) fail(context, "field 'entries' must be a matrix");
        std::size_t n = rows.size();
        rec.matrix = Matrix<RationalFunction>(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            const json& row = rows[r];
            if (!row.is_array() || row.size() != n) fail(context, "entries must be square");
            std::vector<std::string> row_strings;
            for (std::size_t c = 0; c < n; ++c) {
                std::string text = row[c].get<std::string>();
                try {
                    rec.matrix(r, c) = parse_scalar(text, rec.parameters);
                } catch (const Error& err) {
                    fail(context, "entry (" + std::to_string(r + 1) + "," +
                                      std::to_string(c + 1) + "): " + err.what());
                }
                row_strings.push_back(std::move(text));
            }
            rec.entries.push_back(std::move(row_strings));
        }
        catalog.shapes.push_back(std::move(rec));
    }
}

void parse_degeneration_file(Catalog& catalog, const std::filesystem::path& file) {
    json j = load_json(file);
    std::string fname = file.filename().string();
    const json& list = field(j, "rows", fname);
    for (const json& e : list) {
        DegenerationRecord rec;
        rec.name = string_field(e, "name", fname);
        std::string context = fname + ", row " + rec.name;
        rec.source = string_field(e, "source", context);
        rec.target = string_field(e, "target", context);
        rec.alpha_samples = rational_list(e, "alpha_samples", context);
        const json& rows = field(e, "basis", context);
        std::size_t n = rows.size();
        rec.matrix = ParametricBasis(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            const json& row = rows[r];
            if (!row.is_array() || row.size() != n) fail(context, "basis must be square");
            std::vector<std::string> row_strings;
            for (std::size_t c = 0; c < n; ++c) {
                std::string text = row[c].get<std::string>();
                try {
                    rec.matrix(r, c) = parse_scalar(text);
                } catch (const Error& err) {
                    fail(context, "basis entry (" + std::to_string(r + 1) + "," +
                                      std::to_string(c + 1) + "): " + err.what());
                }
                row_strings.push_back(std::move(text));
            }
            rec.basis.push_back(std::move(row_strings));
        }
        catalog.degenerations.push_back(std::move(rec));
    }
}

void parse_closed_set_file(Catalog& catalog, const std::filesystem::path& file) {
    json j = load_json(file);
    std::string fname = file.filename().string();
    const json& list = field(j, "closed_sets", fname);
    for (const json& e : list) {
        ClosedSetRecord rec;
        rec.set.name = string_field(e, "name", fname);
        std::string context = fname + ", closed set " + rec.set.name;
        const json& dim_v = field(e, "ambient_dim", context);
        rec.set.ambient_dim = dim_v.get<std::size_t>();
        const json& conditions = field(e, "conditions", context);
        for (const json& c : conditions) {
            std::string kind = string_field(c, "kind", context);
            if (kind == "flag") {
                FlagProductCondition flag;
                flag.p = index_field(c, "p", rec.set.ambient_dim, context);
                flag.q = index_field(c, "q", rec.set.ambient_dim, context);
                flag.r = field(c, "r", context).get<std::size_t>();
                if (flag.r < 1 || flag.r > rec.set.ambient_dim + 1) {
                    fail(context, "flag condition target out of range");
                }
                rec.set.conditions.push_back(flag);
            } else if (kind == "equation") {
                StructureEquation eq;
                const json& terms = field(c, "terms", context);
                for (const json& t : terms) {
                    StructureEquation::Entry entry;
                    entry.coefficient = rational_field(field(t, "coef", context), context);
                    entry.i = index_field(t, "i", rec.set.ambient_dim, context);
                    entry.j = index_field(t, "j", rec.set.ambient_dim, context);
                    entry.k = index_field(t, "k", rec.set.ambient_dim, context);
                    eq.entries.push_back(entry);
                }
                if (eq.entries.empty()) fail(context, "equation condition with no terms");
                rec.set.conditions.push_back(std::move(eq));
            } else {
                fail(context, "unknown condition kind '" + kind + "'");
            }
        }
        rec.satisfied_by = e.value("satisfied_by", std::string());
        if (auto it = e.find("search"); it != e.end()) {
            for (const json& s : *it) {
                ClosedSetSearchTarget target;
                target.algebra = string_field(s, "algebra", context);
                target.alpha_samples = rational_list(s, "alpha_samples", context);
                rec.searches.push_back(std::move(target));
            }
        }
        catalog.closed_sets.push_back(std::move(rec));
    }
}

void validate_references(const Catalog& catalog) {
    auto check_name = [&](const std::string& name, const std::string& context) {
        if (!catalog.find(name)) {
            throw CatalogError(context + " references unknown algebra " + name);
        }
    };
    auto check_samples = [&](const std::vector<Rational>& samples, const std::string& name,
                             const std::string& context) {
        const CatalogEntry* entry = catalog.find(name);
        if (!entry) return;
        for (const Rational& s : samples) {
            for (const Rational& excluded : entry->excluded_alpha) {
                if (s == excluded) {
                    throw CatalogError(context + ": alpha sample " + s.str() +
                                       " is excluded for " + name);
                }
            }
        }
    };
    for (const ExtensionRecord& r : catalog.extensions) {
        check_name(r.base, "extension " + r.name);
        check_name(r.target, "extension " + r.name);
    }
    for (const CohomologyGolden& r : catalog.goldens) {
        check_name(r.algebra, "cohomology row " + r.name);
        Identity::named_or_parsed(r.identity);
    }
    for (const AutomorphismShapeRecord& r : catalog.shapes) {
        check_name(r.algebra, "automorphism shape " + r.name);
    }
    for (const ActionRecord& r : catalog.actions) {
        check_name(r.algebra, "action " + r.name);
        bool found = false;
        for (const AutomorphismShapeRecord& s : catalog.shapes) found |= s.name == r.shape;
        if (!found) throw CatalogError("action " + r.name + " references unknown shape " + r.shape);
    }
    for (const OrbitRecord& r : catalog.orbits) {
        check_name(r.algebra, "orbit record " + r.name);
        bool found = false;
        for (const AutomorphismShapeRecord& s : catalog.shapes) found |= s.name == r.shape;
        if (!found) {
            throw CatalogError("orbit record " + r.name + " references unknown shape " + r.shape);
        }
    }
    for (const DegenerationRecord& r : catalog.degenerations) {
        check_name(r.source, "degeneration row " + r.name);
        check_name(r.target, "degeneration row " + r.name);
        check_samples(r.alpha_samples, r.source, "degeneration row " + r.name);
        check_samples(r.alpha_samples, r.target, "degeneration row " + r.name);
    }
    for (const ClosedSetRecord& r : catalog.closed_sets) {
        if (!r.satisfied_by.empty()) check_name(r.satisfied_by, "closed set " + r.set.name);
        for (const ClosedSetSearchTarget& t : r.searches) {
            check_name(t.algebra, "closed set " + r.set.name);
            check_samples(t.alpha_samples, t.algebra, "closed set " + r.set.name);
        }
    }
}

}  // namespace

const CatalogEntry* Catalog::find(const std::string& name) const {
    for (const CatalogEntry& e : entries) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

const CatalogEntry& Catalog::require(const std::string& name) const {
    const CatalogEntry* e = find(name);
    if (e) return *e;
    std::string message = "unknown algebra '" + name + "'; available:";
    for (const std::string& n : algebra_names()) message += " " + n;
    throw CatalogError(message);
}

const AutomorphismShapeRecord& Catalog::require_shape(const std::string& name) const {
    for (const AutomorphismShapeRecord& s : shapes) {
        if (s.name == name) return s;
    }
    std::string message = "unknown automorphism shape '" + name + "'; available:";
    for (const AutomorphismShapeRecord& s : shapes) message += " " + s.name;
    throw CatalogError(message);
}

const ClosedSetRecord* Catalog::find_closed_set(const std::string& name) const {
    for (const ClosedSetRecord& r : closed_sets) {
        if (r.set.name == name) return &r;
    }
    return nullptr;
}

Algebra<RationalFunction> Catalog::resolve(const std::string& name,
                                           const std::optional<Rational>& alpha) const {
    const CatalogEntry& entry = require(name);
    if (!alpha) return entry.algebra;
    if (!entry.parametric) {
        throw CatalogError("algebra " + name + " has no family parameter");
    }
    for (const Rational& excluded : entry.excluded_alpha) {
        if (*alpha == excluded) {
            throw CatalogError("alpha = " + alpha->str() + " is excluded for " + name);
        }
    }
    return substitute(entry.algebra, symbols::alpha(), *alpha);
}

std::vector<std::string> Catalog::algebra_names() const {
    std::vector<std::string> names;
    names.reserve(entries.size());
    for (const CatalogEntry& e : entries) names.push_back(e.name);
    return names;
}

std::size_t Catalog::named_count() const {
    std::size_t count = 0;
    for (const CatalogEntry& e : entries) {
        if (!e.auxiliary) ++count;
    }
    return count;
}

Catalog load_catalog(const std::string& dir) {
    Catalog catalog;
    catalog.path = dir;
    std::filesystem::path root(dir);
    if (!std::filesystem::exists(root)) {
        throw CatalogError("catalog directory does not exist: " + dir);
    }
    for (const auto& file : sorted_json_files(root / "algebras")) {
        parse_algebra_file(catalog, file);
    }
    for (const auto& file : sorted_json_files(root / "cocycles")) {
        parse_cocycle_file(catalog, file);
    }
    for (const auto& file : sorted_json_files(root / "automorphisms")) {
        parse_automorphism_file(catalog, file);
    }
    for (const auto& file : sorted_json_files(root / "degenerations")) {
        parse_degeneration_file(catalog, file);
    }
    for (const auto& file : sorted_json_files(root / "closed_sets")) {
        parse_closed_set_file(catalog, file);
    }
    validate_references(catalog);
    return catalog;
}

Algebra<Rational> generate_Rn(std::size_t n) {
    if (n < 1) throw PreconditionError("generate_Rn needs n >= 1");
    Algebra<Rational> a(n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            if (i + j <= n) a.c(i - 1, j - 1, i + j - 1) = Rational(1);
        }
    }
    return a;
}

}  // namespace extalg
