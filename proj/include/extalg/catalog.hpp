#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "extalg/action.hpp"
#include "extalg/algebra.hpp"
#include "extalg/degeneration.hpp"
#include "extalg/identity.hpp"
#include "extalg/rational_function.hpp"

namespace extalg {

// One algebra of the database. Parametric entries keep the family parameter
// symbolic; resolve() specializes it. Auxiliary entries are plumbing (zero
// algebras used as extension bases) and are excluded from the named count.
struct CatalogEntry {
    std::string name;
    Algebra<RationalFunction> algebra;
    bool parametric = false;
    bool auxiliary = false;
    std::set<std::string> tags;
    std::string provenance;
    std::vector<Rational> excluded_alpha;
    std::optional<std::size_t> expected_der_dim;
    std::optional<std::size_t> expected_nil_index;
    std::vector<std::size_t> ann_contains;  // 1-based basis indices
};

// Central extension datum: extending `base` by the cocycle reproduces
// `target` exactly.
struct ExtensionRecord {
    std::string name;
    std::string base;
    std::string target;
    std::string cocycle;
    std::optional<Rational> base_alpha;
    bool parametric = false;
};

// Golden spans for the cohomology of one algebra: Z^2 and B^2 as lists of
// forms, compared via canonical subspace equality.
struct CohomologyGolden {
    std::string name;
    std::string algebra;
    std::string identity;
    std::vector<std::string> z2;
    std::vector<std::string> b2;
    std::size_t h2_dim = 0;
    std::vector<Rational> alpha_samples;  // empty = non-parametric row
    bool parametric_spans = false;
};

// General form of the automorphism group of one algebra, entries symbolic
// in the listed parameters, valid where `nonzero` does not vanish.
struct AutomorphismShapeRecord {
    std::string name;
    std::string algebra;
    std::optional<Rational> alpha;
    std::vector<std::string> parameters;
    std::vector<std::vector<std::string>> entries;
    std::string nonzero;
    Matrix<RationalFunction> matrix;
};

// Symbolic action of an automorphism shape on a cocycle, with the claimed
// component formulas to verify.
struct ActionRecord {
    std::string name;
    std::string algebra;
    std::optional<Rational> alpha;
    std::string shape;
    std::string cocycle;
    std::vector<std::string> symbols;
    std::vector<ActionClaim> claims;
};

// Cocycle classes claimed to lie in pairwise distinct automorphism orbits;
// checked by random sampling, evidence only.
struct OrbitRecord {
    std::string name;
    std::string algebra;
    std::string shape;
    std::optional<Rational> alpha;
    std::vector<std::string> representatives;
    std::size_t samples = 1000;
};

struct DegenerationRecord {
    std::string name;
    std::string source;
    std::string target;
    std::vector<std::vector<std::string>> basis;
    std::vector<Rational> alpha_samples;
    ParametricBasis matrix;
};

struct ClosedSetSearchTarget {
    std::string algebra;
    std::vector<Rational> alpha_samples;
};

struct ClosedSetRecord {
    ClosedSet set;
    std::string satisfied_by;
    std::vector<ClosedSetSearchTarget> searches;
};

struct Catalog {
    std::string path;
    std::vector<CatalogEntry> entries;
    std::vector<ExtensionRecord> extensions;
    std::vector<CohomologyGolden> goldens;
    std::vector<AutomorphismShapeRecord> shapes;
    std::vector<ActionRecord> actions;
    std::vector<OrbitRecord> orbits;
    std::vector<DegenerationRecord> degenerations;
    std::vector<ClosedSetRecord> closed_sets;

    const CatalogEntry* find(const std::string& name) const;
    // Lookup that throws CatalogError listing the available names.
    const CatalogEntry& require(const std::string& name) const;
    const AutomorphismShapeRecord& require_shape(const std::string& name) const;
    const ClosedSetRecord* find_closed_set(const std::string& name) const;

    // The entry's algebra, with the family parameter substituted when alpha
    // is given. Excluded alpha values are rejected.
    Algebra<RationalFunction> resolve(const std::string& name,
                                      const std::optional<Rational>& alpha) const;

    std::vector<std::string> algebra_names() const;
    std::size_t named_count() const;
};

// Loads every JSON file under dir/{algebras,cocycles,automorphisms,
// degenerations,closed_sets}, in sorted file order, validating the schema
// and every cross-reference.
Catalog load_catalog(const std::string& dir);

// The one-generated algebra e_i e_j = e_{i+j} (i + j <= n).
Algebra<Rational> generate_Rn(std::size_t n);

}  // namespace extalg
