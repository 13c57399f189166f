// Acceptance gate: one check per shipped claim, one line per check. Every
// comparison is exact; the bounded searches are labeled evidence in their
// own line. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "extalg/action.hpp"
#include "extalg/catalog.hpp"
#include "extalg/cohomology.hpp"
#include "extalg/convert.hpp"
#include "extalg/degeneration.hpp"
#include "extalg/forms.hpp"
#include "extalg/identity.hpp"
#include "extalg/invariants.hpp"
#include "extalg/modp.hpp"
#include "extalg/rng.hpp"
#include "extalg/scalar_expr.hpp"

using namespace extalg;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
};

std::vector<std::string> r4_names() {
    return {"R4_1", "R4_2", "R4_3", "R4_4", "R4_5", "R4_6", "R4_7", "R4_8", "R4_9"};
}

const Identity& ra() { return Identity::builtin("right-alternative"); }

Matrix<Rational> random_invertible(std::size_t n, Rng& rng) {
    while (true) {
        Matrix<Rational> m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(rng.int_in(-3, 3));
        }
        if (!determinant(m).is_zero()) return m;
    }
}

// Concrete sample pool for the property laws: every non-parametric entry
// plus each family at a few parameter values.
std::vector<std::pair<std::string, Algebra<Rational>>> law_pool(const Catalog& cat) {
    std::vector<std::pair<std::string, Algebra<Rational>>> pool;
    for (const CatalogEntry& entry : cat.entries) {
        if (!entry.parametric) {
            pool.emplace_back(entry.name, to_rational(entry.algebra));
            continue;
        }
        for (const Rational& alpha : {Rational(2), Rational(3), Rational(5)}) {
            pool.emplace_back(entry.name + "@" + alpha.str(),
                              to_rational(cat.resolve(entry.name, alpha)));
        }
    }
    return pool;
}

Matrix<Rational> random_cocycle(const Subspace<Rational>& z2, std::size_t n, Rng& rng) {
    std::vector<Rational> coords(n * n, Rational(0));
    bool nonzero = false;
    while (!nonzero) {
        for (std::size_t i = 0; i < z2.dim(); ++i) {
            Rational c(rng.int_in(-3, 3));
            if (!c.is_zero()) nonzero = true;
            vec_add_scaled(coords, c, z2.basis().row(i));
        }
    }
    return form_from_coordinates(n, coords);
}

}  // namespace

int main() {
    const char* dir_env = std::getenv("EXTALG_CATALOG");
    std::string dir = dir_env ? dir_env : "catalog";
    Catalog cat;
    try {
        cat = load_catalog(dir);
    } catch (const std::exception& e) {
        std::cout << "cannot load catalog from '" << dir << "': " << e.what() << "\n";
        return 1;
    }

    int failures = 0;
    auto run = [&](int number, const std::string& title, double budget_seconds,
                   const std::function<void(Outcome&)>& body) {
        Outcome outcome;
        auto start = std::chrono::steady_clock::now();
        try {
            body(outcome);
        } catch (const std::exception& e) {
            outcome.require(false, std::string("exception: ") + e.what());
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        outcome.require(elapsed < budget_seconds,
                        "took " + std::to_string(elapsed) + " s, budget " +
                            std::to_string(budget_seconds) + " s");
        std::ostringstream line;
        line << "criterion " << number << ": " << (outcome.pass ? "PASS" : "FAIL") << " "
             << title << " [" << static_cast<long>(elapsed * 1000) << " ms]";
        std::cout << line.str() << "\n";
        for (const std::string& note : outcome.notes) std::cout << "    " << note << "\n";
        if (!outcome.pass) ++failures;
    };

    run(1, "identity suite: right alternativity everywhere, associativity split, "
           "cyclic identity, xyz-zero on non-pure entries", 1.0, [&](Outcome& o) {
        std::set<std::string> assoc_pass{"R4_1", "R4_2", "R4_3", "R4_4", "R4_9"};
        for (const CatalogEntry& entry : cat.entries) {
            o.require(check_identity(entry.algebra, ra()).holds,
                      entry.name + " is not right alternative");
            if (entry.tags.count("non-pure")) {
                o.require(check_identity(entry.algebra, Identity::builtin("xyz-zero-left")).holds,
                          entry.name + " breaks xyz-zero-left");
                o.require(
                    check_identity(entry.algebra, Identity::builtin("xyz-zero-right")).holds,
                    entry.name + " breaks xyz-zero-right");
            }
        }
        for (const std::string& name : r4_names()) {
            const Algebra<RationalFunction>& a = cat.require(name).algebra;
            bool assoc = check_identity(a, Identity::builtin("associative")).holds;
            o.require(assoc == (assoc_pass.count(name) > 0),
                      name + " associativity contradicts the classification");
            o.require(check_identity(a, Identity::builtin("minus-one-one-cyclic")).holds,
                      name + " breaks the cyclic identity");
        }
    });

    run(2, "nilpotency: finite index at most 5, chain dims of R4_9 are (4,3,2,1,0)", 1.0,
        [&](Outcome& o) {
            for (const CatalogEntry& entry : cat.entries) {
                PowerChain<RationalFunction> chain = power_chain(entry.algebra);
                o.require(chain.nil_index.has_value() && *chain.nil_index <= 5,
                          entry.name + " is not nilpotent of index <= 5");
            }
            PowerChain<RationalFunction> chain = power_chain(cat.require("R4_9").algebra);
            o.require(chain.dims() == std::vector<std::size_t>{4, 3, 2, 1, 0},
                      "R4_9 chain dims are wrong");
        });

    run(3, "cohomology goldens: stored Z^2 and B^2 spans, h2 = (4,3,5,3,4,1)", 1.0,
        [&](Outcome& o) {
            std::map<std::string, std::size_t> expected_h2{
                {"R3s_1", 4}, {"R3s_2", 3},      {"R3s_3", 5},
                {"R3s_4_nonzero", 3}, {"R3s_4_zero", 4}, {"R3_1", 1}};
            o.require(cat.goldens.size() == expected_h2.size(), "golden row count");
            for (const CohomologyGolden& g : cat.goldens) {
                o.require(expected_h2.count(g.name) && expected_h2[g.name] == g.h2_dim,
                          g.name + " stored h2 differs from the published table");
                std::vector<Rational> samples = g.alpha_samples;
                if (samples.empty()) samples.push_back(Rational(0));  // placeholder, unused
                const CatalogEntry& entry = cat.require(g.algebra);
                for (const Rational& alpha : samples) {
                    Algebra<Rational> a = to_rational(cat.resolve(
                        g.algebra, entry.parametric ? std::optional<Rational>(alpha)
                                                    : std::nullopt));
                    CohomologySummary<Rational> s =
                        cohomology(a, Identity::named_or_parsed(g.identity));
                    std::size_t n = a.dim();
                    std::vector<std::vector<Rational>> z2_rows, b2_rows;
                    for (const std::string& form : g.z2) {
                        Matrix<RationalFunction> f = parse_form(form, n, {"a"});
                        z2_rows.push_back(
                            to_rational(substitute(f, symbols::alpha(), alpha)).data());
                    }
                    for (const std::string& form : g.b2) {
                        Matrix<RationalFunction> f = parse_form(form, n, {"a"});
                        b2_rows.push_back(
                            to_rational(substitute(f, symbols::alpha(), alpha)).data());
                    }
                    o.require(s.z2 == Subspace<Rational>::span_of_vectors(n * n, z2_rows),
                              g.name + " Z^2 span mismatch");
                    o.require(s.b2 == Subspace<Rational>::span_of_vectors(n * n, b2_rows),
                              g.name + " B^2 span mismatch");
                    o.require(s.h2_dim == g.h2_dim, g.name + " recomputed h2 mismatch");
                }
            }
        });

    run(4, "extension reconstruction: every catalogued cocycle rebuilds its target tensor",
        1.0, [&](Outcome& o) {
            o.require(cat.extensions.size() == 13, "extension row count");
            for (const ExtensionRecord& rec : cat.extensions) {
                Algebra<RationalFunction> base = cat.resolve(rec.base, rec.base_alpha);
                std::vector<std::string> symbols;
                if (rec.parametric) symbols.push_back("a");
                Matrix<RationalFunction> theta =
                    parse_form(rec.cocycle, base.dim(), symbols);
                Algebra<RationalFunction> built = central_extension(base, {theta});
                o.require(built == cat.require(rec.target).algebra,
                          rec.name + " does not rebuild " + rec.target);
            }
        });

    run(5, "derivation dimensions (6,5,4,5,5,4,4,3,4); R4_5 stores the recomputed value 5 "
           "where the published table prints 4 (documented deviation)", 1.0, [&](Outcome& o) {
        std::vector<std::size_t> expected{6, 5, 4, 5, 5, 4, 4, 3, 4};
        std::vector<std::string> names = r4_names();
        for (std::size_t i = 0; i < names.size(); ++i) {
            std::size_t dim = derivation_algebra(to_rational(cat.require(names[i]).algebra)).dim;
            o.require(dim == expected[i], names[i] + " dim Der = " + std::to_string(dim) +
                                              ", expected " + std::to_string(expected[i]));
        }
    });

    run(6, "degeneration rows: all six verify, five symbolically over Q(t)", 5.0,
        [&](Outcome& o) {
            o.require(cat.degenerations.size() == 6, "degeneration row count");
            for (const DegenerationRecord& rec : cat.degenerations) {
                DegenerationOutcome out = verify_degeneration_row(
                    cat.require(rec.source).algebra, cat.require(rec.target).algebra,
                    rec.matrix, rec.alpha_samples);
                o.require(out.verified, rec.name + ": " + out.detail);
                if (rec.target != "N2_alpha") {
                    o.require(out.detail == "symbolic", rec.name + " needed samples");
                }
            }
        });

    run(7, "closed-set certificate: R4_8 inside, searches for R4_5, R4_6, N3 at 2,3,5 "
           "all report NoBasisFound at 10^4 trials, seed 1 (evidence)", 60.0, [&](Outcome& o) {
        const ClosedSetRecord* rec = cat.find_closed_set("R");
        o.require(rec != nullptr, "closed set R is missing");
        if (!rec) return;
        o.require(check_closed_set(to_rational(cat.require("R4_8").algebra), rec->set).satisfied,
                  "R4_8 leaves the set in its stored basis");
        std::vector<std::pair<std::string, std::optional<Rational>>> targets{
            {"R4_5", std::nullopt},
            {"R4_6", std::nullopt},
            {"N3_alpha", Rational(2)},
            {"N3_alpha", Rational(3)},
            {"N3_alpha", Rational(5)}};
        for (const auto& [name, alpha] : targets) {
            BasisSearchResult search = closed_set_basis_search(
                to_rational(cat.resolve(name, alpha)), rec->set, 10000, 1);
            o.require(!search.found(),
                      name + " unexpectedly entered the set at trial " +
                          std::to_string(search.trials_used));
        }
    });

    run(8, "cocycle-algebra laws, 200 random cases per law, seed 1", 30.0, [&](Outcome& o) {
        auto pool = law_pool(cat);
        auto pick = [&](Rng& rng) -> const std::pair<std::string, Algebra<Rational>>& {
            return pool[rng.below(pool.size())];
        };

        Rng rng_a = Rng::derive(1, "law-coboundaries-are-cocycles");
        for (int c = 0; c < 200; ++c) {
            const auto& [name, base] = pick(rng_a);
            CohomologySummary<Rational> s = cohomology(base, ra());
            Matrix<Rational> theta = random_cocycle(s.z2, base.dim(), rng_a);
            Algebra<Rational> ext = central_extension(base, {theta});
            CohomologySummary<Rational> up = cohomology(ext, ra());
            o.require(up.z2.contains(up.b2), "B^2 not inside Z^2 for an extension of " + name);
            if (!o.pass) return;
        }

        Rng rng_b = Rng::derive(1, "law-cocycle-iff-identity");
        for (int c = 0; c < 200; ++c) {
            const auto& [name, base] = pick(rng_b);
            std::size_t n = base.dim();
            Subspace<Rational> z2 = cocycle_space(base, ra());
            Matrix<Rational> theta(n, n);
            if (c % 2 == 0) {
                theta = random_cocycle(z2, n, rng_b);
            } else {
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) theta(i, j) = Rational(rng_b.int_in(-3, 3));
                }
            }
            bool inside = z2.contains(vectorize_form(theta));
            bool holds = check_identity(central_extension(base, {theta}), ra()).holds;
            o.require(inside == holds, "theta in Z^2 disagrees with A_theta law on " + name);
            if (!o.pass) return;
        }

        Rng rng_c = Rng::derive(1, "law-annihilator-splits");
        for (int c = 0; c < 200; ++c) {
            const auto& [name, base] = pick(rng_c);
            std::size_t n = base.dim();
            Matrix<Rational> theta(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) theta(i, j) = Rational(rng_c.int_in(-3, 3));
            }
            Algebra<Rational> ext = central_extension(base, {theta});
            Subspace<Rational> core = intersect(
                annihilator(base), cocycle_annihilator(n, std::vector<Matrix<Rational>>{theta}));
            std::vector<std::vector<Rational>> gens;
            for (auto v : core.basis_vectors()) {
                v.push_back(Rational(0));
                gens.push_back(std::move(v));
            }
            std::vector<Rational> tail(n + 1, Rational(0));
            tail[n] = Rational(1);
            gens.push_back(std::move(tail));
            o.require(annihilator(ext) == Subspace<Rational>::span_of_vectors(n + 1, gens),
                      "annihilator split fails on " + name);
            if (!o.pass) return;
        }

        Rng rng_d = Rng::derive(1, "law-action-preserves-spaces");
        for (int c = 0; c < 200; ++c) {
            const AutomorphismShapeRecord& shape = cat.shapes[c % cat.shapes.size()];
            Algebra<Rational> base =
                to_rational(cat.resolve(shape.algebra, shape.alpha));
            CohomologySummary<Rational> s = cohomology(base, ra());
            Matrix<Rational> phi =
                sample_automorphism(shape.matrix, shape.parameters, base, rng_d);
            Matrix<Rational> theta = random_cocycle(s.z2, base.dim(), rng_d);
            o.require(s.z2.contains(vectorize_form(act_on_cocycle(phi, theta))),
                      "phi theta leaves Z^2 for " + shape.algebra);
            for (std::size_t i = 0; i < s.b2.dim(); ++i) {
                Matrix<Rational> b = form_from_coordinates(base.dim(), s.b2.basis().row(i));
                o.require(s.b2.contains(vectorize_form(act_on_cocycle(phi, b))),
                          "phi B^2 leaves B^2 for " + shape.algebra);
            }
            if (!o.pass) return;
        }

        Rng rng_e = Rng::derive(1, "law-invariants-are-invariant");
        for (int c = 0; c < 200; ++c) {
            const auto& [name, base] = pick(rng_e);
            InvariantVector before = invariant_vector(base);
            Matrix<Rational> p = random_invertible(base.dim(), rng_e);
            o.require(invariant_vector(change_basis(base, p)) == before,
                      "invariant vector moved under change of basis on " + name);
            if (!o.pass) return;
        }
    });

    run(9, "orbit evidence at 10^3 samples and action formula recomputation "
           "(one published line expected to flag)", 10.0, [&](Outcome& o) {
        o.require(cat.orbits.size() == 1, "orbit record count");
        const OrbitRecord& orbit = cat.orbits[0];
        Algebra<Rational> base = to_rational(cat.resolve(orbit.algebra, orbit.alpha));
        const AutomorphismShapeRecord& shape = cat.require_shape(orbit.shape);
        std::vector<Matrix<Rational>> reps;
        for (const std::string& text : orbit.representatives) {
            reps.push_back(parse_constant_form(text, base.dim()));
        }
        for (std::size_t i = 0; i < reps.size(); ++i) {
            for (std::size_t j = i + 1; j < reps.size(); ++j) {
                Rng rng = Rng::derive(1, "orbit-" + std::to_string(i) + "-" + std::to_string(j));
                OrbitEvidence ev = orbit_distinctness_evidence(
                    base, shape.matrix, shape.parameters, reps[i], reps[j], 1000, rng);
                o.require(!ev.equivalence_found,
                          orbit.representatives[i] + " ~ " + orbit.representatives[j]);
            }
        }

        bool d33_flagged = false;
        for (const ActionRecord& rec : cat.actions) {
            const AutomorphismShapeRecord& sh = cat.require_shape(rec.shape);
            Algebra<Rational> rb = to_rational(cat.resolve(rec.algebra, rec.alpha));
            Matrix<RationalFunction> theta = parse_form(rec.cocycle, rb.dim(), rec.symbols);
            std::vector<std::string> symbols = sh.parameters;
            symbols.insert(symbols.end(), rec.symbols.begin(), rec.symbols.end());
            ActionCheck chk = check_action_claims(rb, sh.matrix, theta, rec.claims, symbols);
            o.require(chk.decomposed, rec.name + " does not decompose");
            o.require(chk.all_as_expected, rec.name + ": " + chk.detail);
            for (const ActionClaimResult& claim : chk.claims) {
                if (rec.name == "R3s_1_first_representative" && claim.label == "D33" &&
                    !claim.matched) {
                    d33_flagged = true;
                }
            }
        }
        o.require(d33_flagged, "the recorded D33 discrepancy was not flagged");
    });

    run(10, "one-generated family: generate_Rn(4) equals R4_9, laws up to n = 6", 1.0,
        [&](Outcome& o) {
            o.require(lift(generate_Rn(4)) == cat.require("R4_9").algebra,
                      "generate_Rn(4) differs from R4_9");
            for (std::size_t n = 1; n <= 6; ++n) {
                Algebra<Rational> a = generate_Rn(n);
                o.require(check_identity(a, ra()).holds, "R_n not right alternative");
                o.require(check_identity(a, Identity::builtin("associative")).holds,
                          "R_n not associative");
                InvariantVector v = invariant_vector(a);
                o.require(v.commutative, "R_n not commutative");
                std::vector<Rational> e1(n, Rational(0));
                e1[0] = Rational(1);
                o.require(generated_subalgebra(a, {e1}) == Subspace<Rational>::full(n),
                          "R_n is not generated by e1");
            }
        });

    run(11, "pairwise distinctness of the nine dimension-4 algebras "
            "(one tie settled by mod-2 exhaustion, evidence)", 60.0, [&](Outcome& o) {
        std::vector<std::string> names = r4_names();
        for (std::size_t i = 0; i < names.size(); ++i) {
            for (std::size_t j = i + 1; j < names.size(); ++j) {
                Algebra<Rational> a = to_rational(cat.require(names[i]).algebra);
                Algebra<Rational> b = to_rational(cat.require(names[j]).algebra);
                InvariantVector va = invariant_vector(a);
                InvariantVector vb = invariant_vector(b);
                std::string sep = va.first_difference(vb);
                if (!sep.empty()) continue;
                FfIsoResult ff = ff_iso_evidence(a, b, 2);
                o.require(!ff.found(), names[i] + " and " + names[j] +
                                           " admit a mod 2 isomorphism " +
                                           ff.witness_str(a.dim()));
                o.require(names[i] == "R4_6" && names[j] == "R4_7",
                          "unexpected invariant tie " + names[i] + " / " + names[j]);
            }
        }
    });

    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criteria failed")
              << "\n";
    std::cout << "note: the variety-level component statement is supported by criteria 6 "
                 "and 7 plus the derivation dimension ordering, as bounded evidence, not "
                 "as a proof\n";
    return failures;
}
