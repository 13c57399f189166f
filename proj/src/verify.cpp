#include "extalg/verify.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "extalg/action.hpp"
#include "extalg/algebra.hpp"
#include "extalg/cohomology.hpp"
#include "extalg/convert.hpp"
#include "extalg/degeneration.hpp"
#include "extalg/errors.hpp"
#include "extalg/forms.hpp"
#include "extalg/identity.hpp"
#include "extalg/invariants.hpp"
#include "extalg/modp.hpp"
#include "extalg/rng.hpp"
#include "extalg/scalar_expr.hpp"

namespace extalg {

namespace {

constexpr const char* kPass = "pass";
constexpr const char* kFail = "fail";
constexpr const char* kEvidence = "evidence";

std::uint64_t mix_seed(std::uint64_t root, std::string_view label) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return root ^ h;
}

CheckItem make(std::string name, std::string status, std::string detail) {
    CheckItem item;
    item.name = std::move(name);
    item.status = std::move(status);
    item.detail = std::move(detail);
    return item;
}

template <FieldScalar S>
bool tensor_symmetric(const Algebra<S>& a) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (a.basis_product(i, j) != a.basis_product(j, i)) return false;
        }
    }
    return true;
}

template <FieldScalar S>
std::string tensor_diff(const Algebra<S>& got, const Algebra<S>& expected) {
    if (got.dim() != expected.dim()) {
        return "dimension " + std::to_string(got.dim()) + ", expected " +
               std::to_string(expected.dim());
    }
    for (std::size_t i = 0; i < got.dim(); ++i) {
        for (std::size_t j = 0; j < got.dim(); ++j) {
            for (std::size_t k = 0; k < got.dim(); ++k) {
                if (got.c(i, j, k) != expected.c(i, j, k)) {
                    return "c(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                           std::to_string(k + 1) + "): got " + got.c(i, j, k).str() +
                           ", expected " + expected.c(i, j, k).str();
                }
            }
        }
    }
    return "";
}

template <FieldScalar S>
CheckItem identity_tag_item(const std::string& name, const Algebra<S>& a,
                            const std::string& tag) {
    if (tag == "zero") {
        for (std::size_t i = 0; i < a.dim(); ++i) {
            for (std::size_t j = 0; j < a.dim(); ++j) {
                for (std::size_t k = 0; k < a.dim(); ++k) {
                    if (a.c(i, j, k) != S::zero()) {
                        return make(name, kFail,
                                    "nonzero product c(" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
                    }
                }
            }
        }
        return make(name, kPass, "");
    }
    if (tag == "commutative") {
        if (tensor_symmetric(a)) return make(name, kPass, "");
        return make(name, kFail, "structure tensor is not symmetric");
    }
    if (tag == "non-associative") {
        const Identity& id = Identity::builtin("associative");
        IdentityCheck<S> chk = check_identity(a, id);
        if (chk.holds) return make(name, kFail, "associativity unexpectedly holds");
        return make(name, kPass, chk.describe(id));
    }
    if (tag == "pure" || tag == "non-pure") {
        const Identity& left = Identity::builtin("xyz-zero-left");
        const Identity& right = Identity::builtin("xyz-zero-right");
        IdentityCheck<S> lchk = check_identity(a, left);
        IdentityCheck<S> rchk = check_identity(a, right);
        bool vanish = lchk.holds && rchk.holds;
        if (tag == "non-pure") {
            if (vanish) return make(name, kPass, "all triple products vanish");
            return make(name, kFail, !lchk.holds ? "xyz-zero-left " + lchk.describe(left)
                                                 : "xyz-zero-right " + rchk.describe(right));
        }
        if (vanish) return make(name, kFail, "all triple products vanish, entry is not pure");
        return make(name, kPass, !lchk.holds ? "xyz-zero-left " + lchk.describe(left)
                                             : "xyz-zero-right " + rchk.describe(right));
    }
    const Identity& id = Identity::builtin(tag);
    IdentityCheck<S> chk = check_identity(a, id);
    if (chk.holds) return make(name, kPass, "");
    return make(name, kFail, chk.describe(id));
}

template <FieldScalar S>
CheckItem nilpotency_item(const std::string& name, const Algebra<S>& a,
                          const std::optional<std::size_t>& expected) {
    PowerChain<S> chain = power_chain(a);
    std::string dims = "chain dims";
    for (const Subspace<S>& p : chain.powers) dims += " " + std::to_string(p.dim());
    if (!chain.nil_index) return make(name, kFail, "not nilpotent; " + dims);
    std::string detail = dims + ", nil index " + std::to_string(*chain.nil_index);
    if (expected && *expected != *chain.nil_index) {
        return make(name, kFail, detail + ", expected " + std::to_string(*expected));
    }
    return make(name, kPass, detail);
}

template <FieldScalar S>
CheckItem annihilator_item(const std::string& name, const Algebra<S>& a,
                           const std::vector<std::size_t>& indices) {
    Subspace<S> ann = annihilator(a);
    for (std::size_t idx : indices) {
        std::vector<S> e(a.dim(), S::zero());
        e[idx - 1] = S::one();
        if (!ann.contains(e)) {
            return make(name, kFail, "e" + std::to_string(idx) + " is not in the annihilator");
        }
    }
    return make(name, kPass, "dim Ann = " + std::to_string(ann.dim()));
}

template <FieldScalar S>
CheckItem derivation_item(const std::string& name, const Algebra<S>& a, std::size_t expected) {
    std::size_t dim = derivation_algebra(a).dim;
    std::string detail = "dim Der = " + std::to_string(dim);
    if (dim != expected) {
        return make(name, kFail, detail + ", expected " + std::to_string(expected));
    }
    return make(name, kPass, detail);
}

CheckItem golden_item(const Catalog& catalog, const CohomologyGolden& g,
                      const std::optional<Rational>& alpha, const std::string& name) {
    if (g.parametric_spans && !alpha) {
        throw PreconditionError("parametric spans need alpha samples");
    }
    Algebra<Rational> a = to_rational(catalog.resolve(g.algebra, alpha));
    std::size_t n = a.dim();
    Identity id = Identity::named_or_parsed(g.identity);
    CohomologySummary<Rational> summary = cohomology(a, id);

    auto parse_span = [&](const std::vector<std::string>& texts) {
        std::vector<std::vector<Rational>> vecs;
        for (const std::string& text : texts) {
            Matrix<Rational> form;
            if (g.parametric_spans) {
                Matrix<RationalFunction> f = parse_form(text, n, {"a"});
                form = to_rational(substitute(f, symbols::alpha(), *alpha));
            } else {
                form = parse_constant_form(text, n);
            }
            vecs.push_back(vectorize_form(form));
        }
        return Subspace<Rational>::span_of_vectors(n * n, vecs);
    };

    Subspace<Rational> z2_golden = parse_span(g.z2);
    Subspace<Rational> b2_golden = parse_span(g.b2);
    std::string mismatch;
    if (!(z2_golden == summary.z2)) {
        mismatch += "Z2 span differs (computed dim " + std::to_string(summary.z2.dim()) +
                    ", recorded dim " + std::to_string(z2_golden.dim()) + "); ";
    }
    if (!(b2_golden == summary.b2)) {
        mismatch += "B2 span differs (computed dim " + std::to_string(summary.b2.dim()) +
                    ", recorded dim " + std::to_string(b2_golden.dim()) + "); ";
    }
    if (summary.h2_dim != g.h2_dim) {
        mismatch += "H2 dim " + std::to_string(summary.h2_dim) + ", recorded " +
                    std::to_string(g.h2_dim) + "; ";
    }
    if (!mismatch.empty()) {
        mismatch.resize(mismatch.size() - 2);
        return make(name, kFail, mismatch);
    }
    return make(name, kPass,
                "dim Z2 = " + std::to_string(summary.z2.dim()) + ", dim B2 = " +
                    std::to_string(summary.b2.dim()) + ", dim H2 = " +
                    std::to_string(summary.h2_dim));
}

CheckItem extension_item(const Catalog& catalog, const ExtensionRecord& rec) {
    const Identity& id = Identity::builtin("right-alternative");
    if (rec.parametric) {
        Algebra<RationalFunction> base = catalog.resolve(rec.base, rec.base_alpha);
        Matrix<RationalFunction> theta = parse_form(rec.cocycle, base.dim(), {"a"});
        Algebra<RationalFunction> ext = central_extension_checked(base, id, {theta});
        std::string diff = tensor_diff(ext, catalog.require(rec.target).algebra);
        if (!diff.empty()) return make(rec.name, kFail, diff);
        return make(rec.name, kPass, "reconstructs " + rec.target + " exactly");
    }
    Algebra<Rational> base = to_rational(catalog.resolve(rec.base, rec.base_alpha));
    Matrix<Rational> theta = parse_constant_form(rec.cocycle, base.dim());
    Algebra<Rational> ext = central_extension_checked(base, id, {theta});
    Algebra<Rational> target = to_rational(catalog.require(rec.target).algebra);
    std::string diff = tensor_diff(ext, target);
    if (!diff.empty()) return make(rec.name, kFail, diff);
    return make(rec.name, kPass, "reconstructs " + rec.target + " exactly");
}

struct Task {
    std::size_t section = 0;
    std::string name;
    std::function<CheckItem()> run;
};

std::vector<CheckItem> run_tasks(const std::vector<Task>& tasks, std::size_t jobs) {
    std::vector<CheckItem> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            auto start = std::chrono::steady_clock::now();
            CheckItem item;
            try {
                item = tasks[i].run();
            } catch (const Error& e) {
                item = make(tasks[i].name, kFail, e.what());
            } catch (const std::exception& e) {
                item = make(tasks[i].name, kFail, std::string("unexpected error: ") + e.what());
            }
            auto elapsed = std::chrono::steady_clock::now() - start;
            item.duration_ms = std::chrono::duration<double, std::milli>(elapsed).count();
            results[i] = std::move(item);
        }
    };
    std::size_t workers = jobs ? jobs : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min(workers, tasks.size());
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t k = 0; k < workers; ++k) pool.emplace_back(work);
        for (std::thread& th : pool) th.join();
    }
    return results;
}

}  // namespace

bool Report::all_ok() const {
    for (const ReportSection& s : sections) {
        for (const CheckItem& item : s.items) {
            if (item.status == kFail) return false;
        }
    }
    return true;
}

std::size_t Report::count(const std::string& status) const {
    std::size_t n = 0;
    for (const ReportSection& s : sections) {
        for (const CheckItem& item : s.items) {
            if (item.status == status) ++n;
        }
    }
    return n;
}

std::string Report::to_text() const {
    std::ostringstream out;
    std::size_t total = 0;
    for (const ReportSection& s : sections) {
        out << "== " << s.name << " ==\n";
        for (const CheckItem& item : s.items) {
            ++total;
            out << "  " << item.status << std::string(9 - item.status.size(), ' ') << item.name;
            if (!item.detail.empty()) out << " | " << item.detail;
            out << " [" << std::llround(item.duration_ms) << " ms]\n";
        }
    }
    out << total << " checks: " << count(kPass) << " pass, " << count(kEvidence)
        << " evidence, " << count(kFail) << " fail (seed " << seed << ")\n";
    return out.str();
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = schema;
    j["seed"] = seed;
    j["sections"] = nlohmann::ordered_json::array();
    for (const ReportSection& s : sections) {
        nlohmann::ordered_json sec;
        sec["name"] = s.name;
        sec["items"] = nlohmann::ordered_json::array();
        for (const CheckItem& item : s.items) {
            nlohmann::ordered_json it;
            it["name"] = item.name;
            it["status"] = item.status;
            it["detail"] = item.detail;
            sec["items"].push_back(std::move(it));
        }
        j["sections"].push_back(std::move(sec));
    }
    return j.dump(2) + "\n";
}

Report verify_catalog(const Catalog& catalog, const VerifyOptions& options) {
    const std::vector<std::string> section_names = {
        "identities",    "nilpotency",  "annihilators",   "cohomology",
        "extensions",    "derivations", "degenerations",  "closed-sets",
        "orbit-evidence", "one-generated", "distinctness"};
    std::vector<Task> tasks;
    auto add = [&tasks](std::size_t section, std::string name, std::function<CheckItem()> run) {
        tasks.push_back({section, std::move(name), std::move(run)});
    };

    const std::vector<std::string> tag_order = {
        "zero",        "right-alternative", "associative",          "non-associative",
        "commutative", "anticommutative",   "minus-one-one-cyclic", "pure",
        "non-pure"};
    for (const CatalogEntry& entry : catalog.entries) {
        const CatalogEntry* e = &entry;
        for (const std::string& tag : tag_order) {
            if (!entry.tags.count(tag)) continue;
            std::string name = entry.name + ": " + tag;
            add(0, name, [e, tag, name]() {
                if (e->parametric) return identity_tag_item(name, e->algebra, tag);
                return identity_tag_item(name, to_rational(e->algebra), tag);
            });
        }
    }

    for (const CatalogEntry& entry : catalog.entries) {
        const CatalogEntry* e = &entry;
        add(1, entry.name, [e]() {
            if (e->parametric) return nilpotency_item(e->name, e->algebra, e->expected_nil_index);
            return nilpotency_item(e->name, to_rational(e->algebra), e->expected_nil_index);
        });
    }

    for (const CatalogEntry& entry : catalog.entries) {
        if (entry.ann_contains.empty()) continue;
        const CatalogEntry* e = &entry;
        add(2, entry.name, [e]() {
            if (e->parametric) return annihilator_item(e->name, e->algebra, e->ann_contains);
            return annihilator_item(e->name, to_rational(e->algebra), e->ann_contains);
        });
    }

    for (const CohomologyGolden& g : catalog.goldens) {
        const CohomologyGolden* gp = &g;
        if (g.alpha_samples.empty()) {
            add(3, g.name,
                [gp, &catalog]() { return golden_item(catalog, *gp, std::nullopt, gp->name); });
        } else {
            for (const Rational& s : g.alpha_samples) {
                std::string name = g.name + " alpha=" + s.str();
                Rational sample = s;
                add(3, name, [gp, &catalog, sample, name]() {
                    return golden_item(catalog, *gp, sample, name);
                });
            }
        }
    }

    for (const ExtensionRecord& rec : catalog.extensions) {
        const ExtensionRecord* r = &rec;
        add(4, rec.name, [r, &catalog]() { return extension_item(catalog, *r); });
    }

    for (const CatalogEntry& entry : catalog.entries) {
        if (!entry.expected_der_dim) continue;
        const CatalogEntry* e = &entry;
        add(5, entry.name, [e]() {
            if (e->parametric) return derivation_item(e->name, e->algebra, *e->expected_der_dim);
            return derivation_item(e->name, to_rational(e->algebra), *e->expected_der_dim);
        });
    }

    for (const DegenerationRecord& rec : catalog.degenerations) {
        const DegenerationRecord* r = &rec;
        add(6, rec.name, [r, &catalog]() {
            const Algebra<RationalFunction>& source = catalog.require(r->source).algebra;
            const Algebra<RationalFunction>& target = catalog.require(r->target).algebra;
            DegenerationOutcome out =
                verify_degeneration_row(source, target, r->matrix, r->alpha_samples);
            return make(r->name, out.verified ? kPass : kFail, out.detail);
        });
        std::string order_name = rec.name + ": derivation dimensions";
        add(6, order_name, [r, &catalog, order_name]() {
            const Algebra<RationalFunction>& source = catalog.require(r->source).algebra;
            const Algebra<RationalFunction>& target = catalog.require(r->target).algebra;
            std::size_t ds = derivation_algebra(source).dim;
            std::size_t dt = derivation_algebra(target).dim;
            std::string detail =
                "dim Der " + std::to_string(ds) + " -> " + std::to_string(dt);
            bool same_class = invariant_vector(source) == invariant_vector(target);
            bool ok = same_class ? ds <= dt : ds < dt;
            if (!ok) return make(order_name, kFail, detail + " violates the ordering");
            return make(order_name, kPass, detail);
        });
    }

    for (const ClosedSetRecord& rec : catalog.closed_sets) {
        const ClosedSetRecord* r = &rec;
        if (!rec.satisfied_by.empty()) {
            std::string name = rec.set.name + ": " + rec.satisfied_by + " in stored basis";
            add(7, name, [r, &catalog, name]() {
                Algebra<Rational> a = to_rational(catalog.require(r->satisfied_by).algebra);
                ClosedSetCheck chk = check_closed_set(a, r->set);
                if (chk.satisfied) return make(name, kPass, "all conditions hold");
                return make(name, kFail, chk.violation);
            });
        }
        for (const ClosedSetSearchTarget& t : rec.searches) {
            std::vector<std::optional<Rational>> samples;
            if (t.alpha_samples.empty()) {
                samples.push_back(std::nullopt);
            } else {
                for (const Rational& s : t.alpha_samples) samples.push_back(s);
            }
            for (const std::optional<Rational>& sample : samples) {
                std::string name = rec.set.name + ": search " + t.algebra +
                                   (sample ? " alpha=" + sample->str() : "");
                std::string algebra = t.algebra;
                std::uint64_t trials = options.closed_set_trials;
                std::uint64_t seed = mix_seed(options.seed, name);
                add(7, name, [r, &catalog, name, algebra, sample, trials, seed]() {
                    Algebra<Rational> a = to_rational(catalog.resolve(algebra, sample));
                    BasisSearchResult res = closed_set_basis_search(a, r->set, trials, seed);
                    if (res.found()) {
                        return make(name, kFail,
                                    "basis found at trial " + std::to_string(res.trials_used) +
                                        ", the no-basis claim is contradicted");
                    }
                    return make(name, kEvidence,
                                "no basis found in " + std::to_string(res.trials_used) +
                                    " trials (evidence, not proof)");
                });
            }
        }
    }

    for (const AutomorphismShapeRecord& s : catalog.shapes) {
        const AutomorphismShapeRecord* sp = &s;
        std::string name = "shape " + s.name;
        add(8, name, [sp, &catalog, name]() {
            Algebra<RationalFunction> base = catalog.resolve(sp->algebra, sp->alpha);
            if (!verify_automorphism(base, sp->matrix)) {
                return make(name, kFail, "matrix family fails the automorphism equations");
            }
            if (!sp->nonzero.empty()) {
                RationalFunction det = determinant(sp->matrix);
                RationalFunction claimed = parse_scalar(sp->nonzero, sp->parameters);
                if (det != claimed) {
                    return make(name, kFail,
                                "determinant " + det.str() + " differs from recorded " +
                                    sp->nonzero);
                }
            }
            return make(name, kPass, "automorphism equations hold identically");
        });
    }

    for (const ActionRecord& rec : catalog.actions) {
        const ActionRecord* r = &rec;
        std::string name = "action " + rec.name;
        add(8, name, [r, &catalog, name]() {
            const AutomorphismShapeRecord& shape = catalog.require_shape(r->shape);
            Algebra<Rational> base = to_rational(catalog.resolve(r->algebra, r->alpha));
            Matrix<RationalFunction> theta = parse_form(r->cocycle, base.dim(), r->symbols);
            std::vector<std::string> symbols = shape.parameters;
            symbols.insert(symbols.end(), r->symbols.begin(), r->symbols.end());
            ActionCheck chk = check_action_claims(base, shape.matrix, theta, r->claims, symbols);
            if (!chk.decomposed) return make(name, kFail, chk.detail);
            std::string flagged;
            std::string unexpected;
            for (const ActionClaimResult& c : chk.claims) {
                std::string note =
                    c.label + " (recomputed " + c.actual + ", recorded " + c.claimed + ")";
                if (!c.as_expected) unexpected += (unexpected.empty() ? "" : ", ") + note;
                if (!c.matched) flagged += (flagged.empty() ? "" : ", ") + note;
            }
            if (!chk.all_as_expected) {
                return make(name, kFail, "unexpected recomputation outcome: " + unexpected);
            }
            if (!flagged.empty()) {
                return make(name, kPass, "flags recorded discrepancies: " + flagged);
            }
            return make(name, kPass, "all recorded formulas match the recomputation");
        });
    }

    for (const OrbitRecord& rec : catalog.orbits) {
        const OrbitRecord* r = &rec;
        for (std::size_t i = 0; i < rec.representatives.size(); ++i) {
            for (std::size_t j = i + 1; j < rec.representatives.size(); ++j) {
                std::string name = "orbit " + rec.name + ": " + rec.representatives[i] +
                                   " vs " + rec.representatives[j];
                std::size_t samples = options.orbit_samples ? options.orbit_samples : rec.samples;
                std::uint64_t seed = mix_seed(options.seed, name);
                add(8, name, [r, &catalog, name, i, j, samples, seed]() {
                    const AutomorphismShapeRecord& shape = catalog.require_shape(r->shape);
                    Algebra<Rational> base = to_rational(catalog.resolve(r->algebra, r->alpha));
                    Matrix<Rational> ta = parse_constant_form(r->representatives[i], base.dim());
                    Matrix<Rational> tb = parse_constant_form(r->representatives[j], base.dim());
                    Rng rng(seed);
                    OrbitEvidence ev = orbit_distinctness_evidence(
                        base, shape.matrix, shape.parameters, ta, tb, samples, rng);
                    if (ev.equivalence_found) {
                        return make(name, kFail, ev.detail + "; distinctness claim contradicted");
                    }
                    return make(name, kEvidence, ev.detail + " (evidence, not proof)");
                });
            }
        }
    }

    for (const CatalogEntry& entry : catalog.entries) {
        if (!entry.tags.count("one-generated")) continue;
        const CatalogEntry* e = &entry;
        add(9, entry.name, [e]() {
            Algebra<Rational> a = to_rational(e->algebra);
            std::vector<Rational> e1(a.dim(), Rational(0));
            e1[0] = Rational(1);
            Subspace<Rational> gen = generated_subalgebra(a, {e1});
            if (gen.dim() == a.dim()) return make(e->name, kPass, "e1 generates the whole algebra");
            return make(e->name, kFail,
                        "e1 generates a subalgebra of dim " + std::to_string(gen.dim()));
        });
    }

    std::vector<const CatalogEntry*> plain4;
    for (const CatalogEntry& entry : catalog.entries) {
        if (!entry.auxiliary && !entry.parametric && entry.algebra.dim() == 4) {
            plain4.push_back(&entry);
        }
    }
    for (std::size_t i = 0; i < plain4.size(); ++i) {
        for (std::size_t j = i + 1; j < plain4.size(); ++j) {
            const CatalogEntry* pa = plain4[i];
            const CatalogEntry* pb = plain4[j];
            std::string name = pa->name + " vs " + pb->name;
            add(10, name, [pa, pb, name]() {
                Algebra<Rational> a = to_rational(pa->algebra);
                Algebra<Rational> b = to_rational(pb->algebra);
                InvariantVector va = invariant_vector(a);
                InvariantVector vb = invariant_vector(b);
                if (!(va == vb)) {
                    return make(name, kPass, "separated by " + va.first_difference(vb));
                }
                for (std::uint32_t p : {2u, 3u, 5u}) {
                    FfIsoResult res = ff_iso_evidence(a, b, p);
                    if (!res.found()) {
                        return make(name, kEvidence,
                                    "invariant vectors tie; no isomorphism over F_" +
                                        std::to_string(p) + " (" +
                                        std::to_string(res.nodes_visited) + " nodes searched)");
                    }
                }
                return make(name, kFail,
                            "invariant vectors tie and mod-p witnesses exist at p = 2, 3, 5");
            });
        }
    }

    Report report;
    report.seed = options.seed;
    for (const std::string& name : section_names) {
        report.sections.push_back({name, {}});
    }
    std::vector<CheckItem> results = run_tasks(tasks, options.jobs);
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        report.sections[tasks[i].section].items.push_back(std::move(results[i]));
    }
    return report;
}

}  // namespace extalg
