#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "extalg/catalog.hpp"
#include "extalg/cohomology.hpp"
#include "extalg/convert.hpp"
#include "extalg/degeneration.hpp"
#include "extalg/errors.hpp"
#include "extalg/forms.hpp"
#include "extalg/identity.hpp"
#include "extalg/invariants.hpp"
#include "extalg/modp.hpp"
#include "extalg/scalar_expr.hpp"
#include "extalg/verify.hpp"

using namespace extalg;

namespace {

std::optional<Rational> parse_alpha(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return parse_rational(text);
}

// Accepts a builtin name, literal identity text, or a path to a file holding
// the identity text.
Identity load_identity(const std::string& spec) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) {
        std::ifstream in(spec);
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        for (char& ch : text) {
            if (ch == '\n' || ch == '\r' || ch == '\t') ch = ' ';
        }
        return Identity::named_or_parsed(text);
    }
    return Identity::named_or_parsed(spec);
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

void print_invariants(const InvariantVector& v) {
    std::cout << "dim = " << v.dim << "\n";
    std::cout << "dim_a2 = " << v.dim_a2 << "\n";
    std::cout << "dim_a3 = " << v.dim_a3 << "\n";
    if (v.nil_index) {
        std::cout << "nil_index = " << *v.nil_index << "\n";
    } else {
        std::cout << "nil_index = none\n";
    }
    std::cout << "dim_ann = " << v.dim_ann << "\n";
    std::cout << "dim_der = " << v.dim_der << "\n";
    std::cout << "commutative = " << bool_str(v.commutative) << "\n";
    std::cout << "associative = " << bool_str(v.associative) << "\n";
    std::cout << "right_alternative = " << bool_str(v.right_alternative) << "\n";
}

std::vector<Matrix<RationalFunction>> load_cocycles(const std::string& path, std::size_t dim,
                                                    const std::vector<std::string>& symbols) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open cocycle file " + path);
    std::vector<Matrix<RationalFunction>> thetas;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        thetas.push_back(parse_form(line.substr(first, last - first + 1), dim, symbols));
    }
    if (thetas.empty()) throw Error("cocycle file " + path + " holds no forms");
    return thetas;
}

ParametricBasis load_basis(const std::string& path, std::size_t dim) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open basis file " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    if (!j.is_array() || j.size() != dim) {
        throw Error("basis file must be a JSON array of " + std::to_string(dim) + " rows");
    }
    ParametricBasis basis(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        if (!j[r].is_array() || j[r].size() != dim) {
            throw Error("basis row " + std::to_string(r + 1) + " must hold " +
                        std::to_string(dim) + " entries");
        }
        for (std::size_t c = 0; c < dim; ++c) {
            if (!j[r][c].is_string()) {
                throw Error("basis entries must be scalar expression strings");
            }
            basis(r, c) = parse_scalar(j[r][c].get<std::string>());
        }
    }
    return basis;
}

void write_extension_file(const std::string& path, const std::string& name,
                          const Algebra<RationalFunction>& a, bool parametric,
                          const std::string& provenance) {
    nlohmann::ordered_json entry;
    entry["name"] = name;
    entry["dim"] = a.dim();
    if (parametric) entry["parametric"] = true;
    nlohmann::ordered_json constants = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            for (std::size_t k = 0; k < a.dim(); ++k) {
                if (a.c(i, j, k).is_zero()) continue;
                constants.push_back({{"i", i + 1},
                                     {"j", j + 1},
                                     {"k", k + 1},
                                     {"value", a.c(i, j, k).str()}});
            }
        }
    }
    entry["constants"] = std::move(constants);
    entry["provenance"] = provenance;
    nlohmann::ordered_json root;
    root["algebras"] = nlohmann::ordered_json::array({std::move(entry)});
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << root.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for nilpotent right alternative algebras"};
    app.require_subcommand(1);

    std::string catalog_dir = "catalog";
    app.add_option("--catalog", catalog_dir, "catalog directory")
        ->envname("EXTALG_CATALOG")
        ->capture_default_str();

    std::string algebra_name, identity_spec, alpha_text;
    std::string cocycle_path, out_path, ext_name;
    std::string row_name, source_name, target_name, basis_path;
    std::vector<std::string> alpha_texts;
    std::string set_name, name_a, name_b, alpha_a_text, alpha_b_text, format = "text";
    std::uint64_t search_trials = 0, seed = 1, trials = 10000;
    std::uint32_t prime = 2;
    std::size_t jobs = 0;

    CLI::App* check = app.add_subcommand("check-identity", "test one identity on one algebra");
    check->add_option("--algebra", algebra_name, "catalog algebra name")->required();
    check->add_option("--identity", identity_spec, "builtin name, identity text, or file")
        ->required();
    check->add_option("--alpha", alpha_text, "family parameter value");

    CLI::App* inv = app.add_subcommand("invariants", "print the isomorphism invariant vector");
    inv->add_option("--algebra", algebra_name, "catalog algebra name")->required();
    inv->add_option("--alpha", alpha_text, "family parameter value");

    CLI::App* coh = app.add_subcommand("cohomology", "second cohomology for one identity");
    coh->add_option("--algebra", algebra_name, "catalog algebra name")->required();
    coh->add_option("--identity", identity_spec, "builtin name, identity text, or file")
        ->required();
    coh->add_option("--alpha", alpha_text, "family parameter value");

    CLI::App* ext = app.add_subcommand("extend", "central extension by cocycles from a file");
    ext->add_option("--algebra", algebra_name, "catalog algebra name")->required();
    ext->add_option("--cocycle", cocycle_path, "file with one form per line")->required();
    ext->add_option("--out", out_path, "write the extension as a catalog algebras file");
    ext->add_option("--name", ext_name, "name recorded in --out");
    ext->add_option("--alpha", alpha_text, "family parameter value");

    CLI::App* deg = app.add_subcommand("degenerate", "verify a degeneration along t -> 0");
    deg->add_option("--row", row_name, "stored degeneration row name");
    deg->add_option("--source", source_name, "source algebra");
    deg->add_option("--target", target_name, "target algebra");
    deg->add_option("--basis", basis_path, "JSON matrix of parametric basis rows");
    deg->add_option("--alpha", alpha_texts, "family parameter samples (repeatable)");

    CLI::App* closed = app.add_subcommand("closed-set", "closed-set membership and basis search");
    closed->add_option("--algebra", algebra_name, "catalog algebra name")->required();
    closed->add_option("--set", set_name, "closed set name")->required();
    closed->add_option("--search", search_trials, "random basis search with this many trials");
    closed->add_option("--seed", seed, "random seed")->capture_default_str();
    closed->add_option("--alpha", alpha_text, "family parameter value");

    CLI::App* iso = app.add_subcommand("iso-evidence", "exhaustive mod-p isomorphism search");
    iso->add_option("--a", name_a, "first algebra")->required();
    iso->add_option("--b", name_b, "second algebra")->required();
    iso->add_option("--prime", prime, "field characteristic (2, 3, or 5)")
        ->capture_default_str();
    iso->add_option("--alpha-a", alpha_a_text, "family parameter for --a");
    iso->add_option("--alpha-b", alpha_b_text, "family parameter for --b");

    CLI::App* verify = app.add_subcommand("verify-all", "run every catalog check");
    verify->add_option("--jobs", jobs, "worker threads, 0 = hardware");
    verify->add_option("--seed", seed, "random seed")->capture_default_str();
    verify->add_option("--trials", trials, "closed-set search trials")->capture_default_str();

    CLI::App* report = app.add_subcommand("report", "verify and render the report");
    report->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    report->add_option("--jobs", jobs, "worker threads, 0 = hardware");
    report->add_option("--seed", seed, "random seed")->capture_default_str();
    report->add_option("--trials", trials, "closed-set search trials")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Catalog cat = load_catalog(catalog_dir);

        if (*check) {
            Identity id = load_identity(identity_spec);
            Algebra<RationalFunction> a = cat.resolve(algebra_name, parse_alpha(alpha_text));
            IdentityCheck<RationalFunction> result = check_identity(a, id);
            if (result.holds) {
                std::cout << "Holds\n";
                return 0;
            }
            std::cout << result.describe(id) << "\n";
            return 1;
        }

        if (*inv) {
            const CatalogEntry& entry = cat.require(algebra_name);
            std::optional<Rational> alpha = parse_alpha(alpha_text);
            Algebra<RationalFunction> a = cat.resolve(algebra_name, alpha);
            if (entry.parametric && !alpha) {
                print_invariants(invariant_vector(a));
            } else {
                print_invariants(invariant_vector(to_rational(a)));
            }
            return 0;
        }

        if (*coh) {
            Identity id = load_identity(identity_spec);
            Algebra<RationalFunction> a = cat.resolve(algebra_name, parse_alpha(alpha_text));
            CohomologySummary<RationalFunction> summary = cohomology(a, id);
            std::cout << "z2_dim = " << summary.z2.dim() << "\n";
            std::cout << "b2_dim = " << summary.b2.dim() << "\n";
            std::cout << "h2_dim = " << summary.h2_dim << "\n";
            for (std::size_t s = 0; s < summary.representatives.size(); ++s) {
                std::cout << "representative " << s + 1 << ": "
                          << form_str(summary.representatives[s]) << "\n";
            }
            return 0;
        }

        if (*ext) {
            const CatalogEntry& entry = cat.require(algebra_name);
            std::optional<Rational> alpha = parse_alpha(alpha_text);
            Algebra<RationalFunction> a = cat.resolve(algebra_name, alpha);
            bool symbolic = entry.parametric && !alpha;
            std::vector<std::string> symbols;
            if (symbolic) symbols.push_back("a");
            std::vector<Matrix<RationalFunction>> thetas =
                load_cocycles(cocycle_path, a.dim(), symbols);
            Algebra<RationalFunction> extension = central_extension(a, thetas);
            std::cout << "extension_dim = " << extension.dim() << "\n";
            std::cout << extension.str() << "\n";
            if (!out_path.empty()) {
                std::string name = ext_name.empty() ? algebra_name + "_ext" : ext_name;
                write_extension_file(out_path, name, extension, symbolic,
                                     "central extension of " + algebra_name + " built by the cli");
                std::cout << "wrote " << out_path << "\n";
            }
            return 0;
        }

        if (*deg) {
            const DegenerationRecord* chosen = nullptr;
            DegenerationRecord manual;
            if (!row_name.empty()) {
                for (const DegenerationRecord& rec : cat.degenerations) {
                    if (rec.name == row_name) chosen = &rec;
                }
                if (!chosen) {
                    std::cerr << "unknown degeneration row '" << row_name << "'; available:";
                    for (const DegenerationRecord& rec : cat.degenerations) {
                        std::cerr << " " << rec.name;
                    }
                    std::cerr << "\n";
                    return 2;
                }
            } else {
                if (source_name.empty() || target_name.empty() || basis_path.empty()) {
                    std::cerr << "degenerate needs --row or all of --source, --target, --basis\n";
                    return 2;
                }
                manual.source = source_name;
                manual.target = target_name;
                manual.matrix = load_basis(basis_path, cat.require(source_name).algebra.dim());
                for (const std::string& text : alpha_texts) {
                    manual.alpha_samples.push_back(parse_rational(text));
                }
                chosen = &manual;
            }
            const Algebra<RationalFunction>& source = cat.require(chosen->source).algebra;
            const Algebra<RationalFunction>& target = cat.require(chosen->target).algebra;
            DegenerationOutcome outcome =
                verify_degeneration_row(source, target, chosen->matrix, chosen->alpha_samples);
            if (outcome.verified) {
                std::cout << "Verified (" << outcome.detail << ")\n";
                return 0;
            }
            std::cout << "Failed: " << outcome.detail << "\n";
            return 1;
        }

        if (*closed) {
            const ClosedSetRecord* rec = cat.find_closed_set(set_name);
            if (!rec) {
                std::cerr << "unknown closed set '" << set_name << "'; available:";
                for (const ClosedSetRecord& cs : cat.closed_sets) {
                    std::cerr << " " << cs.set.name;
                }
                std::cerr << "\n";
                return 2;
            }
            std::optional<Rational> alpha = parse_alpha(alpha_text);
            Algebra<RationalFunction> a = cat.resolve(algebra_name, alpha);
            if (search_trials > 0) {
                BasisSearchResult result =
                    closed_set_basis_search(to_rational(a), rec->set, search_trials, seed);
                if (result.found()) {
                    std::cout << "basis found at trial " << result.trials_used << " (seed "
                              << seed << "):\n";
                    const Matrix<Rational>& basis = *result.basis;
                    for (std::size_t r = 0; r < basis.rows(); ++r) {
                        std::cout << "  [";
                        for (std::size_t c = 0; c < basis.cols(); ++c) {
                            if (c) std::cout << ", ";
                            std::cout << basis(r, c).str();
                        }
                        std::cout << "]\n";
                    }
                    return 0;
                }
                std::cout << "no basis found in " << result.trials_used << " trials (seed "
                          << seed << "); evidence only, not a proof\n";
                return 0;
            }
            ClosedSetCheck chk = check_closed_set(a, rec->set);
            if (chk.satisfied) {
                std::cout << "Satisfied\n";
                return 0;
            }
            std::cout << "Violated: " << chk.violation << "\n";
            return 1;
        }

        if (*iso) {
            Algebra<Rational> a = to_rational(cat.resolve(name_a, parse_alpha(alpha_a_text)));
            Algebra<Rational> b = to_rational(cat.resolve(name_b, parse_alpha(alpha_b_text)));
            FfIsoResult result = ff_iso_evidence(a, b, prime);
            if (result.found()) {
                std::cout << "witness mod " << prime << " after " << result.nodes_visited
                          << " nodes: " << result.witness_str(a.dim()) << "\n";
            } else {
                std::cout << "no witness in GL_" << a.dim() << "(F_" << prime << "); "
                          << result.nodes_visited
                          << " nodes visited; evidence of distinctness, not a proof\n";
            }
            return 0;
        }

        VerifyOptions options;
        options.seed = seed;
        options.closed_set_trials = trials;
        options.jobs = jobs;
        Report rep = verify_catalog(cat, options);
        if (*report && format == "json") {
            std::cout << rep.to_json();
        } else {
            std::cout << rep.to_text();
        }
        return rep.all_ok() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
