#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "extalg/catalog.hpp"

namespace extalg {

// One check result. Status is "pass", "fail", or "evidence"; evidence marks
// bounded-search results that support a claim without proving it and counts
// as ok. Durations appear in the text rendering only, never in the JSON,
// which must be byte-identical across runs with the same seed.
struct CheckItem {
    std::string name;
    std::string status;
    std::string detail;
    double duration_ms = 0.0;
};

struct ReportSection {
    std::string name;
    std::vector<CheckItem> items;
};

struct Report {
    int schema = 1;
    std::uint64_t seed = 1;
    std::vector<ReportSection> sections;

    bool all_ok() const;
    std::size_t count(const std::string& status) const;
    std::string to_text() const;
    std::string to_json() const;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::uint64_t closed_set_trials = 10000;
    // 0 means use each orbit record's own sample count.
    std::size_t orbit_samples = 0;
    // 0 means hardware concurrency.
    std::size_t jobs = 0;
};

// Runs the full check suite over the catalog: identities, nilpotency,
// annihilators, cohomology goldens, extension reconstructions, derivation
// dimensions, degeneration rows, closed sets, orbit and action evidence,
// one-generated tags, pairwise distinctness. Failures are report content,
// not exceptions. Items appear in catalog order regardless of how the work
// is scheduled across threads.
Report verify_catalog(const Catalog& catalog, const VerifyOptions& options = {});

}  // namespace extalg
