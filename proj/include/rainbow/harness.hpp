#pragma once

#include "rainbow/graph.hpp"
#include "rainbow/separation.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rainbow {

/// A failing check, replayable from its graph text and parameters alone.
struct Reproducer {
    std::string check;
    std::string ecg;
    nlohmann::json params;
};

struct Tally {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t vacuous = 0;

    void add(Verdict v);
};

// --- rainbow triangles above the threshold --------------------------------

struct TheoremRow {
    std::size_t n = 0;
    std::size_t target = 0;
    std::size_t samples = 0;
    std::size_t found = 0;
    /// Draws discarded because no edge additions could reach the target.
    std::size_t boost_rejections = 0;
};

struct TheoremReport {
    std::size_t ell = 3;
    std::uint64_t seed = 0;
    std::vector<TheoremRow> rows;
    /// Only ell = 3 comes with a guarantee at every n.
    bool claim_applies = false;
    std::vector<Reproducer> failures;

    [[nodiscard]] bool passed() const { return !claim_applies || failures.empty(); }
};

/// For every n in [n_min, n_max]: random graphs boosted to delta^c >= (n+1)/2,
/// then the exact search. A miss is a failure only when ell = 3.
TheoremReport verify_theorem_small(std::size_t ell, std::size_t n_min, std::size_t n_max, std::size_t samples,
                                   std::uint64_t seed, unsigned threads = 1);

// --- delta^c <= n/2 + 3 ell -------------------------------------------------

struct DeltaBoundRow {
    std::size_t n = 0;
    std::size_t checked = 0;
    std::size_t vacuous = 0;
    std::size_t violations = 0;
};

struct DeltaBoundReport {
    std::size_t ell = 3;
    std::uint64_t seed = 0;
    std::vector<DeltaBoundRow> rows;
    std::vector<Reproducer> failures;

    [[nodiscard]] bool passed() const { return failures.empty(); }
};

/// Samples with 2 delta^c > n + 6 ell must contain a rainbow ell-cycle; the
/// rest are counted as vacuous. n_max may not exceed exact_cap.
DeltaBoundReport verify_cor_deltabound(std::size_t ell, std::size_t n_max, std::size_t samples, std::uint64_t seed,
                                       unsigned threads = 1, std::size_t exact_cap = 16);

// --- property suite ---------------------------------------------------------

struct PropertySuiteOptions {
    std::size_t instances = 200;
    std::size_t n_min = 4;
    std::size_t n_max = 11;
    unsigned threads = 1;
};

struct PropertyReport {
    std::uint64_t seed = 0;
    std::size_t instances = 0;
    std::map<std::string, Tally> tallies;
    std::vector<Reproducer> failures;

    [[nodiscard]] bool passed() const { return failures.empty(); }
};

/// Every inequality check over a seeded corpus of edge-minimal graphs, with
/// hypotheses established per instance. Checks whose hypotheses fail are
/// tallied as vacuous, never as passes.
PropertyReport run_property_suite(std::uint64_t seed, PropertySuiteOptions options = {});

/// Names accepted by run_check, in suite order.
const std::vector<std::string> &property_check_names();

/// Runs one named check on g with the given parameters.
CheckResult run_check(const std::string &check, const EdgeColoredGraph &g, const nlohmann::json &params);

/// Re-runs a recorded failure.
CheckResult rerun(const Reproducer &r);

} // namespace rainbow
