#pragma once

// Experiment runner: plays games, compares against the offline optimum,
// audits traces and aggregates sweeps.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oscm/adversaries.hpp"
#include "oscm/algorithms.hpp"
#include "oscm/crossings.hpp"
#include "oscm/offline.hpp"

namespace oscm {

struct AuditFlags {
    bool double_cross = true;  // no two arrows into one slot cross both edges of a fulfilled slot
    bool equator = true;       // edge + arrow flow balance at every cut
    bool gap_four_zero = true; // no 4-0 pair created across a free slot
    bool gap_three_zero = true;// no 3-0 pair created across a free slot

    static AuditFlags none() { return {false, false, false, false}; }
};

enum class FindingKind { DoubleCross, EquatorImbalance, FourZeroGap, ThreeZeroGap };

const char* to_string(FindingKind k) noexcept;

struct AuditFinding {
    std::size_t step = 0;  // 1-based step after which (or at which) the violation appears
    FindingKind kind = FindingKind::DoubleCross;
    std::string detail;
};

/// Replays the trace from the empty state and checks the requested audits on
/// every intermediate state. Throws ReplayMismatch if the trace is corrupt.
std::vector<AuditFinding> audit_trace(const Trace& trace, const AuditFlags& flags = {});

struct OracleConfig {
    int max_n = oscm::brute_force_max_n();
    /// Above the brute-force bound, fall back to the sorted-order value certified
    /// by the pairwise lower bound.
    bool certified_fallback = true;
};

struct OptValue {
    std::int64_t value = 0;
    bool exact = true;
    std::string method;  // "brute_force" or "certified_sorted"
};

/// Offline optimum of a complete instance under the given oracle policy.
OptValue offline_opt(const Instance& inst, const OracleConfig& oracle = {});

using PairHistogram = std::array<std::int64_t, all_pair_kinds.size()>;

std::size_t index_of(PairKind k) noexcept;

/// Classifies every pair of placed requests by slot order.
PairHistogram pair_histogram(const PlacementState& state);

/// Sum over placed pairs of min(crossings in either order).
std::int64_t pairwise_unavoidable(const PlacementState& state);

struct RatioReport {
    std::string algorithm;
    std::string source;
    int n = 0;
    std::uint64_t seed = 0;
    std::int64_t alg_crossings = 0;
    std::int64_t opt_crossings = 0;
    bool opt_exact = true;
    std::string opt_method;
    std::optional<double> ratio;   // absent when opt = 0 < alg
    bool ratio_infinite = false;
    PairHistogram histogram{};
    std::int64_t pairwise_unavoidable = 0;
    std::vector<AuditFinding> findings;
    std::optional<Trace> trace;
};

/// alg / opt, 1.0 when both are zero, nullopt (infinite) when only opt is zero.
std::optional<double> competitive_ratio(std::int64_t alg, std::int64_t opt);

RatioReport report_for_trace(const Trace& trace, const AuditFlags& audits, const OracleConfig& oracle = {},
                             bool keep_trace = false);

RatioReport run_experiment(const OnlineAlgorithm& alg, const Instance& inst, const AuditFlags& audits = {},
                           const OracleConfig& oracle = {}, bool keep_trace = false,
                           const std::string& source_name = "instance");
RatioReport run_experiment(const OnlineAlgorithm& alg, AdaptiveAdversary& source, const AuditFlags& audits = {},
                           const OracleConfig& oracle = {}, bool keep_trace = false);

struct SweepSpec {
    std::string algorithm = "greedy";
    int n_min = 4;
    int n_max = 9;
    int trials = 100;
    std::uint64_t seed = 0;
    AuditFlags audits;
    OracleConfig oracle;
    unsigned threads = 0;  // 0 = hardware concurrency
    bool keep_traces = false;
};

struct TrialResult {
    int index = 0;
    std::uint64_t seed = 0;
    int n = 0;
    std::optional<RatioReport> report;
    std::string error;
};

struct SweepSummary {
    std::vector<TrialResult> trials;
    double max_ratio = 0.0;
    double mean_ratio = 0.0;
    std::int64_t violation_count = 0;
    std::int64_t error_count = 0;
    std::int64_t infinite_ratio_count = 0;
    PairHistogram histogram{};
};

/// Random 2-regular trials with n drawn uniformly from [n_min, n_max]; trial
/// seeds are drawn from `seed`, so the summary depends on the seed only.
SweepSummary sweep(const SweepSpec& spec);

/// Enumerates every sequence of legal algorithm responses for the first
/// `depth` requests of a copyable adversary, calling visit(trace) at each leaf.
template <typename Adversary, typename Visit>
void explore_all_responses(const Adversary& prototype, std::size_t depth, Visit&& visit) {
    std::function<void(Adversary, Trace)> rec = [&](Adversary adv, Trace trace) {
        if (trace.steps.size() == depth) {
            visit(trace);
            return;
        }
        Adversary probe = adv;
        const auto req = probe.next(trace);
        if (!req) {
            visit(trace);
            return;
        }
        for (Slot s : free_slots(trace.final_state)) {
            Adversary branch = probe;
            Trace t = trace;
            PlacementState next;
            t.steps.push_back(make_step(t.final_state, *req, s, next));
            t.final_state = std::move(next);
            rec(std::move(branch), std::move(t));
        }
    };
    Trace root;
    root.n = prototype.n();
    root.regularity = prototype.regularity();
    root.source = prototype.name();
    root.algorithm = "exhaustive";
    root.final_state = PlacementState(root.n);
    rec(prototype, std::move(root));
}

} // namespace oscm
