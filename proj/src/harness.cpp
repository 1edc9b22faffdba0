#include "oscm/harness.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "oscm/propagation.hpp"

namespace oscm {

const char* to_string(FindingKind k) noexcept {
    switch (k) {
    case FindingKind::DoubleCross: return "double-cross";
    case FindingKind::EquatorImbalance: return "equator-imbalance";
    case FindingKind::FourZeroGap: return "4-0-gap";
    case FindingKind::ThreeZeroGap: return "3-0-gap";
    }
    return "?";
}

namespace {

std::string describe(const Request& r, Slot s) {
    return "(" + std::to_string(r.a) + "," + std::to_string(r.b) + ")@s" + std::to_string(s);
}

bool has_free_between(const PlacementState& state, Slot x, Slot y) {
    const Slot lo = std::min(x, y);
    const Slot hi = std::max(x, y);
    for (Slot k = lo + 1; k < hi; ++k) {
        if (state.is_free(k)) return true;
    }
    return false;
}

void mismatch(std::size_t step, const std::string& what) {
    throw Error(ErrorCode::ReplayMismatch, "trace step " + std::to_string(step) + ": " + what);
}

} // namespace

std::vector<AuditFinding> audit_trace(const Trace& trace, const AuditFlags& flags) {
    std::vector<AuditFinding> out;
    PlacementState state(trace.n);
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const std::size_t step = k + 1;
        const TraceStep& st = trace.steps[k];
        if (!state.in_range(st.slot) || !state.is_free(st.slot)) mismatch(step, "slot is not free");

        if (flags.gap_four_zero || flags.gap_three_zero) {
            for (const auto& [p, q] : state.placed()) {
                const auto kind = classify_pair(q, p, st.request, st.slot);
                const bool four = kind.kind == PairKind::FourZero && kind.placed_count == 4;
                const bool three = kind.kind == PairKind::ThreeZero && kind.placed_count == 3;
                if (!(four && flags.gap_four_zero) && !(three && flags.gap_three_zero)) continue;
                if (!has_free_between(state, p, st.slot)) continue;
                out.push_back({step, four ? FindingKind::FourZeroGap : FindingKind::ThreeZeroGap,
                               describe(st.request, st.slot) + " vs " + describe(q, p)});
            }
        }

        state = state.apply(st.request, st.slot);
        if (total_crossings(state) != st.edge_edge) mismatch(step, "stored edge-edge total differs");
        const bool defined = arrows_defined(state);
        if (defined != st.edge_arrow.has_value()) mismatch(step, "edge-arrow presence differs");
        if (!defined) continue;
        const auto set = arrows(state);
        if (edge_arrow_crossings(state, set) != *st.edge_arrow) mismatch(step, "stored edge-arrow total differs");

        if (flags.double_cross) {
            for (const auto& f : audit_no_double_cross(state)) {
                out.push_back({step, FindingKind::DoubleCross,
                               "arrows from v" + std::to_string(f.far_vertex) + ",v" + std::to_string(f.near_vertex) +
                                   " into s" + std::to_string(f.target) + " cross both edges of s" +
                                   std::to_string(f.fulfilled) + " (" + to_string(f.shape) + ")"});
            }
        }
        if (flags.equator) {
            for (int cut : audit_equator(state)) {
                out.push_back({step, FindingKind::EquatorImbalance, "cut " + std::to_string(cut)});
            }
        }
    }
    if (!(state == trace.final_state)) mismatch(trace.steps.size(), "final state differs from replay");
    return out;
}

OptValue offline_opt(const Instance& inst, const OracleConfig& oracle) {
    if (inst.n <= oracle.max_n) {
        BruteForceOptions opts;
        opts.max_n = oracle.max_n;
        return {brute_force_opt(inst, opts).opt_crossings, true, "brute_force"};
    }
    if (!oracle.certified_fallback) {
        throw Error(ErrorCode::SizeLimit, "n = " + std::to_string(inst.n) + " exceeds the brute-force bound " +
                                              std::to_string(oracle.max_n));
    }
    if (inst.requests.size() != static_cast<std::size_t>(inst.n)) {
        throw Error(ErrorCode::InvalidArgument, "offline optimum needs a complete instance");
    }
    const auto c = certified_opt(inst);
    return {c.value, c.exact, "certified_sorted"};
}

std::size_t index_of(PairKind k) noexcept { return static_cast<std::size_t>(k); }

PairHistogram pair_histogram(const PlacementState& state) {
    PairHistogram h{};
    const auto placed = state.placed();
    for (std::size_t i = 0; i < placed.size(); ++i) {
        for (std::size_t j = i + 1; j < placed.size(); ++j) {
            ++h[index_of(classify_pair(placed[i].second, placed[i].first, placed[j].second, placed[j].first).kind)];
        }
    }
    return h;
}

std::int64_t pairwise_unavoidable(const PlacementState& state) {
    std::int64_t sum = 0;
    const auto placed = state.placed();
    for (std::size_t i = 0; i < placed.size(); ++i) {
        for (std::size_t j = i + 1; j < placed.size(); ++j) {
            sum += classify_pair(placed[i].second, placed[i].first, placed[j].second, placed[j].first).unavoidable();
        }
    }
    return sum;
}

std::optional<double> competitive_ratio(std::int64_t alg, std::int64_t opt) {
    if (opt == 0) {
        if (alg == 0) return 1.0;
        return std::nullopt;
    }
    return static_cast<double>(alg) / static_cast<double>(opt);
}

RatioReport report_for_trace(const Trace& trace, const AuditFlags& audits, const OracleConfig& oracle,
                             bool keep_trace) {
    RatioReport rep;
    rep.algorithm = trace.algorithm;
    rep.source = trace.source;
    rep.n = trace.n;
    rep.alg_crossings = total_crossings(trace.final_state);
    const auto opt = offline_opt(trace.instance(), oracle);
    rep.opt_crossings = opt.value;
    rep.opt_exact = opt.exact;
    rep.opt_method = opt.method;
    rep.ratio = competitive_ratio(rep.alg_crossings, rep.opt_crossings);
    rep.ratio_infinite = !rep.ratio.has_value();
    rep.histogram = pair_histogram(trace.final_state);
    rep.pairwise_unavoidable = pairwise_unavoidable(trace.final_state);
    rep.findings = audit_trace(trace, audits);
    if (keep_trace) rep.trace = trace;
    return rep;
}

RatioReport run_experiment(const OnlineAlgorithm& alg, const Instance& inst, const AuditFlags& audits,
                           const OracleConfig& oracle, bool keep_trace, const std::string& source_name) {
    return report_for_trace(play(inst, alg, source_name), audits, oracle, keep_trace);
}

RatioReport run_experiment(const OnlineAlgorithm& alg, AdaptiveAdversary& source, const AuditFlags& audits,
                           const OracleConfig& oracle, bool keep_trace) {
    return report_for_trace(play(source, alg), audits, oracle, keep_trace);
}

SweepSummary sweep(const SweepSpec& spec) {
    if (spec.trials < 1) throw Error(ErrorCode::InvalidArgument, "sweep needs at least one trial");
    if (spec.n_min < 2 || spec.n_max < spec.n_min) {
        throw Error(ErrorCode::InvalidArgument, "sweep needs 2 <= n_min <= n_max");
    }
    const OnlineAlgorithm alg = algorithm_by_name(spec.algorithm);

    SweepSummary summary;
    summary.trials.resize(static_cast<std::size_t>(spec.trials));
    std::mt19937_64 master(spec.seed);
    const auto span = static_cast<std::uint64_t>(spec.n_max - spec.n_min + 1);
    for (int i = 0; i < spec.trials; ++i) {
        auto& t = summary.trials[static_cast<std::size_t>(i)];
        t.index = i;
        t.seed = master();
        t.n = spec.n_min + static_cast<int>(master() % span);
    }

    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (std::size_t i = cursor++; i < summary.trials.size(); i = cursor++) {
            auto& t = summary.trials[i];
            try {
                const Instance inst = random_two_regular(t.n, t.seed);
                t.report = run_experiment(alg, inst, spec.audits, spec.oracle, spec.keep_traces, "random_two_regular");
                t.report->seed = t.seed;
            } catch (const std::exception& e) {
                t.error = e.what();
            }
        }
    };
    unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(spec.trials));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    double sum = 0.0;
    std::int64_t finite = 0;
    for (const auto& t : summary.trials) {
        if (!t.report) {
            ++summary.error_count;
            continue;
        }
        const auto& r = *t.report;
        summary.violation_count += static_cast<std::int64_t>(r.findings.size());
        for (std::size_t k = 0; k < summary.histogram.size(); ++k) summary.histogram[k] += r.histogram[k];
        if (!r.ratio) {
            ++summary.infinite_ratio_count;
            continue;
        }
        summary.max_ratio = std::max(summary.max_ratio, *r.ratio);
        sum += *r.ratio;
        ++finite;
    }
    summary.mean_ratio = finite ? sum / static_cast<double>(finite) : 0.0;
    return summary;
}

} // namespace oscm
