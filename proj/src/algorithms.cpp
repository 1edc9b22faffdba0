#include "oscm/algorithms.hpp"

#include <cstdlib>
#include <limits>

#include "oscm/crossings.hpp"
#include "oscm/propagation.hpp"

namespace oscm {

namespace {

void require_free_slot(const PlacementState& state) {
    if (state.full()) throw Error(ErrorCode::NoFreeSlot, "no free slot left");
}

} // namespace

Slot barycenter_choose(const PlacementState& state, const Request& request) {
    require_free_slot(state);
    const Slot target = (request.a + request.b) / 2;
    if (state.in_range(target) && state.is_free(target)) return target;
    Slot best = 0;
    int best_dist = std::numeric_limits<int>::max();
    for (Slot t = 1; t <= state.n(); ++t) {
        if (!state.is_free(t)) continue;
        const int d = std::abs(t - target);
        if (d < best_dist) {
            best_dist = d;
            best = t;
        }
    }
    return best;
}

std::int64_t greedy_score(const PlacementState& state, const Request& request, Slot slot) {
    const PlacementState sim = state.apply(request, slot);
    return total_crossings(sim) + edge_arrow_crossings(sim, arrows(sim));
}

Slot greedy_choose(const PlacementState& state, const Request& request, TieRule tie) {
    require_free_slot(state);
    const auto candidates = free_slots(state);
    // A single candidate needs no scoring; this also lets the rule finish
    // games whose last request breaks 2-regularity.
    if (candidates.size() == 1) return candidates.front();
    Slot best = 0;
    std::int64_t least = std::numeric_limits<std::int64_t>::max();
    for (Slot s : candidates) {
        const auto score = greedy_score(state, request, s);
        if (score < least || (tie == TieRule::Rightmost && score == least)) {
            least = score;
            best = s;
        }
    }
    return best;
}

Slot first_fit_choose(const PlacementState& state, const Request&) {
    require_free_slot(state);
    for (Slot s = 1; s <= state.n(); ++s) {
        if (state.is_free(s)) return s;
    }
    return 0;  // unreachable
}

OnlineAlgorithm barycenter_algorithm() { return {"barycenter", barycenter_choose}; }
OnlineAlgorithm greedy_algorithm(TieRule tie) {
    if (tie == TieRule::Rightmost) {
        return {"greedy_right", [](const PlacementState& s, const Request& r) { return greedy_choose(s, r, TieRule::Rightmost); }};
    }
    return {"greedy", [](const PlacementState& s, const Request& r) { return greedy_choose(s, r); }};
}
OnlineAlgorithm first_fit_algorithm() { return {"first_fit", first_fit_choose}; }

OnlineAlgorithm scripted_algorithm(std::vector<Slot> script, std::string name) {
    return {std::move(name), [script = std::move(script)](const PlacementState& state, const Request&) {
                const auto k = state.placed_count();
                if (k >= script.size()) {
                    throw Error(ErrorCode::Protocol, "script exhausted at request " + std::to_string(k + 1));
                }
                return script[k];
            }};
}

const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names{"barycenter", "greedy", "greedy_right", "first_fit"};
    return names;
}

OnlineAlgorithm algorithm_by_name(const std::string& name) {
    if (name == "barycenter") return barycenter_algorithm();
    if (name == "greedy") return greedy_algorithm();
    if (name == "greedy_right") return greedy_algorithm(TieRule::Rightmost);
    if (name == "first_fit") return first_fit_algorithm();
    throw Error(ErrorCode::InvalidArgument, "unknown algorithm '" + name + "'");
}

Instance Trace::instance() const {
    Instance inst;
    inst.n = n;
    inst.regularity = regularity;
    inst.requests.reserve(steps.size());
    for (const auto& st : steps) inst.requests.push_back(st.request);
    return inst;
}

Assignment Trace::assignment() const {
    Assignment asg;
    asg.slot_of.reserve(steps.size());
    for (const auto& st : steps) asg.slot_of.push_back(st.slot);
    return asg;
}

TraceStep make_step(const PlacementState& before, const Request& r, Slot s, PlacementState& after) {
    after = before.apply(r, s);
    TraceStep step;
    step.request = r;
    step.slot = s;
    step.edge_edge = total_crossings(after);
    if (arrows_defined(after)) step.edge_arrow = edge_arrow_crossings(after, arrows(after));
    return step;
}

StaticSource::StaticSource(Instance inst, std::string name) : inst_(std::move(inst)), name_(std::move(name)) {}

std::optional<Request> StaticSource::next(const Trace& so_far) {
    const auto k = so_far.steps.size();
    if (k >= inst_.requests.size()) return std::nullopt;
    return inst_.requests[k];
}

Trace play(const Instance& inst, const OnlineAlgorithm& alg, const std::string& source_name) {
    if (auto v = validate_instance(inst); !v.empty()) {
        throw Error(ErrorCode::InvalidArgument, "invalid instance: " + v.front());
    }
    StaticSource src(inst, source_name);
    return play(src, alg);
}

Trace play(AdaptiveAdversary& source, const OnlineAlgorithm& alg) {
    Trace trace;
    trace.n = source.n();
    trace.regularity = source.regularity();
    trace.algorithm = alg.name;
    trace.source = source.name();
    trace.final_state = PlacementState(trace.n);
    while (auto req = source.next(trace)) {
        if (trace.final_state.full()) {
            throw Error(ErrorCode::Protocol, source.name() + " issued a request after all slots were used");
        }
        const Slot s = alg.choose(trace.final_state, *req);
        if (!trace.final_state.in_range(s) || !trace.final_state.is_free(s)) {
            throw Error(ErrorCode::Protocol,
                        alg.name + " chose illegal slot " + std::to_string(s) + " at step " +
                            std::to_string(trace.steps.size() + 1));
        }
        PlacementState next;
        trace.steps.push_back(make_step(trace.final_state, *req, s, next));
        trace.final_state = std::move(next);
    }
    return trace;
}

} // namespace oscm
