#include "oscm/propagation.hpp"

#include <algorithm>

namespace oscm {

std::vector<Vertex> unfulfilled_vertices(const PlacementState& state) {
    std::vector<Vertex> out;
    out.reserve(2 * state.free_count());
    for (Vertex v = 1; v <= state.n(); ++v) {
        const int d = state.degree(v);
        if (d > 2) {
            throw Error(ErrorCode::DegreeOverflow,
                        "vertex " + std::to_string(v) + " has degree " + std::to_string(d));
        }
        for (int k = d; k < 2; ++k) out.push_back(v);
    }
    return out;
}

std::vector<Slot> unfulfilled_slots(const PlacementState& state) {
    std::vector<Slot> out;
    out.reserve(2 * state.free_count());
    for (Slot s = 1; s <= state.n(); ++s) {
        if (state.is_free(s)) {
            out.push_back(s);
            out.push_back(s);
        }
    }
    return out;
}

PropagationArrowSet arrows(const PlacementState& state) {
    const auto lv = unfulfilled_vertices(state);
    const auto ls = unfulfilled_slots(state);
    if (lv.size() != ls.size()) {
        throw Error(ErrorCode::ArrowLengthMismatch, "L_V has " + std::to_string(lv.size()) +
                                                        " entries but L_S has " + std::to_string(ls.size()));
    }
    PropagationArrowSet out;
    out.arrows.reserve(lv.size());
    for (std::size_t i = 0; i < lv.size(); ++i) out.arrows.push_back({lv[i], ls[i]});
    return out;
}

bool arrows_defined(const PlacementState& state) noexcept {
    std::size_t deficit = 0;
    for (int d : state.degrees()) {
        if (d > 2) return false;
        deficit += static_cast<std::size_t>(2 - d);
    }
    return deficit == 2 * state.free_count();
}

std::int64_t edge_arrow_crossings(const PlacementState& state, const PropagationArrowSet& set) {
    std::int64_t total = 0;
    for (const auto& [s, r] : state.placed()) {
        for (const Arrow& a : set.arrows) {
            total += edges_cross({r.a, s}, a) ? 1 : 0;
            total += edges_cross({r.b, s}, a) ? 1 : 0;
        }
    }
    return total;
}

std::int64_t arrow_arrow_crossings(const PropagationArrowSet& set) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < set.arrows.size(); ++i) {
        for (std::size_t j = i + 1; j < set.arrows.size(); ++j) {
            total += edges_cross(set.arrows[i], set.arrows[j]) ? 1 : 0;
        }
    }
    return total;
}

const char* to_string(DoubleCrossFinding::Shape s) noexcept {
    switch (s) {
    case DoubleCrossFinding::Shape::SameVertex: return "same-vertex";
    case DoubleCrossFinding::Shape::SplitWithSecondArrow: return "split-with-second-arrow";
    case DoubleCrossFinding::Shape::SplitSingle: return "split-single";
    }
    return "?";
}

std::vector<DoubleCrossFinding> audit_no_double_cross(const PlacementState& state) {
    const auto set = arrows(state);
    std::vector<DoubleCrossFinding> out;
    for (const auto& [s1, r] : state.placed()) {
        // Arrows into each free slot are contiguous in the list, two per slot.
        for (std::size_t i = 0; i + 1 < set.arrows.size(); i += 2) {
            const Arrow& p = set.arrows[i];
            const Arrow& q = set.arrows[i + 1];
            const Slot s2 = p.s;
            auto crosses_both = [&](const Arrow& a) {
                return edges_cross(a, {r.a, s1}) && edges_cross(a, {r.b, s1});
            };
            if (!crosses_both(p) || !crosses_both(q)) continue;

            DoubleCrossFinding f;
            f.fulfilled = s1;
            f.target = s2;
            const bool rightward = s2 > s1;
            f.near_vertex = rightward ? q.v : p.v;
            f.far_vertex = rightward ? p.v : q.v;
            if (p.v == q.v) {
                f.shape = DoubleCrossFinding::Shape::SameVertex;
            } else {
                // Does the near vertex send its other arrow further away from s1?
                const auto has_other = std::any_of(set.arrows.begin(), set.arrows.end(), [&](const Arrow& a) {
                    return a.v == f.near_vertex && (rightward ? a.s > s2 : a.s < s2);
                });
                f.shape = has_other ? DoubleCrossFinding::Shape::SplitWithSecondArrow
                                    : DoubleCrossFinding::Shape::SplitSingle;
            }
            out.push_back(f);
        }
    }
    return out;
}

EquatorFlow equator_flow(const PlacementState& state, const PropagationArrowSet& set, int vertex_cut,
                         int slot_cut) {
    EquatorFlow f;
    auto tally = [&](Vertex v, Slot s, std::int64_t& rl, std::int64_t& lr) {
        if (v > vertex_cut && s <= slot_cut) ++rl;
        if (v <= vertex_cut && s > slot_cut) ++lr;
    };
    for (const auto& [s, r] : state.placed()) {
        tally(r.a, s, f.edges_right_to_left, f.edges_left_to_right);
        tally(r.b, s, f.edges_right_to_left, f.edges_left_to_right);
    }
    for (const Arrow& a : set.arrows) tally(a.v, a.s, f.arrows_right_to_left, f.arrows_left_to_right);
    return f;
}

std::vector<int> audit_equator(const PlacementState& state) {
    const auto set = arrows(state);
    std::vector<int> out;
    for (int i = 0; i <= state.n(); ++i) {
        if (equator_flow(state, set, i, i).imbalance() != 0) out.push_back(i);
    }
    return out;
}

} // namespace oscm
