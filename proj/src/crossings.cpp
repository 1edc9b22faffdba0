#include "oscm/crossings.hpp"

#include <algorithm>

namespace oscm {

int pair_crossings(const Request& r1, Slot s1, const Request& r2, Slot s2) {
    if (s1 == s2) {
        throw Error(ErrorCode::SameSlot, "two requests cannot share slot " + std::to_string(s1));
    }
    int count = 0;
    for (Vertex u : {r1.a, r1.b}) {
        for (Vertex w : {r2.a, r2.b}) {
            if (edges_cross({u, s1}, {w, s2})) ++count;
        }
    }
    return count;
}

std::int64_t total_crossings(const PlacementState& state) {
    const auto placed = state.placed();
    std::int64_t total = 0;
    for (std::size_t i = 0; i < placed.size(); ++i) {
        for (std::size_t j = i + 1; j < placed.size(); ++j) {
            total += pair_crossings(placed[i].second, placed[i].first, placed[j].second, placed[j].first);
        }
    }
    return total;
}

std::int64_t total_crossings(const Instance& inst, const Assignment& asg) {
    if (asg.slot_of.size() != inst.requests.size()) {
        throw Error(ErrorCode::InvalidArgument, "assignment length does not match request count");
    }
    std::int64_t total = 0;
    for (std::size_t i = 0; i < inst.requests.size(); ++i) {
        for (std::size_t j = i + 1; j < inst.requests.size(); ++j) {
            total += pair_crossings(inst.requests[i], asg.slot_of[i], inst.requests[j], asg.slot_of[j]);
        }
    }
    return total;
}

const char* to_string(PairKind k) noexcept {
    switch (k) {
    case PairKind::OneOne: return "1-1";
    case PairKind::TwoOne: return "2-1";
    case PairKind::ThreeZero: return "3-0";
    case PairKind::ThreeOne: return "3-1";
    case PairKind::FourZero: return "4-0";
    case PairKind::TwoTwo: return "2-2";
    }
    return "?";
}

PairCrossKind classify_pair(const Request& r1, Slot s1, const Request& r2, Slot s2) {
    PairCrossKind out;
    out.placed_count = pair_crossings(r1, s1, r2, s2);
    out.swapped_count = pair_crossings(r1, s2, r2, s1);
    const int hi = std::max(out.placed_count, out.swapped_count);
    const int lo = std::min(out.placed_count, out.swapped_count);
    if (hi == 1 && lo == 1) out.kind = PairKind::OneOne;
    else if (hi == 2 && lo == 1) out.kind = PairKind::TwoOne;
    else if (hi == 3 && lo == 0) out.kind = PairKind::ThreeZero;
    else if (hi == 3 && lo == 1) out.kind = PairKind::ThreeOne;
    else if (hi == 4 && lo == 0) out.kind = PairKind::FourZero;
    else if (hi == 2 && lo == 2) out.kind = PairKind::TwoTwo;
    else {
        throw Error(ErrorCode::Unclassifiable, "pair crossing counts " + std::to_string(out.placed_count) +
                                                   "/" + std::to_string(out.swapped_count) +
                                                   " match no known pair type");
    }
    return out;
}

CrossingSplit avoidable_split(std::int64_t alg_total, std::int64_t opt_total) {
    if (opt_total < 0 || alg_total < opt_total) {
        throw Error(ErrorCode::NegativeAvoidable,
                    "algorithm total " + std::to_string(alg_total) + " below optimum " +
                        std::to_string(opt_total));
    }
    return {opt_total, alg_total - opt_total};
}

std::int64_t pairwise_lower_bound(const Instance& inst) {
    std::int64_t lb = 0;
    for (std::size_t i = 0; i < inst.requests.size(); ++i) {
        for (std::size_t j = i + 1; j < inst.requests.size(); ++j) {
            lb += std::min(pair_crossings(inst.requests[i], 1, inst.requests[j], 2),
                           pair_crossings(inst.requests[i], 2, inst.requests[j], 1));
        }
    }
    return lb;
}

bool comparable(const Request& x, const Request& y) noexcept {
    return (x.a <= y.a && x.b <= y.b) || (y.a <= x.a && y.b <= x.b);
}

} // namespace oscm
