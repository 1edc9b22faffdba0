#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "oscm/model.hpp"

namespace oscm {

/// A straight segment from a bottom vertex to a top slot.
struct Edge {
    Vertex v = 0;
    Slot s = 0;
};

/// Two segments cross iff their vertex order and slot order disagree.
/// Segments sharing a vertex or a slot never cross.
constexpr bool edges_cross(Edge e1, Edge e2) noexcept {
    return static_cast<long long>(e1.v - e2.v) * static_cast<long long>(e1.s - e2.s) < 0;
}

/// Crossings among the four edge pairs of two requests placed at distinct slots.
int pair_crossings(const Request& r1, Slot s1, const Request& r2, Slot s2);

/// Sum of pair_crossings over all unordered pairs of placed requests.
std::int64_t total_crossings(const PlacementState& state);
std::int64_t total_crossings(const Instance& inst, const Assignment& asg);

enum class PairKind { OneOne, TwoOne, ThreeZero, ThreeOne, FourZero, TwoTwo };

inline constexpr std::array<PairKind, 6> all_pair_kinds{PairKind::OneOne,   PairKind::TwoOne,
                                                        PairKind::ThreeZero, PairKind::ThreeOne,
                                                        PairKind::FourZero, PairKind::TwoTwo};

const char* to_string(PairKind k) noexcept;

/// Crossings of a request pair in its current slot order and in the swapped order.
struct PairCrossKind {
    PairKind kind = PairKind::OneOne;
    int placed_count = 0;
    int swapped_count = 0;

    int unavoidable() const noexcept { return placed_count < swapped_count ? placed_count : swapped_count; }
    int avoidable() const noexcept { return placed_count - unavoidable(); }

    friend bool operator==(const PairCrossKind&, const PairCrossKind&) = default;
};

/// Maps the unordered count pair onto the six-way taxonomy; throws Unclassifiable otherwise.
PairCrossKind classify_pair(const Request& r1, Slot s1, const Request& r2, Slot s2);

struct CrossingSplit {
    std::int64_t unavoidable = 0;
    std::int64_t avoidable = 0;

    friend bool operator==(const CrossingSplit&, const CrossingSplit&) = default;
};

/// unavoidable = opt_total, avoidable = alg_total - opt_total.
CrossingSplit avoidable_split(std::int64_t alg_total, std::int64_t opt_total);

/// Sum over all request pairs of min(crossings in either relative order):
/// a lower bound on the crossings of any assignment.
std::int64_t pairwise_lower_bound(const Instance& inst);

/// True iff one of the two requests dominates the other endpoint-wise
/// (x1 <= y1 and x2 <= y2 for some naming). Un-inverting such a pair never adds crossings.
bool comparable(const Request& x, const Request& y) noexcept;

} // namespace oscm
