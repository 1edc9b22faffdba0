#pragma once

// Propagation arrows: the position-wise matching of remaining vertex degree
// deficits (L_V) with free slot capacity (L_S). Arrows are always recomputed
// from the state, never shifted incrementally.

#include <cstdint>
#include <vector>

#include "oscm/crossings.hpp"
#include "oscm/model.hpp"

namespace oscm {

using Arrow = Edge;

struct PropagationArrowSet {
    std::vector<Arrow> arrows;

    std::size_t size() const noexcept { return arrows.size(); }
    bool empty() const noexcept { return arrows.empty(); }
};

/// L_V: every vertex repeated (2 - degree) times, ascending. Throws DegreeOverflow.
std::vector<Vertex> unfulfilled_vertices(const PlacementState& state);

/// L_S: every free slot repeated twice, ascending.
std::vector<Slot> unfulfilled_slots(const PlacementState& state);

/// Zips L_V and L_S. Throws ArrowLengthMismatch if their lengths differ.
PropagationArrowSet arrows(const PlacementState& state);

/// Non-throwing probe: true iff arrows(state) would succeed.
bool arrows_defined(const PlacementState& state) noexcept;

/// Crossings between placed edges and the given arrows.
std::int64_t edge_arrow_crossings(const PlacementState& state, const PropagationArrowSet& set);

/// Crossings among the arrows themselves (zero by construction; exposed for checks).
std::int64_t arrow_arrow_crossings(const PropagationArrowSet& set);

/// Two arrows into the same free slot `target`, each crossing both edges of the
/// fulfilled slot `fulfilled`.
struct DoubleCrossFinding {
    enum class Shape { SameVertex, SplitWithSecondArrow, SplitSingle };

    Slot fulfilled = 0;
    Slot target = 0;
    Vertex near_vertex = 0;  // arrow source closest to the fulfilled request
    Vertex far_vertex = 0;
    Shape shape = Shape::SameVertex;
};

const char* to_string(DoubleCrossFinding::Shape s) noexcept;

/// Empty result means no forbidden double-cross configuration exists.
std::vector<DoubleCrossFinding> audit_no_double_cross(const PlacementState& state);

/// Edge and arrow flow across the cut separating slots <= slot_cut / vertices <= vertex_cut.
struct EquatorFlow {
    std::int64_t edges_right_to_left = 0;   // vertex > vertex_cut, slot <= slot_cut  (E_AD)
    std::int64_t arrows_right_to_left = 0;  // P_AD
    std::int64_t edges_left_to_right = 0;   // vertex <= vertex_cut, slot > slot_cut  (E_BC)
    std::int64_t arrows_left_to_right = 0;  // P_BC

    std::int64_t imbalance() const noexcept {
        return edges_right_to_left + arrows_right_to_left - edges_left_to_right - arrows_left_to_right;
    }
};

EquatorFlow equator_flow(const PlacementState& state, const PropagationArrowSet& set, int vertex_cut,
                         int slot_cut);

/// Cut indices i in 0..n where the flows across (i, i) are unbalanced. Empty means ok.
std::vector<int> audit_equator(const PlacementState& state);

} // namespace oscm
