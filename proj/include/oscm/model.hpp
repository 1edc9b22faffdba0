#pragma once

// Instances, requests and placement states for slotted online one-sided
// crossing minimization with pair requests. All indices are 1-based: slots
// s_1..s_n on the top line, vertices v_1..v_n on the bottom line.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oscm/error.hpp"

namespace oscm {

using Vertex = int;
using Slot = int;

/// A pair request {a, b}, stored canonically with a < b.
struct Request {
    Vertex a = 0;
    Vertex b = 0;

    friend bool operator==(const Request&, const Request&) = default;
    friend auto operator<=>(const Request&, const Request&) = default;
};

/// Builds a canonical request from two distinct vertices given in any order.
/// Throws InvalidArgument on equal endpoints.
Request make_request(Vertex x, Vertex y);

enum class Regularity { General, TwoRegular };

const char* to_string(Regularity r) noexcept;
std::optional<Regularity> regularity_from_string(const std::string& s);

struct Instance {
    int n = 0;
    std::vector<Request> requests;
    Regularity regularity = Regularity::General;

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Lists every violated invariant; an empty result means the instance is valid.
std::vector<std::string> validate_instance(const Instance& inst);

inline bool is_valid(const Instance& inst) { return validate_instance(inst).empty(); }

/// request index -> slot, both 1-based in meaning; slot_of[j] is the slot of requests[j].
struct Assignment {
    std::vector<Slot> slot_of;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Partial injective map from slots to requests. Value type: every mutation
/// returns a new state.
class PlacementState {
public:
    PlacementState() = default;
    explicit PlacementState(int n);

    int n() const noexcept { return n_; }
    std::size_t placed_count() const noexcept { return placed_count_; }
    std::size_t free_count() const noexcept { return static_cast<std::size_t>(n_) - placed_count_; }
    bool full() const noexcept { return free_count() == 0; }

    bool in_range(Slot s) const noexcept { return s >= 1 && s <= n_; }
    bool is_free(Slot s) const;
    const std::optional<Request>& at(Slot s) const;

    /// Number of placed requests containing v.
    int degree(Vertex v) const;
    const std::vector<int>& degrees() const noexcept { return degree_; }

    /// Returns a copy with `r` placed at `s`. Throws SlotOutOfRange / OccupiedSlot.
    [[nodiscard]] PlacementState apply(const Request& r, Slot s) const;

    /// Returns a copy with slot `s` emptied again. Throws if `s` is free.
    [[nodiscard]] PlacementState without(Slot s) const;

    /// (slot, request) for every fulfilled slot, ascending by slot.
    std::vector<std::pair<Slot, Request>> placed() const;

    friend bool operator==(const PlacementState&, const PlacementState&) = default;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<std::optional<Request>> slots_;  // index 0 = s_1
    std::vector<int> degree_;                    // index 0 = v_1
    std::size_t placed_count_ = 0;
};

/// Ascending list of slots with no placed request.
std::vector<Slot> free_slots(const PlacementState& state);

/// Places the requests of `inst` according to `asg`.
PlacementState state_from_assignment(const Instance& inst, const Assignment& asg);

/// Random 2-regular instance: shuffles the token multiset {1,1,...,n,n}, pairs
/// consecutive tokens and reshuffles on any self-loop. Deterministic per seed.
Instance random_two_regular(int n, std::uint64_t seed);

} // namespace oscm
