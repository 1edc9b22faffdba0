#pragma once

// Online algorithms for the slotted game, the request-source contract, and the
// game loop that records a Trace.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "oscm/model.hpp"

namespace oscm {

/// Deterministic decision rule: given the current state and the arriving
/// request, return a free slot.
struct OnlineAlgorithm {
    std::string name;
    std::function<Slot(const PlacementState&, const Request&)> choose;
};

/// Slot nearest to floor((a+b)/2), leftmost on a distance tie.
Slot barycenter_choose(const PlacementState& state, const Request& request);

/// Edge-edge plus edge-arrow crossings of the state after placing `request` at `slot`.
std::int64_t greedy_score(const PlacementState& state, const Request& request, Slot slot);

enum class TieRule { Leftmost, Rightmost };

/// Free slot with the minimum greedy_score; among equal scores the leftmost
/// (ascending scan, strict improvement) or the rightmost.
Slot greedy_choose(const PlacementState& state, const Request& request, TieRule tie = TieRule::Leftmost);

/// Lowest-index free slot.
Slot first_fit_choose(const PlacementState& state, const Request& request);

OnlineAlgorithm barycenter_algorithm();
OnlineAlgorithm greedy_algorithm(TieRule tie = TieRule::Leftmost);
OnlineAlgorithm first_fit_algorithm();

/// Plays the k-th request into script[k]. For tests and adversary checks.
OnlineAlgorithm scripted_algorithm(std::vector<Slot> script, std::string name = "scripted");

/// One of algorithm_names(); throws InvalidArgument otherwise.
OnlineAlgorithm algorithm_by_name(const std::string& name);
const std::vector<std::string>& algorithm_names();

struct TraceStep {
    Request request;
    Slot slot = 0;
    std::int64_t edge_edge = 0;                // total edge-edge crossings after the step
    std::optional<std::int64_t> edge_arrow;    // absent when arrows are undefined for the state

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct Trace {
    int n = 0;
    Regularity regularity = Regularity::General;
    std::string algorithm;
    std::string source;
    std::vector<TraceStep> steps;
    PlacementState final_state;

    /// The requests seen so far, in arrival order.
    Instance instance() const;
    /// Slot chosen for each request, in arrival order.
    Assignment assignment() const;

    friend bool operator==(const Trace&, const Trace&) = default;
};

/// Builds the step record for placing `r` at `s` in `before`; returns the new state via `after`.
TraceStep make_step(const PlacementState& before, const Request& r, Slot s, PlacementState& after);

/// A request source that may react to the placements observed so far.
class AdaptiveAdversary {
public:
    virtual ~AdaptiveAdversary() = default;

    virtual std::string name() const = 0;
    virtual int n() const = 0;
    virtual Regularity regularity() const = 0;

    /// Next request, or nullopt once the sequence is complete.
    virtual std::optional<Request> next(const Trace& so_far) = 0;
};

/// Wraps a fixed instance as a (non-adaptive) request source.
class StaticSource final : public AdaptiveAdversary {
public:
    explicit StaticSource(Instance inst, std::string name = "instance");

    std::string name() const override { return name_; }
    int n() const override { return inst_.n; }
    Regularity regularity() const override { return inst_.regularity; }
    std::optional<Request> next(const Trace& so_far) override;

private:
    Instance inst_;
    std::string name_;
};

Trace play(const Instance& inst, const OnlineAlgorithm& alg, const std::string& source_name = "instance");
Trace play(AdaptiveAdversary& source, const OnlineAlgorithm& alg);

} // namespace oscm
