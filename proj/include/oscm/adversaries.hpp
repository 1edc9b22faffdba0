#pragma once

// Request sources that force online algorithms into avoidable crossings.

#include <array>
#include <deque>
#include <string>
#include <vector>

#include "oscm/algorithms.hpp"
#include "oscm/model.hpp"

namespace oscm {

/// Path requests {1,2},...,{n-1,n}, then a duplicate of the path end that lies
/// farthest from the single slot the algorithm left open.
class Thm1Adversary final : public AdaptiveAdversary {
public:
    explicit Thm1Adversary(int n);

    std::string name() const override { return "thm1"; }
    int n() const override { return n_; }
    Regularity regularity() const override { return Regularity::General; }
    std::optional<Request> next(const Trace& so_far) override;

    /// Final request for a given open slot.
    Request final_request(Slot open_slot) const;

private:
    int n_;
};

enum class RoundCase { Left, Right, Endgame };

const char* to_string(RoundCase c) noexcept;

/// One group of requests issued together by the five-slot adversary.
struct RoundBlock {
    RoundCase kind = RoundCase::Left;
    std::size_t first_step = 0;  // 0-based index into the trace steps
    std::size_t size = 0;
    std::array<Slot, 5> slots{};        // five leftmost free slots at round start
    std::array<Vertex, 5> vertices{};   // five leftmost edge-free vertices at round start
};

/// Five-slot adaptive adversary for 2-regular instances. Plays rounds on the
/// five leftmost free slots and edge-free vertices while more than six slots
/// are free, then completes the instance with endgame_fill.
///
/// Round: ask {v3,v4}. If it lands on s3 or further left, follow with
/// {v1,v2},{v2,v4},{v1,v3} (v5 stays edge-free). Otherwise follow with
/// {v4,v5},{v3,v5},{v1,v2},{v1,v2}.
class Thm2Adversary final : public AdaptiveAdversary {
public:
    explicit Thm2Adversary(int rounds);

    static int slots_for_rounds(int rounds) { return 5 * rounds + 6; }

    std::string name() const override { return "thm2"; }
    int n() const override { return n_; }
    Regularity regularity() const override { return Regularity::TwoRegular; }
    std::optional<Request> next(const Trace& so_far) override;

    const std::vector<RoundBlock>& blocks() const noexcept { return blocks_; }

private:
    Request emit(Request r);

    int n_;
    std::deque<Request> pending_;
    std::vector<RoundBlock> blocks_;
    std::size_t emitted_ = 0;
    bool awaiting_probe_ = false;
    bool endgame_ = false;
};

/// Completes a partial 2-regular instance. `tokens` lists every vertex once per
/// missing edge (ascending); `free_slots` is the number of slots still open.
/// Produces a chain over consecutive tokens closed by one request joining the
/// extremes; falls back to pairing token i with token i + r when the chain
/// would form a self-loop. Throws Infeasible when no loop-free pairing exists.
std::vector<Request> endgame_fill(std::vector<Vertex> tokens, std::size_t free_slots);
std::vector<Request> endgame_fill(const PlacementState& state);

/// Duplicated pairs from right to left: {n-1,n},{n-1,n},{n-3,n-2},{n-3,n-2},...,{1,2},{1,2}.
Instance fig8_instance(int n);

/// Requests relabelled onto vertices 1..k by rank, as a standalone instance.
Instance block_instance(const std::vector<Request>& requests);

} // namespace oscm
