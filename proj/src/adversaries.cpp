#include "oscm/adversaries.hpp"

#include <algorithm>
#include <map>

#include "oscm/propagation.hpp"

namespace oscm {

Thm1Adversary::Thm1Adversary(int n) : n_(n) {
    if (n < 4) throw Error(ErrorCode::InvalidArgument, "thm1 adversary needs n >= 4");
}

Request Thm1Adversary::final_request(Slot open_slot) const {
    const int half = (n_ + 1) / 2;
    return open_slot <= half ? Request{n_ - 1, n_} : Request{1, 2};
}

std::optional<Request> Thm1Adversary::next(const Trace& so_far) {
    const auto k = so_far.steps.size();
    for (std::size_t i = 0; i < k && i + 1 < static_cast<std::size_t>(n_); ++i) {
        const Request expected{static_cast<Vertex>(i + 1), static_cast<Vertex>(i + 2)};
        if (so_far.steps[i].request != expected) {
            throw Error(ErrorCode::Protocol, "trace does not match the thm1 path at step " + std::to_string(i + 1));
        }
    }
    if (k + 1 < static_cast<std::size_t>(n_)) {
        return Request{static_cast<Vertex>(k + 1), static_cast<Vertex>(k + 2)};
    }
    if (k + 1 == static_cast<std::size_t>(n_)) {
        const auto open = free_slots(so_far.final_state);
        if (open.size() != 1) {
            throw Error(ErrorCode::Protocol, "expected exactly one free slot before the last request, found " +
                                                 std::to_string(open.size()));
        }
        return final_request(open.front());
    }
    return std::nullopt;
}

const char* to_string(RoundCase c) noexcept {
    switch (c) {
    case RoundCase::Left: return "left";
    case RoundCase::Right: return "right";
    case RoundCase::Endgame: return "endgame";
    }
    return "?";
}

Thm2Adversary::Thm2Adversary(int rounds) : n_(slots_for_rounds(rounds)) {
    if (rounds < 1) throw Error(ErrorCode::InvalidArgument, "thm2 adversary needs rounds >= 1");
}

Request Thm2Adversary::emit(Request r) {
    ++emitted_;
    return r;
}

std::optional<Request> Thm2Adversary::next(const Trace& so_far) {
    if (so_far.steps.size() != emitted_) {
        throw Error(ErrorCode::Protocol, "thm2 adversary saw " + std::to_string(so_far.steps.size()) +
                                             " placements but issued " + std::to_string(emitted_) + " requests");
    }
    const PlacementState& state = so_far.final_state;

    if (awaiting_probe_) {
        awaiting_probe_ = false;
        RoundBlock& block = blocks_.back();
        const auto& v = block.vertices;
        const Slot placed = so_far.steps.back().slot;
        if (placed <= block.slots[2]) {
            block.kind = RoundCase::Left;
            pending_ = {{v[0], v[1]}, {v[1], v[3]}, {v[0], v[2]}};
            block.size = 4;
        } else {
            block.kind = RoundCase::Right;
            pending_ = {{v[3], v[4]}, {v[2], v[4]}, {v[0], v[1]}, {v[0], v[1]}};
            block.size = 5;
        }
    }

    if (!pending_.empty()) {
        const Request r = pending_.front();
        pending_.pop_front();
        return emit(r);
    }
    if (endgame_) return std::nullopt;

    const auto open = free_slots(state);
    if (open.size() > 6) {
        RoundBlock block;
        block.first_step = so_far.steps.size();
        std::copy_n(open.begin(), 5, block.slots.begin());
        std::size_t found = 0;
        for (Vertex u = 1; u <= state.n() && found < 5; ++u) {
            if (state.degree(u) == 0) block.vertices[found++] = u;
        }
        if (found < 5) throw Error(ErrorCode::Protocol, "fewer than five edge-free vertices remain");
        blocks_.push_back(block);
        awaiting_probe_ = true;
        return emit({block.vertices[2], block.vertices[3]});
    }

    endgame_ = true;
    const auto fill = endgame_fill(state);
    if (fill.empty()) return std::nullopt;
    RoundBlock block;
    block.kind = RoundCase::Endgame;
    block.first_step = so_far.steps.size();
    block.size = fill.size();
    blocks_.push_back(block);
    pending_.assign(fill.begin() + 1, fill.end());
    return emit(fill.front());
}

std::vector<Request> endgame_fill(std::vector<Vertex> tokens, std::size_t free_slots) {
    if (free_slots > 6) {
        throw Error(ErrorCode::InvalidArgument,
                    "endgame fill expects at most 6 free slots, got " + std::to_string(free_slots));
    }
    if (tokens.size() != 2 * free_slots) {
        throw Error(ErrorCode::Infeasible, "deficit count " + std::to_string(tokens.size()) +
                                               " does not match 2 x " + std::to_string(free_slots) +
                                               " free slots");
    }
    std::sort(tokens.begin(), tokens.end());
    const std::size_t r = free_slots;
    if (r == 0) return {};

    auto loop_free = [](const std::vector<std::pair<Vertex, Vertex>>& pairs) {
        return std::none_of(pairs.begin(), pairs.end(), [](const auto& p) { return p.first == p.second; });
    };

    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i = 1; i + 1 < 2 * r; i += 2) pairs.emplace_back(tokens[i], tokens[i + 1]);
    pairs.emplace_back(tokens.front(), tokens.back());
    if (!loop_free(pairs)) {
        pairs.clear();
        for (std::size_t i = 0; i < r; ++i) pairs.emplace_back(tokens[i], tokens[i + r]);
    }
    if (!loop_free(pairs)) {
        throw Error(ErrorCode::Infeasible, "remaining degree deficits cannot be paired without a self-loop");
    }
    std::vector<Request> out;
    out.reserve(pairs.size());
    for (const auto& [x, y] : pairs) out.push_back(make_request(x, y));
    return out;
}

std::vector<Request> endgame_fill(const PlacementState& state) {
    return endgame_fill(unfulfilled_vertices(state), state.free_count());
}

Instance fig8_instance(int n) {
    if (n < 4 || n % 2 != 0) {
        throw Error(ErrorCode::InvalidArgument, "fig8 instance needs an even n >= 4, got " + std::to_string(n));
    }
    Instance inst;
    inst.n = n;
    inst.regularity = Regularity::TwoRegular;
    for (Vertex hi = n; hi >= 2; hi -= 2) {
        inst.requests.push_back({hi - 1, hi});
        inst.requests.push_back({hi - 1, hi});
    }
    return inst;
}

Instance block_instance(const std::vector<Request>& requests) {
    std::map<Vertex, Vertex> rank;
    for (const auto& r : requests) {
        rank[r.a] = 0;
        rank[r.b] = 0;
    }
    Vertex next = 1;
    for (auto& [v, label] : rank) label = next++;
    Instance inst;
    inst.n = static_cast<int>(std::max(requests.size(), rank.size()));
    inst.regularity = Regularity::General;
    for (const auto& r : requests) inst.requests.push_back({rank[r.a], rank[r.b]});
    return inst;
}

} // namespace oscm
