#include "oscm/model.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace oscm {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::OccupiedSlot: return "occupied-slot";
    case ErrorCode::SlotOutOfRange: return "slot-out-of-range";
    case ErrorCode::NoFreeSlot: return "no-free-slot";
    case ErrorCode::SameSlot: return "same-slot";
    case ErrorCode::Unclassifiable: return "unclassifiable-pair";
    case ErrorCode::NegativeAvoidable: return "negative-avoidable";
    case ErrorCode::DegreeOverflow: return "degree-overflow";
    case ErrorCode::ArrowLengthMismatch: return "arrow-length-mismatch";
    case ErrorCode::SizeLimit: return "size-limit";
    case ErrorCode::Protocol: return "protocol";
    case ErrorCode::Infeasible: return "infeasible";
    case ErrorCode::ReplayMismatch: return "replay-mismatch";
    case ErrorCode::Parse: return "parse";
    }
    return "unknown";
}

Request make_request(Vertex x, Vertex y) {
    if (x == y) {
        throw Error(ErrorCode::InvalidArgument,
                    "request endpoints must be distinct, got " + std::to_string(x) + " twice");
    }
    return x < y ? Request{x, y} : Request{y, x};
}

const char* to_string(Regularity r) noexcept {
    return r == Regularity::TwoRegular ? "two_regular" : "general";
}

std::optional<Regularity> regularity_from_string(const std::string& s) {
    if (s == "general") return Regularity::General;
    if (s == "two_regular") return Regularity::TwoRegular;
    return std::nullopt;
}

std::vector<std::string> validate_instance(const Instance& inst) {
    std::vector<std::string> out;
    if (inst.n < 1) {
        out.push_back("n must be positive, got " + std::to_string(inst.n));
        return out;
    }
    if (inst.requests.size() > static_cast<std::size_t>(inst.n)) {
        out.push_back("too many requests: " + std::to_string(inst.requests.size()) + " > n = " +
                      std::to_string(inst.n));
    }
    std::vector<int> count(static_cast<std::size_t>(inst.n) + 1, 0);
    for (std::size_t j = 0; j < inst.requests.size(); ++j) {
        const auto& r = inst.requests[j];
        const auto tag = "request " + std::to_string(j + 1) + " (" + std::to_string(r.a) + "," +
                         std::to_string(r.b) + ")";
        if (r.a >= r.b) out.push_back(tag + ": endpoints must satisfy a < b");
        bool in_range = true;
        for (Vertex v : {r.a, r.b}) {
            if (v < 1 || v > inst.n) {
                out.push_back(tag + ": vertex " + std::to_string(v) + " outside 1.." +
                              std::to_string(inst.n));
                in_range = false;
            }
        }
        if (in_range) {
            ++count[static_cast<std::size_t>(r.a)];
            if (r.a != r.b) ++count[static_cast<std::size_t>(r.b)];
        }
    }
    if (inst.regularity == Regularity::TwoRegular) {
        if (inst.requests.size() != static_cast<std::size_t>(inst.n)) {
            out.push_back("two_regular instance needs exactly n = " + std::to_string(inst.n) +
                          " requests, got " + std::to_string(inst.requests.size()));
        }
        for (int v = 1; v <= inst.n; ++v) {
            if (count[static_cast<std::size_t>(v)] != 2) {
                out.push_back("vertex " + std::to_string(v) + " appears " +
                              std::to_string(count[static_cast<std::size_t>(v)]) + " times");
            }
        }
    }
    return out;
}

PlacementState::PlacementState(int n) : n_(n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative slot count");
    slots_.resize(static_cast<std::size_t>(n));
    degree_.assign(static_cast<std::size_t>(n), 0);
}

bool PlacementState::is_free(Slot s) const { return !at(s).has_value(); }

const std::optional<Request>& PlacementState::at(Slot s) const {
    if (!in_range(s)) {
        throw Error(ErrorCode::SlotOutOfRange,
                    "slot " + std::to_string(s) + " outside 1.." + std::to_string(n_));
    }
    return slots_[static_cast<std::size_t>(s - 1)];
}

void PlacementState::check_vertex(Vertex v) const {
    if (v < 1 || v > n_) {
        throw Error(ErrorCode::InvalidArgument,
                    "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
    }
}

int PlacementState::degree(Vertex v) const {
    check_vertex(v);
    return degree_[static_cast<std::size_t>(v - 1)];
}

PlacementState PlacementState::apply(const Request& r, Slot s) const {
    if (!is_free(s)) {
        throw Error(ErrorCode::OccupiedSlot, "slot " + std::to_string(s) + " is already fulfilled");
    }
    if (r.a == r.b) throw Error(ErrorCode::InvalidArgument, "request with equal endpoints");
    check_vertex(r.a);
    check_vertex(r.b);
    PlacementState next = *this;
    next.slots_[static_cast<std::size_t>(s - 1)] = r;
    ++next.degree_[static_cast<std::size_t>(r.a - 1)];
    ++next.degree_[static_cast<std::size_t>(r.b - 1)];
    ++next.placed_count_;
    return next;
}

PlacementState PlacementState::without(Slot s) const {
    const auto& r = at(s);
    if (!r) throw Error(ErrorCode::InvalidArgument, "slot " + std::to_string(s) + " is free");
    PlacementState next = *this;
    --next.degree_[static_cast<std::size_t>(r->a - 1)];
    --next.degree_[static_cast<std::size_t>(r->b - 1)];
    next.slots_[static_cast<std::size_t>(s - 1)].reset();
    --next.placed_count_;
    return next;
}

std::vector<std::pair<Slot, Request>> PlacementState::placed() const {
    std::vector<std::pair<Slot, Request>> out;
    out.reserve(placed_count_);
    for (Slot s = 1; s <= n_; ++s) {
        if (const auto& r = slots_[static_cast<std::size_t>(s - 1)]) out.emplace_back(s, *r);
    }
    return out;
}

std::vector<Slot> free_slots(const PlacementState& state) {
    std::vector<Slot> out;
    out.reserve(state.free_count());
    for (Slot s = 1; s <= state.n(); ++s) {
        if (state.is_free(s)) out.push_back(s);
    }
    return out;
}

PlacementState state_from_assignment(const Instance& inst, const Assignment& asg) {
    if (asg.slot_of.size() != inst.requests.size()) {
        throw Error(ErrorCode::InvalidArgument, "assignment length does not match request count");
    }
    PlacementState state(inst.n);
    for (std::size_t j = 0; j < inst.requests.size(); ++j) {
        state = state.apply(inst.requests[j], asg.slot_of[j]);
    }
    return state;
}

Instance random_two_regular(int n, std::uint64_t seed) {
    if (n < 2) {
        throw Error(ErrorCode::InvalidArgument,
                    "random_two_regular needs n >= 2, got " + std::to_string(n));
    }
    std::mt19937_64 rng(seed);
    std::vector<Vertex> tokens;
    tokens.reserve(2 * static_cast<std::size_t>(n));
    for (Vertex v = 1; v <= n; ++v) {
        tokens.push_back(v);
        tokens.push_back(v);
    }
    for (;;) {
        std::shuffle(tokens.begin(), tokens.end(), rng);
        bool loop = false;
        for (std::size_t i = 0; i < tokens.size(); i += 2) {
            if (tokens[i] == tokens[i + 1]) {
                loop = true;
                break;
            }
        }
        if (!loop) break;
    }
    Instance inst;
    inst.n = n;
    inst.regularity = Regularity::TwoRegular;
    for (std::size_t i = 0; i < tokens.size(); i += 2) {
        inst.requests.push_back(make_request(tokens[i], tokens[i + 1]));
    }
    return inst;
}

} // namespace oscm
