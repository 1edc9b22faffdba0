#include "oscm/offline.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

#include "oscm/crossings.hpp"

namespace oscm {

int brute_force_max_n() {
    if (const char* env = std::getenv("OSCM_BRUTE_FORCE_MAX_N")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 1000) return static_cast<int>(v);
    }
    return kDefaultBruteForceMaxN;
}

namespace {

class Search {
public:
    explicit Search(const Instance& inst) : m_(inst.requests.size()), n_(inst.n) {
        left_cost_.assign(m_ * m_, 0);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < m_; ++j) {
                if (i != j) left_cost_[i * m_ + j] = pair_crossings(inst.requests[i], 1, inst.requests[j], 2);
            }
        }
        // rest_min_[j]: sum of pairwise minima over pairs whose later request index is >= j.
        rest_min_.assign(m_ + 1, 0);
        for (std::size_t k = m_; k-- > 0;) {
            std::int64_t row = 0;
            for (std::size_t i = 0; i < k; ++i) row += std::min(cost(i, k), cost(k, i));
            rest_min_[k] = rest_min_[k + 1] + row;
        }
        used_.assign(static_cast<std::size_t>(n_) + 1, false);
        slot_.assign(m_, 0);
    }

    OptResult run(bool prune, std::int64_t upper) {
        prune_ = prune;
        bound_ = upper;
        dfs(0, 0);
        return {best_, Assignment{best_slots_}};
    }

private:
    // Crossings between requests i and j when i sits left of j.
    std::int64_t cost(std::size_t i, std::size_t j) const { return left_cost_[i * m_ + j]; }

    void dfs(std::size_t j, std::int64_t partial) {
        if (j == m_) {
            if (partial < best_) {
                best_ = partial;
                best_slots_ = slot_;
                bound_ = std::min(bound_, best_);
            }
            return;
        }
        for (Slot s = 1; s <= n_; ++s) {
            if (used_[static_cast<std::size_t>(s)]) continue;
            std::int64_t add = 0;
            for (std::size_t i = 0; i < j; ++i) add += slot_[i] < s ? cost(i, j) : cost(j, i);
            const std::int64_t next = partial + add;
            if (prune_ && next + rest_min_[j + 1] > bound_) continue;
            used_[static_cast<std::size_t>(s)] = true;
            slot_[j] = s;
            dfs(j + 1, next);
            used_[static_cast<std::size_t>(s)] = false;
        }
    }

    std::size_t m_;
    int n_;
    std::vector<std::int64_t> left_cost_;
    std::vector<std::int64_t> rest_min_;
    std::vector<bool> used_;
    std::vector<Slot> slot_;
    bool prune_ = true;
    std::int64_t bound_ = std::numeric_limits<std::int64_t>::max();
    std::int64_t best_ = std::numeric_limits<std::int64_t>::max();
    std::vector<Slot> best_slots_;
};

} // namespace

OptResult brute_force_opt(const Instance& inst, const BruteForceOptions& options) {
    if (auto v = validate_instance(inst); !v.empty()) {
        throw Error(ErrorCode::InvalidArgument, "invalid instance: " + v.front());
    }
    if (inst.requests.size() != static_cast<std::size_t>(inst.n)) {
        throw Error(ErrorCode::InvalidArgument, "brute force needs a complete instance (n requests)");
    }
    if (inst.n > options.max_n) {
        throw Error(ErrorCode::SizeLimit, "brute force limited to n <= " + std::to_string(options.max_n) +
                                              ", got n = " + std::to_string(inst.n));
    }
    Search search(inst);
    const std::int64_t upper =
        options.prune ? sorted_order_value(inst) : std::numeric_limits<std::int64_t>::max();
    return search.run(options.prune, upper);
}

Assignment sorted_order_assignment(const Instance& inst) {
    std::vector<std::size_t> order(inst.requests.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return inst.requests[x] < inst.requests[y]; });
    Assignment asg;
    asg.slot_of.assign(inst.requests.size(), 0);
    for (std::size_t pos = 0; pos < order.size(); ++pos) asg.slot_of[order[pos]] = static_cast<Slot>(pos + 1);
    return asg;
}

std::int64_t sorted_order_value(const Instance& inst) {
    return total_crossings(inst, sorted_order_assignment(inst));
}

CertifiedOpt certified_opt(const Instance& inst) {
    CertifiedOpt out;
    out.value = sorted_order_value(inst);
    out.lower_bound = pairwise_lower_bound(inst);
    out.exact = out.value == out.lower_bound;
    return out;
}

} // namespace oscm
