#pragma once

#include <cstdint>

#include "oscm/model.hpp"

namespace oscm {

struct OptResult {
    std::int64_t opt_crossings = 0;
    Assignment witness;  // lexicographically smallest minimizing slot vector
};

inline constexpr int kDefaultBruteForceMaxN = 9;

/// Bound from OSCM_BRUTE_FORCE_MAX_N when set to a positive integer, else the default.
int brute_force_max_n();

struct BruteForceOptions {
    int max_n = brute_force_max_n();
    bool prune = true;  // branch and bound on pairwise minima; false = plain enumeration
};

/// Exact optimum over all request-to-slot bijections. Requires a complete
/// instance and n <= options.max_n (SizeLimit otherwise).
OptResult brute_force_opt(const Instance& inst, const BruteForceOptions& options = {});

/// Assignment that sorts requests by (min endpoint, max endpoint), ties by
/// sequence position, and fills slots 1..n in that order.
Assignment sorted_order_assignment(const Instance& inst);
std::int64_t sorted_order_value(const Instance& inst);

/// Optimum without enumeration: the sorted-order value is an upper bound and
/// the pairwise minimum sum a lower bound. `exact` is set when they coincide.
struct CertifiedOpt {
    std::int64_t value = 0;
    std::int64_t lower_bound = 0;
    bool exact = false;
};

CertifiedOpt certified_opt(const Instance& inst);

} // namespace oscm
