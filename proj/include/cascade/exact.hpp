#pragma once

#include <cstdint>
#include <string>

#include "cascade/design.hpp"
#include "cascade/feasibility.hpp"

namespace cascade {

/// Certified exact optimum for tiny instances.
struct ExactResult {
  int n = 0;
  int k = 0;
  int optimum = 0;
  Design witness;            // lexicographically least optimal design found
  std::string certificate;   // statement of the exhausted search below optimum
};

/// Exhaustive search over designs made of full-permutation tests (any test
/// extends to a permutation without losing feasibility, so this loses no
/// generality). Designs are enumerated as lexicographically sorted sets of
/// permutations, sizes increasing, so the returned witness is canonical.
/// With fix_first_identity set, the first test is pinned to the identity
/// permutation; item relabeling makes this lossless and it is the default.
/// Refuses instances whose estimated work exceeds the budget.
ExactResult exact_optimal_T(int n, int k,
                            std::uint64_t budget = kDefaultStepBudget,
                            bool fix_first_identity = true);

}  // namespace cascade
