#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "cascade/design.hpp"

namespace cascade {

/// Default elementary-step budget for the exhaustive checkers.
inline constexpr std::uint64_t kDefaultStepBudget = 1'000'000'000ULL;

/// Thrown when an exhaustive check would exceed its step budget. Carries
/// the estimate so callers can re-run with a larger budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t estimated, std::uint64_t budget)
      : std::runtime_error("step budget exceeded: estimated " +
                           std::to_string(estimated) + " steps, budget " +
                           std::to_string(budget)),
        estimated_steps(estimated),
        budget(budget) {}
  std::uint64_t estimated_steps;
  std::uint64_t budget;
};

/// A set/item pair (K, v) such that |K| = K, v in K, and no test has v
/// appearing first among K.
struct ConditionWitness {
  DefectiveSet subset;
  ItemId item = 0;
  bool operator==(const ConditionWitness&) const = default;
};

/// Two distinct defective sets of size <= K with identical output vectors.
struct CollisionWitness {
  DefectiveSet first;
  DefectiveSet second;
  bool operator==(const CollisionWitness&) const = default;
};

struct FeasibilityReport {
  bool feasible = false;
  std::optional<ConditionWitness> condition_witness;
  std::optional<CollisionWitness> collision_witness;
};

/// Number of tests in which v appears first among the items of s.
/// Requires v in s and s nonempty.
std::uint64_t f_count(const Design& d, const DefectiveSet& s, ItemId v);

/// Exhaustive feasibility check: every size-K subset and every member must
/// have some test where the member appears first. On failure, the witness
/// is the lexicographically smallest (subset, then item). The estimate
/// C(N,K) * K * (total test length) is checked against the budget.
FeasibilityReport check_feasible_thm1(const Design& d,
                                      std::uint64_t budget = kDefaultStepBudget);

/// Independent oracle: enumerates every defective set of size <= K and
/// checks that no two produce the same output vector. Intended for small
/// instances only; returns the first colliding pair in (size, lex) order.
FeasibilityReport check_injective_oracle(
    const Design& d, std::uint64_t budget = kDefaultStepBudget);

/// True iff every test is nonempty and each test's first item appears in
/// no other test. Vacuously true for the empty design.
bool is_systematic(const Design& d);

/// Feasibility check specialized to systematic-form designs: with
/// L = {first(t)}, every S in V\L with 1 <= |S| <= K and every v in S
/// must satisfy f_count(d, S, v) >= K+1-|S|. Rejects non-systematic input.
FeasibilityReport check_systematic_thm3(
    const Design& d, std::uint64_t budget = kDefaultStepBudget);

}  // namespace cascade
