#include "cascade/exact.hpp"
#include "doctest.h"

using namespace cascade;

TEST_CASE("known tiny optima") {
  const ExactResult r33 = exact_optimal_T(3, 3);
  CHECK(r33.optimum == 3);
  CHECK(r33.witness.tests.size() == 3);

  CHECK(exact_optimal_T(4, 2).optimum == 2);
  for (int n = 2; n <= 5; ++n) {
    CHECK(exact_optimal_T(n, 1).optimum == 1);
    CHECK(exact_optimal_T(n, 2).optimum == 2);
  }
}

TEST_CASE("witness passes both feasibility routes") {
  for (auto [n, k] : {std::pair{3, 3}, {4, 2}, {4, 3}, {5, 2}}) {
    const ExactResult r = exact_optimal_T(n, k);
    CHECK(check_feasible_thm1(r.witness).feasible);
    CHECK(check_injective_oracle(r.witness).feasible);
    CHECK(static_cast<int>(r.witness.tests.size()) == r.optimum);
    CHECK_FALSE(r.certificate.empty());
  }
}

TEST_CASE("symmetry pruning does not change the optimum") {
  for (auto [n, k] : {std::pair{3, 3}, {4, 2}, {4, 1}}) {
    CHECK(exact_optimal_T(n, k, kDefaultStepBudget, true).optimum ==
          exact_optimal_T(n, k, kDefaultStepBudget, false).optimum);
  }
}

TEST_CASE("budget refusal carries the step estimate") {
  CHECK_THROWS_AS(exact_optimal_T(6, 3, 10'000), BudgetExceeded);
  try {
    exact_optimal_T(6, 3, 10'000);
  } catch (const BudgetExceeded& e) {
    CHECK(e.estimated_steps > 10'000);
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(exact_optimal_T(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(exact_optimal_T(0, 1), std::invalid_argument);
}
