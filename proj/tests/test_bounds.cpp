#include "cascade/bounds.hpp"
#include "cascade/construct.hpp"
#include "cascade/exact.hpp"
#include "doctest.h"

using namespace cascade;

TEST_CASE("alpha-beta lower bound") {
  CHECK(lower_bound_thm4(5, 3, 2, 2) == 4);
  CHECK_FALSE(lower_bound_thm4(4, 3, 2, 2).has_value());
  CHECK(lower_bound_thm4(7, 4, 2, 3) == 6);
  CHECK_THROWS_AS(lower_bound_thm4(5, 3, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(lower_bound_thm4(5, 3, 0, 4), std::invalid_argument);
}

TEST_CASE("balanced-split corollary") {
  CHECK(lower_bound_corollary(9, 3) == 4);
  CHECK(lower_bound_corollary(100, 7) == 16);
  CHECK(lower_bound_corollary(2, 1) == 1);
  for (int n = 5; n <= 40; ++n) CHECK(lower_bound_corollary(n, 3) == 4);
}

TEST_CASE("double-log lower bound") {
  CHECK(lower_bound_es(17, 3) == 3);
  CHECK(lower_bound_es(9, 3) == 2);
  CHECK(lower_bound_es(3, 3) == 1);
  CHECK(lower_bound_es(257, 3) == 4);
  CHECK_FALSE(lower_bound_es(5, 2).has_value());
}

TEST_CASE("randomized upper bound, exact integer arithmetic") {
  CHECK(upper_bound_randomized(10, 2) == 7);
  CHECK(upper_bound_randomized(8, 2) == 6);
  // C(k,k) = 1: bound reduces to floor(log_{k/(k-1)} k) + 1
  CHECK(upper_bound_randomized(2, 2) == 2);
  CHECK(upper_bound_randomized(3, 3) == 3);
  CHECK(upper_bound_randomized(5, 5) == 8);
  CHECK_THROWS_AS(upper_bound_randomized(5, 1), std::invalid_argument);
}

TEST_CASE("recursion upper bound unrolls the construction tower") {
  long long n = 3;
  for (int r = 0; r <= 3; ++r) {
    CHECK(upper_bound_recursive(static_cast<int>(n), 3) == 4 * r + 3);
    n *= n;
  }
  CHECK(upper_bound_recursive(100, 1) == 1);
  CHECK(upper_bound_recursive(100, 2) == 2);
}

TEST_CASE("recursion upper bound is monotone in n") {
  for (int k = 1; k <= 4; ++k) {
    long long prev = 0;
    for (int n = k; n <= 300; ++n) {
      const long long cur = upper_bound_recursive(n, k);
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("recursion bound dominates the built design size") {
  for (int n : {3, 5, 9, 12, 20, 81}) {
    const long long built = static_cast<long long>(design_for(n, 3).tests.size());
    CHECK(built <= upper_bound_recursive(n, 3));
  }
}

TEST_CASE("summary aggregates and orders the bounds") {
  const BoundsSummary s93 = bounds_summary(9, 3);
  CHECK(s93.best_lower == 4);
  CHECK(s93.best_upper == 5);

  const BoundsSummary s62 = bounds_summary(6, 2);
  CHECK(s62.best_lower == 2);
  CHECK(s62.best_upper == 2);

  const BoundsSummary s33 = bounds_summary(3, 3);
  CHECK(s33.best_lower == 3);
  CHECK(s33.best_upper == 3);

  CHECK_THROWS_AS(bounds_summary(2, 3), std::invalid_argument);
}

TEST_CASE("bounds bracket the certified optimum") {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= std::min(3, n); ++k) {
      const BoundsSummary s = bounds_summary(n, k);
      const ExactResult e = exact_optimal_T(n, k);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(s.best_lower <= e.optimum);
      CHECK(e.optimum <= s.best_upper);
      CHECK(s.best_lower <= s.best_upper);
    }
  }
}
