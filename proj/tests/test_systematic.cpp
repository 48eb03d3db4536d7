#include <random>

#include "cascade/feasibility.hpp"
#include "cascade/systematic.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cascade;

TEST_CASE("strip_leader removes one leader from the other tests") {
  const Design t1 = testutil::example2_t1();
  const Design stripped = strip_leader(t1, 0);
  CHECK(stripped.tests ==
        std::vector<TestSeq>{{1, 2, 3, 4}, {3, 2, 4}, {4, 2, 3}});

  const Design lonely{3, 2, {{1, 2}, {3}}};
  CHECK(strip_leader(lonely, 1) == lonely);

  const Design twin{1, 1, {{1}, {1}}};
  CHECK(strip_leader(twin, 0).tests == std::vector<TestSeq>{{1}, {}});

  CHECK_THROWS_AS(strip_leader(twin, 2), std::invalid_argument);
  CHECK_THROWS_AS(strip_leader(Design{1, 1, {{}}}, 0), std::invalid_argument);
}

TEST_CASE("strip_leader preserves feasibility") {
  std::mt19937_64 gen(21);
  int feasible_seen = 0;
  for (int rep = 0; rep < 400 && feasible_seen < 60; ++rep) {
    const Design d = testutil::random_design(gen);
    if (!check_feasible_thm1(d).feasible) continue;
    ++feasible_seen;
    for (size_t l = 0; l < d.tests.size(); ++l) {
      if (d.tests[l].empty()) continue;
      CHECK(check_feasible_thm1(strip_leader(d, static_cast<int>(l))).feasible);
    }
  }
  CHECK(feasible_seen > 0);
}

TEST_CASE("to_systematic reproduces the worked reduction") {
  CHECK(to_systematic(testutil::example2_t1()) == testutil::example2_t2());

  const Design already = testutil::example2_t2();
  CHECK(to_systematic(already) == already);

  const Design rotations{3, 3, {{1, 2, 3}, {2, 1, 3}, {3, 2, 1}}};
  CHECK(to_systematic(rotations).tests ==
        std::vector<TestSeq>{{1}, {2}, {3}});
}

TEST_CASE("reduction of feasible designs stays feasible, systematic, no larger") {
  std::mt19937_64 gen(22);
  int feasible_seen = 0;
  for (int rep = 0; rep < 800 && feasible_seen < 100; ++rep) {
    const Design d = testutil::random_design(gen);
    if (!check_feasible_thm1(d).feasible) continue;
    ++feasible_seen;
    const Design r = to_systematic(d);
    CAPTURE(d.n_items);
    CAPTURE(d.max_defectives);
    CHECK(is_systematic(r));
    CHECK(r.tests.size() <= d.tests.size());
    CHECK(check_feasible_thm1(r).feasible);
    CHECK(to_systematic(r) == r);
  }
  CHECK(feasible_seen == 100);
}
