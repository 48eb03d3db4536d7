#include "cascade/adaptive.hpp"
#include "doctest.h"

using namespace cascade;

namespace {

// Misbehaving oracle for the protocol-error path.
class LyingOracle final : public CascadeOracle {
  ItemId do_answer(const TestSeq&) override { return 99; }
};

}  // namespace

TEST_CASE("adaptive identification traces match the scheme") {
  SetOracle two({2, 5});
  std::vector<std::pair<TestSeq, ItemId>> trace;
  const DefectiveSet found = adaptive_identify(
      6, 2, two, [&](const TestSeq& q, ItemId a) { trace.emplace_back(q, a); });
  CHECK(found == DefectiveSet{2, 5});
  CHECK(two.queries() == 2);
  REQUIRE(trace.size() == 2);
  CHECK(trace[0].first == TestSeq{1, 2, 3, 4, 5, 6});
  CHECK(trace[0].second == 2);
  CHECK(trace[1].first == TestSeq{1, 3, 4, 5, 6});
  CHECK(trace[1].second == 5);
}

TEST_CASE("empty hidden set terminates after one query") {
  SetOracle none({});
  CHECK(adaptive_identify(5, 3, none) == DefectiveSet{});
  CHECK(none.queries() == 1);
}

TEST_CASE("full-size hidden set uses exactly k queries") {
  SetOracle all({1, 2, 3, 4});
  CHECK(adaptive_identify(4, 4, all) == DefectiveSet{1, 2, 3, 4});
  CHECK(all.queries() == 4);
}

TEST_CASE("oracle answers outside the query are a protocol error") {
  LyingOracle liar;
  CHECK_THROWS_AS(adaptive_identify(5, 2, liar), std::runtime_error);
}

TEST_CASE("exhaustive recovery for small n and k") {
  const int n = 8, k = 3;
  // every subset of size <= k
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) > k) continue;
    DefectiveSet hidden;
    for (int i = 0; i < n; ++i) {
      if (mask & (1 << i)) hidden.push_back(i + 1);
    }
    SetOracle oracle(hidden);
    CHECK(adaptive_identify(n, k, oracle) == hidden);
    CHECK(oracle.queries() <= k);
    const int expected =
        static_cast<int>(hidden.size()) == k
            ? k
            : static_cast<int>(hidden.size()) + 1;
    CHECK(oracle.queries() == expected);
  }
}
