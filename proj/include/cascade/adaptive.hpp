#pragma once

#include <functional>

#include "cascade/design.hpp"

namespace cascade {

/// Answers cascaded tests against a hidden defective set that stays fixed
/// for the session. answer() must return the first defective item of the
/// queried test, or 0 when the test contains none.
class CascadeOracle {
 public:
  virtual ~CascadeOracle() = default;

  ItemId answer(const TestSeq& t) {
    ++queries_;
    return do_answer(t);
  }
  int queries() const { return queries_; }

 private:
  virtual ItemId do_answer(const TestSeq& t) = 0;
  int queries_ = 0;
};

/// Oracle simulating a known defective set.
class SetOracle final : public CascadeOracle {
 public:
  explicit SetOracle(DefectiveSet hidden) : hidden_(std::move(hidden)) {}

 private:
  ItemId do_answer(const TestSeq& t) override {
    return run_test(t, hidden_);
  }
  DefectiveSet hidden_;
};

/// Called after each oracle query with the test and its answer.
using QueryTrace = std::function<void(const TestSeq&, ItemId)>;

/// Identifies the oracle's hidden set with at most k queries: repeatedly
/// tests the not-yet-identified items in ascending order, stopping on a
/// 0 answer or after k discoveries. Throws if the oracle answers with an
/// item outside the queried test.
DefectiveSet adaptive_identify(int n, int k, CascadeOracle& oracle,
                               const QueryTrace& trace = {});

}  // namespace cascade
