#include "cascade/adaptive.hpp"

#include <algorithm>
#include <stdexcept>

namespace cascade {

DefectiveSet adaptive_identify(int n, int k, CascadeOracle& oracle,
                               const QueryTrace& trace) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("adaptive_identify: requires 1 <= k <= n");
  DefectiveSet found;
  for (int round = 1; round <= k; ++round) {
    TestSeq query;
    query.reserve(static_cast<size_t>(n) - found.size());
    for (ItemId v = 1; v <= n; ++v) {
      if (!std::binary_search(found.begin(), found.end(), v))
        query.push_back(v);
    }
    const ItemId ans = oracle.answer(query);
    if (trace) trace(query, ans);
    if (ans == 0) break;
    if (std::find(query.begin(), query.end(), ans) == query.end())
      throw std::runtime_error(
          "adaptive_identify: oracle returned an item not in the query");
    found.insert(std::lower_bound(found.begin(), found.end(), ans), ans);
  }
  return found;
}

}  // namespace cascade
