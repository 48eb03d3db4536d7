#include "cascade/systematic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cascade {

Design strip_leader(const Design& d, int l) {
  if (l < 0 || l >= static_cast<int>(d.tests.size()))
    throw std::invalid_argument("strip_leader: test index out of range");
  if (d.tests[static_cast<size_t>(l)].empty())
    throw std::invalid_argument("strip_leader: test is empty");
  const ItemId leader = d.tests[static_cast<size_t>(l)].front();
  Design out = d;
  for (size_t i = 0; i < out.tests.size(); ++i) {
    if (static_cast<int>(i) == l) continue;
    std::erase(out.tests[i], leader);
  }
  return out;
}

Design to_systematic(const Design& d) {
  Design work;
  work.n_items = d.n_items;
  work.max_defectives = d.max_defectives;
  for (const TestSeq& t : d.tests) {
    if (!t.empty()) work.tests.push_back(t);
  }
  std::set<size_t> emptied;
  for (size_t i = 0; i < work.tests.size(); ++i) {
    if (work.tests[i].empty()) {
      emptied.insert(i);
      continue;
    }
    const ItemId leader = work.tests[i].front();
    for (size_t j = 0; j < work.tests.size(); ++j) {
      if (j != i) std::erase(work.tests[j], leader);
    }
  }
  Design out;
  out.n_items = work.n_items;
  out.max_defectives = work.max_defectives;
  for (size_t i = 0; i < work.tests.size(); ++i) {
    if (!emptied.count(i)) out.tests.push_back(std::move(work.tests[i]));
  }
  return out;
}

}  // namespace cascade
