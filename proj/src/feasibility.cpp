#include "cascade/feasibility.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace cascade {
namespace {

constexpr int kNoPos = std::numeric_limits<int>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t binom_saturating(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = saturating_mul(r, static_cast<std::uint64_t>(n - k + i));
    if (r == std::numeric_limits<std::uint64_t>::max()) return r;
    r /= static_cast<std::uint64_t>(i);
  }
  return r;
}

std::uint64_t total_test_length(const Design& d) {
  std::uint64_t len = 0;
  for (const TestSeq& t : d.tests) len += t.size();
  return len;
}

// pos[i][v] = 0-based position of item v in test i, or kNoPos.
std::vector<std::vector<int>> position_matrix(const Design& d) {
  std::vector<std::vector<int>> pos(
      d.tests.size(), std::vector<int>(static_cast<size_t>(d.n_items) + 1, kNoPos));
  for (size_t i = 0; i < d.tests.size(); ++i) {
    for (size_t j = 0; j < d.tests[i].size(); ++j)
      pos[i][static_cast<size_t>(d.tests[i][j])] = static_cast<int>(j);
  }
  return pos;
}

// Lexicographic k-combination stepping over {1..n}; returns false when done.
bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[static_cast<size_t>(i)] == n - (k - 1 - i)) --i;
  if (i < 0) return false;
  ++c[static_cast<size_t>(i)];
  for (int j = i + 1; j < k; ++j)
    c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
  return true;
}

std::vector<int> first_combination(int k) {
  std::vector<int> c(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<size_t>(i)] = i + 1;
  return c;
}

// Index into s of the member appearing first in test i, or -1 if none.
int first_member_index(const std::vector<int>& test_pos,
                       const std::vector<int>& s) {
  int best = kNoPos, arg = -1;
  for (size_t j = 0; j < s.size(); ++j) {
    int p = test_pos[static_cast<size_t>(s[j])];
    if (p < best) {
      best = p;
      arg = static_cast<int>(j);
    }
  }
  return arg;
}

}  // namespace

std::uint64_t f_count(const Design& d, const DefectiveSet& s, ItemId v) {
  if (s.empty()) throw std::invalid_argument("f_count: S must be nonempty");
  if (!std::binary_search(s.begin(), s.end(), v))
    throw std::invalid_argument("f_count: v must be a member of S");
  std::uint64_t count = 0;
  for (const TestSeq& t : d.tests) {
    for (ItemId x : t) {
      if (std::binary_search(s.begin(), s.end(), x)) {
        if (x == v) ++count;
        break;
      }
    }
  }
  return count;
}

FeasibilityReport check_feasible_thm1(const Design& d, std::uint64_t budget) {
  validate_design(d);
  const int n = d.n_items;
  const int k = d.max_defectives;
  std::uint64_t estimate = saturating_mul(
      saturating_mul(binom_saturating(n, k), static_cast<std::uint64_t>(k)),
      std::max<std::uint64_t>(total_test_length(d), 1));
  if (estimate > budget) throw BudgetExceeded(estimate, budget);

  const auto pos = position_matrix(d);
  std::vector<int> subset = first_combination(k);
  std::vector<bool> covered(static_cast<size_t>(k));
  do {
    std::fill(covered.begin(), covered.end(), false);
    for (size_t i = 0; i < d.tests.size(); ++i) {
      int arg = first_member_index(pos[i], subset);
      if (arg >= 0) covered[static_cast<size_t>(arg)] = true;
    }
    for (int j = 0; j < k; ++j) {
      if (!covered[static_cast<size_t>(j)]) {
        FeasibilityReport r;
        r.feasible = false;
        r.condition_witness =
            ConditionWitness{subset, subset[static_cast<size_t>(j)]};
        return r;
      }
    }
  } while (next_combination(subset, n));
  return {.feasible = true};
}

FeasibilityReport check_injective_oracle(const Design& d,
                                         std::uint64_t budget) {
  validate_design(d);
  const int n = d.n_items;
  const int k = d.max_defectives;
  std::uint64_t num_sets = 0;
  for (int j = 0; j <= k; ++j) num_sets += binom_saturating(n, j);
  std::uint64_t estimate = saturating_mul(
      saturating_mul(num_sets, static_cast<std::uint64_t>(k)),
      std::max<std::uint64_t>(total_test_length(d), 1));
  if (estimate > budget) throw BudgetExceeded(estimate, budget);

  const auto pos = position_matrix(d);
  std::map<OutputVector, DefectiveSet> seen;
  OutputVector y(d.tests.size());
  auto probe = [&](const DefectiveSet& s) -> std::optional<CollisionWitness> {
    for (size_t i = 0; i < d.tests.size(); ++i) {
      int arg = s.empty() ? -1 : first_member_index(pos[i], s);
      y[i] = arg < 0 ? 0 : s[static_cast<size_t>(arg)];
    }
    auto [it, inserted] = seen.emplace(y, s);
    if (!inserted) return CollisionWitness{it->second, s};
    return std::nullopt;
  };

  for (int size = 0; size <= k; ++size) {
    if (size == 0) {
      if (auto w = probe({})) return {false, std::nullopt, w};
      continue;
    }
    std::vector<int> subset = first_combination(size);
    do {
      if (auto w = probe(subset)) return {false, std::nullopt, w};
    } while (next_combination(subset, n));
  }
  return {.feasible = true};
}

bool is_systematic(const Design& d) {
  for (const TestSeq& t : d.tests) {
    if (t.empty()) return false;
  }
  for (size_t i = 0; i < d.tests.size(); ++i) {
    ItemId leader = d.tests[i].front();
    for (size_t j = 0; j < d.tests.size(); ++j) {
      if (j == i) continue;
      if (std::find(d.tests[j].begin(), d.tests[j].end(), leader) !=
          d.tests[j].end())
        return false;
    }
  }
  return true;
}

FeasibilityReport check_systematic_thm3(const Design& d,
                                        std::uint64_t budget) {
  validate_design(d);
  if (!is_systematic(d))
    throw std::invalid_argument(
        "check_systematic_thm3: design is not in systematic form");
  const int k = d.max_defectives;

  std::set<ItemId> leaders;
  for (const TestSeq& t : d.tests) leaders.insert(t.front());
  std::vector<ItemId> followers;
  for (ItemId v = 1; v <= d.n_items; ++v) {
    if (!leaders.count(v)) followers.push_back(v);
  }
  const int p = static_cast<int>(followers.size());

  std::uint64_t num_sets = 0;
  for (int j = 1; j <= std::min(k, p); ++j) num_sets += binom_saturating(p, j);
  std::uint64_t estimate = saturating_mul(
      saturating_mul(std::max<std::uint64_t>(num_sets, 1),
                     static_cast<std::uint64_t>(k)),
      std::max<std::uint64_t>(total_test_length(d), 1));
  if (estimate > budget) throw BudgetExceeded(estimate, budget);

  const auto pos = position_matrix(d);
  std::vector<std::uint64_t> counts;
  std::vector<int> subset;
  for (int size = 1; size <= std::min(k, p); ++size) {
    std::vector<int> idx = first_combination(size);
    do {
      subset.clear();
      for (int i : idx) subset.push_back(followers[static_cast<size_t>(i - 1)]);
      counts.assign(static_cast<size_t>(size), 0);
      for (size_t i = 0; i < d.tests.size(); ++i) {
        int arg = first_member_index(pos[i], subset);
        if (arg >= 0) ++counts[static_cast<size_t>(arg)];
      }
      const std::uint64_t need = static_cast<std::uint64_t>(k + 1 - size);
      for (int j = 0; j < size; ++j) {
        if (counts[static_cast<size_t>(j)] < need) {
          FeasibilityReport r;
          r.feasible = false;
          r.condition_witness =
              ConditionWitness{subset, subset[static_cast<size_t>(j)]};
          return r;
        }
      }
    } while (next_combination(idx, p));
  }
  return {.feasible = true};
}

}  // namespace cascade
