#include "cascade/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace cascade {
namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t binom_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = saturating_mul(r, n - k + i);
    if (r == std::numeric_limits<std::uint64_t>::max()) return r;
    r /= i;
  }
  return r;
}

std::vector<std::vector<int>> all_k_subsets(int n, int k) {
  std::vector<std::vector<int>> subsets;
  std::vector<int> c(static_cast<size_t>(k));
  std::iota(c.begin(), c.end(), 1);
  for (;;) {
    subsets.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++c[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
  }
  return subsets;
}

}  // namespace

ExactResult exact_optimal_T(int n, int k, std::uint64_t budget,
                            bool fix_first_identity) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("exact_optimal_T: requires 1 <= k <= n");

  // All permutations of 1..n in lexicographic order, with item positions.
  std::vector<TestSeq> perms;
  TestSeq p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int num_perms = static_cast<int>(perms.size());

  std::vector<std::vector<int>> pos(
      perms.size(), std::vector<int>(static_cast<size_t>(n) + 1, 0));
  for (size_t i = 0; i < perms.size(); ++i) {
    for (int j = 0; j < n; ++j)
      pos[i][static_cast<size_t>(perms[i][static_cast<size_t>(j)])] = j;
  }

  const auto subsets = all_k_subsets(n, k);

  // Thm-1 condition over size-k subsets, early exit on the first failure.
  std::vector<bool> covered(static_cast<size_t>(k));
  auto feasible = [&](const std::vector<int>& test_idx) {
    for (const auto& s : subsets) {
      std::fill(covered.begin(), covered.end(), false);
      for (int ti : test_idx) {
        const auto& tp = pos[static_cast<size_t>(ti)];
        int best = std::numeric_limits<int>::max(), arg = -1;
        for (size_t j = 0; j < s.size(); ++j) {
          const int q = tp[static_cast<size_t>(s[j])];
          if (q < best) {
            best = q;
            arg = static_cast<int>(j);
          }
        }
        covered[static_cast<size_t>(arg)] = true;
      }
      for (int j = 0; j < k; ++j) {
        if (!covered[static_cast<size_t>(j)]) return false;
      }
    }
    return true;
  };

  std::uint64_t spent_estimate = 0;
  const std::uint64_t per_design_base =
      saturating_mul(subsets.size(), static_cast<std::uint64_t>(k));

  for (int t_count = 1; t_count <= num_perms; ++t_count) {
    const std::uint64_t designs =
        fix_first_identity
            ? binom_saturating(static_cast<std::uint64_t>(num_perms - 1),
                               static_cast<std::uint64_t>(t_count - 1))
            : binom_saturating(static_cast<std::uint64_t>(num_perms),
                               static_cast<std::uint64_t>(t_count));
    spent_estimate = spent_estimate +
                     saturating_mul(designs, saturating_mul(per_design_base,
                                                            static_cast<std::uint64_t>(t_count)));
    if (spent_estimate > budget) throw BudgetExceeded(spent_estimate, budget);

    std::vector<int> idx(static_cast<size_t>(t_count));
    if (fix_first_identity) {
      idx[0] = 0;
      for (int j = 1; j < t_count; ++j) idx[static_cast<size_t>(j)] = j;
      if (t_count - 1 > num_perms - 1) continue;
    } else {
      std::iota(idx.begin(), idx.end(), 0);
    }

    const int free_from = fix_first_identity ? 1 : 0;
    for (;;) {
      if (feasible(idx)) {
        ExactResult res;
        res.n = n;
        res.k = k;
        res.optimum = t_count;
        res.witness.n_items = n;
        res.witness.max_defectives = k;
        for (int ti : idx)
          res.witness.tests.push_back(perms[static_cast<size_t>(ti)]);
        std::ostringstream cert;
        cert << "exhausted all ";
        if (fix_first_identity) cert << "canonical (identity-first) ";
        cert << "permutation designs of size " << t_count - 1 << " for N=" << n
             << ", K=" << k << "; none feasible, so the optimum is " << t_count;
        res.certificate = cert.str();
        return res;
      }
      // advance the free part of the combination
      int i = t_count - 1;
      while (i >= free_from &&
             idx[static_cast<size_t>(i)] == num_perms - 1 - (t_count - 1 - i))
        --i;
      if (i < free_from) break;
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < t_count; ++j)
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  }
  throw std::runtime_error("exact_optimal_T: no feasible design exists");
}

}  // namespace cascade
