#include "cascade/construct.hpp"

#include <random>
#include <stdexcept>

#include "cascade/bounds.hpp"
#include "cascade/exact.hpp"
#include "cascade/feasibility.hpp"

namespace cascade {
namespace {

// Uniform draw from [0, bound) via rejection, independent of the standard
// library's distribution implementation.
std::uint64_t bounded_draw(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = gen();
    if (r >= threshold) return r % bound;
  }
}

void require_full_permutations(const Design& d, const char* who) {
  for (const TestSeq& t : d.tests) {
    if (!is_full_permutation(t, d.n_items))
      throw std::invalid_argument(std::string(who) +
                                  ": every test must be a permutation of 1..n");
  }
}

// Feasible design at the tower base for k >= 3. The k = 3 base is the
// known 3-test design on 3 items; for k = 4 an exhaustive search gives the
// optimal anchor; beyond that, verified random draws at the Claim-4 size.
Design tower_anchor(int k) {
  if (k == 3) {
    Design d;
    d.n_items = 3;
    d.max_defectives = 3;
    d.tests = {{1, 2, 3}, {2, 1, 3}, {3, 2, 1}};
    return d;
  }
  if (k == 4) return exact_optimal_T(4, 4).witness;
  const int t_count = static_cast<int>(upper_bound_randomized(k, k));
  for (std::uint64_t seed = 0;; ++seed) {
    Design cand = randomized_design(k, k, t_count, Seed{seed});
    if (check_feasible_thm1(cand).feasible) return cand;
  }
}

}  // namespace

Design design_k1(int n) {
  if (n < 1) throw std::invalid_argument("design_k1: n must be >= 1");
  Design d;
  d.n_items = n;
  d.max_defectives = 1;
  TestSeq t(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<size_t>(i)] = i + 1;
  d.tests.push_back(std::move(t));
  return d;
}

Design design_k2(int n) {
  if (n < 2) throw std::invalid_argument("design_k2: n must be >= 2");
  Design d;
  d.n_items = n;
  d.max_defectives = 2;
  TestSeq fwd(static_cast<size_t>(n)), rev(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    fwd[static_cast<size_t>(i)] = i + 1;
    rev[static_cast<size_t>(i)] = n - i;
  }
  d.tests = {std::move(fwd), std::move(rev)};
  return d;
}

Design procedure_a(const Design& t_base, const Design& g_base) {
  if (t_base.n_items != g_base.n_items)
    throw std::invalid_argument("procedure_a: mismatched n between inputs");
  if (g_base.max_defectives != t_base.max_defectives - 1)
    throw std::invalid_argument(
        "procedure_a: g_base must target one fewer defective than t_base");
  require_full_permutations(t_base, "procedure_a");
  require_full_permutations(g_base, "procedure_a");

  const int n = t_base.n_items;
  Design out;
  out.n_items = n * n;
  out.max_defectives = t_base.max_defectives;
  for (const TestSeq& t : t_base.tests) out.tests.push_back(compose(t, t));
  for (const TestSeq& g : g_base.tests) {
    for (const TestSeq& g2 : g_base.tests) out.tests.push_back(compose(g, g2));
  }
  return dedupe_tests(out);
}

Design design_for(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("design_for: n, k must be >= 1");
  if (k > n) throw std::invalid_argument("design_for: k must be <= n");
  if (k == 1) return design_k1(n);
  if (k == 2) return design_k2(n);

  Design cur = tower_anchor(k);
  long long m = cur.n_items;
  while (m < n) {
    Design g = design_for(static_cast<int>(m), k - 1);
    cur = procedure_a(cur, g);
    m *= m;
  }
  return restrict_design(cur, n);
}

Design randomized_design(int n, int k, int t_count, Seed seed) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("randomized_design: requires 1 <= k <= n");
  if (t_count < 1)
    throw std::invalid_argument("randomized_design: t_count must be >= 1");
  std::mt19937_64 gen(seed.value);
  Design d;
  d.n_items = n;
  d.max_defectives = k;
  for (int i = 0; i < t_count; ++i) {
    TestSeq t(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) t[static_cast<size_t>(j)] = j + 1;
    for (int j = n - 1; j > 0; --j) {
      const auto r = bounded_draw(gen, static_cast<std::uint64_t>(j) + 1);
      std::swap(t[static_cast<size_t>(j)], t[static_cast<size_t>(r)]);
    }
    d.tests.push_back(std::move(t));
  }
  return d;
}

}  // namespace cascade
