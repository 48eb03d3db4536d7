#include "cascade/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

#include "cascade/construct.hpp"

namespace cascade {
namespace {

using boost::multiprecision::cpp_int;

cpp_int binom_exact(int n, int k) {
  if (k < 0 || k > n) return 0;
  cpp_int r = 1;
  for (int i = 1; i <= std::min(k, n - k); ++i) {
    r *= n - std::min(k, n - k) + i;
    r /= i;
  }
  return r;
}

// Anchor size of the tower at its base, matching design_for's anchors.
long long anchor_size(int k) {
  if (k == 3) return 3;  // the 3-test base design on 3 items
  if (k == 4) return 4;  // exact optimum at n = k (the trivial K lower bound)
  return upper_bound_randomized(k, k);
}

}  // namespace

std::optional<long long> lower_bound_thm4(int n, int k, int alpha, int beta) {
  if (alpha < 1 || beta < 1)
    throw std::invalid_argument("lower_bound_thm4: alpha, beta must be >= 1");
  if (alpha + beta != k + 1)
    throw std::invalid_argument("lower_bound_thm4: alpha + beta must equal k+1");
  if (static_cast<long long>(n) <
      static_cast<long long>(alpha) * (beta + 1) - 1)
    return std::nullopt;
  return static_cast<long long>(alpha) * beta;
}

std::optional<long long> lower_bound_corollary(int n, int k) {
  const int alpha = (k + 1) / 2;
  const int beta = (k + 2) / 2;
  return lower_bound_thm4(n, k, alpha, beta);
}

std::optional<long long> lower_bound_es(int n, int k) {
  if (k < 3 || n < 3) return std::nullopt;
  // Largest r with 2^(2^r) <= n-1, then the strict bound becomes r+1.
  const unsigned long long m = static_cast<unsigned long long>(n) - 1;
  long long r = -1;
  for (int e = 1; e < 64; e *= 2) {
    if (m >= (1ULL << e)) ++r;
    else break;
  }
  if (r < 0) return std::nullopt;
  return r + 1;
}

long long upper_bound_randomized(int n, int k) {
  if (k < 2)
    throw std::invalid_argument(
        "upper_bound_randomized: requires k >= 2 (one test suffices for k=1)");
  if (n < k) throw std::invalid_argument("upper_bound_randomized: n < k");
  const cpp_int target = k * binom_exact(n, k);
  // Largest t with k^t <= target * (k-1)^t.
  cpp_int num = 1, den = 1;
  long long t = 0;
  for (;;) {
    num *= k;
    den *= k - 1;
    if (num > target * den) break;
    ++t;
  }
  return t + 1;
}

long long upper_bound_recursive(int n, int k) {
  if (k < 1) throw std::invalid_argument("upper_bound_recursive: k must be >= 1");
  if (k == 1) return 1;
  if (k == 2) return 2;
  const long long base = (k == 3) ? 3 : k;
  long long size = anchor_size(k);
  long long m = std::max(base, static_cast<long long>(k));
  while (m < n) {
    const long long g = upper_bound_recursive(static_cast<int>(m), k - 1);
    size += g * g;
    m *= m;
  }
  return size;
}

BoundsSummary bounds_summary(int n, int k) {
  if (k < 1 || k > n)
    throw std::invalid_argument("bounds_summary: requires 1 <= k <= n");
  BoundsSummary s;
  s.n = n;
  s.k = k;
  s.lower_alpha_beta = lower_bound_corollary(n, k);
  s.lower_es = lower_bound_es(n, k);
  s.lower_trivial = k;
  if (k >= 2) s.upper_randomized = upper_bound_randomized(n, k);
  s.upper_recursive = upper_bound_recursive(n, k);
  s.upper_constructed = static_cast<long long>(design_for(n, k).tests.size());

  s.best_lower = s.lower_trivial;
  if (s.lower_alpha_beta) s.best_lower = std::max(s.best_lower, *s.lower_alpha_beta);
  if (s.lower_es) s.best_lower = std::max(s.best_lower, *s.lower_es);
  s.best_upper = std::min(s.upper_recursive, s.upper_constructed);
  if (s.upper_randomized) s.best_upper = std::min(s.best_upper, *s.upper_randomized);
  return s;
}

}  // namespace cascade
