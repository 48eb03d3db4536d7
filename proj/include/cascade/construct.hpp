#pragma once

#include <cstdint>

#include "cascade/design.hpp"

namespace cascade {

/// Seed for the deterministic randomized construction.
struct Seed {
  std::uint64_t value = 0;
};

/// Single test (1,...,n); feasible for k = 1.
Design design_k1(int n);

/// Identity and reversal; feasible for k = 2. Requires n >= 2.
Design design_k2(int n);

/// One squaring step of the recursive construction: from a feasible (n, K)
/// design t_base and a feasible (n, K-1) design g_base, both made of full
/// permutations of {1..n}, builds the design
///   {t o t : t in t_base} union {g o g' : g, g' in g_base}
/// for n^2 items, deduplicated. Size <= |t_base| + |g_base|^2.
Design procedure_a(const Design& t_base, const Design& g_base);

/// Feasible design for any (n, k): closed forms for k <= 2, otherwise the
/// recursive tower (anchored at n = 3 for k = 3, at n = k for larger k)
/// squared up past n and then restricted down to n.
Design design_for(int n, int k);

/// t_count permutations of {1..n} drawn independently and uniformly from a
/// deterministic generator (mt19937_64 with rejection-sampled bounds, so
/// results are identical across platforms). No per-draw feasibility
/// guarantee.
Design randomized_design(int n, int k, int t_count, Seed seed);

}  // namespace cascade
