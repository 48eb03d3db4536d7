#pragma once

#include <optional>

#include "cascade/design.hpp"

namespace cascade {

/// Closed-form bounds on the optimal design size for given (n, k), plus
/// the size of the design the recursive constructor actually produces.
/// Absent optionals mean the bound does not apply at these parameters.
struct BoundsSummary {
  int n = 0;
  int k = 0;
  std::optional<long long> lower_alpha_beta;  // balanced alpha/beta split
  std::optional<long long> lower_es;          // k >= 3 only
  long long lower_trivial = 0;                // = k
  std::optional<long long> upper_randomized;  // k >= 2 only
  long long upper_recursive = 0;              // symbolic tower unroll
  long long upper_constructed = 0;            // |design_for(n,k).tests|
  long long best_lower = 0;
  long long best_upper = 0;
};

/// alpha*beta when n >= alpha*(beta+1)-1, with alpha+beta = k+1 enforced;
/// nullopt when the size condition fails.
std::optional<long long> lower_bound_thm4(int n, int k, int alpha, int beta);

/// The balanced split alpha = floor((k+1)/2), beta = ceil((k+1)/2).
std::optional<long long> lower_bound_corollary(int n, int k);

/// floor(log2 log2 (n-1)) + 1 for k >= 3 and n >= 3 (the strict inequality
/// turned into an integer bound); nullopt otherwise.
std::optional<long long> lower_bound_es(int n, int k);

/// floor(log_{k/(k-1)}(k * C(n,k))) + 1 for k >= 2, evaluated exactly:
/// C(n,k) in big integers and the floor picked by bracketing
/// (k/(k-1))^t <= k*C(n,k) with exact integer powers.
long long upper_bound_randomized(int n, int k);

/// Size bound from symbolically unrolling the construction tower used by
/// design_for, anchors included, without building any design.
long long upper_bound_recursive(int n, int k);

/// Evaluates every applicable bound and the constructed design size,
/// filling best_lower / best_upper.
BoundsSummary bounds_summary(int n, int k);

}  // namespace cascade
