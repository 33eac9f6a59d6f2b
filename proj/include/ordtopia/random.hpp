#pragma once

#include "ordtopia/qpm.hpp"
#include "ordtopia/sequence.hpp"
#include "ordtopia/topology.hpp"

#include <random>

namespace ordtopia {

using Rng = std::mt19937_64;

/// Closure of a random relation where each off-diagonal pair is drawn with
/// probability `density`.
FinitePreorder random_preorder(std::size_t n, Rng& rng, double density = 0.25);

/// Saturation of `subsets` random subsets.
FiniteTopology random_topology(std::size_t n, Rng& rng, std::size_t subsets);

/// Shortest-path closure of random symmetric weights k/denominator, k in
/// 1..denominator. With `allow_zero`, some weights are 0 (pseudo-metric).
/// Always 1-bounded.
BaseMetric random_base_metric(std::size_t n, Rng& rng, long denominator = 12, bool allow_zero = false);

/// u(x) = (1 + sum of w_z over z in L(x)) / (2 + sum of all w_z) for random
/// positive integer weights: isotonic, valued in (0,1).
Utility random_weak_utility(const FinitePreorder& p, Rng& rng);

/// Nonnegative rationals k/denominator with k in 0..max_num.
SeqModel random_stream(std::size_t len, Rng& rng, long max_num = 8, long denominator = 4);

FinitePermutation random_permutation(std::size_t len, Rng& rng);

}  // namespace ordtopia
