#include "ordtopia/random.hpp"

#include <algorithm>
#include <numeric>

namespace ordtopia {

FinitePreorder random_preorder(std::size_t n, Rng& rng, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<FinitePreorder::Pair> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && coin(rng)) pairs.emplace_back(i, j);
  return FinitePreorder::from_pairs(n, pairs);
}

FiniteTopology random_topology(std::size_t n, Rng& rng, std::size_t subsets) {
  std::uniform_int_distribution<Mask> pick(0, full_mask(n));
  std::vector<Mask> sub(subsets);
  for (auto& s : sub) s = pick(rng);
  return topology_from_subbasis(n, sub);
}

BaseMetric random_base_metric(std::size_t n, Rng& rng, long denominator, bool allow_zero) {
  std::uniform_int_distribution<long> num(allow_zero ? 0 : 1, denominator);
  DistanceTable w(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      w.at(i, j) = make_rational(num(rng), denominator);
      w.at(j, i) = w.at(i, j);
    }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational via = w.at(i, k) + w.at(k, j);
        if (via < w.at(i, j)) w.at(i, j) = via;
      }
  return BaseMetric(std::move(w));
}

Utility random_weak_utility(const FinitePreorder& p, Rng& rng) {
  std::uniform_int_distribution<long> weight(1, 9);
  std::vector<long> w(p.size());
  for (auto& v : w) v = weight(rng);
  const long total = std::accumulate(w.begin(), w.end(), 0L);
  Utility u(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    long below = 0;
    for (auto z : lower_contour(p, x).elements()) below += w[z];
    u[x] = make_rational(1 + below, 2 + total);
  }
  return u;
}

SeqModel random_stream(std::size_t len, Rng& rng, long max_num, long denominator) {
  std::uniform_int_distribution<long> num(0, max_num);
  std::vector<Rational> pre(len);
  for (auto& v : pre) v = make_rational(num(rng), denominator);
  return SeqModel(std::move(pre));
}

FinitePermutation random_permutation(std::size_t len, Rng& rng) {
  std::vector<std::size_t> images(len);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return FinitePermutation(std::move(images));
}

}  // namespace ordtopia
