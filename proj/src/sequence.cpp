#include "ordtopia/sequence.hpp"

#include "ordtopia/error.hpp"

#include <algorithm>
#include <cmath>

namespace ordtopia {

namespace {

constexpr const char* kSvenssonBlocks = "svensson-blocks";

void require_aligned(const SeqModel& x, const SeqModel& y) {
  if (!x.aligned_with(y)) throw Error(Errc::incomparable_tails, "sequence tails are not aligned");
}

std::size_t support_len(const SeqModel& x, const SeqModel& y) {
  return std::max(x.prefix().size(), y.prefix().size());
}

std::vector<Rational> abs_differences(const SeqModel& x, const SeqModel& y) {
  require_aligned(x, y);
  const std::size_t len = support_len(x, y);
  std::vector<Rational> diffs(len);
  for (std::size_t t = 0; t < len; ++t) diffs[t] = abs(x.at(t) - y.at(t));
  return diffs;
}

// Neumaier-compensated sum of |d|^e.
long double power_sum(const std::vector<Rational>& diffs, double e) {
  long double sum = 0, comp = 0;
  for (const auto& d : diffs) {
    if (d == 0) continue;
    const long double term = std::pow(static_cast<long double>(d.get_d()), static_cast<long double>(e));
    const long double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term))
      comp += (sum - t) + term;
    else
      comp += (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

bool plain_tail(const Tail& t) { return t.kind != Tail::Kind::named; }

Rational plain_tail_value(const Tail& t) { return t.kind == Tail::Kind::zero ? Rational(0) : t.value; }

}  // namespace

const char* tail_kind_name(Tail::Kind k) noexcept {
  switch (k) {
    case Tail::Kind::zero: return "zero";
    case Tail::Kind::constant: return "const";
    case Tail::Kind::named: return "named";
  }
  return "zero";
}

bool is_known_tail(const std::string& id) { return id == kSvenssonBlocks; }

Rational named_tail_value(const std::string& id, std::size_t index) {
  if (id != kSvenssonBlocks) throw Error(Errc::invalid_argument, "unknown named tail '" + id + "'");
  // Block k (k >= 2) has k+1 entries: 0, 1/k, ..., k/k.
  std::size_t k = 2;
  while (index >= k + 1) {
    index -= k + 1;
    ++k;
  }
  return make_rational(static_cast<long>(index), static_cast<long>(k));
}

SeqModel::SeqModel(std::vector<Rational> prefix, Tail tail) : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  if (tail_.kind == Tail::Kind::named && !is_known_tail(tail_.id))
    throw Error(Errc::invalid_argument, "unknown named tail '" + tail_.id + "'");
  if (tail_.kind != Tail::Kind::constant) tail_.value = 0;
  if (tail_.kind != Tail::Kind::named) {
    tail_.id.clear();
    tail_.offset = 0;
  }
}

Rational SeqModel::at(std::size_t t) const {
  if (t < prefix_.size()) return prefix_[t];
  switch (tail_.kind) {
    case Tail::Kind::zero: return 0;
    case Tail::Kind::constant: return tail_.value;
    case Tail::Kind::named: return named_tail_value(tail_.id, tail_.offset + (t - prefix_.size()));
  }
  return 0;
}

bool SeqModel::aligned_with(const SeqModel& other) const {
  if (tail_.kind != other.tail_.kind) return false;
  switch (tail_.kind) {
    case Tail::Kind::zero: return true;
    case Tail::Kind::constant: return tail_.value == other.tail_.value;
    case Tail::Kind::named: {
      if (tail_.id != other.tail_.id) return false;
      // Tail coordinate t maps to catalog index offset + t - prefix length.
      const auto shift = [](const SeqModel& s) {
        return static_cast<long long>(s.tail_.offset) - static_cast<long long>(s.prefix_.size());
      };
      return shift(*this) == shift(other);
    }
  }
  return false;
}

SeqModel SeqModel::materialized(std::size_t len) const {
  if (len <= prefix_.size()) return *this;
  std::vector<Rational> pre = prefix_;
  for (std::size_t t = prefix_.size(); t < len; ++t) pre.push_back(at(t));
  Tail tail = tail_;
  if (tail.kind == Tail::Kind::named) tail.offset += len - prefix_.size();
  return SeqModel(std::move(pre), std::move(tail));
}

bool same_sequence(const SeqModel& x, const SeqModel& y) {
  if (!x.aligned_with(y)) return false;
  const std::size_t len = support_len(x, y);
  for (std::size_t t = 0; t < len; ++t)
    if (x.at(t) != y.at(t)) return false;
  return true;
}

bool pointwise_leq(const SeqModel& x, const SeqModel& y) {
  if (!x.aligned_with(y)) {
    if (!plain_tail(x.tail()) || !plain_tail(y.tail()))
      throw Error(Errc::incomparable_tails, "cannot compare named tails that are not aligned");
    if (plain_tail_value(x.tail()) > plain_tail_value(y.tail())) return false;
  }
  const std::size_t len = support_len(x, y);
  for (std::size_t t = 0; t < len; ++t)
    if (x.at(t) > y.at(t)) return false;
  return true;
}

Rational metric_ds(const SeqModel& x, const SeqModel& y) {
  Rational best = 0;
  for (const auto& d : abs_differences(x, y)) best = std::max(best, d);
  return best;
}

Rational metric_dc(const SeqModel& x, const SeqModel& y) {
  Rational sum = 0;
  mpz_class weight = 2;
  for (const auto& d : abs_differences(x, y)) {
    sum += d / Rational(weight);
    weight *= 2;
  }
  return sum;
}

double metric_dp(const SeqModel& x, const SeqModel& y, double p) {
  if (!(p > 1)) throw Error(Errc::param_out_of_range, "d_p needs p > 1");
  const long double s = power_sum(abs_differences(x, y), p);
  return static_cast<double>(std::min<long double>(1, std::pow(s, 1.0L / static_cast<long double>(p))));
}

Rational metric_d1(const SeqModel& x, const SeqModel& y) {
  Rational sum = 0;
  for (const auto& d : abs_differences(x, y)) sum += d;
  return std::min(sum, Rational(1));
}

double metric_dq(const SeqModel& x, const SeqModel& y, double q) {
  if (!(q > 0 && q < 1)) throw Error(Errc::param_out_of_range, "d_q needs 0 < q < 1");
  return static_cast<double>(std::min<long double>(1, power_sum(abs_differences(x, y), q)));
}

FinitePermutation::FinitePermutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (auto v : images_) {
    if (v >= images_.size() || hit[v]) throw Error(Errc::invalid_argument, "not a permutation of its support");
    hit[v] = 1;
  }
}

FinitePermutation FinitePermutation::swap(std::size_t a, std::size_t b) {
  std::vector<std::size_t> images(std::max(a, b) + 1);
  for (std::size_t t = 0; t < images.size(); ++t) images[t] = t;
  std::swap(images[a], images[b]);
  return FinitePermutation(std::move(images));
}

std::size_t FinitePermutation::support_end() const {
  for (std::size_t t = images_.size(); t > 0; --t)
    if (images_[t - 1] != t - 1) return t;
  return 0;
}

SeqModel apply_perm(const FinitePermutation& pi, const SeqModel& x) {
  if (pi.support_end() > x.prefix().size())
    throw Error(Errc::support_exceeds_prefix, "permutation moves coordinates beyond the prefix");
  std::vector<Rational> pre(x.prefix().size());
  for (std::size_t t = 0; t < pre.size(); ++t) pre[t] = x.prefix()[pi(t)];
  return SeqModel(std::move(pre), x.tail());
}

bool grading_le(const SeqModel& x, const SeqModel& y, std::size_t window) {
  if (window < x.prefix().size() || window < y.prefix().size())
    throw Error(Errc::window_too_small, "window " + std::to_string(window) + " does not cover both prefixes");
  if (!x.aligned_with(y)) {
    if (!plain_tail(x.tail()) || !plain_tail(y.tail()))
      throw Error(Errc::incomparable_tails, "grading needs aligned tails or zero/constant tails");
    if (plain_tail_value(x.tail()) > plain_tail_value(y.tail())) return false;
  }
  std::vector<Rational> xs(window), ys(window);
  for (std::size_t t = 0; t < window; ++t) {
    xs[t] = x.at(t);
    ys[t] = y.at(t);
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  for (std::size_t t = 0; t < window; ++t)
    if (xs[t] > ys[t]) return false;
  return true;
}

ExtendedCount sigma_below(const SeqModel& x, const Rational& threshold) {
  std::size_t count = 0;
  for (const auto& v : x.prefix())
    if (v < threshold) ++count;
  const Tail& tail = x.tail();
  if (tail.kind == Tail::Kind::named) {
    // svensson-blocks takes every value in [0,1] and hits 0 in every block.
    if (threshold > 0) return ExtendedCount::infinity();
    return ExtendedCount::finite(count);
  }
  if (plain_tail_value(tail) < threshold) return ExtendedCount::infinity();
  return ExtendedCount::finite(count);
}

std::size_t sigma_below_window(const SeqModel& x, const Rational& threshold, std::size_t window) {
  std::size_t count = 0;
  for (std::size_t t = 0; t < window; ++t)
    if (x.at(t) < threshold) ++count;
  return count;
}

namespace {

bool graded_or_fewer(const SeqModel& x, const SeqModel& y, std::size_t window, const Rational& threshold,
                     SigmaReading reading) {
  if (grading_le(x, y, window)) return true;
  if (reading == SigmaReading::literal) return sigma_below(x, threshold) > sigma_below(y, threshold);
  return sigma_below_window(x, threshold, window) > sigma_below_window(y, threshold, window);
}

}  // namespace

bool pre_half(const SeqModel& x, const SeqModel& y, std::size_t window, SigmaReading reading) {
  return graded_or_fewer(x, y, window, Rational(1, 2), reading);
}

bool pre_plus(const SeqModel& x, const SeqModel& y, std::size_t window, SigmaReading reading) {
  return graded_or_fewer(x, y, window, Rational(0), reading);
}

}  // namespace ordtopia
