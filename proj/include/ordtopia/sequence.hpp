#pragma once

#include "ordtopia/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ordtopia {

/// The infinite part of a sequence model.
struct Tail {
  enum class Kind { zero, constant, named };

  Kind kind = Kind::zero;
  Rational value;    // constant tails only
  std::string id;    // named tails only
  std::size_t offset = 0;  // named tails: catalog index of the first tail coordinate

  static Tail zero() { return {}; }
  static Tail constant(Rational c) { return {Kind::constant, std::move(c), {}, 0}; }
  static Tail named(std::string id, std::size_t offset) { return {Kind::named, 0, std::move(id), offset}; }

  friend bool operator==(const Tail&, const Tail&) = default;
};

const char* tail_kind_name(Tail::Kind k) noexcept;

/// An l-infinity element: explicit rational prefix followed by a tail.
/// Coordinates are 0-based.
class SeqModel {
 public:
  SeqModel() = default;
  SeqModel(std::vector<Rational> prefix, Tail tail = Tail::zero());
  static SeqModel of(std::initializer_list<Rational> prefix, Tail tail = Tail::zero()) {
    return SeqModel(std::vector<Rational>(prefix), std::move(tail));
  }

  const std::vector<Rational>& prefix() const noexcept { return prefix_; }
  const Tail& tail() const noexcept { return tail_; }

  Rational at(std::size_t t) const;

  /// Same tail, lined up coordinate by coordinate: the difference of the two
  /// sequences then has finite support.
  bool aligned_with(const SeqModel& other) const;

  /// Copy whose prefix is extended (from the tail) to at least `len`.
  SeqModel materialized(std::size_t len) const;

  friend bool operator==(const SeqModel&, const SeqModel&) = default;

 private:
  std::vector<Rational> prefix_;
  Tail tail_;
};

/// Coordinatewise equality over the whole sequence (independent of how the
/// prefix/tail split is drawn).
bool same_sequence(const SeqModel& x, const SeqModel& y);

/// Coordinatewise x_t <= y_t for all t; requires aligned tails or
/// zero/constant tails.
bool pointwise_leq(const SeqModel& x, const SeqModel& y);

/// Named tail catalog. "svensson-blocks" enumerates the blocks
/// (0, 1/k, 2/k, ..., k/k) for k = 2, 3, ...
Rational named_tail_value(const std::string& id, std::size_t index);
bool is_known_tail(const std::string& id);

// Metrics. All require aligned tails (IncomparableTails otherwise).
Rational metric_ds(const SeqModel& x, const SeqModel& y);
/// Sum of |x_t - y_t| / 2^t over 1-based t.
Rational metric_dc(const SeqModel& x, const SeqModel& y);
double metric_dp(const SeqModel& x, const SeqModel& y, double p);
Rational metric_d1(const SeqModel& x, const SeqModel& y);
double metric_dq(const SeqModel& x, const SeqModel& y, double q);

/// Bijection of a finite support onto itself; identity elsewhere.
/// Applied as pi(x)_t = x_{pi(t)}.
class FinitePermutation {
 public:
  FinitePermutation() = default;
  /// `images[t]` is the image of t for t < images.size(); must be a
  /// permutation of 0..images.size()-1.
  explicit FinitePermutation(std::vector<std::size_t> images);

  static FinitePermutation swap(std::size_t a, std::size_t b);

  std::size_t operator()(std::size_t t) const { return t < images_.size() ? images_[t] : t; }
  /// One past the largest moved index (0 for the identity).
  std::size_t support_end() const;

 private:
  std::vector<std::size_t> images_;
};

SeqModel apply_perm(const FinitePermutation& pi, const SeqModel& x);

/// Grading principle restricted to permutations supported in the first
/// `window` coordinates: sorted(x[0..K)) <= sorted(y[0..K)) and x <= y beyond
/// K. Tails may be aligned, or zero/constant (then the tail values compare).
bool grading_le(const SeqModel& x, const SeqModel& y, std::size_t window);

/// Finite count or infinity. Two infinite counts are not greater than each
/// other.
class ExtendedCount {
 public:
  static ExtendedCount finite(std::size_t n) { return ExtendedCount(n); }
  static ExtendedCount infinity() { return ExtendedCount(std::nullopt); }

  bool is_infinite() const noexcept { return !value_; }
  std::size_t value() const { return *value_; }
  std::string str() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend bool operator>(const ExtendedCount& a, const ExtendedCount& b) {
    if (a.is_infinite()) return !b.is_infinite();
    return !b.is_infinite() && *a.value_ > *b.value_;
  }
  friend bool operator==(const ExtendedCount&, const ExtendedCount&) = default;

 private:
  explicit ExtendedCount(std::optional<std::size_t> v) : value_(v) {}
  std::optional<std::size_t> value_;
};

/// Number of coordinates strictly below `threshold`.
ExtendedCount sigma_below(const SeqModel& x, const Rational& threshold);
/// Same count restricted to the first `window` coordinates.
std::size_t sigma_below_window(const SeqModel& x, const Rational& threshold, std::size_t window);

enum class SigmaReading { literal, window };

/// x <=_m y or sigma_{<1/2}(x) > sigma_{<1/2}(y).
bool pre_half(const SeqModel& x, const SeqModel& y, std::size_t window,
              SigmaReading reading = SigmaReading::literal);
/// x <=_m y or sigma_{<0}(x) > sigma_{<0}(y).
bool pre_plus(const SeqModel& x, const SeqModel& y, std::size_t window,
              SigmaReading reading = SigmaReading::literal);

}  // namespace ordtopia
