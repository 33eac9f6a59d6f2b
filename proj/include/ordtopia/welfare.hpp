#pragma once

#include "ordtopia/report.hpp"
#include "ordtopia/sequence.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace ordtopia {

/// Outcome of comparing two streams under a welfare criterion.
enum class Verdict {
  x_prec_y,  // x strictly worse
  y_prec_x,  // y strictly worse
  both,      // indifferent
  incomparable,
};

const char* verdict_name(Verdict v) noexcept;

using Criterion = std::function<Verdict(const SeqModel&, const SeqModel&)>;

/// Strictly concave, strictly increasing transforms on [0, inf). `linear` is
/// the non-strictly-concave control.
enum class Gauge { sqrt_shifted, log_shifted, linear };

const char* gauge_name(Gauge g) noexcept;

/// Overtaking criterion: y <= x iff the partial sums of g(x_t) - g(y_t) are
/// eventually nonnegative. With a finite-support difference the partial sums
/// settle at S = sum_t g(x_t) - g(y_t), so the verdict is the sign of S.
/// Zero or constant tails with different values are decided by the tail.
Verdict overtaking_compare(const SeqModel& x, const SeqModel& y, Gauge g);

Criterion overtaking_criterion(Gauge g);
/// Everything indifferent; fails strong Pareto.
Criterion total_indifference_criterion();
/// Grading principle on a fixed window.
Criterion grading_criterion(std::size_t window);

/// Some (strong: every) s in the grid makes s x + (1-s) pi(x) strictly
/// better than both x and pi(x). Skipped when pi(x) = x.
CheckReport check_dfsc(const Criterion& compare, const SeqModel& x, const FinitePermutation& pi,
                       const std::vector<Rational>& s_grid, bool strong = false);

enum class ParetoKind { strong, weak };

/// Each pair (x, y) must satisfy the dominance premise (x <= y with x != y,
/// or x < y everywhere for the weak form); throws InvalidArgument otherwise.
CheckReport check_pareto(const Criterion& compare, const std::vector<std::pair<SeqModel, SeqModel>>& pairs,
                         ParetoKind kind = ParetoKind::strong);
CheckReport check_anonymity(const Criterion& compare, const SeqModel& x,
                            const std::vector<FinitePermutation>& perms);
/// Raises the first coordinate by one and expects a strict improvement.
CheckReport check_sensitivity_present(const Criterion& compare, const SeqModel& x);

/// s x + (1-s) y over aligned tails.
SeqModel mix(const Rational& s, const SeqModel& x, const SeqModel& y);

}  // namespace ordtopia
