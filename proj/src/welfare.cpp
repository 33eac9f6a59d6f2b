#include "ordtopia/welfare.hpp"

#include "ordtopia/error.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cfloat>
#include <cmath>

namespace ordtopia {

namespace {

constexpr mpfr_prec_t kHighPrecision = 512;

class BigFloat {
 public:
  BigFloat() { mpfr_init2(v_, kHighPrecision); mpfr_set_zero(v_, 1); }
  ~BigFloat() { mpfr_clear(v_); }
  BigFloat(const BigFloat&) = delete;
  BigFloat& operator=(const BigFloat&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

void check_domain(Gauge g, const Rational& v) {
  if (g != Gauge::linear && v < 0)
    throw Error(Errc::gauge_domain, std::string(gauge_name(g)) + " gauge is defined on [0, inf), got " + to_string(v));
}

long double gauge_ld(Gauge g, const Rational& v) {
  const long double t = static_cast<long double>(v.get_d());
  switch (g) {
    case Gauge::sqrt_shifted: return std::sqrt(t + 1);
    case Gauge::log_shifted: return std::log1p(t) + 1;
    case Gauge::linear: return t;
  }
  return t;
}

void gauge_mpfr(Gauge g, const Rational& v, mpfr_ptr out) {
  mpfr_set_q(out, v.get_mpq_t(), MPFR_RNDN);
  switch (g) {
    case Gauge::sqrt_shifted:
      mpfr_add_ui(out, out, 1, MPFR_RNDN);
      mpfr_sqrt(out, out, MPFR_RNDN);
      break;
    case Gauge::log_shifted:
      mpfr_log1p(out, out, MPFR_RNDN);
      mpfr_add_ui(out, out, 1, MPFR_RNDN);
      break;
    case Gauge::linear: break;
  }
}

// Sign of sum g(a) - sum g(b) for a nonlinear gauge; 0 when the two sums
// agree to 2^-500 relative.
int gauge_sum_sign(Gauge g, const std::vector<Rational>& a, const std::vector<Rational>& b) {
  long double s = 0, mag = 0;
  for (const auto& v : a) {
    const long double t = gauge_ld(g, v);
    s += t;
    mag += std::fabs(t);
  }
  for (const auto& v : b) {
    const long double t = gauge_ld(g, v);
    s -= t;
    mag += std::fabs(t);
  }
  const long double bound = mag * 64 * LDBL_EPSILON;
  if (s > bound) return 1;
  if (s < -bound) return -1;

  BigFloat sum, term, absmag, tmp;
  for (const auto& v : a) {
    gauge_mpfr(g, v, term.get());
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    mpfr_abs(tmp.get(), term.get(), MPFR_RNDN);
    mpfr_add(absmag.get(), absmag.get(), tmp.get(), MPFR_RNDN);
  }
  for (const auto& v : b) {
    gauge_mpfr(g, v, term.get());
    mpfr_sub(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    mpfr_abs(tmp.get(), term.get(), MPFR_RNDN);
    mpfr_add(absmag.get(), absmag.get(), tmp.get(), MPFR_RNDN);
  }
  mpfr_mul_2si(absmag.get(), absmag.get(), -500, MPFR_RNDN);
  mpfr_abs(tmp.get(), sum.get(), MPFR_RNDN);
  if (mpfr_cmp(tmp.get(), absmag.get()) <= 0) return 0;
  return mpfr_sgn(sum.get()) > 0 ? 1 : -1;
}

Verdict verdict_from_sign(int sign) {
  // sign of sum g(x) - g(y): positive means y <= x only.
  if (sign > 0) return Verdict::y_prec_x;
  if (sign < 0) return Verdict::x_prec_y;
  return Verdict::both;
}

bool strictly_below_everywhere(const SeqModel& x, const SeqModel& y) {
  const auto plain = [](const Tail& t) { return t.kind != Tail::Kind::named; };
  if (!plain(x.tail()) || !plain(y.tail())) return false;
  const Rational cx = x.tail().kind == Tail::Kind::zero ? Rational(0) : x.tail().value;
  const Rational cy = y.tail().kind == Tail::Kind::zero ? Rational(0) : y.tail().value;
  if (!(cx < cy)) return false;
  const std::size_t len = std::max(x.prefix().size(), y.prefix().size());
  for (std::size_t t = 0; t < len; ++t)
    if (!(x.at(t) < y.at(t))) return false;
  return true;
}

CheckReport seq_report(std::string name, std::string anchor) {
  CheckReport r;
  r.suite = "seq";
  r.name = std::move(name);
  r.paper_anchor = std::move(anchor);
  return r;
}

}  // namespace

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::x_prec_y: return "x<y";
    case Verdict::y_prec_x: return "y<x";
    case Verdict::both: return "x~y";
    case Verdict::incomparable: return "x||y";
  }
  return "x||y";
}

const char* gauge_name(Gauge g) noexcept {
  switch (g) {
    case Gauge::sqrt_shifted: return "sqrt";
    case Gauge::log_shifted: return "log";
    case Gauge::linear: return "linear";
  }
  return "linear";
}

Verdict overtaking_compare(const SeqModel& x, const SeqModel& y, Gauge g) {
  const std::size_t len = std::max(x.prefix().size(), y.prefix().size());
  std::vector<Rational> xs(len), ys(len);
  for (std::size_t t = 0; t < len; ++t) {
    xs[t] = x.at(t);
    ys[t] = y.at(t);
    check_domain(g, xs[t]);
    check_domain(g, ys[t]);
  }
  if (!x.aligned_with(y)) {
    const auto& tx = x.tail();
    const auto& ty = y.tail();
    if (tx.kind == Tail::Kind::named || ty.kind == Tail::Kind::named)
      throw Error(Errc::incomparable_tails, "overtaking needs aligned tails or zero/constant tails");
    // Eventually every term has the sign of g(cx) - g(cy).
    const Rational cx = tx.kind == Tail::Kind::zero ? Rational(0) : tx.value;
    const Rational cy = ty.kind == Tail::Kind::zero ? Rational(0) : ty.value;
    check_domain(g, cx);
    check_domain(g, cy);
    return cx > cy ? Verdict::y_prec_x : Verdict::x_prec_y;
  }

  // Terms common to both multisets cancel exactly.
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  std::vector<Rational> only_x, only_y;
  std::set_difference(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(only_x));
  std::set_difference(ys.begin(), ys.end(), xs.begin(), xs.end(), std::back_inserter(only_y));
  if (only_x.empty() && only_y.empty()) return Verdict::both;

  if (g == Gauge::linear) {
    Rational s = 0;
    for (const auto& v : only_x) s += v;
    for (const auto& v : only_y) s -= v;
    return verdict_from_sign(sgn(s));
  }
  return verdict_from_sign(gauge_sum_sign(g, only_x, only_y));
}

Criterion overtaking_criterion(Gauge g) {
  return [g](const SeqModel& x, const SeqModel& y) { return overtaking_compare(x, y, g); };
}

Criterion total_indifference_criterion() {
  return [](const SeqModel&, const SeqModel&) { return Verdict::both; };
}

Criterion grading_criterion(std::size_t window) {
  return [window](const SeqModel& x, const SeqModel& y) {
    const bool le = grading_le(x, y, window);
    const bool ge = grading_le(y, x, window);
    if (le && ge) return Verdict::both;
    if (le) return Verdict::x_prec_y;
    if (ge) return Verdict::y_prec_x;
    return Verdict::incomparable;
  };
}

SeqModel mix(const Rational& s, const SeqModel& x, const SeqModel& y) {
  if (!x.aligned_with(y)) throw Error(Errc::incomparable_tails, "mixture needs aligned tails");
  const std::size_t len = std::max(x.prefix().size(), y.prefix().size());
  const SeqModel xm = x.materialized(len);
  std::vector<Rational> pre(len);
  for (std::size_t t = 0; t < len; ++t) pre[t] = s * x.at(t) + (1 - s) * y.at(t);
  return SeqModel(std::move(pre), xm.tail());
}

CheckReport check_dfsc(const Criterion& compare, const SeqModel& x, const FinitePermutation& pi,
                       const std::vector<Rational>& s_grid, bool strong) {
  CheckReport r = seq_report(strong ? "strong-dfsc" : "dfsc", "Theorem SakaiNew");
  const SeqModel px = apply_perm(pi, x);
  if (same_sequence(px, x)) {
    r.observe("precondition", "pi(x) = x");
    r.status = Status::skip;
    return r;
  }
  std::size_t hits = 0;
  for (const auto& s : s_grid) {
    if (s <= 0 || s >= 1) throw Error(Errc::param_out_of_range, "mixture weight must lie in (0,1)");
    const SeqModel m = mix(s, x, px);
    const bool ok = compare(x, m) == Verdict::x_prec_y && compare(px, m) == Verdict::x_prec_y;
    r.observe("s=" + to_string(s), ok ? "mixture strictly preferred" : "not strictly preferred");
    if (ok) ++hits;
  }
  r.expect(strong ? "all grid points" : "some grid point", "mixture strictly preferred");
  r.status = status_from(strong ? hits == s_grid.size() && !s_grid.empty() : hits > 0);
  return r;
}

CheckReport check_pareto(const Criterion& compare, const std::vector<std::pair<SeqModel, SeqModel>>& pairs,
                         ParetoKind kind) {
  CheckReport r = seq_report(kind == ParetoKind::strong ? "strong-pareto" : "weak-pareto", "Theorem DiamondNew");
  std::size_t failures = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [x, y] = pairs[i];
    const bool premise = kind == ParetoKind::strong ? pointwise_leq(x, y) && !same_sequence(x, y)
                                                    : strictly_below_everywhere(x, y);
    if (!premise) throw Error(Errc::invalid_argument, "pair " + std::to_string(i) + " does not satisfy the dominance premise");
    const Verdict v = compare(x, y);
    if (v != Verdict::x_prec_y) {
      if (failures == 0) r.observe("first_failure", "pair " + std::to_string(i) + ": " + verdict_name(v));
      ++failures;
    }
  }
  r.observe("instances", std::to_string(pairs.size()));
  r.observe("failures", std::to_string(failures));
  r.expect("failures", "0");
  r.status = status_from(failures == 0);
  return r;
}

CheckReport check_anonymity(const Criterion& compare, const SeqModel& x, const std::vector<FinitePermutation>& perms) {
  CheckReport r = seq_report("anonymity", "Theorem DiamondNew");
  std::size_t failures = 0;
  for (const auto& pi : perms) {
    const Verdict v = compare(x, apply_perm(pi, x));
    if (v != Verdict::both) {
      if (failures == 0) r.observe("first_failure", verdict_name(v));
      ++failures;
    }
  }
  r.observe("permutations", std::to_string(perms.size()));
  r.observe("failures", std::to_string(failures));
  r.expect("failures", "0");
  r.status = status_from(failures == 0);
  return r;
}

CheckReport check_sensitivity_present(const Criterion& compare, const SeqModel& x) {
  CheckReport r = seq_report("sensitivity-present", "Theorem SakaiNew2");
  const SeqModel base = x.materialized(1);
  std::vector<Rational> raised = base.prefix();
  raised[0] += 1;
  const SeqModel better(std::move(raised), base.tail());
  const Verdict v = compare(base, better);
  r.observe("verdict", verdict_name(v));
  r.expect("verdict", verdict_name(Verdict::x_prec_y));
  r.status = status_from(v == Verdict::x_prec_y);
  return r;
}

}  // namespace ordtopia
