#include "ordtopia/witnesses.hpp"

#include "ordtopia/error.hpp"

#include <cmath>
#include <sstream>

namespace ordtopia {

namespace {

constexpr std::size_t kHeadLen = 2;

std::size_t blocks_len(std::size_t last_block) {
  std::size_t len = 0;
  for (std::size_t k = 2; k <= last_block; ++k) len += k + 1;
  return len;
}

std::vector<Rational> svensson_prefix(std::size_t last_block) {
  std::vector<Rational> pre{0, 1};
  for (std::size_t k = 2; k <= last_block; ++k)
    for (std::size_t j = 0; j <= k; ++j) pre.push_back(make_rational(static_cast<long>(j), static_cast<long>(k)));
  return pre;
}

Tail svensson_tail(std::size_t last_block) { return Tail::named("svensson-blocks", blocks_len(last_block)); }

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

bool rel_close(double got, double want, double tol) { return std::fabs(got - want) <= tol * std::fabs(want); }

}  // namespace

std::size_t svensson_block_start(std::size_t k) {
  if (k < 2) throw Error(Errc::invalid_argument, "blocks start at k = 2");
  return kHeadLen + blocks_len(k - 1);
}

SeqModel svensson_x(std::size_t last_block) {
  return SeqModel(svensson_prefix(last_block), svensson_tail(last_block));
}

SeqModel svensson_l(std::size_t last_block) {
  auto pre = svensson_prefix(last_block);
  pre[0] = 1;
  return SeqModel(std::move(pre), svensson_tail(last_block));
}

SeqModel svensson_y(std::size_t n, std::size_t last_block) {
  if (n == 0) throw Error(Errc::invalid_argument, "sequence index starts at 1");
  if (n == 1) return svensson_x(last_block);
  if (n > last_block) throw Error(Errc::invalid_argument, "block " + std::to_string(n) + " is not materialized");
  auto pre = svensson_prefix(last_block);
  pre[0] = 1;
  const std::size_t start = svensson_block_start(n);
  pre[start] = 0;
  for (std::size_t j = 1; j <= n; ++j) pre[start + j] = make_rational(static_cast<long>(j - 1), static_cast<long>(n));
  return SeqModel(std::move(pre), svensson_tail(last_block));
}

SeqModel eneg_x(std::size_t n) {
  mpz_class pow2 = 1;
  pow2 <<= static_cast<mp_bitcnt_t>(n);
  const Rational v = Rational(1, 2) - Rational(mpz_class(1), pow2);
  return SeqModel::of({v, v});
}

SeqModel eneg_z() { return SeqModel::of({Rational(1, 2), Rational(1, 2)}); }
SeqModel eneg_y() { return SeqModel::of({Rational(1, 2)}); }
SeqModel half_ones() { return SeqModel::of({}, Tail::constant(Rational(1, 2))); }
SeqModel zero_stream() { return SeqModel::of({}); }

SeqModel uniform_block(std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "uniform block needs n >= 1");
  return SeqModel(std::vector<Rational>(n, make_rational(1, static_cast<long>(n))));
}

SeqModel spike(std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "spike position is 1-based");
  std::vector<Rational> pre(n, Rational(0));
  pre[n - 1] = 1;
  return SeqModel(std::move(pre));
}

const char* seq_metric_name(SeqMetric m) noexcept {
  switch (m) {
    case SeqMetric::ds: return "ds";
    case SeqMetric::dc: return "dc";
    case SeqMetric::dp: return "dp";
    case SeqMetric::d1: return "d1";
    case SeqMetric::dq: return "dq";
  }
  return "ds";
}

std::vector<std::size_t> witness_schedule(std::size_t n_max) {
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= n_max && n <= 64; ++n) out.push_back(n);
  for (std::size_t n = 128; n <= n_max; n *= 2) out.push_back(n);
  if (!out.empty() && out.back() != n_max) out.push_back(n_max);
  return out;
}

CheckReport simplex_witnesses(SeqMetric metric, std::size_t n_max, const MetricParams& params) {
  if (n_max == 0) throw Error(Errc::invalid_argument, "n_max must be positive");
  CheckReport r;
  r.suite = "simplex";
  r.name = seq_metric_name(metric);
  r.paper_anchor = "Proposition Simplex";
  const SeqModel zero = zero_stream();
  bool ok = true;
  std::size_t checked = 0;

  switch (metric) {
    case SeqMetric::ds: {
      Rational prev = 2;
      for (auto n : witness_schedule(n_max)) {
        const Rational d = metric_ds(zero, uniform_block(n));
        ok = ok && d == make_rational(1, static_cast<long>(n)) && d < prev;
        prev = d;
        ++checked;
      }
      r.observe("final_n", std::to_string(n_max));
      r.observe("final_distance", to_string(prev));
      r.expect("distance", "1/n, strictly decreasing");
      break;
    }
    case SeqMetric::dc: {
      Rational prev = 2;
      for (std::size_t n = 1; n <= n_max; ++n) {
        const Rational d = metric_dc(zero, spike(n));
        mpz_class pow2 = 1;
        pow2 <<= static_cast<mp_bitcnt_t>(n);
        ok = ok && d == Rational(mpz_class(1), pow2) && d < prev;
        prev = d;
        ++checked;
      }
      r.observe("final_n", std::to_string(n_max));
      r.observe("final_distance", to_string(prev));
      r.expect("distance", "2^-n, strictly decreasing");
      break;
    }
    case SeqMetric::dp: {
      double prev = 2;
      for (auto n : witness_schedule(n_max)) {
        const double d = metric_dp(zero, uniform_block(n), params.p);
        const double want = std::pow(static_cast<double>(n), 1.0 / params.p - 1.0);
        ok = ok && rel_close(d, want, 1e-9) && (n == 1 || d < prev);
        prev = d;
        ++checked;
      }
      r.observe("p", fmt_double(params.p));
      r.observe("final_n", std::to_string(n_max));
      r.observe("final_distance", fmt_double(prev));
      r.expect("distance", "n^(1/p-1), strictly decreasing");
      r.tolerance = "1e-9 relative";
      break;
    }
    case SeqMetric::d1:
    case SeqMetric::dq: {
      // Any simplex point s has sum |s_t| = 1, and for q < 1 the sum of
      // |s_t|^q is at least (sum |s_t|)^q = 1, so the clamp min{1, .} is hit.
      for (auto n : witness_schedule(n_max)) {
        for (const SeqModel& s : {uniform_block(n), spike(n)}) {
          const bool at_one = metric == SeqMetric::d1 ? metric_d1(zero, s) == 1 : metric_dq(zero, s, params.q) == 1.0;
          ok = ok && at_one;
          ++checked;
        }
      }
      if (metric == SeqMetric::dq) r.observe("q", fmt_double(params.q));
      r.observe("certificate", ok ? "d(0,s) = 1 for every witness" : "witness below 1 found");
      r.expect("distance", "1");
      break;
    }
  }
  r.observe("witnesses_checked", std::to_string(checked));
  r.status = status_from(ok);
  return r;
}

}  // namespace ordtopia
