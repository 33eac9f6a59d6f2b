// Acceptance criteria 1-12, one line each. Exit status is nonzero when any
// criterion fails.

#include "oracles.hpp"

#include "ordtopia/json_io.hpp"
#include "ordtopia/qpm.hpp"
#include "ordtopia/random.hpp"
#include "ordtopia/suites.hpp"
#include "ordtopia/welfare.hpp"
#include "ordtopia/witnesses.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace ordtopia;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o = body();
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_s > 0 && secs >= budget_s) {
    o.ok = false;
    o.detail += " runtime budget exceeded";
  }
  if (!o.ok) ++failures;
  std::printf("criterion %2d %s: %s (%.2fs) %s\n", id, o.ok ? "PASS" : "FAIL", title, secs, o.detail.c_str());
  std::fflush(stdout);
}

bool rel_close(double got, double want, double tol) { return std::fabs(got - want) <= tol * std::fabs(want); }

std::string num(double v) {
  char b[40];
  std::snprintf(b, sizeof b, "%.6g", v);
  return b;
}

bool suite_clean(const std::vector<CheckReport>& checks, std::string& detail) {
  bool ok = !checks.empty();
  for (const auto& c : checks)
    if (c.status != Status::pass) {
      ok = false;
      detail += " " + c.name + "=" + status_name(c.status);
    }
  return ok;
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  status = pclose(pipe);
  return out;
}

constexpr double kPs[] = {1.5, 2.0, 3.0};

}  // namespace

int main() {
  constexpr std::size_t kBlocks = 32;

  criterion(1, "d_s(l,y_n) = 1/n exactly, n = 1..32", 1.0, [&] {
    Outcome o;
    const SeqModel l = svensson_l(kBlocks);
    for (std::size_t n = 1; n <= kBlocks; ++n)
      if (metric_ds(l, svensson_y(n, kBlocks)) != Rational(1, static_cast<long>(n))) {
        o.ok = false;
        o.detail += " n=" + std::to_string(n);
      }
    return o;
  });

  criterion(2, "d_p(l,y_n) = n^(1/p)/n within 1e-9, p in {1.5,2,3}", 0, [&] {
    Outcome o;
    const SeqModel l = svensson_l(kBlocks);
    double worst = 0;
    for (double p : kPs)
      for (std::size_t n = 1; n <= kBlocks; ++n) {
        const double want = std::pow(static_cast<double>(n), 1.0 / p) / static_cast<double>(n);
        const double got = metric_dp(l, svensson_y(n, kBlocks), p);
        worst = std::max(worst, std::fabs(got - want) / want);
        o.ok = o.ok && rel_close(got, want, 1e-9);
      }
    o.detail = "max relative error " + num(worst);
    return o;
  });

  criterion(3, "d_p(Z,x_n) = 2^(1/p)/2^n within 1e-9, n = 1..20", 0, [&] {
    Outcome o;
    double worst = 0;
    for (double p : kPs)
      for (std::size_t n = 1; n <= 20; ++n) {
        const double want = std::pow(2.0, 1.0 / p) / std::ldexp(1.0, static_cast<int>(n));
        const double got = metric_dp(eneg_z(), eneg_x(n), p);
        worst = std::max(worst, std::fabs(got - want) / want);
        o.ok = o.ok && rel_close(got, want, 1e-9);
      }
    o.detail = "max relative error " + num(worst);
    return o;
  });

  criterion(4, "simplex witnesses decreasing and < 1e-3 (d_s, d_p at 2^12; d_c at 10); d_1, d_q = 1", 5.0, [&] {
    Outcome o;
    const SeqModel zero = zero_stream();
    const std::size_t far = std::size_t{1} << 12;
    for (auto m : {SeqMetric::ds, SeqMetric::dc, SeqMetric::d1, SeqMetric::dq})
      if (!simplex_witnesses(m, m == SeqMetric::dc ? 64 : far).passed()) {
        o.ok = false;
        o.detail += std::string(" ") + seq_metric_name(m) + " witnesses failed;";
      }
    const Rational ds = metric_ds(zero, uniform_block(far));
    const Rational dc = metric_dc(zero, spike(10));
    o.ok = o.ok && ds < Rational(1, 1000) && dc < Rational(1, 1000);
    o.detail += " d_s(2^12)=" + to_string(ds) + " d_c(10)=" + to_string(dc) + ";";
    for (double p : kPs) {
      const bool shape = simplex_witnesses(SeqMetric::dp, far, MetricParams{p, 0.5}).passed();
      const double d = metric_dp(zero, uniform_block(far), p);
      o.ok = o.ok && shape && d < 1e-3;
      o.detail += " d_p[p=" + num(p) + "](2^12)=" + num(d) + (shape ? "" : " shape failed") + ";";
    }
    // n^(1/p-1) < eps at n = 2^12 only when p exceeds this value.
    const double p_needed = 1.0 / (1.0 + std::log(1e-3) / std::log(static_cast<double>(far)));
    o.detail += " d_p bound needs p > " + num(p_needed);
    return o;
  });

  criterion(5, "Cont1/Cont2 exhaustive on 3 points and 10^4 random pairs at sizes 4-5", 60.0, [&] {
    Outcome o;
    const auto tops = all_topologies(3);
    const auto pres = all_preorders(3);
    o.ok = tops.size() == 29;
    std::size_t bad = 0, total = 0;
    for (const auto& t : tops)
      for (const auto& p : pres) {
        bad += !check_cont1(p, t).passed() + !check_cont2(p, t).passed();
        // Independent restatement of the lower-continuity side.
        const auto opens = oracle::opens_of(t);
        const auto upper = oracle::upper_topology(p);
        bad += oracle::lower_continuous(p, opens) != std::includes(opens.begin(), opens.end(), upper.begin(), upper.end());
        ++total;
      }
    Rng rng(20240607);
    std::uniform_int_distribution<std::size_t> subsets(1, 10);
    for (std::size_t i = 0; i < 10000; ++i) {
      const std::size_t n = 4 + i % 2;
      const auto p = random_preorder(n, rng, 0.1 + 0.05 * static_cast<double>(i % 8));
      auto t = random_topology(n, rng, subsets(rng));
      if (i % 3 == 1) t = join_topology(t, upper_topology(p));
      bad += !check_cont1(p, t).passed() + !check_cont2(p, t).passed();
      ++total;
    }
    o.ok = o.ok && bad == 0;
    o.detail = std::to_string(total) + " pairs, " + std::to_string(bad) + " failures, " + std::to_string(tops.size()) +
               " topologies on 3 points";
    return o;
  });

  criterion(6, "refines(P,Q) iff alexandroff(Q) within alexandroff(P), sizes <= 4", 0, [&] {
    Outcome o;
    std::size_t bad = 0, total = 0;
    for (std::size_t n = 0; n <= 4; ++n) {
      const auto ps = all_preorders(n);
      std::vector<std::set<Mask>> alex;
      for (const auto& p : ps) alex.push_back(oracle::alexandroff(p));
      for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j) {
          const bool lib = check_lgiltza(ps[i], ps[j]).passed();
          const bool brute = refines(ps[i], ps[j]) ==
                             std::includes(alex[j].begin(), alex[j].end(), alex[i].begin(), alex[i].end());
          bad += !lib + !brute;
          ++total;
        }
    }
    o.ok = bad == 0;
    o.detail = std::to_string(total) + " pairs, " + std::to_string(bad) + " failures";
    return o;
  });

  criterion(7, "encoding recovers topology and preorder; possibility continuity, sizes <= 4", 0, [&] {
    Outcome o;
    std::size_t bad = 0, total = 0;
    for (std::size_t n = 0; n <= 4; ++n)
      for (const auto& p : all_preorders(n)) {
        const auto e = encode_preorder(p);
        const auto te = induced_topology(e);
        bad += oracle::opens_of(te) != oracle::alexandroff(p);
        bad += te.opens() != alexandroff_topology(p).opens();
        bad += !(induced_preorder(e) == p);
        bad += !is_lower_continuous(p, te);
        bad += !is_continuous(p, induced_topology(symmetrize(e)));
        ++total;
      }
    o.ok = bad == 0;
    o.detail = std::to_string(total) + " preorders, " + std::to_string(bad) + " failures";
    return o;
  });

  criterion(8, "d1-d4 and parametric d2 valid (T1 where claimed); d3 topology equals alexandroff", 0, [&] {
    Outcome o;
    RunConfig cfg;
    cfg.seed = 42;
    cfg.trials = 10000;
    cfg.max_carrier = 4;
    std::string detail;
    const bool axioms = suite_clean(run_verify("qpm-axioms", cfg), detail);
    bool d3 = true;
    for (const auto& c : run_verify("qpm-topologies", cfg))
      if (c.name.rfind("d3-equals-alexandroff", 0) == 0 || c.name.find("finer-than-alexandroff") != std::string::npos)
        d3 = d3 && c.passed();
    // Oracle re-check of the triangle scan at n = 8.
    Rng rng(8);
    std::size_t bad = 0;
    for (int i = 0; i < 200; ++i) {
      const auto p = random_preorder(8, rng, 0.25);
      const auto base = random_base_metric(8, rng);
      const auto u = random_weak_utility(p, rng);
      for (const auto& d : {construct_d1(p, base), construct_d2(p, base), construct_d2_param(p, base, 3, 4),
                            construct_d3(p, u), construct_d4(p, u)})
        bad += oracle::qpm_axioms(d) != oracle::Axiom::ok;
    }
    o.ok = axioms && d3 && bad == 0;
    o.detail = "qpm-axioms " + std::string(axioms ? "clean" : "failed:" + detail) + ", d3 equality " +
               (d3 ? "holds" : "fails") + ", oracle violations " + std::to_string(bad);
    return o;
  });

  criterion(9, "indicator multi-utility exact on <= 5 points; members lower semicontinuous", 0, [&] {
    Outcome o;
    std::size_t bad = 0, total = 0;
    for (std::size_t n = 0; n <= 5; ++n)
      for (const auto& p : all_preorders(n)) {
        const auto fam = multi_utility(p);
        // Reconstruction by pointwise comparison, computed here.
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y) {
            bool all = true;
            for (const auto& u : fam.members) all = all && u[x] <= u[y];
            bad += all != p.leq(x, y);
          }
        const auto alex = alexandroff_topology(p);
        for (const auto& u : fam.members) bad += !is_lower_semicontinuous(u, alex);
        ++total;
      }
    o.ok = bad == 0;
    o.detail = std::to_string(total) + " preorders, " + std::to_string(bad) + " failures";
    return o;
  });

  criterion(10, "overtaking axioms on >= 100 instances; linear control fails semiconvexity", 0, [&] {
    Outcome o;
    RunConfig cfg;
    cfg.seed = 10;
    cfg.trials = 10000;
    const auto checks = run_verify("axioms-overtaking", cfg);
    std::size_t seen = 0;
    for (const auto& c : checks) {
      if (c.name.rfind("grading-vs", 0) == 0 || c.name.rfind("total-indifference", 0) == 0) continue;
      ++seen;
      std::size_t instances = 0;
      for (const auto& [k, v] : c.observed)
        if (k == "instances") instances = std::stoul(v);
      const bool need_100 = c.name.find("refines-grading") == std::string::npos;
      if (!c.passed() || (need_100 && instances < 100)) {
        o.ok = false;
        o.detail += " " + c.name;
      }
    }
    o.ok = o.ok && seen == 14;
    o.detail += " " + std::to_string(seen) + " per-gauge checks";
    return o;
  });

  criterion(11, "grading_le equals permutation search, K <= 6, >= 1000 pairs", 0, [&] {
    Outcome o;
    Rng rng(11);
    std::size_t bad = 0, positives = 0;
    const std::size_t pairs = 5000;
    for (std::size_t i = 0; i < pairs; ++i) {
      const std::size_t k = 1 + i % 6;
      std::uniform_int_distribution<std::size_t> len(0, k);
      const auto x = random_stream(len(rng), rng, 4, 2);
      const auto y = random_stream(len(rng), rng, 4, 2);
      const bool g = grading_le(x, y, k);
      positives += g;
      bad += g != oracle::grading_by_search(x, y, k);
    }
    o.ok = bad == 0;
    o.detail = std::to_string(pairs) + " pairs (" + std::to_string(positives) + " graded), " + std::to_string(bad) +
               " disagreements";
    return o;
  });

  criterion(12, "verify cont-theorems --seed 7 --format json is byte-identical across runs", 0, [&] {
    Outcome o;
    const std::string cmd = std::string("\"") + ORDTOPIA_CLI_PATH + "\" verify cont-theorems --seed 7 --format json";
    int s1 = 0, s2 = 0;
    const std::string a = capture(cmd, s1);
    const std::string b = capture(cmd, s2);
    try {
      const auto ja = Json::parse(a);
      const auto jb = Json::parse(b);
      const std::string ca = ja.at("checks").dump();
      const std::string cb = jb.at("checks").dump();
      o.ok = s1 == 0 && s2 == 0 && ca == cb && !ja.at("checks").empty();
      o.detail = std::to_string(ja.at("checks").size()) + " checks, " + std::to_string(ca.size()) + " bytes";
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = e.what();
    }
    return o;
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
