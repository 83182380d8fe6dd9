// SPDX-License-Identifier: Apache-2.0
// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "oracles.hpp"
#include "tzlab/clusterexp.hpp"
#include "tzlab/contour.hpp"
#include "tzlab/dynamics.hpp"
#include "tzlab/exactpoly.hpp"
#include "tzlab/qseries.hpp"
#include "tzlab/transfer.hpp"

using namespace tzlab;

namespace {

// Tolerances and limits.
constexpr double kC8Seconds = 1;
constexpr double kANSeconds = 30;
constexpr double kTraceSeconds = 10;
constexpr double kContourSeconds = 300;
constexpr double kZeroSeconds = 600;
constexpr double kQGap = 17.0 / 18;
constexpr double kBetaMargin = 1.5;
constexpr double kResidual = 1e-8;
constexpr double kCurveTol = 0.005;
constexpr double kFptasEps = 1e-6;
constexpr int kFptasMaxOrder = 40;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void run(int id, const char* name, const std::function<Outcome()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("%s %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), s);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

IndSetFamily family(std::vector<int> sides) { return independent_sets(Torus(std::move(sides)).graph()); }

// N_n from the notation of the bounds: number of independent sets of the cross-section.
long cross_count(const IndSetFamily& f) { return static_cast<long>(f.size()); }

Outcome c1() {
  auto t0 = std::chrono::steady_clock::now();
  auto qs = q_series(family({8}), 4);
  IntVec want_p{1, 4, 6, 8, 44}, want_m{-1, -4, -6, -8, 26};
  double s = seconds_since(t0);
  bool ok = qs.qplus == want_p && qs.qminus == want_m && s < kC8Seconds;
  std::string got;
  for (auto& x : qs.qplus) got += x.get_str() + " ";
  got += "| ";
  for (auto& x : qs.qminus) got += x.get_str() + " ";
  return {ok, "q+ q- = " + got};
}

Outcome c2() {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  for (auto sides : {std::vector<int>{2}, {4}, {6}, {8}, {4, 4}}) {
    auto fam = family(sides);
    const int alpha = fam.alpha;
    auto qs = q_series(fam, alpha);
    auto ab = a_b_split(qs.qplus, qs.qminus);
    for (int n = 0; n < alpha; ++n) ok = ok && ab.a[n] == 0;
    ok = ok && ab.a[alpha] >= 1;
    detail += "a_" + std::to_string(alpha) + "=" + ab.a[alpha].get_str() + " ";
  }
  double s = seconds_since(t0);
  return {ok && s < kANSeconds, detail};
}

Outcome c3() {
  bool ok = true;
  auto b1 = bound_sequences(1, 199);
  mpz_class six = 1;
  double worst = 0;
  for (int n = 1; n <= 199; ++n) {
    six *= 6;
    mpq_class bound(six, mpz_class((n + 1) * (n + 1)));
    if (b1.y[n] > bound) ok = false;
    worst = std::max(worst, mpq_class(b1.y[n] / bound).get_d());
  }
  for (long N : {1L, 2L, 3L}) {
    auto b = bound_sequences(N, 50);
    mpz_class base = 6 * N * N, pw = 1;
    for (int n = 0; n <= 50; ++n) {
      if (b.x[n] > pw) ok = false;
      pw *= base;
    }
  }
  return {ok, fmt("max y_n / (6^n/(n+1)^2) = %.4f", worst)};
}

Outcome c4() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  int checked = 0;
  for (const Graph& g : {single_vertex(), Torus({2}).graph(), Torus({4}).graph()}) {
    auto fam = independent_sets(g);
    for (int n = 3; n <= 6; ++n) {
      ok = ok && indep_poly_cycle_product(n, fam) == indep_poly(cartesian_cycle(n, g));
      ++checked;
    }
  }
  double s = seconds_since(t0);
  return {ok && s < kTraceSeconds, std::to_string(checked) + " (n, G) pairs"};
}

Outcome c5() {
  auto t0 = std::chrono::steady_clock::now();
  long total = 0, contours = 0, bad = 0;
  for (auto sides : {std::vector<int>{4, 4}, std::vector<int>{4, 6}}) {
    Torus t(sides);
    ContourSpace cs(t);
    const int four_d = 4 * t.d();
    const double rho = peierls_rho(t.d());
    auto fam = independent_sets(t.graph());
    total += static_cast<long>(fam.size());
#pragma omp parallel for reduction(+ : bad, contours)
    for (long i = 0; i < static_cast<long>(fam.size()); ++i) {
      const auto tau = fam.sets[i];
      auto ms = contours_of(cs, tau);
      if (configuration_of(cs, ms) != tau) ++bad;
      if (ms.energy_numer() != four_d * (t.alpha() - std::popcount(tau))) ++bad;
      for (const auto& c : ms.contours) {
        ++contours;
        const int sz = std::popcount(c.support);
        if (c.energy_numer % four_d != 0) ++bad;
        const double e = static_cast<double>(c.energy_numer) / four_d;
        if (e < rho * sz || e > sz) ++bad;
      }
    }
  }
  double s = seconds_since(t0);
  return {bad == 0 && s < kContourSeconds,
          std::to_string(total) + " configurations, " + std::to_string(contours) + " contours, " +
              std::to_string(bad) + " violations"};
}

Outcome c6() {
  bool ok = true;
  for (auto sides : {std::vector<int>{4, 4}, std::vector<int>{4, 6}}) {
    Torus t(sides);
    ContourSpace cs(t);
    auto fam = independent_sets(t.graph());
    // Z_match from contour energies, independent of the independence polynomial.
    IntPoly zm(t.alpha() + 1, 0);
    for (std::size_t i = 0; i < fam.size(); ++i) zm[contours_of(cs, fam.sets[i]).energy_numer() / (4 * t.d())] += 1;
    trim(zm);
    ok = ok && poly_reverse(zm, t.alpha()) == oracle::indep_poly(t.graph());
  }
  return {ok, "Z4xZ4 and Z4xZ6"};
}

Outcome c7() {
  Torus t({4, 4});
  ContourSpace cs(t);
  ContourCatalog cat(cs);
  auto split = cat.z_match_split();
  bool ok = split.even == split.odd;
  auto weighted_sum = [&](const std::vector<const Contour*>& list, const mpq_class& z) {
    std::vector<mpq_class> w;
    std::vector<std::vector<int>> conflicts(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      w.push_back(cat.contour_weight(*list[i], z));
      for (std::size_t j = 0; j < list.size(); ++j) {
        if (i == j) continue;
        bool compatible = cs.far_apart(list[i]->support, list[j]->support) && !(list[i]->large && list[j]->large);
        if (!compatible) conflicts[i].push_back(static_cast<int>(j));
      }
    }
    return compatible_sum(conflicts, w);
  };
  std::vector<const Contour*> small, with_large;
  for (const auto& c : cat.small(Ground::even)) small.push_back(&c), with_large.push_back(&c);
  for (const auto& c : cat.large()) with_large.push_back(&c);
  for (mpq_class z : {mpq_class(1, 3), mpq_class(1, 7), mpq_class(1, 10)}) {
    ok = ok && weighted_sum(small, z) == eval(split.even, z);
    ok = ok && weighted_sum(with_large, z) == eval(poly_add(split.even, split.large), z);
  }
  return {ok, std::to_string(small.size()) + " small even contours, " + std::to_string(cat.large().size()) +
                  " large"};
}

Outcome c8() {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0, 1);
  bool ok = true;
  double worst_q = INFINITY, worst_gap = INFINITY;
  for (int side : {2, 4, 6}) {
    auto fam = family({side});
    const double N = static_cast<double>(cross_count(fam));
    const double rmax = 1.0 / (144 * N * N);
    for (int k = 0; k < 100; ++k) {
      const double r = rmax * (0.001 + 0.998 * u(rng)), th = 2 * std::numbers::pi * u(rng);
      auto tr = spectrum(fam, std::polar<long double>(r, th));
      const double qp = std::abs(tr.qplus), qm = std::abs(tr.qminus);
      double bulk = 0;
      for (std::size_t i = 0; i < tr.eigenvalues.size(); ++i)
        if (tr.labels[i] == Label::bulk) bulk = std::max(bulk, static_cast<double>(std::abs(tr.eigenvalues[i])));
      worst_q = std::min({worst_q, qp, qm});
      if (bulk > 0) worst_gap = std::min(worst_gap, std::min(qp, qm) / bulk);
      ok = ok && qp >= kQGap && qm >= kQGap && std::min(qp, qm) >= 2 * bulk;
    }
  }
  return {ok, fmt("min |q| = %.6f, min |q|/bulk = %.3g", worst_q, worst_gap)};
}

Outcome c9() {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0, 1);
  bool ok = true;
  double worst = INFINITY;
  for (int side : {2, 4}) {
    auto fam = family({side});
    const double N = static_cast<double>(cross_count(fam));
    const int alpha = fam.alpha;
    const double rmax = std::pow(6 * N * N, -(alpha + 2));
    for (int k = 0; k < 100; ++k) {
      const long double r = rmax * (0.001 + 0.998 * u(rng)), th = 2 * std::numbers::pi * u(rng);
      lcplx z = std::polar(r, th);
      const long double lhs = std::abs(beta_plus_one_refined(fam, z));
      const long double rhs = 0.5L * std::pow(r, alpha);
      const double margin = static_cast<double>(lhs / rhs);
      worst = std::min(worst, margin);
      ok = ok && margin >= kBetaMargin;
    }
  }
  return {ok, fmt("worst |beta+1| / (|z|^alpha/2) = %.4f", worst)};
}

Outcome c10() {
  auto t0 = std::chrono::steady_clock::now();
  auto fam = family({2});
  const double R = 157465;
  const long n = static_cast<long>(std::ceil(80 * R));
  auto rep = zero_search(fam, n, R);
  std::vector<lcplx> good;
  double worst = 0;
  for (const auto& z : rep.zeros) {
    if (std::abs(z.lambda) < R || !(z.residual < kResidual)) continue;
    bool distinct = true;
    for (auto g : good) distinct = distinct && std::abs(g - z.lambda) > 1e-9L * std::abs(g);
    if (distinct) good.push_back(z.lambda), worst = std::max(worst, z.residual);
  }
  double s = seconds_since(t0);
  return {good.size() >= 5 && s < kZeroSeconds,
          fmt("n = %.0f, %.0f certified zeros, worst residual %.2g", static_cast<double>(n),
              static_cast<double>(good.size()), worst) +
              ", seeds " + std::to_string(rep.seeds) + ", failed " + std::to_string(rep.failed)};
}

Outcome c11() {
  auto fam = family({2});
  double running = 0;
  bool nondecreasing = true, exceeds = false;
  std::string detail;
  for (int n : {4, 8, 16, 32, 64}) {
    double m = 0;
    for (auto r : poly_roots(indep_poly_cycle_product(n, fam))) m = std::max(m, static_cast<double>(std::abs(r)));
    const double next = std::max(running, m);
    nondecreasing = nondecreasing && next >= running;
    running = next;
    exceeds = exceeds || m > 2;
    detail += fmt("n=%.0f:%.4f ", n, m);
  }
  return {nondecreasing && exceeds, detail};
}

// A real z < 0 where the two largest eigenvalues of M_z tie in modulus.
std::optional<lcplx> curve_seed(const IndSetFamily& fam) {
  for (long double z = -0.5L; z > -200.0L; z *= 1.05L) {
    auto ev = eigenvalues(transfer_matrix(fam, lcplx(z, 0)));
    std::sort(ev.begin(), ev.end(), [](lcplx a, lcplx b) { return std::abs(a) > std::abs(b); });
    if (ev.size() >= 2 && std::abs(std::abs(ev[0]) - std::abs(ev[1])) < 1e-12L * std::abs(ev[0])) return lcplx(z, 0);
  }
  return std::nullopt;
}

Outcome c12() {
  bool ok = true;
  std::string detail;
  for (auto [side, target] : {std::pair{2, -0.172}, std::pair{4, -0.126}}) {
    auto fam = family({side});
    auto seed = curve_seed(fam);
    if (!seed) return {false, "no seed on the real axis for C" + std::to_string(side)};
    auto curve = equal_modulus_curve(fam, *seed, 4000);
    auto cross = real_axis_crossings(curve);
    double best = INFINITY;
    for (double x : cross)
      if (std::abs(x - target) < std::abs(best - target)) best = x;
    ok = ok && std::abs(best - target) <= kCurveTol;
    detail += "C" + std::to_string(side) + fmt(": %.5f ", best);
  }
  return {ok, detail};
}

Outcome c13() {
  Torus t({4, 4});
  ContourSpace cs(t);
  ContourCatalog cat(cs);
  auto split = cat.z_match_split();
  auto p1 = poly_add(split.even, split.large);
  auto ind = oracle::indep_poly(t.graph());
  bool ok = true;
  std::string detail;
  for (cplx lam : {cplx(20, 0), cplx(-10, 0), cplx(0, 15)}) {
    lcplx exact_l = eval(ind, lcplx(lam.real(), lam.imag()));
    cplx exact(static_cast<double>(exact_l.real()), static_cast<double>(exact_l.imag()));
    std::vector<double> err;
    int reached = -1;
    for (int m = 1; m <= kFptasMaxOrder; ++m) {
      FptasOptions o;
      o.m = m;
      double e = std::abs(fptas_from_split(p1, split.odd, t.alpha(), lam, kFptasEps, o).approx / exact - 1.0);
      err.push_back(e);
      if (reached < 0 && e <= kFptasEps) reached = m;
    }
    // Geometric decay: least-squares slope of log error over the orders before
    // rounding noise (1e-13) takes over.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int k = 0;
    for (int m = 1; m <= kFptasMaxOrder && err[m - 1] > 1e-13; ++m, ++k) {
      double y = std::log(err[m - 1]);
      sx += m, sy += y, sxx += m * m, sxy += m * y;
    }
    const double slope = k >= 2 ? (k * sxy - sx * sy) / (k * sxx - sx * sx) : -INFINITY;
    ok = ok && reached > 0 && slope < 0;
    detail += fmt("lambda=(%g,%g): ", lam.real(), lam.imag()) + fmt("m*=%.0f rate=%.3f; ", reached, std::exp(slope));
  }
  return {ok, detail};
}

Outcome c14() {
  bool ok = true;
  long long fact = 1;
  for (int k = 1; k <= 6; ++k) {
    if (k > 1) fact *= k - 1;
    std::vector<std::vector<std::uint8_t>> a(k, std::vector<std::uint8_t>(k, 1));
    for (int i = 0; i < k; ++i) a[i][i] = 0;
    ok = ok && ursell(a) == ((k % 2) ? fact : -fact);
  }
  PolymerSystem s;
  const double eps = 0.01;
  s.add(eps, 1);
  s.add(eps, 1, {0});
  s.add(eps, 1, {1});
  s.add(eps * eps, 2, {2});
  s.add(eps, 1, {3, 0});
  auto rep = kp_check(s, 0.1, 1.0);
  ok = ok && rep.pass;
  const cplx zpol = polymer_partition(s);
  double worst = 0;
  for (int B : {2, 4, 6, 8}) {
    const cplx approx = std::exp(cluster_expansion_partial(s, B));
    // |exp(a) - exp(b)| <= |Z| (exp(t) - 1) when |a - b| <= t.
    const double tail = kp_tail_bound(s, 0.1, 1.0, B);
    const double err = std::abs(approx - zpol);
    ok = ok && err <= std::abs(zpol) * std::expm1(tail);
    worst = std::max(worst, err / (std::abs(zpol) * std::expm1(tail)));
  }
  return {ok, fmt("KP ratio %.3f, worst error / tail bound %.3g", rep.worst_ratio, worst)};
}

Outcome c15() {
  bool ok = true;
  auto p = dary_tree_poly(3, 6);
  mpz_class z1 = eval(p, mpz_class(1));
  // log10 through the leading digits.
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, z1.get_mpz_t());
  const double l10 = std::log10(mant) + exp2 * std::log10(2.0);
  ok = ok && degree(p) == 820 && l10 > 254 && l10 < 256;
  auto c = lambda_critical(3);
  ok = ok && c.plus == mpq_class(27, 16) && c.minus == mpq_class(-27, 256);
  ok = ok && diamond_polys(1).total() == IntPoly{1, 4, 2};
  auto g2 = diamond_graph(2);
  ok = ok && g2.g.n == 12 && diamond_polys(2).total() == oracle::indep_poly(g2.g);
  return {ok, fmt("deg %.0f, log10 Z(1) = %.4f", degree(p), l10)};
}

}  // namespace

int main() {
  run(1, "C8 golden series", c1);
  run(2, "a_n vanishes below alpha", c2);
  run(3, "bound sequences", c3);
  run(4, "transfer trace oracle", c4);
  run(5, "contour bijection and energy", c5);
  run(6, "reversal identity", c6);
  run(7, "polymer identities", c7);
  run(8, "spectral gap", c8);
  run(9, "beta bound", c9);
  run(10, "zero count at large radius", c10);
  run(11, "zero growth", c11);
  run(12, "accumulation endpoints", c12);
  run(13, "fptas convergence", c13);
  run(14, "cluster machinery", c14);
  run(15, "dynamics goldens", c15);
  std::printf("%d of 15 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
