// SPDX-License-Identifier: Apache-2.0
#include "tzlab/transfer.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "tzlab/qseries.hpp"

namespace tzlab {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;
constexpr long double kEps = std::numeric_limits<long double>::epsilon();

std::vector<lcplx> powers(lcplx z, int k) {
  std::vector<lcplx> p(k + 1);
  p[0] = 1;
  for (int i = 1; i <= k; ++i) p[i] = p[i - 1] * z;
  return p;
}

std::size_t nearest(const std::vector<lcplx>& ev, lcplx x, long skip = -1) {
  std::size_t best = 0;
  long double bd = std::numeric_limits<long double>::infinity();
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (static_cast<long>(i) == skip) continue;
    long double d = std::abs(ev[i] - x);
    if (d < bd) bd = d, best = i;
  }
  return best;
}

long double gap_to_others(const std::vector<lcplx>& ev, std::size_t i) {
  long double g = std::numeric_limits<long double>::infinity();
  for (std::size_t j = 0; j < ev.size(); ++j)
    if (j != i) g = std::min(g, std::abs(ev[j] - ev[i]));
  return g;
}

}  // namespace

LMat transfer_matrix(const IndSetFamily& fam, lcplx z) {
  const long N = static_cast<long>(fam.size());
  auto zp = powers(z, fam.alpha);
  LMat m = LMat::Zero(N, N);
  for (long s = 0; s < N; ++s) {
    lcplx w = zp[fam.deficiency(s)];
    for (long t = 0; t < N; ++t)
      if (!(fam.sets[s] & fam.sets[t])) m(s, t) = w;
  }
  return m;
}

LMat symmetric_transfer(const IndSetFamily& fam, lcplx z) {
  const long N = static_cast<long>(fam.size());
  auto hp = powers(std::sqrt(z), fam.alpha);
  LMat m = LMat::Zero(N, N);
  for (long s = 0; s < N; ++s)
    for (long t = 0; t < N; ++t)
      if (!(fam.sets[s] & fam.sets[t])) m(s, t) = hp[fam.deficiency(s)] * hp[fam.deficiency(t)];
  return m;
}

std::vector<lcplx> eigenvalues(const LMat& m) {
  Eigen::ComplexEigenSolver<LMat> es(m, false);
  if (es.info() != Eigen::Success) throw Error(Errc::NoConvergence, "eigenvalue iteration did not converge");
  const auto& e = es.eigenvalues();
  return std::vector<lcplx>(e.data(), e.data() + e.size());
}

SpectrumTrack spectrum(const IndSetFamily& fam, lcplx z, const TrackOptions& opt) {
  SpectrumTrack st;
  st.z = z;
  lcplx pp = 1, pm = -1;
  std::vector<lcplx> ev;
  std::size_t ip = 0, im = 0;
  if (z == lcplx(0)) {
    ev = eigenvalues(transfer_matrix(fam, z));
    ip = nearest(ev, pp);
    im = nearest(ev, pm, static_cast<long>(ip));
  } else {
    long double t = 0, h = 1;
    while (t < 1) {
      long double tn = std::min<long double>(1, t + h);
      auto cand = eigenvalues(transfer_matrix(fam, z * tn));
      std::size_t a = nearest(cand, pp);
      std::size_t b = nearest(cand, pm, static_cast<long>(a));
      bool ok = std::abs(cand[a] - pp) <= 0.5L * gap_to_others(cand, a) &&
                std::abs(cand[b] - pm) <= 0.5L * gap_to_others(cand, b) && nearest(cand, pm) == b;
      if (ok) {
        t = tn;
        pp = cand[a];
        pm = cand[b];
        ev = std::move(cand);
        ip = a;
        im = b;
        ++st.steps;
        h = std::min<long double>(1, 2 * h);
      } else {
        h /= 2;
        if (h < opt.min_step)
          throw Error(Errc::TrackingFailure, "q+/q- continuation stalled near t=" + std::to_string((double)t));
      }
    }
  }
  st.eigenvalues = ev;
  st.labels.assign(ev.size(), Label::bulk);
  st.labels[ip] = Label::qplus;
  st.labels[im] = Label::qminus;
  st.qplus = ev[ip];
  st.qminus = ev[im];
  return st;
}

lcplx beta(const IndSetFamily& fam, lcplx z, const TrackOptions& opt) {
  auto st = spectrum(fam, z, opt);
  return st.qminus / st.qplus;
}

double trace_residual(const std::vector<lcplx>& eig, long n) {
  long double smax = 0;
  for (auto s : eig) smax = std::max(smax, std::abs(s));
  if (smax == 0) return 0;
  lcplx acc = 0;
  for (auto s : eig) {
    if (s == lcplx(0)) continue;
    acc += std::exp(static_cast<long double>(n) * std::log(s / smax));
  }
  return static_cast<double>(std::abs(acc));
}

namespace {

struct HEval {
  lcplx h, beta;
  std::vector<lcplx> ev;
};

HEval eval_h(const IndSetFamily& fam, lcplx z, long n, const TrackOptions& opt) {
  auto st = spectrum(fam, z, opt);
  HEval r;
  r.beta = st.qminus / st.qplus;
  const long double ln = static_cast<long double>(n);
  // beta^n = (-1)^n (-beta)^n keeps the large phase n*pi out of the exponent.
  lcplx bn = std::exp(ln * std::log(-r.beta));
  if (n % 2) bn = -bn;
  lcplx q = 0;
  for (std::size_t i = 0; i < st.eigenvalues.size(); ++i) {
    if (st.labels[i] != Label::bulk || st.eigenvalues[i] == lcplx(0)) continue;
    q += std::exp(ln * std::log(st.eigenvalues[i] / st.qplus));
  }
  r.h = 1.0L + bn + q;
  r.ev = std::move(st.eigenvalues);
  return r;
}

template <class F>
lcplx central_diff(F&& f, lcplx z) {
  long double d = 1e-7L * std::max<long double>(std::abs(z), 1e-30L);
  return (f(z + d) - f(z - d)) / (2 * d);
}

bool solve_beta(const IndSetFamily& fam, lcplx zeta, lcplx& z, long n, const TrackOptions& opt) {
  auto g = [&](lcplx x) { return beta(fam, x, opt) - zeta; };
  for (int it = 0; it < 60; ++it) {
    lcplx gv = g(z);
    lcplx dg = central_diff(g, z);
    if (dg == lcplx(0)) return false;
    lcplx step = gv / dg;
    z -= step;
    if (std::abs(step) <= 1e-15L * std::abs(z)) break;
  }
  return std::abs(g(z)) * n < 0.25L;
}

bool newton_h(const IndSetFamily& fam, long n, lcplx& z, long double tol, int max_iter, const TrackOptions& opt,
              HEval& out) {
  auto hf = [&](lcplx x) { return eval_h(fam, x, n, opt).h; };
  HEval cur = eval_h(fam, z, n, opt);
  for (int it = 0; it < max_iter; ++it) {
    if (std::abs(cur.h) < tol) {
      out = std::move(cur);
      return true;
    }
    lcplx dh = central_diff(hf, z);
    if (dh == lcplx(0) || !std::isfinite(std::abs(dh))) return false;
    lcplx step = cur.h / dh;
    bool moved = false;
    for (int k = 0; k < 12; ++k) {
      lcplx zn = z - step;
      HEval nxt = eval_h(fam, zn, n, opt);
      if (std::abs(nxt.h) < std::abs(cur.h) || std::abs(nxt.h) < tol) {
        z = zn;
        cur = std::move(nxt);
        moved = true;
        break;
      }
      step /= 2;
    }
    if (!moved) return false;
  }
  if (std::abs(cur.h) < tol) {
    out = std::move(cur);
    return true;
  }
  return false;
}

}  // namespace

ZeroSearchReport zero_search(const IndSetFamily& fam, long n, double R, const ZeroSearchOptions& opt, Exec ex) {
  if (n < 3) throw Error(Errc::BadParameters, "zero_search needs n >= 3");
  if (!(R > 1)) throw Error(Errc::BadParameters, "zero_search needs R > 1");
  const int alpha = fam.alpha;
  auto qs = q_series(fam, alpha, Exec::serial);
  mpz_class aa2 = qs.qplus[alpha] + qs.qminus[alpha];  // 2 a_alpha
  if (aa2 == 0) throw Error(Errc::BadParameters, "a_alpha vanished; seeding formula needs a_alpha != 0");
  const long double two_a = aa2.get_d();

  const long double rho = 0.5L * std::pow(static_cast<long double>(R), -static_cast<long double>(alpha));
  std::vector<long> js;  // zeta = -exp(i pi j / n), j = 2k + 1 - n
  long jmax = opt.full_circle ? n : static_cast<long>(std::floor(n * rho / 5));
  for (long j = -jmax; j <= jmax; ++j) {
    if (((j + n) % 2 + 2) % 2 != 1) continue;
    if (opt.full_circle && j == n) continue;  // same root as j = -n
    js.push_back(j);
  }

  struct Job {
    long j;
    int branch;
  };
  std::vector<Job> jobs;
  for (long j : js)
    for (int b = 0; b < alpha; ++b) jobs.push_back({j, b});

  const long double tol = opt.tol > 0 ? opt.tol : std::max<long double>(1e-12L, 32 * n * kEps);
  std::vector<int> ok(jobs.size(), 0);
  std::vector<FoundZero> found(jobs.size());

#pragma omp parallel for schedule(dynamic) if (ex == Exec::parallel)
  for (long k = 0; k < static_cast<long>(jobs.size()); ++k) {
    try {
      const auto& jb = jobs[k];
      lcplx zeta = -std::exp(lcplx(0, kPi * jb.j / n));
      lcplx z = std::pow((zeta + 1.0L) / two_a, 1.0L / alpha) * std::exp(lcplx(0, 2 * kPi * jb.branch / alpha));
      if (!solve_beta(fam, zeta, z, n, opt.track)) continue;
      HEval he;
      if (!newton_h(fam, n, z, tol, opt.max_iter, opt.track, he)) continue;
      if (z == lcplx(0)) continue;
      double res = trace_residual(he.ev, n);
      if (!(res < opt.residual_tol)) continue;
      found[k] = {1.0L / z, z, res};
      ok[k] = 1;
    } catch (const Error&) {
    }
  }

  ZeroSearchReport rep;
  rep.seeds = static_cast<int>(jobs.size());
  std::vector<FoundZero> all;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    if (!ok[k]) {
      ++rep.failed;
      continue;
    }
    if (std::abs(found[k].lambda) >= R) all.push_back(found[k]);
  }
  std::sort(all.begin(), all.end(), [](const FoundZero& a, const FoundZero& b) {
    if (std::abs(a.lambda) != std::abs(b.lambda)) return std::abs(a.lambda) < std::abs(b.lambda);
    return std::arg(a.lambda) < std::arg(b.lambda);
  });
  for (const auto& f : all) {
    bool dup = false;
    for (const auto& g : rep.zeros)
      if (std::abs(g.z - f.z) <= 1e-9L * std::abs(f.z)) dup = true;
    if (!dup) rep.zeros.push_back(f);
  }
  return rep;
}

namespace {

struct Pair {
  lcplx a, b;
  bool top;
};

Pair match_pair(const IndSetFamily& fam, lcplx z, lcplx pa, lcplx pb) {
  auto ev = eigenvalues(transfer_matrix(fam, z));
  std::size_t ia = nearest(ev, pa);
  std::size_t ib = nearest(ev, pb, static_cast<long>(ia));
  Pair p{ev[ia], ev[ib], true};
  long double lo = std::min(std::abs(p.a), std::abs(p.b));
  for (std::size_t i = 0; i < ev.size(); ++i)
    if (i != ia && i != ib && std::abs(ev[i]) > lo * (1 + 1e-9L)) p.top = false;
  return p;
}

long double tie_gap(const Pair& p) { return std::abs(p.a) - std::abs(p.b); }

lcplx tie_gradient(const IndSetFamily& fam, lcplx z, const Pair& p) {
  long double d = 1e-7L * std::max<long double>(1, std::abs(z));
  auto f = [&](lcplx x) { return tie_gap(match_pair(fam, x, p.a, p.b)); };
  long double fx = (f(z + d) - f(z - d)) / (2 * d);
  long double fy = (f(z + lcplx(0, d)) - f(z - lcplx(0, d))) / (2 * d);
  return {fx, fy};
}

std::vector<lcplx> trace_branch(const IndSetFamily& fam, lcplx seed, Pair p, int steps, int dir,
                                const CurveOptions& opt) {
  std::vector<lcplx> pts;
  lcplx z = seed;
  lcplx g = tie_gradient(fam, z, p);
  if (std::abs(g) == 0) return pts;
  lcplx t = lcplx(0, static_cast<long double>(dir)) * g / std::abs(g);
  long double h = opt.step;
  const long double scale = std::max<long double>(std::abs(p.a), 1e-300L);
  int accepted = 0;
  while (accepted < steps && h >= opt.min_step) {
    lcplx zp = z + h * t;
    Pair q = p;
    bool conv = false;
    lcplx gq;
    for (int it = 0; it < 12; ++it) {
      q = match_pair(fam, zp, q.a, q.b);
      long double F = tie_gap(q);
      gq = tie_gradient(fam, zp, q);
      if (std::abs(F) < opt.tol * scale) {
        conv = true;
        break;
      }
      long double g2 = std::norm(gq);
      if (g2 == 0 || !std::isfinite(g2)) break;
      zp -= F * gq / g2;
    }
    if (conv && q.top && std::abs(zp - z) < 2 * h && std::abs(gq) > 0) {
      lcplx tn = lcplx(0, 1) * gq / std::abs(gq);
      if ((tn * std::conj(t)).real() < 0) tn = -tn;
      z = zp;
      p = q;
      t = tn;
      pts.push_back(z);
      ++accepted;
      h = std::min(opt.step, 2 * h);
    } else {
      h /= 2;
    }
  }
  return pts;
}

}  // namespace

std::vector<lcplx> equal_modulus_curve(const IndSetFamily& fam, lcplx seed, int steps, const CurveOptions& opt) {
  auto ev = eigenvalues(transfer_matrix(fam, seed));
  std::sort(ev.begin(), ev.end(), [](lcplx x, lcplx y) { return std::abs(x) > std::abs(y); });
  if (ev.size() < 2) throw Error(Errc::SeedNotOnCurve, "need at least two eigenvalues");
  long double m0 = std::abs(ev[0]), m1 = std::abs(ev[1]);
  if (m0 == 0 || (m0 - m1) > opt.seed_tol * m0)
    throw Error(Errc::SeedNotOnCurve, "top two moduli differ at the seed");
  Pair p{ev[0], ev[1], true};
  auto fwd = trace_branch(fam, seed, p, steps, +1, opt);
  auto bwd = trace_branch(fam, seed, p, steps, -1, opt);
  std::vector<lcplx> out(bwd.rbegin(), bwd.rend());
  out.push_back(seed);
  out.insert(out.end(), fwd.begin(), fwd.end());
  return out;
}

std::vector<double> real_axis_crossings(const std::vector<lcplx>& curve_z) {
  std::vector<double> out;
  std::vector<lcplx> lam;
  for (auto z : curve_z) lam.push_back(1.0L / z);
  auto on_axis = [](lcplx l) { return std::fabs(l.imag()) <= 1e-9L * std::max<long double>(1, std::abs(l)); };
  for (std::size_t i = 0; i < lam.size(); ++i) {
    bool here = on_axis(lam[i]);
    bool prev = i > 0 && on_axis(lam[i - 1]);
    bool next = i + 1 < lam.size() && on_axis(lam[i + 1]);
    if (here && (!prev || !next)) out.push_back(static_cast<double>(lam[i].real()));
    if (i > 0 && !here && !prev && (lam[i].imag() > 0) != (lam[i - 1].imag() > 0)) {
      long double t = lam[i - 1].imag() / (lam[i - 1].imag() - lam[i].imag());
      out.push_back(static_cast<double>(lam[i - 1].real() + t * (lam[i].real() - lam[i - 1].real())));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace tzlab
