// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "tzlab/clusterexp.hpp"
#include "tzlab/contour.hpp"

namespace tzlab {

namespace {

constexpr int kMaxOrder = 400;

// Smallest m with deg q^{m+1} / ((m+1)(1-q)) <= eps / 2, q = |z| / r_min. Each
// log coefficient of p is bounded by deg r_min^{-j} / j.
int choose_order(const IntPoly& p, long double zabs, double eps) {
  long double rmin = INFINITY;
  for (auto r : poly_roots(p)) rmin = std::min(rmin, std::abs(r));
  const long double q = zabs / rmin;
  if (!(q < 1)) throw Error(Errc::RadiusTooLarge, "1/lambda lies outside the zero-free disk of Z_match");
  const int deg = degree(p);
  for (int m = 0; m <= kMaxOrder; ++m) {
    long double tail = deg * std::pow(q, static_cast<long double>(m + 1)) / ((m + 1) * (1 - q));
    if (tail <= eps / 2) return m;
  }
  throw Error(Errc::NoConvergence, "series order needed exceeds 400");
}

}  // namespace

FptasResult fptas_from_split(const IntPoly& p1, const IntPoly& p2, int alpha, cplx lambda, double eps,
                             const FptasOptions& opt) {
  if (lambda == cplx(0)) throw Error(Errc::ZeroLambda, "lambda must be nonzero");
  if (!(eps > 0)) throw Error(Errc::BadParameters, "eps must be positive");
  const lcplx lam(lambda.real(), lambda.imag());
  const lcplx z = 1.0L / lam;
  if (std::abs(z) > opt.radius * (1 + 1e-12)) throw Error(Errc::RadiusTooLarge, "|1/lambda| exceeds the radius");
  const IntPoly p = poly_add(p1, p2);
  const int m = opt.m >= 0 ? opt.m : choose_order(p, std::abs(z), eps);

  // log p1, log p2 -> coefficients of p1, p2 -> coefficients of p -> log p.
  const LogSeries l1 = newton_log_coeffs(p1, m), l2 = newton_log_coeffs(p2, m);
  const auto c1 = coeffs_from_log(mpq_class(l1.a0), l1.p, m);
  const auto c2 = coeffs_from_log(mpq_class(l2.a0), l2.p, m);
  std::vector<mpq_class> c(m + 1);
  for (int k = 0; k <= m; ++k) c[k] = c1[k] + c2[k];
  const LogSeries l = newton_log_coeffs(c, m);

  lcplx s = std::log(static_cast<long double>(l.a0.get_d()));
  lcplx zp = 1;
  for (int j = 1; j <= m; ++j) {
    zp *= z;
    s -= static_cast<long double>(l.p[j].get_d()) / j * zp;
  }
  lcplx lp = 1;
  for (int i = 0; i < alpha; ++i) lp *= lam;
  const lcplx out = std::exp(s) * lp;
  return {cplx(static_cast<double>(out.real()), static_cast<double>(out.imag())), m};
}

FptasResult fptas_evaluate(const Torus& t, cplx lambda, double eps, const FptasOptions& opt) {
  if (lambda == cplx(0)) throw Error(Errc::ZeroLambda, "lambda must be nonzero");
  const lcplx z = 1.0L / lcplx(lambda.real(), lambda.imag());
  if (std::abs(z) > opt.radius * (1 + 1e-12)) throw Error(Errc::RadiusTooLarge, "|1/lambda| exceeds the radius");
  ContourSpace cs(t);
  ContourCatalog cat(cs);
  const auto split = cat.z_match_split();
  return fptas_from_split(poly_add(split.even, split.large), split.odd, t.alpha(), lambda, eps, opt);
}

}  // namespace tzlab
