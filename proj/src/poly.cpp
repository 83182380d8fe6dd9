// SPDX-License-Identifier: Apache-2.0
#include "tzlab/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace tzlab {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const IntPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

IntPoly poly_shift(const IntPoly& a, int k) {
  if (a.empty()) return {};
  IntPoly r(a.size() + k);
  for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
  return r;
}

IntPoly poly_reverse(const IntPoly& a, int deg) {
  IntPoly r(deg + 1);
  for (int i = 0; i <= deg && i < static_cast<int>(a.size()); ++i) r[deg - i] = a[i];
  trim(r);
  return r;
}

mpz_class eval(const IntPoly& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class eval(const IntPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * x + mpq_class(*it);
    acc.canonicalize();
  }
  return acc;
}

namespace {

long double to_ld(const mpz_class& z) {
  // mpz_get_d overflows beyond 1e308; split mantissa and exponent.
  long e = 0;
  double m = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::ldexp(static_cast<long double>(m), static_cast<int>(e));
}

lcplx horner(const std::vector<long double>& c, lcplx x, lcplx* deriv) {
  lcplx p = 0, dp = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * x + p;
    p = p * x + *it;
  }
  if (deriv) *deriv = dp;
  return p;
}

}  // namespace

lcplx eval(const IntPoly& p, lcplx x) {
  lcplx acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + lcplx(to_ld(*it));
  return acc;
}

std::vector<lcplx> poly_roots(const IntPoly& p0) {
  IntPoly p = p0;
  trim(p);
  int n = degree(p);
  if (n < 1) return {};
  // Strip zero roots.
  int low = 0;
  while (p[low] == 0) ++low;
  std::vector<lcplx> roots(low, lcplx(0));
  IntPoly q(p.begin() + low, p.end());
  n = degree(q);
  if (n < 1) return roots;

  std::vector<long double> c(n + 1), cr(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = to_ld(q[i]);
  for (int i = 0; i <= n; ++i) cr[i] = c[n - i];

  // Newton correction p/p', through the reversed polynomial outside the unit disk.
  auto newton = [&](lcplx x) -> lcplx {
    lcplx dp;
    if (std::abs(x) <= 1) {
      lcplx v = horner(c, x, &dp);
      return dp == lcplx(0) ? lcplx(0) : v / dp;
    }
    lcplx y = 1.0L / x;
    lcplx v = horner(cr, y, &dp);
    if (v == lcplx(0)) return 0;
    return x / (static_cast<long double>(n) - y * dp / v);
  };

  // Initial guesses on circles read off the upper convex hull of (i, log|c_i|).
  std::vector<int> hull;
  std::vector<long double> lg(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (c[i] == 0) continue;
    lg[i] = std::log(std::fabs(c[i]));
    while (hull.size() >= 2) {
      int a = hull[hull.size() - 2], b = hull.back();
      if ((lg[b] - lg[a]) * (i - a) <= (lg[i] - lg[a]) * (b - a))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(i);
  }
  std::vector<lcplx> z;
  z.reserve(n);
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const int k = hull[h], l = hull[h + 1], m = l - k;
    const long double u = std::exp((lg[k] - lg[l]) / m);
    for (int j = 0; j < m; ++j) z.push_back(std::polar(u, two_pi * j / m + two_pi * k / n + 0.7L));
  }

  // Aberth-Ehrlich iteration, Gauss-Seidel style.
  const long double tol = 8 * std::numeric_limits<long double>::epsilon();
  std::vector<std::uint8_t> done(n, 0);
  for (int it = 0; it < 2000; ++it) {
    int active = 0;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      lcplx nc = newton(z[i]);
      lcplx sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != i && z[j] != z[i]) sum += 1.0L / (z[i] - z[j]);
      lcplx w = nc / (1.0L - nc * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = nc;
      z[i] -= w;
      if (std::abs(w) <= tol * std::abs(z[i])) done[i] = 1;
      else ++active;
    }
    if (active == 0) break;
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

double cauchy_bound(const IntPoly& p) {
  int n = degree(p);
  if (n < 1) return 0;
  long double an = std::fabs(to_ld(p[n]));
  long double m = 0;
  for (int i = 0; i < n; ++i) m = std::max(m, std::fabs(to_ld(p[i])) / an);
  return static_cast<double>(1 + m);
}

std::vector<std::string> coeff_strings(const IntPoly& p) {
  std::vector<std::string> out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c.get_str());
  if (out.empty()) out.push_back("0");
  return out;
}

}  // namespace tzlab
