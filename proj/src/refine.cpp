// SPDX-License-Identifier: Apache-2.0
#include <boost/multiprecision/cpp_complex.hpp>
#include <optional>
#include <vector>

#include "tzlab/transfer.hpp"

namespace tzlab {

namespace {

using mp = boost::multiprecision::cpp_complex_50;
using mpr = boost::multiprecision::cpp_bin_float_50;

bool finite(const mp& x) {
  using boost::multiprecision::isfinite;
  return isfinite(x.real()) && isfinite(x.imag());
}

mp to_mp(lcplx x) { return mp(mpr(x.real()), mpr(x.imag())); }

// trace of (M - sI)^{-1} by Gaussian elimination with partial pivoting;
// empty when s is an eigenvalue to working precision.
std::optional<mp> trace_resolvent(const std::vector<mp>& m, int n, const mp& s) {
  std::vector<mp> a(m);
  std::vector<mp> x(n * n, mp(0));
  for (int i = 0; i < n; ++i) {
    a[i * n + i] -= s;
    x[i * n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (abs(a[r * n + c]) > abs(a[piv * n + c])) piv = r;
    if (piv != c)
      for (int k = 0; k < n; ++k) {
        std::swap(a[c * n + k], a[piv * n + k]);
        std::swap(x[c * n + k], x[piv * n + k]);
      }
    mp d = a[c * n + c];
    if (d == mp(0)) return std::nullopt;
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      mp f = a[r * n + c] / d;
      if (f == mp(0)) continue;
      for (int k = 0; k < n; ++k) {
        a[r * n + k] -= f * a[c * n + k];
        x[r * n + k] -= f * x[c * n + k];
      }
    }
  }
  mp tr = 0;
  for (int i = 0; i < n; ++i) tr += x[i * n + i] / a[i * n + i];
  return tr;
}

mp refine(const std::vector<mp>& m, int n, lcplx start) {
  mp s = to_mp(start);
  for (int it = 0; it < 30; ++it) {
    auto tr = trace_resolvent(m, n, s);
    if (!tr) break;
    mp step = mp(1) / *tr;
    if (!finite(step)) break;
    s += step;
    if (abs(step) < mpr("1e-45") * abs(s)) break;
  }
  return s;
}

}  // namespace

lcplx beta_plus_one_refined(const IndSetFamily& fam, lcplx z, const TrackOptions& opt) {
  auto st = spectrum(fam, z, opt);
  const int n = static_cast<int>(fam.size());
  mp zm = to_mp(z);
  std::vector<mp> zp(fam.alpha + 1);
  zp[0] = 1;
  for (int i = 1; i <= fam.alpha; ++i) zp[i] = zp[i - 1] * zm;
  std::vector<mp> m(n * n, mp(0));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (!(fam.sets[s] & fam.sets[t])) m[s * n + t] = zp[fam.deficiency(s)];
  mp qp = refine(m, n, st.qplus);
  mp qm = refine(m, n, st.qminus);
  mp r = (qp + qm) / qp;
  return {static_cast<long double>(r.real()), static_cast<long double>(r.imag())};
}

}  // namespace tzlab
