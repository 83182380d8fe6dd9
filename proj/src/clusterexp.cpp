// SPDX-License-Identifier: Apache-2.0
#include "tzlab/clusterexp.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <string>

namespace tzlab {

namespace {

constexpr int kMaxPolymers = 24;
constexpr int kMaxUrsell = 10;

}  // namespace

int PolymerSystem::add(cplx weight, int sz, const std::vector<int>& clashes) {
  const int n = count();
  for (auto& row : incompat) row.push_back(0);
  incompat.emplace_back(n + 1, 0);
  incompat[n][n] = 1;
  for (int j : clashes) {
    if (j < 0 || j >= n) throw Error(Errc::BadParameters, "clash index out of range");
    incompat[n][j] = incompat[j][n] = 1;
  }
  w.push_back(weight);
  size.push_back(sz);
  return n;
}

void PolymerSystem::validate() const {
  const int n = count();
  if (static_cast<int>(incompat.size()) != n || static_cast<int>(size.size()) != n)
    throw Error(Errc::BadParameters, "polymer system arrays disagree in length");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(incompat[i].size()) != n) throw Error(Errc::BadParameters, "incompatibility matrix not square");
    if (!incompat[i][i]) throw Error(Errc::BadParameters, "polymer compatible with itself");
    if (size[i] < 1) throw Error(Errc::BadParameters, "polymer size must be positive");
    for (int j = 0; j < n; ++j)
      if (incompat[i][j] != incompat[j][i]) throw Error(Errc::BadParameters, "incompatibility not symmetric");
  }
}

std::vector<std::vector<int>> conflict_lists(const PolymerSystem& sys) {
  const int n = sys.count();
  std::vector<std::vector<int>> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && sys.incompat[i][j]) out[i].push_back(j);
  return out;
}

cplx polymer_partition(const PolymerSystem& sys) {
  sys.validate();
  if (sys.count() > kMaxPolymers) throw Error(Errc::TooLarge, "more than 24 polymers");
  return compatible_sum(conflict_lists(sys), sys.w);
}

mpq_class polymer_partition(const PolymerSystem& sys, const std::vector<mpq_class>& w) {
  sys.validate();
  if (sys.count() > kMaxPolymers) throw Error(Errc::TooLarge, "more than 24 polymers");
  if (static_cast<int>(w.size()) != sys.count()) throw Error(Errc::BadParameters, "weight count mismatch");
  return compatible_sum(conflict_lists(sys), w);
}

long long ursell(const std::vector<std::vector<std::uint8_t>>& adj) {
  const int k = static_cast<int>(adj.size());
  if (k > kMaxUrsell) throw Error(Errc::TooLarge, "ursell needs k <= 10");
  if (k == 0) return 0;
  const unsigned full = (1u << k) - 1;
  // g[S] = sum over all edge subsets of H[S] of (-1)^|E| = [H[S] has no edges].
  std::vector<long long> g(full + 1), c(full + 1, 0);
  for (unsigned s = 0; s <= full; ++s) {
    bool empty = true;
    for (int i = 0; i < k && empty; ++i)
      if ((s >> i) & 1)
        for (int j = i + 1; j < k; ++j)
          if (((s >> j) & 1) && adj[i][j]) {
            empty = false;
            break;
          }
    g[s] = empty ? 1 : 0;
  }
  // g[S] = sum over T containing min(S) of c[T] g[S \ T].
  for (unsigned s = 1; s <= full; ++s) {
    const unsigned low = s & (~s + 1);
    const unsigned rest = s ^ low;
    long long acc = g[s];
    for (unsigned sub = (rest - 1) & rest;; sub = (sub - 1) & rest) {
      // T = low | sub, proper subset of S when sub != rest.
      if (sub != rest) acc -= c[low | sub] * g[rest & ~sub];
      if (sub == 0) break;
    }
    c[s] = acc;
  }
  return c[full];
}

namespace {

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Clusters whose lowest-index polymer is root.
cplx clusters_from_root(const PolymerSystem& sys, int root, int budget) {
  const int n = sys.count();
  std::vector<int> mult(n, 0);
  cplx total = 0;
  auto leaf = [&]() {
    std::vector<int> copies;
    for (int i = 0; i < n; ++i)
      for (int r = 0; r < mult[i]; ++r) copies.push_back(i);
    const int k = static_cast<int>(copies.size());
    if (k > kMaxUrsell) throw Error(Errc::TooLarge, "cluster with more than 10 polymers");
    std::vector<std::vector<std::uint8_t>> h(k, std::vector<std::uint8_t>(k, 0));
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) h[a][b] = h[b][a] = sys.incompat[copies[a]][copies[b]];
    long long psi = ursell(h);
    if (psi == 0) return;
    cplx prod = static_cast<double>(psi);
    for (int i = 0; i < n; ++i)
      if (mult[i]) {
        for (int r = 0; r < mult[i]; ++r) prod *= sys.w[i];
        prod /= factorial(mult[i]);
      }
    total += prod;
  };
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n) {
      leaf();
      return;
    }
    const int lo = i == root ? 1 : 0;
    for (int m = lo; m * sys.size[i] <= left; ++m) {
      mult[i] = m;
      self(self, i + 1, left - m * sys.size[i]);
    }
    mult[i] = 0;
  };
  rec(rec, root, budget);
  return total;
}

}  // namespace

cplx cluster_expansion_partial(const PolymerSystem& sys, int max_total_size, Exec ex) {
  sys.validate();
  const int n = sys.count();
  std::vector<cplx> part(n, 0);
  std::vector<int> failed(n, 0);
#pragma omp parallel for schedule(dynamic, 1) if (ex == Exec::parallel)
  for (int r = 0; r < n; ++r) {
    try {
      part[r] = clusters_from_root(sys, r, max_total_size);
    } catch (const Error&) {
      failed[r] = 1;
    }
  }
  for (int r = 0; r < n; ++r)
    if (failed[r]) throw Error(Errc::TooLarge, "cluster with more than 10 polymers within the size bound");
  cplx total = 0;
  for (int r = 0; r < n; ++r) total += part[r];
  return total;
}

KPReport kp_check(const PolymerSystem& sys, double a_mult, double b_mult) {
  sys.validate();
  const int n = sys.count();
  KPReport rep;
  rep.worst_ratio = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    double lhs = 0;
    for (int j = 0; j < n; ++j)
      if (sys.incompat[i][j]) lhs += std::abs(sys.w[j]) * std::exp((a_mult + b_mult) * sys.size[j]);
    const double a = a_mult * sys.size[i];
    const double ratio = lhs == 0 ? std::numeric_limits<double>::infinity() : a / lhs;
    if (ratio < rep.worst_ratio || rep.worst < 0) {
      rep.worst_ratio = ratio;
      rep.worst = i;
    }
  }
  rep.pass = rep.worst_ratio >= 1;
  return rep;
}

double kp_tail_bound(const PolymerSystem& sys, double a_mult, double b_mult, int max_total_size) {
  double sum_a = 0;
  for (int s : sys.size) sum_a += a_mult * s;
  return std::exp(-b_mult * (max_total_size + 1)) * sum_a;
}

LogSeries newton_log_coeffs(const std::vector<mpq_class>& a, int m) {
  if (m < 0) throw Error(Errc::BadParameters, "order must be >= 0");
  if (a.empty() || a[0] == 0) throw Error(Errc::ZeroConstantTerm, "log series needs p(0) != 0");
  if (a[0] < 0) throw Error(Errc::BadParameters, "log series needs p(0) > 0");
  auto coef = [&](int i) { return i < static_cast<int>(a.size()) ? a[i] : mpq_class(0); };
  LogSeries r;
  if (a[0].get_den() != 1) throw Error(Errc::BadParameters, "constant term must be an integer");
  r.a0 = a[0].get_num();
  r.p.assign(m + 1, 0);
  for (int k = 1; k <= m; ++k) {
    mpq_class acc = -k * coef(k);
    for (int i = 1; i < k; ++i) acc -= coef(i) * r.p[k - i];
    r.p[k] = acc / a[0];
    r.p[k].canonicalize();
  }
  return r;
}

LogSeries newton_log_coeffs(const IntPoly& poly, int m) {
  std::vector<mpq_class> a(poly.begin(), poly.end());
  return newton_log_coeffs(a, m);
}

std::vector<mpq_class> coeffs_from_log(const mpq_class& a0, const std::vector<mpq_class>& p, int m) {
  if (static_cast<int>(p.size()) <= m) throw Error(Errc::BadParameters, "log series shorter than requested order");
  std::vector<mpq_class> a(m + 1, 0);
  a[0] = a0;
  for (int k = 1; k <= m; ++k) {
    mpq_class acc = 0;
    for (int i = 0; i < k; ++i) acc -= a[i] * p[k - i];
    a[k] = acc / k;
    a[k].canonicalize();
  }
  return a;
}

}  // namespace tzlab
