// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tzlab/clusterexp.hpp"
#include "tzlab/contour.hpp"
#include "tzlab/exactpoly.hpp"

using namespace tzlab;

namespace {

using Adj = std::vector<std::vector<std::uint8_t>>;

Adj complete(int k) {
  Adj a(k, std::vector<std::uint8_t>(k, 1));
  for (int i = 0; i < k; ++i) a[i][i] = 0;
  return a;
}

// Sum over connected spanning edge subsets of (-1)^|E|, by enumerating edge subsets.
long long ursell_oracle(const Adj& a) {
  const int k = static_cast<int>(a.size());
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (a[i][j]) e.emplace_back(i, j);
  long long total = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << e.size()); ++s) {
    std::vector<int> parent(k);
    for (int i = 0; i < k; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int comps = k;
    for (std::size_t i = 0; i < e.size(); ++i)
      if ((s >> i) & 1) {
        int x = find(e[i].first), y = find(e[i].second);
        if (x != y) parent[x] = y, --comps;
      }
    if (comps == 1) total += (std::popcount(s) % 2) ? -1 : 1;
  }
  return total;
}

PolymerSystem toy(double eps) {
  PolymerSystem s;
  s.add(eps, 1);
  s.add(eps, 1, {0});
  s.add(eps, 1, {1});
  s.add(eps * eps, 2, {2});
  s.add(eps, 1, {3, 0});
  return s;
}

}  // namespace

TEST_CASE("polymer partition examples") {
  PolymerSystem none;
  CHECK(polymer_partition(none) == cplx(1));
  PolymerSystem one;
  one.add(0.5, 1);
  CHECK(std::abs(polymer_partition(one) - cplx(1.5)) < 1e-15);
  PolymerSystem two;
  two.add(0.5, 1);
  two.add(0.25, 1);
  CHECK(std::abs(polymer_partition(two) - cplx(1.5 * 1.25)) < 1e-15);
  two.incompat[0][1] = two.incompat[1][0] = 1;
  CHECK(std::abs(polymer_partition(two) - cplx(1.75)) < 1e-15);
  CHECK(polymer_partition(two, {mpq_class(1, 2), mpq_class(1, 4)}) == mpq_class(7, 4));
  two.incompat[0][0] = 0;
  CHECK_THROWS_AS(polymer_partition(two), Error);
}

TEST_CASE("ursell function") {
  CHECK(ursell(complete(1)) == 1);
  CHECK(ursell(complete(2)) == -1);
  CHECK(ursell(complete(3)) == 2);
  Adj path = {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
  CHECK(ursell(path) == 1);
  Adj disc = {{0, 0}, {0, 0}};
  CHECK(ursell(disc) == 0);
  long long fact = 1;
  for (int k = 1; k <= 8; ++k) {
    if (k > 1) fact *= k - 1;
    CHECK(ursell(complete(k)) == ((k % 2) ? fact : -fact));
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int k = 1 + static_cast<int>(rng() % 6);
    auto g = oracle::random_graph(k, 0.5, rng);
    Adj a(k, std::vector<std::uint8_t>(k, 0));
    for (int v = 0; v < k; ++v)
      for (int u : g.adj[v]) a[v][u] = 1;
    CHECK(ursell(a) == ursell_oracle(a));
  }
}

TEST_CASE("cluster expansion of a single polymer is log(1 + w)") {
  PolymerSystem s;
  s.add(0.2, 1);
  double series = 0, term = 1;
  for (int n = 1; n <= 8; ++n) {
    term *= 0.2;
    series += ((n % 2) ? 1 : -1) * term / n;
  }
  cplx c = cluster_expansion_partial(s, 8);
  CHECK(std::abs(c - cplx(series)) < 1e-15);
  CHECK(std::abs(c - std::log(cplx(1.2))) < 1e-6);
}

TEST_CASE("cluster expansion converges under the KP criterion") {
  auto s = toy(0.01);
  auto rep = kp_check(s, 0.1, 1.0);
  CHECK(rep.pass);
  const cplx exact = std::log(polymer_partition(s));
  for (int B : {2, 4, 6, 8}) {
    cplx ser = cluster_expansion_partial(s, B, Exec::serial);
    cplx par = cluster_expansion_partial(s, B, Exec::parallel);
    CHECK(std::abs(ser - par) < 1e-15);
    CHECK(std::abs(ser - exact) <= kp_tail_bound(s, 0.1, 1.0, B));
  }
  CHECK(!kp_check(toy(1.0), 0.1, 1.0).pass);
}

TEST_CASE("Newton identities") {
  // log(1 + x) = x - x^2/2 + ..., so p_j = (-1)^j.
  auto l = newton_log_coeffs(IntPoly{1, 1}, 6);
  CHECK(l.a0 == 1);
  for (int j = 1; j <= 6; ++j) CHECK(l.p[j] == ((j % 2) ? -1 : 1));
  // (1 + x)^2: p_j doubles.
  auto l2 = newton_log_coeffs(IntPoly{1, 2, 1}, 5);
  for (int j = 1; j <= 5; ++j) CHECK(l2.p[j] == 2 * l.p[j]);
  CHECK_THROWS_AS(newton_log_coeffs(IntPoly{0, 1}, 3), Error);
  // Round trip on the independence polynomial of a torus.
  auto p = indep_poly(Torus({4, 4}).graph());
  const int m = degree(p);
  auto lp = newton_log_coeffs(p, m);
  auto back = coeffs_from_log(lp.a0, lp.p, m);
  for (int k = 0; k <= m; ++k) CHECK(back[k] == mpq_class(p[k]));
  // p_1 = -a_1 / a_0.
  CHECK(lp.p[1] == mpq_class(-p[1], p[0]));
}

TEST_CASE("fptas") {
  Torus t({4, 4});
  ContourSpace cs(t);
  ContourCatalog cat(cs);
  auto s = cat.z_match_split();
  auto p1 = poly_add(s.even, s.large);
  FptasOptions o;
  o.m = 0;
  auto r0 = fptas_from_split(p1, s.odd, t.alpha(), cplx(20), 0.1, o);
  CHECK(std::abs(r0.approx / std::pow(cplx(20), t.alpha()) - cplx(2)) < 1e-12);

  auto ind = indep_poly(t.graph());
  const cplx lam(20);
  const cplx exact(eval(ind, mpz_class(20)).get_d());
  std::vector<double> err;
  for (int m = 1; m <= 12; ++m) {
    o.m = m;
    err.push_back(std::abs(fptas_from_split(p1, s.odd, t.alpha(), lam, 0.1, o).approx / exact - 1.0));
  }
  // Not monotone step by step, but a factor 10 every four orders.
  for (int m = 0; m + 4 < 12; ++m) CHECK(err[m + 4] < 0.1 * err[m]);
  auto a = fptas_evaluate(t, lam, 1e-6), b = fptas_evaluate(t, lam, 1e-6);
  CHECK(a.approx == b.approx);
  CHECK(std::abs(a.approx / exact - 1.0) < 1e-6);
  CHECK_THROWS_AS(fptas_evaluate(t, cplx(2), 1e-6), Error);
}
