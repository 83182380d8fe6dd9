// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "tzlab/exactpoly.hpp"

using namespace tzlab;

TEST_CASE("small independence polynomials") {
  CHECK(indep_poly(single_vertex()) == IntPoly{1, 1});
  CHECK(indep_poly(make_cycle(4)) == IntPoly{1, 4, 2});
  CHECK(indep_poly(make_path(3)) == IntPoly{1, 3, 1});
  CHECK(indep_poly(graph_from_edges(0, {})) == IntPoly{1});
}

TEST_CASE("deletion recursion matches subset enumeration on random graphs") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + trial % 13;
    double p = 0.15 + 0.05 * (trial % 8);
    Graph g = oracle::random_graph(n, p, rng);
    CHECK(indep_poly(g) == oracle::indep_poly(g));
  }
}

TEST_CASE("transfer trace equals the product graph polynomial") {
  const Graph k1 = single_vertex(), c2 = make_cycle(2), c4 = make_cycle(4);
  for (const Graph* g : {&k1, &c2, &c4}) {
    auto fam = independent_sets(*g);
    for (int n = 3; n <= 6; ++n) {
      auto direct = indep_poly(cartesian_cycle(n, *g));
      CHECK(indep_poly_cycle_product(n, fam, Exec::serial) == direct);
      CHECK(indep_poly_cycle_product(n, fam, Exec::parallel) == direct);
    }
  }
  CHECK_THROWS_AS(indep_poly_cycle_product(2, independent_sets(k1)), Error);
}

TEST_CASE("recursion cap") {
  try {
    indep_poly(make_path(60));
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
  }
}

TEST_CASE("defect counts agree with the full matching polynomial") {
  for (auto sides : {std::vector<int>{4, 4}, std::vector<int>{4, 6}, std::vector<int>{6, 6}}) {
    Torus t(sides);
    auto zm = match_poly(t);
    const int kmax = std::min<int>(6, static_cast<int>(zm.size()) - 1);
    auto dc = defect_counts(t, kmax);
    REQUIRE(dc.size() == static_cast<std::size_t>(kmax + 1));
    for (int k = 0; k <= kmax; ++k) CHECK(dc[k] == zm[k]);
    CHECK(zm[0] == 2);
  }
}

TEST_CASE("polynomial roots") {
  IntPoly p{2, -3, 1};  // (x-1)(x-2)
  auto r = poly_roots(p);
  REQUIRE(r.size() == 2);
  std::sort(r.begin(), r.end(), [](auto a, auto b) { return a.real() < b.real(); });
  CHECK(std::abs(r[0] - lcplx(1)) < 1e-15L);
  CHECK(std::abs(r[1] - lcplx(2)) < 1e-15L);
  IntPoly q{0, 0, 1, 1};  // x^2 (x+1)
  auto rq = poly_roots(q);
  CHECK(rq.size() == 3);
  auto z = indep_poly(cartesian_cycle(6, make_cycle(2)));
  for (auto root : poly_roots(z)) CHECK(std::abs(eval(z, root)) < 1e-8L * std::pow(std::abs(root) + 1, degree(z)));
}
