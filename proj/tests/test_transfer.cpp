// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "tzlab/exactpoly.hpp"
#include "tzlab/transfer.hpp"

using namespace tzlab;

TEST_CASE("trace of M_z^n equals z^{n alpha} Z(C_n box G; 1/z)") {
  for (auto sides : {std::vector<int>{2}, std::vector<int>{4}}) {
    Torus t(sides);
    auto fam = independent_sets(t.graph());
    for (int n : {3, 5, 8}) {
      auto z_exact = indep_poly(cartesian_cycle(n, t.graph()));
      for (lcplx z : {lcplx(0.3L, 0.1L), lcplx(-0.7L, 0.2L), lcplx(1.5L, -0.4L)}) {
        auto ev = eigenvalues(transfer_matrix(fam, z));
        lcplx tr = 0;
        for (auto s : ev) tr += std::pow(s, n);
        lcplx want = std::pow(z, static_cast<int>(n * fam.alpha)) * eval(z_exact, 1.0L / z);
        CHECK(std::abs(tr - want) < 1e-12L * std::max(1.0L, std::abs(want)));
      }
    }
  }
}

TEST_CASE("symmetrized matrix has the same spectrum") {
  auto fam = independent_sets(Torus({4}).graph());
  lcplx z(-0.3L, 0.45L);
  auto a = eigenvalues(transfer_matrix(fam, z)), b = eigenvalues(symmetric_transfer(fam, z));
  auto key = [](lcplx x, lcplx y) { return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag(); };
  std::sort(a.begin(), a.end(), key);
  std::sort(b.begin(), b.end(), key);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-14L);
}

TEST_CASE("spectrum labels the continuation of +1 and -1") {
  auto fam = independent_sets(Torus({4}).graph());
  auto tr = spectrum(fam, lcplx(0.01L, 0.0L));
  CHECK(std::abs(tr.qplus - 1.0L) < 0.05L);
  CHECK(std::abs(tr.qminus + 1.0L) < 0.05L);
  CHECK(std::count(tr.labels.begin(), tr.labels.end(), Label::qplus) == 1);
  CHECK(std::count(tr.labels.begin(), tr.labels.end(), Label::qminus) == 1);
  auto b = beta(fam, lcplx(0.01L, 0.0L));
  CHECK(std::abs(b - tr.qminus / tr.qplus) < 1e-15L);
}

TEST_CASE("refined beta + 1 agrees with the series where both are accurate") {
  auto fam = independent_sets(Torus({2}).graph());
  lcplx z(1e-3L, 5e-4L);
  auto tr = spectrum(fam, z);
  lcplx direct = (tr.qplus + tr.qminus) / tr.qplus;
  lcplx refined = beta_plus_one_refined(fam, z);
  CHECK(std::abs(direct - refined) < 1e-12L * std::abs(refined) + 1e-17L);
}

TEST_CASE("zero search returns roots of the exact polynomial") {
  Torus c2({2});
  auto fam = independent_sets(c2.graph());
  const long n = 100;
  const auto exact = oracle::hp_coeffs(indep_poly_cycle_product(n, fam));

  auto rep = zero_search(fam, n, 3.0, {}, Exec::serial);
  auto rep_par = zero_search(fam, n, 3.0, {}, Exec::parallel);
  REQUIRE(rep.zeros.size() == rep_par.zeros.size());
  for (std::size_t i = 0; i < rep.zeros.size(); ++i) CHECK(rep.zeros[i].lambda == rep_par.zeros[i].lambda);
  CHECK(rep.zeros.size() >= 4);
  for (const auto& z : rep.zeros) {
    CHECK(z.residual < 1e-8);
    CHECK(std::abs(z.lambda) >= 3.0L);
    CHECK(oracle::newton_step(exact, z.lambda) < 1e-12L);
  }

  // Every zero outside the circle is found when seeding all the way round.
  ZeroSearchOptions all;
  all.full_circle = true;
  auto full = zero_search(fam, n, 3.0, all);
  CHECK(static_cast<int>(full.zeros.size()) == oracle::roots_outside(exact, 3.0));
  for (const auto& z : full.zeros) CHECK(oracle::newton_step(exact, z.lambda) < 1e-12L);
  for (std::size_t i = 1; i < full.zeros.size(); ++i)
    CHECK(std::abs(full.zeros[i].lambda - full.zeros[i - 1].lambda) > 1e-6L);
}

TEST_CASE("equal-modulus curve crosses the real axis at the C2 endpoint") {
  auto fam = independent_sets(Torus({2}).graph());
  auto curve = equal_modulus_curve(fam, lcplx(-2.0L, 0.0L), 400);
  REQUIRE(curve.size() > 10);
  for (auto z : curve) {
    auto ev = eigenvalues(transfer_matrix(fam, z));
    std::sort(ev.begin(), ev.end(), [](lcplx a, lcplx b) { return std::abs(a) > std::abs(b); });
    CHECK(std::abs(std::abs(ev[0]) - std::abs(ev[1])) < 1e-8L * std::abs(ev[0]));
  }
  auto xs = real_axis_crossings(curve);
  bool hit = std::any_of(xs.begin(), xs.end(), [](double x) { return std::abs(x + 0.1716) < 0.005; });
  CHECK(hit);
  CHECK_THROWS_AS(equal_modulus_curve(fam, lcplx(0.3L, 0.0L), 10), Error);
}

TEST_CASE("refinement survives an eigenvalue that is exact in working precision") {
  // On C2 the antisymmetric vector gives the eigenvalue -1 for every z.
  auto fam = independent_sets(Torus({2}).graph());
  for (long double th : {3.13912L, 1.0L, -2.0L}) {
    lcplx z = std::polar(3.29e-6L, th);
    lcplx b = beta_plus_one_refined(fam, z);
    CHECK(std::isfinite(b.real()));
    CHECK(std::abs(b) == doctest::Approx(static_cast<double>(2 * std::abs(z))).epsilon(1e-4));
  }
}
