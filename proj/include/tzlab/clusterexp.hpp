// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <vector>

#include "tzlab/lattice.hpp"
#include "tzlab/poly.hpp"

namespace tzlab {

// Abstract polymer model. The compatibility relation is anti-reflexive, so
// every polymer is incompatible with itself; incompat[i][i] is always set.
struct PolymerSystem {
  std::vector<std::vector<std::uint8_t>> incompat;
  std::vector<cplx> w;
  std::vector<int> size;

  int count() const { return static_cast<int>(w.size()); }
  // Adds a polymer and returns its index; pass the indices it clashes with.
  int add(cplx weight, int size, const std::vector<int>& clashes = {});
  void validate() const;  // square, symmetric, reflexive, positive sizes
};

// Sum over sets of pairwise compatible polymers of the product of weights.
// conflicts[i] lists the polymers incompatible with i (self excluded).
template <class W>
W compatible_sum(const std::vector<std::vector<int>>& conflicts, const std::vector<W>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<std::vector<std::uint8_t>> clash(n, std::vector<std::uint8_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j : conflicts[i]) clash[i][j] = clash[j][i] = 1;
  W total = W(1);
  std::vector<int> start(n);
  for (int i = 0; i < n; ++i) start[i] = i;
  auto rec = [&](auto&& self, const std::vector<int>& cand, const W& prod) -> void {
    for (std::size_t k = 0; k < cand.size(); ++k) {
      const int i = cand[k];
      W p = prod * w[i];
      total += p;
      std::vector<int> next;
      for (std::size_t l = k + 1; l < cand.size(); ++l)
        if (!clash[i][cand[l]]) next.push_back(cand[l]);
      if (!next.empty()) self(self, next, p);
    }
  };
  rec(rec, start, W(1));
  return total;
}

std::vector<std::vector<int>> conflict_lists(const PolymerSystem& sys);

cplx polymer_partition(const PolymerSystem& sys);
mpq_class polymer_partition(const PolymerSystem& sys, const std::vector<mpq_class>& w);

// Sum over connected spanning edge subsets E of H of (-1)^|E|; 0 when H is
// disconnected. adj is a symmetric 0/1 matrix without loops, k <= 10.
long long ursell(const std::vector<std::vector<std::uint8_t>>& adj);

// Sum of Phi(X) over clusters X with total size <= max_total_size, where
// Phi(X) = prod_g 1/n_X(g)! * psi(H_X) * prod w.
cplx cluster_expansion_partial(const PolymerSystem& sys, int max_total_size, Exec ex = Exec::parallel);

struct KPReport {
  bool pass = true;
  double worst_ratio = 0;  // min over polymers of a(g) / sum_{g' ~/~ g} |w(g')| e^{a(g') + b(g')}
  int worst = -1;
};
// a(g) = a_mult * size(g), b(g) = b_mult * size(g).
KPReport kp_check(const PolymerSystem& sys, double a_mult, double b_mult);

// Bound on the clusters left out by cluster_expansion_partial(sys, B) when
// kp_check(sys, a_mult, b_mult) passes: exp(-b_mult (B+1)) * sum_g a(g).
double kp_tail_bound(const PolymerSystem& sys, double a_mult, double b_mult, int max_total_size);

// log p(x) = log a0 - sum_{j >= 1} p_j x^j / j, from the Newton identities
//   k a_k = -sum_{i=0}^{k-1} a_i p_{k-i}.
struct LogSeries {
  mpz_class a0;
  std::vector<mpq_class> p;  // p[0] = 0, p[1..m]
  int order() const { return static_cast<int>(p.size()) - 1; }
};
LogSeries newton_log_coeffs(const std::vector<mpq_class>& coeffs, int m);
LogSeries newton_log_coeffs(const IntPoly& poly, int m);
// Inverse direction: a_0..a_m from a0 and p_1..p_m.
std::vector<mpq_class> coeffs_from_log(const mpq_class& a0, const std::vector<mpq_class>& p, int m);

struct FptasOptions {
  double radius = 0.1;  // largest |1/lambda| accepted
  int m = -1;           // series order; -1 picks it from eps
};

struct FptasResult {
  cplx approx;
  int m = 0;
};

// Approximates Z_ind(T; lambda) as lambda^alpha exp(log p(1/lambda)), p = p1 + p2
// with p1 = Z^even_match + Z^large_match and p2 = Z^odd_match. The log series
// of p1 and p2 are computed first, turned back into coefficients, summed, and
// the log series of p is truncated at order m.
FptasResult fptas_evaluate(const Torus& t, cplx lambda, double eps, const FptasOptions& opt = {});
FptasResult fptas_from_split(const IntPoly& p1, const IntPoly& p2, int alpha, cplx lambda, double eps,
                             const FptasOptions& opt = {});

}  // namespace tzlab
