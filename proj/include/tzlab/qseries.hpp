// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <vector>

#include "tzlab/lattice.hpp"

namespace tzlab {

using IntVec = std::vector<mpz_class>;

// Power series of the two dominant eigenvalues q+(z), q-(z) of M_z and their
// eigenvectors, from the integer recursion
//   v_n = q_0 (sum_{k=1}^{min(n,alpha)} Q_k A v_{n-k} - sum_{i=1}^{n-1} q_i v_{n-i}),
//   q_n = e_even^T A v_n,
// with v_0 = e_even +/- e_odd and q_0 = +/-1.
struct QSeries {
  int alpha = 0;
  std::size_t N = 0;
  IntVec qplus, qminus;
  std::vector<IntVec> vplus, vminus;  // v_0 .. v_m
  int order() const { return static_cast<int>(qplus.size()) - 1; }
};

QSeries q_series(const IndSetFamily& fam, int m, Exec ex = Exec::parallel);
QSeries q_series(const Torus& t, int m, Exec ex = Exec::parallel);

struct ABSplit {
  std::vector<mpq_class> a, b;  // a_n = (q+_n + q-_n)/2, b_n = (q+_n - q-_n)/2
};
ABSplit a_b_split(const IntVec& qplus, const IntVec& qminus);

// x_0 = 1, x_n = N (x_{n-1} + sum_{i=1}^{n-1} x_i x_{n-i}); y_n = x_n / N^{2n}.
struct BoundSequences {
  IntVec x;
  std::vector<mpq_class> y;
};
BoundSequences bound_sequences(long N, int m);

// Checks P_sigma v_n^+ = v_n^+, P_sigma v_n^- = -v_n^- for the coordinate-1
// reflection and P_tau v_n^+- = v_n^+- for the even translation. Throws
// ViolationAt carrying the first failing n.
void verify_symmetry(const Torus& t, const IndSetFamily& fam, const QSeries& qs);

}  // namespace tzlab
