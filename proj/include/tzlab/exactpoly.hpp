// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <vector>

#include "tzlab/lattice.hpp"
#include "tzlab/poly.hpp"

namespace tzlab {

// Z_G(lambda) by Z_G = lambda Z_{G - N[v]} + Z_{G - v}, pivoting on a vertex
// of maximum degree and multiplying over connected components.
IntPoly indep_poly(const Graph& g);

// Tr[(D_lambda A)^n] over the family of a cross-section graph; equals
// Z(C_n box g; lambda).
IntPoly indep_poly_cycle_product(int n, const IndSetFamily& fam, Exec ex = Exec::parallel);

// Z_match(T; z) = sum_k c_k z^k with c_k the number of independent sets of
// size alpha - k.
IntPoly match_poly(const Torus& t);

// c_0..c_{k_max} of Z_match without enumerating all independent sets. Works
// on the bipartition: every independent set is O' plus a subset of the even
// vertices outside N(O'), so
//   c_k = sum over odd O' of binom(alpha - |N(O')|, k - (|N(O')| - |O'|)).
// Odd sets whose excess |N(O')| - |O'| exceeds k_max are pruned.
std::vector<mpz_class> defect_counts(const Torus& t, int k_max);

}  // namespace tzlab
