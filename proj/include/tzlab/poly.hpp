// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "tzlab/common.hpp"

namespace tzlab {

// coeffs[i] multiplies x^i. Trailing zeros are trimmed by every producer.
using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p);
int degree(const IntPoly& p);  // -1 for the zero polynomial
IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_shift(const IntPoly& a, int k);  // multiply by x^k
IntPoly poly_reverse(const IntPoly& a, int deg);  // x^deg a(1/x)

mpz_class eval(const IntPoly& p, const mpz_class& x);
mpq_class eval(const IntPoly& p, const mpq_class& x);
lcplx eval(const IntPoly& p, lcplx x);

// All complex roots by Aberth-Ehrlich iteration in long double, started on
// circles read off the Newton polygon. Accuracy follows the conditioning of
// the roots: for high-degree partition functions, roots where the sum
// cancels heavily can be far off.
std::vector<lcplx> poly_roots(const IntPoly& p);

// Cauchy bound 1 + max |a_i / a_n|.
double cauchy_bound(const IntPoly& p);

std::vector<std::string> coeff_strings(const IntPoly& p);

}  // namespace tzlab
