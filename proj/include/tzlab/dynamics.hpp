// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <vector>

#include "tzlab/lattice.hpp"
#include "tzlab/poly.hpp"

namespace tzlab {

// f_{lambda,d}(r) = lambda / (1 + r)^d.
cplx occupation_map(cplx lambda, int d, cplx r);

// A point [a : b] = a / b of the Riemann sphere.
struct SpherePoint {
  lcplx a{0}, b{1};
};
SpherePoint normalized(SpherePoint p);
// f_{lambda,d} in homogeneous form [a : b] -> [lambda b^d : (a + b)^d]; the
// pole at -1 maps to infinity and infinity maps to 0.
SpherePoint occupation_map(lcplx lambda, int d, SpherePoint r);
double chordal(const SpherePoint& p, const SpherePoint& q);

// Rooted d-ary tree of depth n: x_n = Z(T_n - root), y_n = lambda Z(T_n - N[root]),
// x_{n+1} = (x_n + y_n)^d, y_{n+1} = lambda x_n^d.
struct TreeState {
  IntPoly x, y;
  int depth = 0;
};
TreeState dary_tree_state(int d, int depth);
IntPoly dary_tree_poly(int d, int depth);  // x_n + y_n

struct CriticalPair {
  mpq_class minus, plus;  // -d^d / (d+1)^{d+1}, d^d / (d-1)^{d+1}
};
CriticalPair lambda_critical(int d);

struct Orbit {
  std::vector<cplx> r;
  bool converged = false;  // last two values within 1e-12
};
// r_0 = lambda, r_1 = lambda / (1 + lambda), r_{n+2} = lambda / ((1 + r_{n+1})(1 + r_n)).
Orbit fibonacci_ratio_orbit(cplx lambda, int steps);

// Marked partition sums of a two-terminal graph with terminals v, w:
// x avoids both, y contains w but not v (equal to the reverse by symmetry),
// z contains both.
struct Triple {
  cplx x, y, z;
};
// One diamond renormalization step: four copies glued along v-a-w and v-b-w,
//   G(x, y, z) = ((x^2 + y^2/l)^2, y^2 (x + z/l)^2 / l, (y^2 + z^2/l)^2 / l^2).
Triple diamond_step(cplx lambda, const Triple& s);
// Variant without the 1/l and 1/l^2 factors, ((x^2 + y^2/l)^2, y^2 (x + z/l)^2, (y^2 + z^2/l)^2),
// which counts an occupied outer terminal once per copy that contains it;
// kept for comparison only.
Triple diamond_step_printed(cplx lambda, const Triple& s);
inline cplx diamond_pi(const Triple& s) { return s.x + 2.0 * s.y + s.z; }

struct DiamondPolys {
  IntPoly x, y, z;
  IntPoly total() const;  // x + 2y + z
};
// Exact marked sums of G_n, n >= 0; G_0 is a single edge v-w.
DiamondPolys diamond_polys(int n);

struct MarkedGraph {
  Graph g;
  int v = 0, w = 1;
};
MarkedGraph diamond_graph(int n);

struct Window {
  double re_min = -1, re_max = 1, im_min = -1, im_max = 1;
};

enum class RasterKind { dary, fibonacci, torus_ratio, identity, constant };

struct RasterParams {
  RasterKind kind = RasterKind::dary;
  int d = 3;
  int iterations = 200;
  Window window;
  int width = 256, height = 256;
  bool four_neighbor = false;
  // torus_ratio: R(lambda) = lambda Z(G - N[v]) / Z(G - v).
  IntPoly ratio_num, ratio_den;
};

// Row-major, row 0 at im_max. Pixel (i, j) has center
// (re_min + (i + 1/2) dx, im_max - (j + 1/2) dy).
struct Raster {
  Window window;
  int width = 0, height = 0;
  std::vector<double> values;  // log1p(chordal difference / pixel width)
  double at(int i, int j) const { return values[static_cast<std::size_t>(j) * width + i]; }
  cplx center(int i, int j) const;
};

// The occupation-ratio polynomials of (G, v) for torus_ratio rasters.
void set_ratio_polys(RasterParams& p, const Graph& g, int v);

Raster spherical_raster(const RasterParams& p, Exec ex = Exec::parallel);

}  // namespace tzlab
