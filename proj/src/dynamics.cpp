// SPDX-License-Identifier: Apache-2.0
#include "tzlab/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "tzlab/exactpoly.hpp"

namespace tzlab {

namespace {

constexpr long kMaxTreeDegree = 200000;
constexpr long kMaxPixels = 4096L * 4096L;

IntPoly poly_pow(const IntPoly& a, int e) {
  IntPoly r{1};
  for (int i = 0; i < e; ++i) r = poly_mul(r, a);
  return r;
}

// Exact division by lambda^k; the low coefficients must vanish.
IntPoly divide_lambda(const IntPoly& a, int k) {
  for (int i = 0; i < k && i < static_cast<int>(a.size()); ++i)
    if (a[i] != 0) throw Error(Errc::BadParameters, "polynomial not divisible by the lambda power");
  if (static_cast<int>(a.size()) <= k) return {};
  return IntPoly(a.begin() + k, a.end());
}

IntPoly scale(const IntPoly& a, long c) {
  IntPoly r = a;
  for (auto& x : r) x *= c;
  trim(r);
  return r;
}

Graph induced(const Graph& g, const std::vector<std::uint8_t>& keep) {
  std::vector<int> idx(g.n, -1);
  int m = 0;
  for (int v = 0; v < g.n; ++v)
    if (keep[v]) idx[v] = m++;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (keep[u] && keep[v]) edges.emplace_back(idx[u], idx[v]);
  return graph_from_edges(m, edges);
}

lcplx horner(const IntPoly& p, lcplx x) {
  lcplx acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + static_cast<long double>(it->get_d());
  return acc;
}

}  // namespace

cplx occupation_map(cplx lambda, int d, cplx r) {
  if (r == cplx(-1)) throw Error(Errc::PoleAtMinusOne, "r = -1");
  return lambda / std::pow(1.0 + r, d);
}

SpherePoint normalized(SpherePoint p) {
  long double s = std::max(std::abs(p.a), std::abs(p.b));
  if (s > 0) {
    p.a /= s;
    p.b /= s;
  }
  return p;
}

SpherePoint occupation_map(lcplx lambda, int d, SpherePoint r) {
  lcplx bd = 1, sd = 1;
  for (int i = 0; i < d; ++i) {
    bd *= r.b;
    sd *= r.a + r.b;
  }
  return normalized({lambda * bd, sd});
}

double chordal(const SpherePoint& p, const SpherePoint& q) {
  long double num = 2 * std::abs(p.a * q.b - q.a * p.b);
  long double den = std::sqrt(std::norm(p.a) + std::norm(p.b)) * std::sqrt(std::norm(q.a) + std::norm(q.b));
  return den > 0 ? static_cast<double>(num / den) : 0.0;
}

TreeState dary_tree_state(int d, int depth) {
  if (d < 2 || depth < 0) throw Error(Errc::BadParameters, "need d >= 2 and depth >= 0");
  long deg = 1;
  for (int n = 0; n < depth; ++n) {
    deg = d * deg + 1;
    if (deg > kMaxTreeDegree) throw Error(Errc::TooLarge, "tree polynomial degree exceeds 200000");
  }
  TreeState s{{1}, {0, 1}, 0};
  for (int n = 0; n < depth; ++n) {
    IntPoly x = poly_pow(poly_add(s.x, s.y), d);
    IntPoly y = poly_shift(poly_pow(s.x, d), 1);
    s.x = std::move(x);
    s.y = std::move(y);
    s.depth = n + 1;
  }
  return s;
}

IntPoly dary_tree_poly(int d, int depth) {
  auto s = dary_tree_state(d, depth);
  return poly_add(s.x, s.y);
}

CriticalPair lambda_critical(int d) {
  if (d < 2) throw Error(Errc::BadParameters, "need d >= 2");
  mpz_class dd, d1, dm;
  mpz_ui_pow_ui(dd.get_mpz_t(), d, d);
  mpz_ui_pow_ui(d1.get_mpz_t(), d + 1, d + 1);
  mpz_ui_pow_ui(dm.get_mpz_t(), d - 1, d + 1);
  CriticalPair c{mpq_class(-dd, d1), mpq_class(dd, dm)};
  c.minus.canonicalize();
  c.plus.canonicalize();
  return c;
}

Orbit fibonacci_ratio_orbit(cplx lambda, int steps) {
  if (steps < 0) throw Error(Errc::BadParameters, "steps must be >= 0");
  Orbit o;
  o.r.push_back(lambda);
  if (steps == 0) return o;
  if (lambda == cplx(-1)) throw Error(Errc::PoleHit, "1 + r_0 = 0");
  o.r.push_back(lambda / (1.0 + lambda));
  for (int n = 2; n <= steps; ++n) {
    cplx den = (1.0 + o.r[n - 1]) * (1.0 + o.r[n - 2]);
    if (den == cplx(0)) throw Error(Errc::PoleHit, "pole at step " + std::to_string(n));
    o.r.push_back(lambda / den);
  }
  const auto k = o.r.size();
  o.converged = std::abs(o.r[k - 1] - o.r[k - 2]) < 1e-12;
  return o;
}

Triple diamond_step(cplx l, const Triple& s) {
  if (l == cplx(0)) throw Error(Errc::ZeroLambda, "lambda must be nonzero");
  cplx a = s.x * s.x + s.y * s.y / l;
  cplx b = s.y * (s.x + s.z / l);
  cplx c = s.y * s.y + s.z * s.z / l;
  return {a * a, b * b / l, c * c / (l * l)};
}

Triple diamond_step_printed(cplx l, const Triple& s) {
  if (l == cplx(0)) throw Error(Errc::ZeroLambda, "lambda must be nonzero");
  cplx a = s.x * s.x + s.y * s.y / l;
  cplx b = s.y * (s.x + s.z / l);
  cplx c = s.y * s.y + s.z * s.z / l;
  return {a * a, b * b, c * c};
}

IntPoly DiamondPolys::total() const { return poly_add(poly_add(x, scale(y, 2)), z); }

DiamondPolys diamond_polys(int n) {
  if (n < 0) throw Error(Errc::BadParameters, "level must be >= 0");
  if (n > 6) throw Error(Errc::TooLarge, "diamond level above 6");
  DiamondPolys s{{1}, {0, 1}, {}};
  for (int k = 0; k < n; ++k) {
    // Everything multiplied through by lambda so the divisions are exact.
    IntPoly xx = poly_mul(s.x, s.x), yy = poly_mul(s.y, s.y), zz = poly_mul(s.z, s.z);
    IntPoly a = poly_add(poly_shift(xx, 1), yy);                 // l (x^2 + y^2/l)
    IntPoly b = poly_mul(s.y, poly_add(poly_shift(s.x, 1), s.z));  // l y (x + z/l)
    IntPoly c = poly_add(poly_shift(yy, 1), zz);                 // l (y^2 + z^2/l)
    DiamondPolys t;
    t.x = divide_lambda(poly_mul(a, a), 2);
    t.y = divide_lambda(poly_mul(b, b), 3);
    t.z = divide_lambda(poly_mul(c, c), 4);
    s = std::move(t);
  }
  return s;
}

MarkedGraph diamond_graph(int n) {
  if (n < 0) throw Error(Errc::BadParameters, "level must be >= 0");
  if (n > 3) throw Error(Errc::TooLarge, "diamond graph level above 3");
  MarkedGraph cur{graph_from_edges(2, {{0, 1}}), 0, 1};
  for (int k = 0; k < n; ++k) {
    const int m = cur.g.n;
    // New terminals v = 0, w = 1, middles a = 2, b = 3, then the inner
    // vertices of the four copies.
    int next = 4;
    std::vector<std::pair<int, int>> edges;
    auto place = [&](int from, int to) {
      std::vector<int> map(m);
      for (int u = 0; u < m; ++u) map[u] = u == cur.v ? from : u == cur.w ? to : next++;
      for (auto [p, q] : cur.g.edges()) edges.emplace_back(map[p], map[q]);
    };
    place(0, 2);
    place(2, 1);
    place(0, 3);
    place(3, 1);
    cur = {graph_from_edges(next, edges), 0, 1};
  }
  return cur;
}

cplx Raster::center(int i, int j) const {
  const double dx = (window.re_max - window.re_min) / width;
  const double dy = (window.im_max - window.im_min) / height;
  return {window.re_min + (i + 0.5) * dx, window.im_max - (j + 0.5) * dy};
}

void set_ratio_polys(RasterParams& p, const Graph& g, int v) {
  if (v < 0 || v >= g.n) throw Error(Errc::BadParameters, "marked vertex out of range");
  std::vector<std::uint8_t> keep(g.n, 1);
  keep[v] = 0;
  p.ratio_den = indep_poly(induced(g, keep));
  for (int u : g.adj[v]) keep[u] = 0;
  p.ratio_num = poly_shift(indep_poly(induced(g, keep)), 1);
  p.kind = RasterKind::torus_ratio;
}

namespace {

SpherePoint pixel_value(const RasterParams& p, lcplx lam) {
  switch (p.kind) {
    case RasterKind::dary: {
      SpherePoint r{lam, 1};
      for (int n = 0; n < p.iterations; ++n) r = occupation_map(lam, p.d, r);
      return r;
    }
    case RasterKind::fibonacci: {
      SpherePoint r0{lam, 1}, r1 = normalized({lam, 1.0L + lam});
      for (int n = 2; n <= p.iterations; ++n) {
        SpherePoint r2 = normalized({lam * r1.b * r0.b, (r1.a + r1.b) * (r0.a + r0.b)});
        r0 = r1;
        r1 = r2;
      }
      return p.iterations == 0 ? r0 : r1;
    }
    case RasterKind::torus_ratio:
      return normalized({horner(p.ratio_num, lam), horner(p.ratio_den, lam)});
    case RasterKind::identity:
      return {lam, 1};
    case RasterKind::constant:
      return {1, 1};
  }
  return {};
}

}  // namespace

Raster spherical_raster(const RasterParams& p, Exec ex) {
  if (p.width < 2 || p.height < 1) throw Error(Errc::BadParameters, "raster needs width >= 2 and height >= 1");
  if (static_cast<long>(p.width) * p.height > kMaxPixels) throw Error(Errc::TooLarge, "raster above 4096^2 pixels");
  if (!(p.window.re_max > p.window.re_min) || !(p.window.im_max > p.window.im_min))
    throw Error(Errc::BadParameters, "empty raster window");
  if (p.kind == RasterKind::dary && p.d < 1) throw Error(Errc::BadParameters, "d must be >= 1");
  if (p.kind == RasterKind::torus_ratio && p.ratio_den.empty())
    throw Error(Errc::BadParameters, "torus_ratio raster needs ratio polynomials");
  if (p.iterations < 0) throw Error(Errc::BadParameters, "iterations must be >= 0");

  Raster r;
  r.window = p.window;
  r.width = p.width;
  r.height = p.height;
  const int W = p.width, H = p.height;
  std::vector<SpherePoint> pts(static_cast<std::size_t>(W) * H);
#pragma omp parallel for schedule(dynamic, 1) if (ex == Exec::parallel)
  for (int j = 0; j < H; ++j)
    for (int i = 0; i < W; ++i) {
      cplx c = r.center(i, j);
      pts[static_cast<std::size_t>(j) * W + i] = pixel_value(p, lcplx(c.real(), c.imag()));
    }

  const double dx = (p.window.re_max - p.window.re_min) / W;
  const double dy = (p.window.im_max - p.window.im_min) / H;
  r.values.resize(pts.size());
  auto P = [&](int i, int j) -> const SpherePoint& { return pts[static_cast<std::size_t>(j) * W + i]; };
#pragma omp parallel for schedule(static) if (ex == Exec::parallel)
  for (int j = 0; j < H; ++j)
    for (int i = 0; i < W; ++i) {
      double v;
      if (!p.four_neighbor) {
        int k = i + 1 < W ? i + 1 : i - 1;
        v = chordal(P(i, j), P(k, j)) / dx;
      } else {
        double s = 0;
        int cnt = 0;
        if (i > 0) s += chordal(P(i, j), P(i - 1, j)) / dx, ++cnt;
        if (i + 1 < W) s += chordal(P(i, j), P(i + 1, j)) / dx, ++cnt;
        if (j > 0) s += chordal(P(i, j), P(i, j - 1)) / dy, ++cnt;
        if (j + 1 < H) s += chordal(P(i, j), P(i, j + 1)) / dy, ++cnt;
        v = s / cnt;
      }
      r.values[static_cast<std::size_t>(j) * W + i] = std::log1p(v);
    }
  return r;
}

}  // namespace tzlab
