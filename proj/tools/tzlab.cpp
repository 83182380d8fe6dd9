// SPDX-License-Identifier: Apache-2.0
// Command-line front end. Every subcommand prints a JSON summary on stdout and
// writes its declared output atomically. Exit codes: 0 ok, 2 invalid input,
// 3 numerical failure.
#include <omp.h>

#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <sstream>

#include "tzlab/clusterexp.hpp"
#include "tzlab/contour.hpp"
#include "tzlab/dynamics.hpp"
#include "tzlab/exactpoly.hpp"
#include "tzlab/io.hpp"
#include "tzlab/qseries.hpp"
#include "tzlab/transfer.hpp"

using namespace tzlab;
using io::json;

namespace {

struct RunConfig {
  std::string torus, graph;
  long n = 0;
  double radius = 0;
  int order = -1;
  double eps = 1e-6;
  std::string lambda;
  std::string window = "-1,2.5,-1.5,1.5";
  std::string res = "351x301";
  int iters = 200;
  std::string out;
  std::string format;
  int threads = 0;
  long seed = 0;
  std::string kind = "dary";
  int d = 3;
  bool full_circle = false;
  bool four_neighbor = false;
  double C = 1, Cd = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code(Errc c) {
  switch (c) {
    case Errc::TrackingFailure:
    case Errc::NoConvergence:
    case Errc::SeedNotOnCurve:
    case Errc::DenominatorZero:
    case Errc::PoleHit:
    case Errc::PoleAtMinusOne:
    case Errc::ViolationAt:
    case Errc::ZeroConstantTerm:
      return 3;
    default:
      return 2;
  }
}

std::vector<double> parse_list(const std::string& s, std::size_t want, const std::string& what) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t pos = 0;
      v.push_back(std::stod(part, &pos));
      if (pos != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError("bad number in --" + what + ": '" + part + "'");
    }
  }
  if (v.size() != want) throw UsageError("--" + what + " needs " + std::to_string(want) + " comma-separated values");
  return v;
}

cplx parse_lambda(const RunConfig& c) {
  if (c.lambda.empty()) throw UsageError("--lambda re,im is required");
  auto v = parse_list(c.lambda, 2, "lambda");
  return {v[0], v[1]};
}

io::GraphSpec graph_of(const RunConfig& c) {
  const std::string& s = !c.graph.empty() ? c.graph : c.torus;
  if (s.empty()) throw UsageError("--torus or --graph is required");
  return io::parse_graph_spec(s);
}

const Torus& torus_of(const io::GraphSpec& g) {
  if (!g.torus) throw UsageError("'" + g.text + "' is not an even torus");
  return *g.torus;
}

json c2j(lcplx z) { return {io::num17(static_cast<double>(z.real())), io::num17(static_cast<double>(z.imag()))}; }

json coeffs_summary(const IntPoly& p) {
  json a = json::array();
  for (const auto& s : coeff_strings(p)) {
    if (s.size() <= 18)
      a.push_back(std::stoll(s));
    else
      a.push_back(s);
  }
  return a;
}

void write_out(const RunConfig& c, const std::string& data) {
  if (!c.out.empty()) io::atomic_write(c.out, data);
}

json cmd_poly(const RunConfig& c) {
  auto g = graph_of(c);
  IntPoly p;
  if (c.n > 0) {
    if (c.n > 100000) throw UsageError("--n too large for an exact product");
    p = indep_poly_cycle_product(static_cast<int>(c.n), independent_sets(g.graph));
  } else {
    p = indep_poly(g.graph);
  }
  write_out(c, io::poly_json(p, "lambda").dump(2) + "\n");
  return {{"graph", g.text}, {"n", c.n}, {"degree", degree(p)}, {"coeffs", coeffs_summary(p)}};
}

json cmd_zeros(const RunConfig& c) {
  auto g = graph_of(c);
  if (c.n < 3) throw UsageError("--n must be >= 3");
  if (!(c.radius > 0)) throw UsageError("--radius must be positive");
  auto fam = independent_sets(g.graph);
  if (fam.index_even < 0 || fam.index_odd < 0) throw UsageError("zeros needs a torus cross-section");
  ZeroSearchOptions opt;
  opt.full_circle = c.full_circle;
  auto rep = zero_search(fam, c.n, c.radius, opt);
  write_out(c, io::zeros_csv(c.n, rep.zeros, "sector-newton"));
  double worst = 0;
  for (const auto& z : rep.zeros) worst = std::max(worst, z.residual);
  return {{"torus", g.text}, {"n", c.n},         {"radius", c.radius},          {"zeros", rep.zeros.size()},
          {"seeds", rep.seeds}, {"failed", rep.failed}, {"max_residual", io::num17(worst)}};
}

json cmd_spectrum(const RunConfig& c) {
  auto g = graph_of(c);
  auto fam = independent_sets(g.graph);
  if (fam.index_even < 0 || fam.index_odd < 0) throw UsageError("spectrum needs a torus cross-section");
  cplx lam = parse_lambda(c);
  if (lam == cplx(0)) throw Error(Errc::ZeroLambda, "lambda must be nonzero");
  lcplx z = 1.0L / lcplx(lam.real(), lam.imag());
  auto tr = spectrum(fam, z);
  json eig = json::array();
  for (std::size_t i = 0; i < tr.eigenvalues.size(); ++i) {
    const char* lab = tr.labels[i] == Label::qplus ? "qplus" : tr.labels[i] == Label::qminus ? "qminus" : "bulk";
    eig.push_back({{"value", c2j(tr.eigenvalues[i])}, {"label", lab}});
  }
  json j = {{"torus", g.text}, {"z", c2j(z)},         {"qplus", c2j(tr.qplus)},
            {"qminus", c2j(tr.qminus)}, {"steps", tr.steps}, {"eigenvalues", eig}};
  write_out(c, j.dump(2) + "\n");
  return {{"torus", g.text}, {"z", c2j(z)}, {"qplus", c2j(tr.qplus)}, {"qminus", c2j(tr.qminus)},
          {"size", tr.eigenvalues.size()}};
}

json cmd_qseries(const RunConfig& c) {
  auto g = graph_of(c);
  const Torus& t = torus_of(g);
  if (c.order < 0) throw UsageError("--order is required");
  auto fam = independent_sets(t.graph());
  auto qs = q_series(fam, c.order);
  verify_symmetry(t, fam, qs);
  json j = io::qseries_json(g.text, qs);
  write_out(c, j.dump(2) + "\n");
  return j;
}

json cmd_contours(const RunConfig& c) {
  auto g = graph_of(c);
  ContourSpace cs(torus_of(g));
  ContourCatalog cat(cs);
  write_out(c, io::contour_catalog_json(cat).dump(2) + "\n");
  auto split = cat.z_match_split();
  return {{"torus", g.text},
          {"configurations", cat.configs().size()},
          {"small_even", cat.small(Ground::even).size()},
          {"small_odd", cat.small(Ground::odd).size()},
          {"large", cat.large().size()},
          {"z_even", coeffs_summary(split.even)},
          {"z_odd", coeffs_summary(split.odd)},
          {"z_large", coeffs_summary(split.large)}};
}

// Hard-core polymers on a graph: one polymer per vertex with weight lambda,
// incompatible when equal or adjacent.
json cmd_cluster(const RunConfig& c) {
  auto g = graph_of(c);
  cplx lam = parse_lambda(c);
  if (g.graph.n > 24) throw Error(Errc::TooLarge, "cluster subcommand takes at most 24 polymers");
  const int bound = c.order >= 0 ? c.order : 6;
  PolymerSystem sys;
  for (int v = 0; v < g.graph.n; ++v) {
    std::vector<int> clash;
    for (int u : g.graph.adj[v])
      if (u < v) clash.push_back(u);
    sys.add(lam, 1, clash);
  }
  cplx partial = cluster_expansion_partial(sys, bound);
  cplx zpol = polymer_partition(sys);
  const double a_mult = 1.0, b_mult = 1.0;
  auto kp = kp_check(sys, a_mult, b_mult);
  json j = {{"graph", g.text},
            {"max_total_size", bound},
            {"partial", c2j(lcplx(partial.real(), partial.imag()))},
            {"log_zpol", c2j(lcplx(std::log(zpol).real(), std::log(zpol).imag()))},
            {"kp_pass", kp.pass},
            {"kp_worst_ratio", io::num17(kp.worst_ratio)}};
  if (kp.pass) j["tail_bound"] = io::num17(kp_tail_bound(sys, a_mult, b_mult, bound));
  write_out(c, j.dump(2) + "\n");
  return j;
}

json cmd_fptas(const RunConfig& c) {
  auto g = graph_of(c);
  cplx lam = parse_lambda(c);
  FptasOptions opt;
  if (c.order >= 0) opt.m = c.order;
  if (c.radius > 0) opt.radius = c.radius;
  auto r = fptas_evaluate(torus_of(g), lam, c.eps, opt);
  json j = {{"approx", {io::num17(r.approx.real()), io::num17(r.approx.imag())}}, {"m", r.m}};
  write_out(c, j.dump() + "\n");
  return j;
}

json cmd_raster(const RunConfig& c) {
  RasterParams p;
  if (c.kind == "dary")
    p.kind = RasterKind::dary;
  else if (c.kind == "fibonacci")
    p.kind = RasterKind::fibonacci;
  else if (c.kind == "torus_ratio")
    p.kind = RasterKind::torus_ratio;
  else
    throw UsageError("--kind must be dary, fibonacci or torus_ratio");
  auto w = parse_list(c.window, 4, "window");
  p.window = {w[0], w[1], w[2], w[3]};
  auto x = c.res.find('x');
  if (x == std::string::npos) throw UsageError("--res must be WxH");
  try {
    p.width = std::stoi(c.res.substr(0, x));
    p.height = std::stoi(c.res.substr(x + 1));
  } catch (const std::exception&) {
    throw UsageError("--res must be WxH");
  }
  p.iterations = c.iters;
  p.d = c.d;
  p.four_neighbor = c.four_neighbor;
  if (p.kind == RasterKind::torus_ratio) {
    auto g = graph_of(c);
    set_ratio_polys(p, g.graph, 0);
  }
  const std::string fmt = c.format.empty() ? "pgm" : c.format;
  if (fmt != "pgm" && fmt != "raw") throw UsageError("raster --format must be pgm or raw");
  if (c.out.empty()) throw UsageError("raster needs --out");
  auto r = spherical_raster(p);
  if (fmt == "pgm") {
    io::atomic_write(c.out, io::raster_pgm(r));
  } else {
    io::atomic_write(c.out, io::raster_raw(r));
    io::atomic_write(c.out + ".json", io::raster_sidecar(r, c.kind, p.iterations).dump(2) + "\n");
  }
  double hi = -INFINITY;
  int hi_i = 0, hi_j = 0;
  for (int j = 0; j < r.height; ++j)
    for (int i = 0; i < r.width; ++i)
      if (r.at(i, j) > hi) hi = r.at(i, j), hi_i = i, hi_j = j;
  cplx at = r.center(hi_i, hi_j);
  return {{"kind", c.kind},
          {"width", r.width},
          {"height", r.height},
          {"format", fmt},
          {"max", io::num17(hi)},
          {"argmax", {io::num17(at.real()), io::num17(at.imag())}}};
}

json cmd_curve(const RunConfig& c) {
  auto g = graph_of(c);
  auto fam = independent_sets(g.graph);
  if (fam.index_even < 0 || fam.index_odd < 0) throw UsageError("curve needs a torus cross-section");
  cplx lam = parse_lambda(c);
  if (lam == cplx(0)) throw Error(Errc::ZeroLambda, "lambda must be nonzero");
  lcplx seed = 1.0L / lcplx(lam.real(), lam.imag());
  auto curve = equal_modulus_curve(fam, seed, c.iters);
  write_out(c, io::curve_csv(curve));
  json cross = json::array();
  for (double x : real_axis_crossings(curve)) cross.push_back(io::num17(x));
  return {{"torus", g.text}, {"points", curve.size()}, {"real_crossings", cross}};
}

json cmd_bounds(const RunConfig& c) {
  const int m = c.order >= 0 ? c.order : 20;
  const long N = c.n > 0 ? c.n : 1;
  auto b = bound_sequences(N, m);
  json x = json::array(), y = json::array();
  bool ok = true;
  mpq_class six = 1;
  for (int n = 0; n <= m; ++n) {
    x.push_back(b.x[n].get_str());
    y.push_back(b.y[n].get_str());
    if (n >= 1 && N == 1) ok = ok && b.y[n] <= six / ((n + 1) * (n + 1));
    six *= 6;
  }
  json j = {{"N", N}, {"order", m}, {"x", x}, {"y", y}};
  if (N == 1) j["y_le_6n_over_n1sq"] = ok;
  if (c.Cd > 0) {
    auto dc = delta_constants(c.d, c.C, c.Cd);
    j["delta"] = {{"d", c.d},
                  {"C", c.C},
                  {"C_d", c.Cd},
                  {"rho", io::num17(peierls_rho(c.d))},
                  {"log_delta1", io::num17(dc.log_delta1)},
                  {"log_delta2", io::num17(dc.log_delta2)}};
  }
  write_out(c, j.dump(2) + "\n");
  json summary = {{"N", N}, {"order", m}, {"x_last", b.x[m].get_str()}};
  if (j.contains("delta")) summary["delta"] = j["delta"];
  return summary;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tzlab: independence polynomials of tori, transfer matrices, contours and recursive families"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;
  app.add_option("--torus", c.torus, "torus or cross-section spec: NxM, cycle:N, path:N, file:PATH");
  app.add_option("--graph", c.graph, "graph spec, same syntax as --torus");
  app.add_option("--n", c.n, "cycle length n for C_n box G, or N for bounds");
  app.add_option("--radius", c.radius, "zero search radius R; fptas radius on |1/lambda|");
  app.add_option("--order", c.order, "series order / truncation order / cluster size bound");
  app.add_option("--eps", c.eps, "relative accuracy for fptas");
  app.add_option("--lambda", c.lambda, "complex fugacity re,im");
  app.add_option("--window", c.window, "raster window re_min,re_max,im_min,im_max");
  app.add_option("--res", c.res, "raster resolution WxH");
  app.add_option("--iters", c.iters, "iterations (raster) or steps per direction (curve)");
  app.add_option("--out", c.out, "output file");
  app.add_option("--format", c.format, "csv, json, pgm or raw");
  app.add_option("--threads", c.threads, "OpenMP threads (0 = runtime default)");
  app.add_option("--seed", c.seed, "seed recorded in the summary; no subcommand samples randomly");
  app.add_option("--kind", c.kind, "raster kind: dary, fibonacci, torus_ratio");
  app.add_option("--d", c.d, "tree branching / lattice dimension for delta constants");
  app.add_flag("--full-circle", c.full_circle, "seed zero search at every n-th root of -1");
  app.add_flag("--four-neighbor", c.four_neighbor, "raster derivative from the 4-neighbor stencil");
  app.add_option("--C", c.C, "balance constant C for delta constants");
  app.add_option("--Cd", c.Cd, "animal growth constant C_d for delta constants");

  struct Sub {
    const char* name;
    const char* help;
    json (*fn)(const RunConfig&);
  };
  const Sub subs[] = {
      {"poly", "independence polynomial (exact)", cmd_poly},
      {"zeros", "large zeros of Z(C_n box G) by the transfer-matrix method", cmd_zeros},
      {"spectrum", "eigenvalues of M_z at z = 1/lambda with q+/q- labels", cmd_spectrum},
      {"qseries", "power series of q+ and q-", cmd_qseries},
      {"contours", "contour catalog and Z_match split", cmd_contours},
      {"cluster", "cluster expansion of a hard-core polymer system", cmd_cluster},
      {"fptas", "truncated log-series approximation of Z(T; lambda)", cmd_fptas},
      {"raster", "spherical-derivative raster", cmd_raster},
      {"curve", "equal-modulus curve of the top two eigenvalues", cmd_curve},
      {"bounds", "bound sequences x_n, y_n and delta constants", cmd_bounds},
  };
  for (const auto& s : subs) app.add_subcommand(s.name, s.help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (c.threads > 0) omp_set_num_threads(c.threads);

  for (const auto& s : subs) {
    if (!app.got_subcommand(s.name)) continue;
    try {
      json summary = {{"command", s.name}, {"seed", c.seed}};
      summary.update(s.fn(c));
      std::cout << summary.dump() << "\n";
      return 0;
    } catch (const UsageError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return exit_code(e.code());
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return 2;
}
