// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "tzlab/contour.hpp"
#include "tzlab/dynamics.hpp"
#include "tzlab/lattice.hpp"
#include "tzlab/poly.hpp"
#include "tzlab/qseries.hpp"
#include "tzlab/transfer.hpp"

namespace tzlab::io {

using json = nlohmann::ordered_json;

// "NxM[xK...]" (torus), "cycle:N", "path:N", "file:PATH" (JSON {"n", "edges"}).
struct GraphSpec {
  enum class Kind { torus, cycle, path, file } kind = Kind::torus;
  std::string text;
  Graph graph;
  std::optional<Torus> torus;  // tori and even cycles
};
GraphSpec parse_graph_spec(const std::string& s);
Graph read_graph_json(const std::string& path);

std::string fmt17(double x);
json num17(double x);  // number serialized with 17 significant digits

// Writes to a temporary file next to path, then renames it into place.
void atomic_write(const std::string& path, const std::string& data);

json poly_json(const IntPoly& p, const std::string& var);
json qseries_json(const std::string& torus, const QSeries& qs);
// n,re_lambda,im_lambda,residual,method
std::string zeros_csv(long n, const std::vector<FoundZero>& zeros, const std::string& method);
// re_z,im_z,re_lambda,im_lambda
std::string curve_csv(const std::vector<lcplx>& curve_z);
json contour_catalog_json(const ContourCatalog& cat);

// P5 with maxval 255, values min-max normalized.
std::string raster_pgm(const Raster& r);
// Little-endian float64, row-major.
std::string raster_raw(const Raster& r);
json raster_sidecar(const Raster& r, const std::string& kind, int iterations);

}  // namespace tzlab::io
