// SPDX-License-Identifier: Apache-2.0
#include "tzlab/io.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace tzlab::io {

namespace {

int parse_int(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw Error(Errc::BadParameters, "bad " + what + ": '" + s + "'");
  return v;
}

}  // namespace

Graph read_graph_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadParameters, "cannot open graph file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const std::exception& e) {
    throw Error(Errc::BadParameters, std::string("graph file is not JSON: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("edges")) throw Error(Errc::BadParameters, "graph JSON needs n and edges");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw Error(Errc::BadParameters, "edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return graph_from_edges(j["n"].get<int>(), edges);
}

GraphSpec parse_graph_spec(const std::string& s) {
  GraphSpec g;
  g.text = s;
  auto colon = s.find(':');
  if (colon != std::string::npos) {
    const std::string head = s.substr(0, colon), tail = s.substr(colon + 1);
    if (head == "cycle") {
      g.kind = GraphSpec::Kind::cycle;
      int n = parse_int(tail, "cycle length");
      if (n >= 2 && n % 2 == 0) {
        g.torus.emplace(std::vector<int>{n});
        g.graph = g.torus->graph();
      } else {
        g.graph = make_cycle(n);
      }
    } else if (head == "path") {
      g.kind = GraphSpec::Kind::path;
      g.graph = make_path(parse_int(tail, "path length"));
    } else if (head == "file") {
      g.kind = GraphSpec::Kind::file;
      g.graph = read_graph_json(tail);
    } else {
      throw Error(Errc::BadParameters, "unknown graph spec '" + s + "'");
    }
    return g;
  }
  std::vector<int> sides;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, 'x')) sides.push_back(parse_int(part, "torus side"));
  if (sides.empty()) throw Error(Errc::EmptySides, "empty torus spec");
  g.kind = GraphSpec::Kind::torus;
  g.torus.emplace(sides);
  g.graph = g.torus->graph();
  return g;
}

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json num17(double x) {
  if (!std::isfinite(x)) return nullptr;
  return json::parse(fmt17(x));
}

void atomic_write(const std::string& path, const std::string& data) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::BadParameters, "cannot write " + tmp.string());
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) {
      out.close();
      fs::remove(tmp);
      throw Error(Errc::BadParameters, "write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(Errc::BadParameters, "rename failed for " + path + ": " + ec.message());
  }
}

json poly_json(const IntPoly& p, const std::string& var) {
  json j;
  j["var"] = var;
  j["coeffs"] = coeff_strings(p);
  return j;
}

json qseries_json(const std::string& torus, const QSeries& qs) {
  json j;
  j["torus"] = torus;
  j["alpha"] = qs.alpha;
  auto ints = [](const IntVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(json::parse(x.get_str()));
    return a;
  };
  j["qplus"] = ints(qs.qplus);
  j["qminus"] = ints(qs.qminus);
  auto ab = a_b_split(qs.qplus, qs.qminus);
  auto rats = [](const std::vector<mpq_class>& v) {
    json a = json::array();
    for (const auto& x : v) {
      if (x.get_den() == 1)
        a.push_back(json::parse(x.get_num().get_str()));
      else
        a.push_back(x.get_str());
    }
    return a;
  };
  j["a"] = rats(ab.a);
  j["b"] = rats(ab.b);
  return j;
}

std::string zeros_csv(long n, const std::vector<FoundZero>& zeros, const std::string& method) {
  std::string out = "n,re_lambda,im_lambda,residual,method\n";
  for (const auto& z : zeros)
    out += std::to_string(n) + "," + fmt17(static_cast<double>(z.lambda.real())) + "," +
           fmt17(static_cast<double>(z.lambda.imag())) + "," + fmt17(z.residual) + "," + method + "\n";
  return out;
}

std::string curve_csv(const std::vector<lcplx>& curve_z) {
  std::string out = "re_z,im_z,re_lambda,im_lambda\n";
  for (auto z : curve_z) {
    lcplx l = 1.0L / z;
    out += fmt17(static_cast<double>(z.real())) + "," + fmt17(static_cast<double>(z.imag())) + "," +
           fmt17(static_cast<double>(l.real())) + "," + fmt17(static_cast<double>(l.imag())) + "\n";
  }
  return out;
}

json contour_catalog_json(const ContourCatalog& cat) {
  const auto& cs = cat.space();
  json j;
  j["torus"] = cs.torus().sides();
  json list = json::array();
  const int four_d = 4 * cs.torus().d();
  auto emit = [&](const Contour& c) {
    json e;
    json sup = json::array(), sig = json::array();
    for (std::uint64_t r = c.support; r; r &= r - 1) {
      int v = std::countr_zero(r);
      sup.push_back(v);
      sig.push_back(static_cast<int>((c.sigma >> v) & 1));
    }
    e["support"] = sup;
    e["sigma"] = sig;
    e["class"] = c.large ? "large" : "small";
    e["type"] = ground_name(c.type);
    e["energy"] = c.energy_numer / four_d;
    list.push_back(e);
  };
  for (const auto& c : cat.small(Ground::even)) emit(c);
  for (const auto& c : cat.small(Ground::odd)) emit(c);
  for (const auto& c : cat.large()) emit(c);
  j["contours"] = list;
  return j;
}

std::string raster_pgm(const Raster& r) {
  std::string out = "P5\n" + std::to_string(r.width) + " " + std::to_string(r.height) + "\n255\n";
  double lo = INFINITY, hi = -INFINITY;
  for (double v : r.values)
    if (std::isfinite(v)) lo = std::min(lo, v), hi = std::max(hi, v);
  const double span = hi > lo ? hi - lo : 1.0;
  for (double v : r.values) {
    double t = std::isfinite(v) ? (v - lo) / span : 1.0;
    out.push_back(static_cast<char>(static_cast<unsigned char>(std::lround(std::clamp(t, 0.0, 1.0) * 255))));
  }
  return out;
}

std::string raster_raw(const Raster& r) {
  static_assert(std::endian::native == std::endian::little, "raw dump assumes a little-endian host");
  std::string out(r.values.size() * sizeof(double), '\0');
  std::memcpy(out.data(), r.values.data(), out.size());
  return out;
}

json raster_sidecar(const Raster& r, const std::string& kind, int iterations) {
  json j;
  j["kind"] = kind;
  j["window"] = {num17(r.window.re_min), num17(r.window.re_max), num17(r.window.im_min), num17(r.window.im_max)};
  j["width"] = r.width;
  j["height"] = r.height;
  j["iterations"] = iterations;
  j["dtype"] = "float64-le";
  j["order"] = "row-major, row 0 at im_max";
  j["value"] = "log1p(chordal distance to horizontal neighbor / pixel width)";
  return j;
}

}  // namespace tzlab::io
