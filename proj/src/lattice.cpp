// SPDX-License-Identifier: Apache-2.0
#include "tzlab/lattice.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <string>

namespace tzlab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::OddSide: return "OddSide";
    case Errc::EmptySides: return "EmptySides";
    case Errc::CycleTooShort: return "CycleTooShort";
    case Errc::TooLarge: return "TooLarge";
    case Errc::TrackingFailure: return "TrackingFailure";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::SeedNotOnCurve: return "SeedNotOnCurve";
    case Errc::ViolationAt: return "ViolationAt";
    case Errc::InconsistentLabels: return "InconsistentLabels";
    case Errc::DenominatorZero: return "DenominatorZero";
    case Errc::BadParameters: return "BadParameters";
    case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
    case Errc::RadiusTooLarge: return "RadiusTooLarge";
    case Errc::PoleAtMinusOne: return "PoleAtMinusOne";
    case Errc::PoleHit: return "PoleHit";
    case Errc::ZeroLambda: return "ZeroLambda";
  }
  return "Unknown";
}

std::size_t cap_or(std::size_t fallback) {
  if (const char* s = std::getenv("TZLAB_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && v > 0) return static_cast<std::size_t>(v);
  }
  return fallback;
}

std::size_t Graph::edge_count() const {
  std::size_t m = 0;
  for (const auto& a : adj) m += a.size();
  return m / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::uint64_t Graph::nbr_mask(int v) const {
  std::uint64_t m = 0;
  for (int u : adj[v]) m |= std::uint64_t{1} << u;
  return m;
}

bool Graph::is_independent(std::uint64_t mask) const {
  for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    if (nbr_mask(v) & mask) return false;
  }
  return true;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw Error(Errc::BadParameters, "negative vertex count");
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(Errc::BadParameters, "edge endpoint out of range");
    if (u == v) continue;
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return g;
}

Graph make_path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  Graph g = graph_from_edges(n, e);
  g.parity.resize(n);
  for (int i = 0; i < n; ++i) g.parity[i] = i & 1;
  return g;
}

Graph make_cycle(int n) {
  if (n >= 2 && n % 2 == 0) return Torus({n}).graph();
  if (n < 3) throw Error(Errc::CycleTooShort, "cycle needs n >= 3 or an even n >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return graph_from_edges(n, e);
}

Graph single_vertex() {
  Graph g = graph_from_edges(1, {});
  g.parity = {0};
  return g;
}

Torus::Torus(std::vector<int> sides) : sides_(std::move(sides)) {
  if (sides_.empty()) throw Error(Errc::EmptySides, "torus needs at least one side");
  long long n = 1;
  for (int s : sides_) {
    if (s % 2 != 0) throw Error(Errc::OddSide, "side " + std::to_string(s) + " is odd");
    if (s < 2) throw Error(Errc::BadParameters, "sides must be >= 2");
    n *= s;
    if (n > (1 << 26)) throw Error(Errc::TooLarge, "torus too large");
  }
  n_ = static_cast<int>(n);

  std::vector<std::pair<int, int>> e;
  std::vector<int> c;
  for (int v = 0; v < n_; ++v) {
    c = coords(v);
    for (int i = 0; i < d(); ++i) {
      auto c2 = c;
      c2[i] += 1;
      e.emplace_back(v, index(c2));
    }
  }
  graph_ = graph_from_edges(n_, e);
  graph_.parity.resize(n_);
  for (int v = 0; v < n_; ++v) {
    int s = 0;
    for (int x : coords(v)) s += x;
    graph_.parity[v] = static_cast<std::uint8_t>(((s % 2) + 2) % 2);
  }

  if (n_ <= 64) {
    inf_nbhd_.assign(n_, 0);
    int k = 1;
    for (int i = 0; i < d(); ++i) k *= 3;
    for (int v = 0; v < n_; ++v) {
      c = coords(v);
      for (int code = 0; code < k; ++code) {
        auto c2 = c;
        int r = code;
        for (int i = 0; i < d(); ++i) {
          c2[i] += r % 3 - 1;
          r /= 3;
        }
        inf_nbhd_[v] |= std::uint64_t{1} << index(c2);
      }
    }
  }
}

std::vector<int> Torus::coords(int v) const {
  std::vector<int> c(d());
  for (int i = d() - 1; i >= 0; --i) {
    c[i] = v % sides_[i] - sides_[i] / 2;
    v /= sides_[i];
  }
  return c;
}

int Torus::index(const std::vector<int>& c) const {
  int v = 0;
  for (int i = 0; i < d(); ++i) {
    int l = sides_[i];
    int off = ((c[i] + l / 2) % l + l) % l;
    v = v * l + off;
  }
  return v;
}

std::uint64_t Torus::even_mask() const {
  if (n_ > 64) throw Error(Errc::TooLarge, "bitmask needs <= 64 vertices");
  std::uint64_t m = 0;
  for (int v = 0; v < n_; ++v)
    if (parity(v) == 0) m |= std::uint64_t{1} << v;
  return m;
}

std::uint64_t Torus::odd_mask() const {
  if (n_ > 64) throw Error(Errc::TooLarge, "bitmask needs <= 64 vertices");
  std::uint64_t m = 0;
  for (int v = 0; v < n_; ++v)
    if (parity(v) == 1) m |= std::uint64_t{1} << v;
  return m;
}

std::vector<int> Torus::odd_involution() const {
  std::vector<int> p(n_);
  for (int v = 0; v < n_; ++v) {
    auto c = coords(v);
    c[0] = 1 - c[0];
    p[v] = index(c);
  }
  return p;
}

std::vector<int> Torus::even_translation() const {
  std::vector<int> p(n_);
  for (int v = 0; v < n_; ++v) {
    auto c = coords(v);
    if (d() == 1) {
      c[0] += 2;
    } else {
      c[0] += 1;
      c[1] += 1;
    }
    p[v] = index(c);
  }
  return p;
}

Torus build_torus(const std::vector<int>& sides) { return Torus(sides); }

Graph cartesian_cycle(int n, const Graph& g) {
  if (n < 3) throw Error(Errc::CycleTooShort, "cartesian_cycle needs n >= 3");
  const int m = g.n;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    for (auto [u, v] : g.edges()) e.emplace_back(i * m + u, i * m + v);
    for (int v = 0; v < m; ++v) e.emplace_back(i * m + v, ((i + 1) % n) * m + v);
  }
  Graph out = graph_from_edges(n * m, e);
  if (!g.parity.empty() && n % 2 == 0) {
    out.parity.resize(n * m);
    for (int i = 0; i < n; ++i)
      for (int v = 0; v < m; ++v) out.parity[i * m + v] = static_cast<std::uint8_t>((i + g.parity[v]) & 1);
  }
  return out;
}

long IndSetFamily::find(std::uint64_t mask) const {
  auto it = std::lower_bound(sets.begin(), sets.end(), mask);
  if (it == sets.end() || *it != mask) return -1;
  return static_cast<long>(it - sets.begin());
}

namespace {

// Depth-first over vertices hi..0, excluding before including, so the output
// is ascending as unsigned integers.
void enum_rec(const std::vector<std::uint64_t>& nb, int v, std::uint64_t cur, std::uint64_t banned,
              std::vector<std::uint64_t>& out) {
  if (v < 0) {
    out.push_back(cur);
    return;
  }
  enum_rec(nb, v - 1, cur, banned, out);
  std::uint64_t bit = std::uint64_t{1} << v;
  if (!(banned & bit)) enum_rec(nb, v - 1, cur | bit, banned | nb[v], out);
}

}  // namespace

IndSetFamily independent_sets(const Graph& g, Exec ex) {
  const std::size_t cap = cap_or(kIndSetCap);
  if (static_cast<std::size_t>(g.n) > cap || g.n > 64)
    throw Error(Errc::TooLarge, "independent_sets: " + std::to_string(g.n) + " vertices exceeds cap " +
                                    std::to_string(std::min<std::size_t>(cap, 64)));
  std::vector<std::uint64_t> nb(g.n);
  for (int v = 0; v < g.n; ++v) nb[v] = g.nbr_mask(v);

  IndSetFamily fam;
  fam.host = g;
  if (ex == Exec::serial || g.n < 12) {
    enum_rec(nb, g.n - 1, 0, 0, fam.sets);
  } else {
    // Fix the top k vertices; each prefix yields a contiguous ascending block.
    const int k = std::min(10, g.n);
    const int lo = g.n - k;
    const int np = 1 << k;
    std::vector<std::vector<std::uint64_t>> blocks(np);
#pragma omp parallel for schedule(dynamic)
    for (int p = 0; p < np; ++p) {
      std::uint64_t cur = static_cast<std::uint64_t>(p) << lo;
      std::uint64_t banned = 0;
      bool ok = true;
      for (std::uint64_t r = cur; r; r &= r - 1) {
        int v = std::countr_zero(r);
        if (nb[v] & cur) ok = false;
        banned |= nb[v];
      }
      if (ok) enum_rec(nb, lo - 1, cur, banned, blocks[p]);
    }
    std::size_t total = 0;
    for (auto& b : blocks) total += b.size();
    fam.sets.reserve(total);
    for (auto& b : blocks) fam.sets.insert(fam.sets.end(), b.begin(), b.end());
  }

  fam.sizes.resize(fam.sets.size());
  for (std::size_t i = 0; i < fam.sets.size(); ++i) {
    fam.sizes[i] = std::popcount(fam.sets[i]);
    fam.alpha = std::max(fam.alpha, fam.sizes[i]);
  }
  fam.index_empty = 0;
  if (!g.parity.empty()) {
    std::uint64_t ev = 0, od = 0;
    for (int v = 0; v < g.n; ++v) (g.parity[v] ? od : ev) |= std::uint64_t{1} << v;
    fam.index_even = fam.find(ev);
    fam.index_odd = fam.find(od);
  }
  return fam;
}

Compat compatibility(const IndSetFamily& fam, Exec ex) {
  const long N = static_cast<long>(fam.size());
  Compat c;
  c.rows.resize(N);
#pragma omp parallel for schedule(dynamic, 16) if (ex == Exec::parallel)
  for (long s = 0; s < N; ++s) {
    const std::uint64_t S = fam.sets[s];
    for (long t = 0; t < N; ++t)
      if (!(S & fam.sets[t])) c.rows[s].push_back(static_cast<int>(t));
  }
  return c;
}

std::vector<std::vector<std::uint8_t>> compatibility_matrix(const IndSetFamily& fam) {
  const std::size_t N = fam.size();
  std::vector<std::vector<std::uint8_t>> a(N, std::vector<std::uint8_t>(N, 0));
  for (std::size_t s = 0; s < N; ++s)
    for (std::size_t t = 0; t < N; ++t) a[s][t] = (fam.sets[s] & fam.sets[t]) ? 0 : 1;
  return a;
}

std::vector<int> induced_set_permutation(const IndSetFamily& fam, const std::vector<int>& vperm) {
  std::vector<int> out(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    std::uint64_t img = 0;
    for (std::uint64_t r = fam.sets[i]; r; r &= r - 1) img |= std::uint64_t{1} << vperm[std::countr_zero(r)];
    long j = fam.find(img);
    if (j < 0) throw Error(Errc::BadParameters, "vertex permutation does not preserve independence");
    out[i] = static_cast<int>(j);
  }
  return out;
}

}  // namespace tzlab
