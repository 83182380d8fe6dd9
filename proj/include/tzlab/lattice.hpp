// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tzlab/common.hpp"

namespace tzlab {

// Simple undirected graph. Neighbor lists are sorted and deduplicated.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  // Two-coloring (0 = even, 1 = odd) for tori, even cycles and paths. Empty
  // when the graph has no canonical bipartition.
  std::vector<std::uint8_t> parity;

  std::size_t edge_count() const;
  // Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  std::uint64_t nbr_mask(int v) const;
  bool is_independent(std::uint64_t mask) const;
};

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);
Graph make_path(int n);
Graph make_cycle(int n);  // even n >= 2 gives the one-dimensional torus
Graph single_vertex();

class Torus {
 public:
  explicit Torus(std::vector<int> sides);

  const std::vector<int>& sides() const { return sides_; }
  int d() const { return static_cast<int>(sides_.size()); }
  int n_vertices() const { return n_; }
  int alpha() const { return n_ / 2; }
  int ell1() const { return sides_.front(); }
  const Graph& graph() const { return graph_; }

  // Signed coordinates v_i in {-l_i/2, ..., l_i/2 - 1}.
  std::vector<int> coords(int v) const;
  int index(const std::vector<int>& c) const;  // coordinates taken mod l_i
  int parity(int v) const { return graph_.parity[v]; }

  std::uint64_t even_mask() const;
  std::uint64_t odd_mask() const;
  // Closed infinity-neighborhood N_inf[v] as a bitmask.
  std::uint64_t inf_nbhd(int v) const { return inf_nbhd_[v]; }

  // Coordinate-1 reflection v1 -> 1 - v1: odd involution.
  std::vector<int> odd_involution() const;
  // Translation by +1 in coordinates 1 and 2 (by +2 when d = 1): even.
  std::vector<int> even_translation() const;

 private:
  std::vector<int> sides_;
  int n_ = 0;
  Graph graph_;
  std::vector<std::uint64_t> inf_nbhd_;
};

Torus build_torus(const std::vector<int>& sides);

// C_n box g, vertex (i, v) has index i * g.n + v.
Graph cartesian_cycle(int n, const Graph& g);

struct IndSetFamily {
  Graph host;
  std::vector<std::uint64_t> sets;  // ascending
  std::vector<int> sizes;
  int alpha = 0;  // size of a maximum independent set
  std::size_t index_empty = 0;
  long index_even = -1;
  long index_odd = -1;

  std::size_t size() const { return sets.size(); }
  int deficiency(std::size_t i) const { return alpha - sizes[i]; }
  long find(std::uint64_t mask) const;
};

IndSetFamily independent_sets(const Graph& g, Exec ex = Exec::parallel);

// Sparse form of the compatibility matrix: rows[s] lists t with S and T
// disjoint, ascending.
struct Compat {
  std::vector<std::vector<int>> rows;
  std::size_t size() const { return rows.size(); }
};

Compat compatibility(const IndSetFamily& fam, Exec ex = Exec::parallel);
std::vector<std::vector<std::uint8_t>> compatibility_matrix(const IndSetFamily& fam);

// Permutation of family indices induced by a vertex permutation.
std::vector<int> induced_set_permutation(const IndSetFamily& fam, const std::vector<int>& vperm);

}  // namespace tzlab
