// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "tzlab/lattice.hpp"
#include "tzlab/poly.hpp"

namespace tzlab {

enum class Ground : std::uint8_t { even = 0, odd = 1 };
inline Ground flip(Ground g) { return g == Ground::even ? Ground::odd : Ground::even; }
const char* ground_name(Ground g);

// Geometry helpers on a torus with at most 64 vertices and shortest side >= 4.
// Vertex sets and configurations are bitmasks; a configuration is the set of
// occupied vertices.
class ContourSpace {
 public:
  explicit ContourSpace(const Torus& t);

  const Torus& torus() const { return t_; }
  int n() const { return t_.n_vertices(); }
  int alpha() const { return t_.alpha(); }
  std::uint64_t all() const { return all_; }
  std::uint64_t ground(Ground g) const { return g == Ground::even ? even_ : odd_; }

  std::uint64_t nbr(int v) const { return nb_[v]; }
  std::uint64_t grow(std::uint64_t mask) const;  // mask plus all its neighbors
  bool far_apart(std::uint64_t a, std::uint64_t b) const { return (grow(a) & b) == 0; }  // dist >= 2

  // Vertices of region whose window N_inf[v] intersected with region matches
  // neither ground state on sigma.
  std::uint64_t incorrect(std::uint64_t sigma, std::uint64_t region) const;
  std::uint64_t incorrect(std::uint64_t sigma) const { return incorrect(sigma, all_); }

  std::vector<std::uint64_t> components(std::uint64_t mask) const;  // ordered by lowest vertex
  int box_diam(std::uint64_t mask) const;
  std::uint64_t closure(std::uint64_t mask) const;
  std::uint64_t region_interior(std::uint64_t region) const;  // Lambda minus its boundary
  bool small_support(std::uint64_t support) const;
  // Component of T minus the support containing T minus cl(support).
  std::uint64_t exterior(std::uint64_t support) const;

  // Ground state that sigma agrees with at v.
  Ground label_at(std::uint64_t sigma, int v) const;
  // 4d * surface energy: sum over unoccupied v in the support of
  // 2d - #occupied neighbors under the extended configuration.
  int energy_numer(std::uint64_t support, std::uint64_t extended) const;

 private:
  Torus t_;
  std::uint64_t all_ = 0, even_ = 0, odd_ = 0;
  std::vector<std::uint64_t> nb_;
  std::vector<std::vector<int>> coord_;  // offset coordinates
};

struct Contour {
  std::uint64_t support = 0;
  std::uint64_t sigma = 0;  // occupied vertices of the support
  std::vector<std::uint64_t> comps;  // components of T minus the support
  std::vector<Ground> labels;
  int ext = -1;  // index into comps, -1 for a large contour
  bool large = false;
  Ground type = Ground::even;
  int energy_numer = 0;  // 4d * ||gamma||

  std::uint64_t extended(const ContourSpace& cs) const;  // sigma-hat
  Ground label_of_vertex(int v) const;
  std::uint64_t interior(Ground xi) const;  // int_xi(gamma)
  bool operator==(const Contour& o) const = default;
};

struct MatchingSet {
  std::vector<Contour> contours;  // small ones by lowest vertex, then the large one
  std::vector<std::uint64_t> comps;  // components of T minus all supports
  std::vector<Ground> labels;
  int energy_numer() const;
  bool operator==(const MatchingSet& o) const = default;
};

// Recovers the labeling that turns (support, sigma) into a contour, if any.
std::optional<Contour> make_contour(const ContourSpace& cs, std::uint64_t support, std::uint64_t sigma);
// Checks the defining property: sigma-hat is feasible and its incorrect set is
// exactly the support; also the small/large classification.
bool is_contour(const ContourSpace& cs, const Contour& c);

MatchingSet contours_of(const ContourSpace& cs, std::uint64_t sigma);
std::uint64_t configuration_of(const ContourSpace& cs, const MatchingSet& ms);
MatchingSet empty_matching_set(const ContourSpace& cs, Ground g);

// Every feasible configuration of the torus, classified.
struct ConfigClass {
  std::uint64_t sigma = 0;
  std::uint64_t incorrect = 0;
  std::uint8_t n_comps = 0;
  bool any_large = false;
  bool all_large = false;
  Ground type = Ground::even;  // exterior label when every component is small
};

class ContourCatalog {
 public:
  explicit ContourCatalog(const ContourSpace& cs, Exec ex = Exec::parallel);

  const ContourSpace& space() const { return cs_; }
  const std::vector<ConfigClass>& configs() const { return configs_; }
  // Small contours of the given type, and large contours (type even).
  const std::vector<Contour>& small(Ground g) const { return g == Ground::even ? small_even_ : small_odd_; }
  const std::vector<Contour>& large() const { return large_; }

  struct Split {
    IntPoly even, odd, large;
  };
  Split z_match_split() const;

  // Z^phi_match(Lambda; z) as a polynomial in z. Lambda should be closed.
  IntPoly region_partition(std::uint64_t region, Ground phi) const;
  mpq_class contour_weight(const Contour& c, const mpq_class& z) const;

  // Number of small contours through vertex v by support size.
  std::map<int, long> counts_through(int v) const;

 private:
  const ContourSpace& cs_;
  std::vector<ConfigClass> configs_;
  std::vector<Contour> small_even_, small_odd_, large_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::uint64_t, int>, IntPoly> memo_;
};

// Z^phi_match(Lambda; z) computed from configurations fixed to the ground
// state phi outside the interior of Lambda. No catalog needed.
IntPoly region_partition_direct(const ContourSpace& cs, std::uint64_t region, Ground phi);

// rho(d) = 1 / (2d 3^d).
double peierls_rho(int d);

struct DeltaConstants {
  double log_delta1, log_delta2;
  double delta1, delta2;  // may underflow to 0
};
DeltaConstants delta_constants(int d, double C, double C_d);

}  // namespace tzlab
