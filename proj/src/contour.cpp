// SPDX-License-Identifier: Apache-2.0
#include "tzlab/contour.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace tzlab {

namespace {

constexpr std::size_t kContourCap = 24;

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
inline int lowest(std::uint64_t m) { return std::countr_zero(m); }

int min_side(const Torus& t) { return *std::min_element(t.sides().begin(), t.sides().end()); }

}  // namespace

const char* ground_name(Ground g) { return g == Ground::even ? "even" : "odd"; }

ContourSpace::ContourSpace(const Torus& t) : t_(t) {
  if (t.n_vertices() > 64) throw Error(Errc::TooLarge, "contour work needs at most 64 vertices");
  if (min_side(t) < 4) throw Error(Errc::BadParameters, "contour work needs every side >= 4");
  const int n = t.n_vertices();
  all_ = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
  even_ = t.even_mask();
  odd_ = t.odd_mask();
  nb_.resize(n);
  coord_.resize(n);
  for (int v = 0; v < n; ++v) {
    nb_[v] = t.graph().nbr_mask(v);
    auto c = t.coords(v);
    for (int i = 0; i < t.d(); ++i) c[i] += t.sides()[i] / 2;
    coord_[v] = std::move(c);
  }
}

std::uint64_t ContourSpace::grow(std::uint64_t mask) const {
  std::uint64_t out = mask;
  for (std::uint64_t r = mask; r; r &= r - 1) out |= nb_[lowest(r)];
  return out;
}

std::uint64_t ContourSpace::incorrect(std::uint64_t sigma, std::uint64_t region) const {
  std::uint64_t bad = 0;
  for (std::uint64_t r = region; r; r &= r - 1) {
    int v = lowest(r);
    std::uint64_t w = t_.inf_nbhd(v) & region;
    std::uint64_t s = sigma & w;
    if (s != (even_ & w) && s != (odd_ & w)) bad |= bit(v);
  }
  return bad;
}

std::vector<std::uint64_t> ContourSpace::components(std::uint64_t mask) const {
  std::vector<std::uint64_t> out;
  while (mask) {
    std::uint64_t comp = bit(lowest(mask)), prev = 0;
    while (comp != prev) {
      prev = comp;
      comp = grow(comp) & mask;
    }
    out.push_back(comp);
    mask &= ~comp;
  }
  return out;
}

int ContourSpace::box_diam(std::uint64_t mask) const {
  int best = 0;
  for (int i = 0; i < t_.d(); ++i) {
    std::uint64_t marg = 0;
    for (std::uint64_t r = mask; r; r &= r - 1) marg |= bit(coord_[lowest(r)][i]);
    best = std::max(best, std::popcount(marg));
  }
  return best;
}

std::uint64_t ContourSpace::closure(std::uint64_t mask) const {
  const int d = t_.d();
  std::vector<std::uint64_t> marg(d, 0);
  for (std::uint64_t r = mask; r; r &= r - 1)
    for (int i = 0; i < d; ++i) marg[i] |= bit(coord_[lowest(r)][i]);
  std::uint64_t out = 0;
  for (int v = 0; v < n(); ++v) {
    bool in = true;
    for (int i = 0; i < d && in; ++i) in = (marg[i] >> coord_[v][i]) & 1;
    if (in) out |= bit(v);
  }
  return out;
}

std::uint64_t ContourSpace::region_interior(std::uint64_t region) const {
  std::uint64_t out = 0;
  for (std::uint64_t r = region; r; r &= r - 1) {
    int v = lowest(r);
    if ((nb_[v] & ~region) == 0) out |= bit(v);
  }
  return out;
}

bool ContourSpace::small_support(std::uint64_t support) const {
  return support && components(support).size() == 1 && box_diam(support) < min_side(t_);
}

std::uint64_t ContourSpace::exterior(std::uint64_t support) const {
  std::uint64_t rest = all_ & ~support;
  std::uint64_t outside = rest & ~closure(support);
  if (!outside) throw Error(Errc::BadParameters, "support has no exterior");
  for (auto c : components(rest))
    if (c & bit(lowest(outside))) return c;
  return 0;
}

Ground ContourSpace::label_at(std::uint64_t sigma, int v) const {
  bool occ = (sigma >> v) & 1, ev = (even_ >> v) & 1;
  return occ == ev ? Ground::even : Ground::odd;
}

int ContourSpace::energy_numer(std::uint64_t support, std::uint64_t extended) const {
  const int two_d = 2 * t_.d();
  int total = 0;
  for (std::uint64_t r = support & ~extended; r; r &= r - 1)
    total += two_d - std::popcount(nb_[lowest(r)] & extended);
  return total;
}

std::uint64_t Contour::extended(const ContourSpace& cs) const {
  std::uint64_t s = sigma;
  for (std::size_t i = 0; i < comps.size(); ++i) s |= cs.ground(labels[i]) & comps[i];
  return s;
}

Ground Contour::label_of_vertex(int v) const {
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (comps[i] & bit(v)) return labels[i];
  throw Error(Errc::BadParameters, "vertex lies on the support");
}

std::uint64_t Contour::interior(Ground xi) const {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (static_cast<int>(i) != ext && labels[i] == xi) out |= comps[i];
  return out;
}

int MatchingSet::energy_numer() const {
  int s = 0;
  for (const auto& c : contours) s += c.energy_numer;
  return s;
}

namespace {

// Fills the classification fields of a contour whose labels are set.
bool classify(const ContourSpace& cs, Contour& c) {
  const int l1 = min_side(cs.torus());
  auto parts = cs.components(c.support);
  if (parts.size() == 1 && cs.box_diam(c.support) < l1) {
    c.large = false;
    std::uint64_t e = cs.exterior(c.support);
    c.ext = -1;
    for (std::size_t i = 0; i < c.comps.size(); ++i)
      if (c.comps[i] == e) c.ext = static_cast<int>(i);
    if (c.ext < 0) return false;
    c.type = c.labels[c.ext];
  } else {
    for (auto p : parts)
      if (cs.box_diam(p) < l1) return false;
    c.large = true;
    c.ext = -1;
    c.type = Ground::even;
  }
  c.energy_numer = cs.energy_numer(c.support, c.extended(cs));
  return true;
}

Contour contour_from_config(const ContourSpace& cs, std::uint64_t support, std::uint64_t tau) {
  Contour c;
  c.support = support;
  c.sigma = tau & support;
  c.comps = cs.components(cs.all() & ~support);
  const std::uint64_t halo = cs.grow(support);
  for (auto a : c.comps) c.labels.push_back(cs.label_at(tau, lowest(a & halo)));
  classify(cs, c);
  return c;
}

}  // namespace

std::optional<Contour> make_contour(const ContourSpace& cs, std::uint64_t support, std::uint64_t sigma) {
  if (!support || (sigma & ~support)) return std::nullopt;
  Contour c;
  c.support = support;
  c.sigma = sigma;
  c.comps = cs.components(cs.all() & ~support);
  const std::size_t k = c.comps.size();
  if (k > 20) throw Error(Errc::TooLarge, "too many complement components to label");
  for (std::uint64_t lab = 0; lab < (std::uint64_t{1} << k); ++lab) {
    c.labels.assign(k, Ground::even);
    for (std::size_t i = 0; i < k; ++i)
      if ((lab >> i) & 1) c.labels[i] = Ground::odd;
    std::uint64_t ext = c.extended(cs);
    if (!cs.torus().graph().is_independent(ext)) continue;
    if (cs.incorrect(ext) != support) continue;
    if (!classify(cs, c)) return std::nullopt;
    return c;
  }
  return std::nullopt;
}

bool is_contour(const ContourSpace& cs, const Contour& c) {
  if (!c.support || (c.sigma & ~c.support)) return false;
  if (c.comps != cs.components(cs.all() & ~c.support) || c.labels.size() != c.comps.size()) return false;
  std::uint64_t ext = c.extended(cs);
  if (!cs.torus().graph().is_independent(ext) || cs.incorrect(ext) != c.support) return false;
  Contour d = c;
  if (!classify(cs, d)) return false;
  return d == c;
}

MatchingSet empty_matching_set(const ContourSpace& cs, Ground g) {
  MatchingSet ms;
  ms.comps = {cs.all()};
  ms.labels = {g};
  return ms;
}

MatchingSet contours_of(const ContourSpace& cs, std::uint64_t sigma) {
  if (!cs.torus().graph().is_independent(sigma)) throw Error(Errc::BadParameters, "configuration is not feasible");
  const std::uint64_t inc = cs.incorrect(sigma);
  if (!inc) return empty_matching_set(cs, cs.label_at(sigma, 0));
  const int l1 = min_side(cs.torus());
  MatchingSet ms;
  std::uint64_t large = 0;
  for (auto comp : cs.components(inc)) {
    if (cs.box_diam(comp) >= l1)
      large |= comp;
    else
      ms.contours.push_back(contour_from_config(cs, comp, sigma));
  }
  if (large) ms.contours.push_back(contour_from_config(cs, large, sigma));
  ms.comps = cs.components(cs.all() & ~inc);
  for (auto a : ms.comps) ms.labels.push_back(cs.label_at(sigma, lowest(a)));
  return ms;
}

std::uint64_t configuration_of(const ContourSpace& cs, const MatchingSet& ms) {
  auto fail = [](const std::string& why) -> std::uint64_t { throw Error(Errc::InconsistentLabels, why); };
  std::uint64_t all_support = 0;
  int n_large = 0;
  for (std::size_t i = 0; i < ms.contours.size(); ++i) {
    const auto& c = ms.contours[i];
    n_large += c.large;
    for (std::size_t j = 0; j < i; ++j)
      if (!cs.far_apart(c.support, ms.contours[j].support)) return fail("supports closer than 2");
    all_support |= c.support;
  }
  if (n_large > 1) return fail("more than one large contour");
  if (ms.comps != cs.components(cs.all() & ~all_support) || ms.labels.size() != ms.comps.size())
    return fail("component list does not match the supports");
  if (ms.contours.empty() && ms.comps.size() != 1) return fail("empty matching set needs one label");

  std::uint64_t tau = 0;
  for (const auto& c : ms.contours) tau |= c.sigma;
  for (std::size_t i = 0; i < ms.comps.size(); ++i) {
    const std::uint64_t a = ms.comps[i];
    const std::uint64_t want = cs.ground(ms.labels[i]) & a;
    tau |= want;
    for (const auto& c : ms.contours)
      if ((cs.grow(c.support) & a) && (c.extended(cs) & a) != want)
        return fail("label of component at vertex " + std::to_string(lowest(a)) + " disagrees with a contour");
  }
  return tau;
}

ContourCatalog::ContourCatalog(const ContourSpace& cs, Exec ex) : cs_(cs) {
  if (static_cast<std::size_t>(cs.n()) > cap_or(kContourCap))
    throw Error(Errc::TooLarge, "contour catalog: " + std::to_string(cs.n()) + " vertices exceeds cap");
  const IndSetFamily fam = independent_sets(cs.torus().graph(), ex);
  const int l1 = min_side(cs.torus());
  const long N = static_cast<long>(fam.size());
  configs_.resize(N);
  std::vector<std::uint8_t> bad(N, 0);
#pragma omp parallel for schedule(dynamic, 64) if (ex == Exec::parallel)
  for (long i = 0; i < N; ++i) {
    ConfigClass& c = configs_[i];
    c.sigma = fam.sets[i];
    c.incorrect = cs.incorrect(c.sigma);
    auto comps = cs.components(c.incorrect);
    c.n_comps = static_cast<std::uint8_t>(comps.size());
    c.all_large = !comps.empty();
    std::uint64_t ext = cs.all();
    for (auto p : comps) {
      bool big = cs.box_diam(p) >= l1;
      c.any_large |= big;
      c.all_large &= big;
      if (!big) ext &= cs.exterior(p);
    }
    if (c.any_large) continue;
    if (!ext) {
      bad[i] = 1;
      continue;
    }
    c.type = cs.label_at(c.sigma, lowest(ext));
  }
  for (long i = 0; i < N; ++i)
    if (bad[i]) throw Error(Errc::InconsistentLabels, "configuration with empty common exterior");

  for (const auto& c : configs_) {
    if (c.n_comps == 1 && !c.any_large) {
      Contour g = contour_from_config(cs, c.incorrect, c.sigma);
      (g.type == Ground::even ? small_even_ : small_odd_).push_back(std::move(g));
    } else if (c.all_large) {
      large_.push_back(contour_from_config(cs, c.incorrect, c.sigma));
    }
  }
}

ContourCatalog::Split ContourCatalog::z_match_split() const {
  const int alpha = cs_.alpha();
  Split s;
  for (IntPoly* p : {&s.even, &s.odd, &s.large}) p->assign(alpha + 1, 0);
  for (const auto& c : configs_) {
    int k = alpha - std::popcount(c.sigma);
    if (c.any_large)
      s.large[k] += 1;
    else
      (c.type == Ground::even ? s.even : s.odd)[k] += 1;
  }
  for (IntPoly* p : {&s.even, &s.odd, &s.large}) trim(*p);
  return s;
}

IntPoly ContourCatalog::region_partition(std::uint64_t region, Ground phi) const {
  const auto key = std::make_pair(region, static_cast<int>(phi));
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  const std::uint64_t inner = cs_.region_interior(region);
  const int alpha = cs_.alpha();
  IntPoly p(alpha + 1, 0);
  for (const auto& c : configs_)
    if (!c.any_large && c.type == phi && (c.incorrect & ~inner) == 0) p[alpha - std::popcount(c.sigma)] += 1;
  trim(p);
  std::lock_guard<std::mutex> lk(mu_);
  memo_.emplace(key, p);
  return p;
}

mpq_class ContourCatalog::contour_weight(const Contour& c, const mpq_class& z) const {
  const int four_d = 4 * cs_.torus().d();
  if (c.energy_numer % four_d != 0) throw Error(Errc::BadParameters, "non-integral surface energy");
  const Ground phi = c.type, other = flip(phi);
  const std::uint64_t region = c.interior(other);
  mpq_class num = eval(region_partition(region, other), z);
  mpq_class den = eval(region_partition(region, phi), z);
  if (den == 0) throw Error(Errc::DenominatorZero, "contour weight denominator vanishes at z");
  mpq_class zp = 1;
  for (int i = 0; i < c.energy_numer / four_d; ++i) zp *= z;
  mpq_class w = zp * num / den;
  w.canonicalize();
  return w;
}

std::map<int, long> ContourCatalog::counts_through(int v) const {
  std::map<int, long> out;
  for (const auto* list : {&small_even_, &small_odd_})
    for (const auto& c : *list)
      if (c.support & bit(v)) ++out[std::popcount(c.support)];
  return out;
}

IntPoly region_partition_direct(const ContourSpace& cs, std::uint64_t region, Ground phi) {
  const std::uint64_t inner = cs.region_interior(region);
  const std::uint64_t base = cs.ground(phi) & ~inner;
  std::vector<int> free;
  for (std::uint64_t r = inner; r; r &= r - 1) free.push_back(lowest(r));
  const int alpha = cs.alpha();
  const int l1 = min_side(cs.torus());
  IntPoly p(alpha + 1, 0);
  auto visit = [&](std::uint64_t tau) {
    std::uint64_t inc = cs.incorrect(tau);
    if (inc & ~inner) return;
    std::uint64_t ext = cs.all();
    for (auto comp : cs.components(inc)) {
      if (cs.box_diam(comp) >= l1) return;
      ext &= cs.exterior(comp);
    }
    if (!ext || cs.label_at(tau, lowest(ext)) != phi) return;
    p[alpha - std::popcount(tau)] += 1;
  };
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t tau) -> void {
    if (i == free.size()) {
      visit(tau);
      return;
    }
    self(self, i + 1, tau);
    const int v = free[i];
    if ((cs.nbr(v) & tau) == 0) self(self, i + 1, tau | bit(v));
  };
  rec(rec, 0, base);
  trim(p);
  return p;
}

double peierls_rho(int d) {
  if (d < 1) throw Error(Errc::BadParameters, "dimension must be >= 1");
  return 1.0 / (2.0 * d * std::pow(3.0, d));
}

DeltaConstants delta_constants(int d, double C, double C_d) {
  if (d < 1 || !(C > 0) || !(C_d > 1)) throw Error(Errc::BadParameters, "delta constants need d >= 1, C > 0, C_d > 1");
  const double rho = peierls_rho(d);
  const double tail = 5.0 * std::exp(-C * std::pow(3.0, d));
  DeltaConstants r;
  r.log_delta1 = -(std::log(2.0 * C_d) + 4.0 * d + tail + C) / rho;
  r.log_delta2 = -(std::log(8.0 * C_d) + C + 4.0 * d * std::exp(4.0) + tail) / rho;
  r.delta1 = std::exp(r.log_delta1);
  r.delta2 = std::exp(r.log_delta2);
  return r;
}

}  // namespace tzlab
