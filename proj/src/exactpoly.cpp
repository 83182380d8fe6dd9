// SPDX-License-Identifier: Apache-2.0
#include "tzlab/exactpoly.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

namespace tzlab {

namespace {

class IndepMemo {
 public:
  explicit IndepMemo(const Graph& g) : nb_(g.n) {
    for (int v = 0; v < g.n; ++v) nb_[v] = g.nbr_mask(v);
  }

  IntPoly solve(std::uint64_t live) {
    if (live == 0) return {1};
    if (auto it = memo_.find(live); it != memo_.end()) return it->second;

    IntPoly res;
    std::uint64_t comp = component_of(live);
    if (comp != live) {
      res = poly_mul(solve(comp), solve(live & ~comp));
    } else {
      int pivot = -1, best = -1;
      for (std::uint64_t r = live; r; r &= r - 1) {
        int v = std::countr_zero(r);
        int deg = std::popcount(nb_[v] & live);
        if (deg > best) best = deg, pivot = v;
      }
      std::uint64_t bit = std::uint64_t{1} << pivot;
      IntPoly with = poly_shift(solve(live & ~bit & ~nb_[pivot]), 1);
      res = poly_add(with, solve(live & ~bit));
    }
    memo_.emplace(live, res);
    return res;
  }

 private:
  std::uint64_t component_of(std::uint64_t live) const {
    std::uint64_t seen = live & (~live + 1);
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t r = frontier; r; r &= r - 1) next |= nb_[std::countr_zero(r)];
      next &= live & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  std::vector<std::uint64_t> nb_;
  std::unordered_map<std::uint64_t, IntPoly> memo_;
};

using PolyMat = std::vector<IntPoly>;  // row-major N x N

PolyMat mat_mul(const PolyMat& a, const PolyMat& b, long N, Exec ex) {
  PolyMat c(N * N);
#pragma omp parallel for schedule(dynamic) if (ex == Exec::parallel)
  for (long i = 0; i < N; ++i)
    for (long k = 0; k < N; ++k) {
      const IntPoly& aik = a[i * N + k];
      if (aik.empty()) continue;
      for (long j = 0; j < N; ++j) {
        const IntPoly& bkj = b[k * N + j];
        if (bkj.empty()) continue;
        c[i * N + j] = poly_add(c[i * N + j], poly_mul(aik, bkj));
      }
    }
  return c;
}

}  // namespace

IntPoly indep_poly(const Graph& g) {
  const std::size_t cap = cap_or(kRecursionCap);
  if (static_cast<std::size_t>(g.n) > cap || g.n > 64)
    throw Error(Errc::TooLarge, "indep_poly: " + std::to_string(g.n) + " vertices exceeds cap");
  if (g.n == 0) return {1};
  IndepMemo memo(g);
  std::uint64_t all = g.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1;
  return memo.solve(all);
}

IntPoly indep_poly_cycle_product(int n, const IndSetFamily& fam, Exec ex) {
  if (n < 3) throw Error(Errc::CycleTooShort, "cycle product needs n >= 3");
  const long N = static_cast<long>(fam.size());
  PolyMat m(N * N);
  for (long s = 0; s < N; ++s)
    for (long t = 0; t < N; ++t)
      if (!(fam.sets[s] & fam.sets[t])) {
        IntPoly e(fam.sizes[s] + 1);
        e[fam.sizes[s]] = 1;
        m[s * N + t] = e;
      }
  PolyMat acc;
  bool have = false;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) {
      acc = have ? mat_mul(acc, m, N, ex) : m;
      have = true;
    }
    if (e > 1) m = mat_mul(m, m, N, ex);
  }
  IntPoly tr;
  for (long s = 0; s < N; ++s) tr = poly_add(tr, acc[s * N + s]);
  return tr;
}

IntPoly match_poly(const Torus& t) {
  return poly_reverse(indep_poly(t.graph()), t.alpha());
}

std::vector<mpz_class> defect_counts(const Torus& t, int k_max) {
  const int alpha = t.alpha();
  if (k_max < 0 || k_max > alpha) throw Error(Errc::BadParameters, "defect_counts needs 0 <= k_max <= alpha");
  const int nv = t.n_vertices();
  if (nv > 128) throw Error(Errc::TooLarge, "defect_counts supports up to 128 vertices");
  using Mask = unsigned __int128;
  auto pc = [](Mask m) {
    return std::popcount(static_cast<std::uint64_t>(m)) + std::popcount(static_cast<std::uint64_t>(m >> 64));
  };
  const Graph& g = t.graph();
  std::vector<int> odd;
  for (int v = 0; v < nv; ++v)
    if (t.parity(v) == 1) odd.push_back(v);
  const int no = static_cast<int>(odd.size());
  std::vector<Mask> nbr(no, 0);
  std::vector<int> last_pos(nv, -1);
  for (int i = 0; i < no; ++i)
    for (int e : g.adj[odd[i]]) {
      nbr[i] |= Mask{1} << e;
      last_pos[e] = std::max(last_pos[e], i);
    }
  // closed[p]: even vertices whose odd neighbors all lie among odd[0..p-1].
  std::vector<Mask> closed(no + 1, 0);
  for (int p = 0; p <= no; ++p)
    for (int v = 0; v < nv; ++v)
      if (t.parity(v) == 0 && last_pos[v] < p) closed[p] |= Mask{1} << v;

  std::vector<mpz_class> c(k_max + 1, 0);
  mpz_class b;
  auto rec = [&](auto&& self, int p, Mask cur_n, int size) -> void {
    if (pc(cur_n & closed[p]) - size > k_max) return;
    if (p == no) {
      int nn = pc(cur_n);
      int s = nn - size;
      for (int k = s; k <= k_max; ++k) {
        mpz_bin_uiui(b.get_mpz_t(), alpha - nn, k - s);
        c[k] += b;
      }
      return;
    }
    self(self, p + 1, cur_n, size);
    self(self, p + 1, cur_n | nbr[p], size + 1);
  };
  rec(rec, 0, 0, 0);
  return c;
}

}  // namespace tzlab
