// SPDX-License-Identifier: Apache-2.0
#include "tzlab/qseries.hpp"

#include <string>

namespace tzlab {

namespace {

IntVec apply_a(const Compat& a, const IntVec& v, Exec ex) {
  const long N = static_cast<long>(a.size());
  IntVec out(N);
#pragma omp parallel for schedule(dynamic, 32) if (ex == Exec::parallel)
  for (long s = 0; s < N; ++s) {
    mpz_class acc = 0;
    for (int t : a.rows[s])
      if (v[t] != 0) acc += v[t];
    out[s] = acc;
  }
  return out;
}

void run_branch(const IndSetFamily& fam, const Compat& a, int m, int sign, IntVec& q, std::vector<IntVec>& v,
                Exec ex) {
  const std::size_t N = fam.size();
  const int alpha = fam.alpha;
  const auto ie = static_cast<std::size_t>(fam.index_even);
  const auto io = static_cast<std::size_t>(fam.index_odd);
  std::vector<IntVec> w;  // w_j = A v_j
  v.assign(1, IntVec(N, 0));
  v[0][ie] += 1;
  v[0][io] += sign;
  q.assign(1, sign);
  w.push_back(apply_a(a, v[0], ex));
  for (int n = 1; n <= m; ++n) {
    IntVec vn(N);
    for (std::size_t s = 0; s < N; ++s) {
      mpz_class acc = 0;
      int k = alpha - fam.sizes[s];
      if (k >= 1 && k <= n) acc += w[n - k][s];
      for (int i = 1; i < n; ++i) acc -= q[i] * v[n - i][s];
      vn[s] = sign * acc;
    }
    v.push_back(std::move(vn));
    w.push_back(apply_a(a, v.back(), ex));
    q.push_back(w.back()[ie]);
  }
}

}  // namespace

QSeries q_series(const IndSetFamily& fam, int m, Exec ex) {
  if (m < 0) throw Error(Errc::BadParameters, "series order must be >= 0");
  if (fam.index_even < 0 || fam.index_odd < 0)
    throw Error(Errc::BadParameters, "q_series needs a torus family with both ground states");
  QSeries qs;
  qs.alpha = fam.alpha;
  qs.N = fam.size();
  Compat a = compatibility(fam, ex);
  run_branch(fam, a, m, +1, qs.qplus, qs.vplus, ex);
  run_branch(fam, a, m, -1, qs.qminus, qs.vminus, ex);
  return qs;
}

QSeries q_series(const Torus& t, int m, Exec ex) { return q_series(independent_sets(t.graph(), ex), m, ex); }

ABSplit a_b_split(const IntVec& qplus, const IntVec& qminus) {
  if (qplus.size() != qminus.size()) throw Error(Errc::BadParameters, "a_b_split needs equal orders");
  ABSplit r;
  for (std::size_t n = 0; n < qplus.size(); ++n) {
    mpq_class s(qplus[n] + qminus[n], 2), d(qplus[n] - qminus[n], 2);
    s.canonicalize();
    d.canonicalize();
    r.a.push_back(s);
    r.b.push_back(d);
  }
  return r;
}

BoundSequences bound_sequences(long N, int m) {
  if (N < 1 || m < 0) throw Error(Errc::BadParameters, "bound_sequences needs N >= 1, m >= 0");
  BoundSequences r;
  r.x.push_back(1);
  for (int n = 1; n <= m; ++n) {
    mpz_class acc = r.x[n - 1];
    for (int i = 1; i < n; ++i) acc += r.x[i] * r.x[n - i];
    r.x.push_back(acc * N);
  }
  mpz_class n2 = mpz_class(N) * N, pw = 1;
  for (int n = 0; n <= m; ++n) {
    mpq_class y(r.x[n], pw);
    y.canonicalize();
    r.y.push_back(y);
    pw *= n2;
  }
  return r;
}

void verify_symmetry(const Torus& t, const IndSetFamily& fam, const QSeries& qs) {
  const auto ps = induced_set_permutation(fam, t.odd_involution());
  const auto pt = induced_set_permutation(fam, t.even_translation());
  const std::size_t N = fam.size();
  for (int n = 0; n <= qs.order(); ++n) {
    for (std::size_t s = 0; s < N; ++s) {
      bool ok = qs.vplus[n][ps[s]] == qs.vplus[n][s] && qs.vminus[n][ps[s]] == -qs.vminus[n][s] &&
                qs.vplus[n][pt[s]] == qs.vplus[n][s] && qs.vminus[n][pt[s]] == qs.vminus[n][s];
      if (!ok) throw ViolationError(n, "n=" + std::to_string(n) + " set index " + std::to_string(s));
    }
  }
}

}  // namespace tzlab
