// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tzlab/lattice.hpp"

namespace tzlab {

using LMat = Eigen::Matrix<lcplx, Eigen::Dynamic, Eigen::Dynamic>;
using LVec = Eigen::Matrix<lcplx, Eigen::Dynamic, 1>;

// M_z = D_z A with (D_z)_{SS} = z^{alpha - |S|}.
LMat transfer_matrix(const IndSetFamily& fam, lcplx z);
// D_{z^{1/2}} A D_{z^{1/2}} with the principal square root; conjugate to M_z.
LMat symmetric_transfer(const IndSetFamily& fam, lcplx z);
std::vector<lcplx> eigenvalues(const LMat& m);

enum class Label { qplus, qminus, bulk };

struct TrackOptions {
  long double min_step = 1e-10L;  // fraction of the segment [0, z]
};

struct SpectrumTrack {
  lcplx z;
  std::vector<lcplx> eigenvalues;
  std::vector<Label> labels;
  lcplx qplus, qminus;
  int steps = 0;
};

// Eigenvalues of M_z with q+ and q- identified by continuation from z = 0
// along the segment [0, z]. A step is accepted when each tracked eigenvalue
// moved less than half the distance from its new position to the nearest
// other eigenvalue; otherwise the step is halved.
SpectrumTrack spectrum(const IndSetFamily& fam, lcplx z, const TrackOptions& opt = {});

// beta(z) = q-(z) / q+(z).
lcplx beta(const IndSetFamily& fam, lcplx z, const TrackOptions& opt = {});

// (q+ + q-) / q+ = beta(z) + 1 with q+ and q- refined by Newton on
// det(M_z - s I) in 50-digit arithmetic, for |z| small enough that beta + 1
// falls below long double resolution.
lcplx beta_plus_one_refined(const IndSetFamily& fam, lcplx z, const TrackOptions& opt = {});

struct ZeroSearchOptions {
  // Seed at every n-th root of -1 instead of only those in the sector.
  bool full_circle = false;
  // Newton stops at |h| < tol; 0 picks max(1e-12, 32 n eps) since h carries
  // about n eps of rounding noise from beta^n.
  long double tol = 0;
  int max_iter = 100;
  double residual_tol = 1e-8;
  TrackOptions track;
};

struct FoundZero {
  lcplx lambda;
  lcplx z;
  double residual;  // |Tr M_z^n| / max |s|^n
};

struct ZeroSearchReport {
  std::vector<FoundZero> zeros;  // sorted by |lambda|, then arg
  int seeds = 0;
  int failed = 0;
};

// Zeros of Z(C_n box g; lambda) with |lambda| >= R found by Newton on
// h(z) = 1 + beta(z)^n + Q(z), Q(z) = sum over bulk eigenvalues (s/q+)^n,
// seeded at solutions of beta(z) = zeta for n-th roots zeta of -1 in the
// sector around -1 of half-angle pi rho / 5, rho = R^-alpha / 2.
ZeroSearchReport zero_search(const IndSetFamily& fam, long n, double R, const ZeroSearchOptions& opt = {},
                             Exec ex = Exec::parallel);

// |Tr M_z^n| / max |s|^n from the spectrum, in log space.
double trace_residual(const std::vector<lcplx>& eig, long n);

struct CurveOptions {
  long double step = 1e-2L;
  long double min_step = 1e-7L;
  long double seed_tol = 1e-8L;  // relative tie tolerance at the seed
  long double tol = 1e-12L;      // corrector tolerance on |a| - |b|
};

// Traces z where the two largest-modulus eigenvalues of M_z have equal modulus,
// in both directions from the seed. The returned polyline runs from one end
// through the seed to the other. Ties are reported without classifying them
// as persistent or not.
std::vector<lcplx> equal_modulus_curve(const IndSetFamily& fam, lcplx seed, int steps,
                                       const CurveOptions& opt = {});

// Points where the lambda = 1/z image of a polyline meets the real axis:
// sign changes of Im(lambda) and endpoints of runs lying on the axis.
std::vector<double> real_axis_crossings(const std::vector<lcplx>& curve_z);

}  // namespace tzlab
