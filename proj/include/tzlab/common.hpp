// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tzlab {

enum class Errc {
  OddSide,
  EmptySides,
  CycleTooShort,
  TooLarge,
  TrackingFailure,
  NoConvergence,
  SeedNotOnCurve,
  ViolationAt,
  InconsistentLabels,
  DenominatorZero,
  BadParameters,
  ZeroConstantTerm,
  RadiusTooLarge,
  PoleAtMinusOne,
  PoleHit,
  ZeroLambda,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Raised by series symmetry checks; n is the first failing order.
class ViolationError : public Error {
 public:
  ViolationError(int n, const std::string& what) : Error(Errc::ViolationAt, what), n(n) {}
  int n;
};

// Kernels that have an OpenMP version keep the serial one around; tests
// compare the two and the benchmark times them.
enum class Exec { serial, parallel };

using cplx = std::complex<double>;
using lcplx = std::complex<long double>;

// Enumeration caps. TZLAB_CAP in the environment overrides every default.
std::size_t cap_or(std::size_t fallback);

constexpr std::size_t kIndSetCap = 36;
constexpr std::size_t kRecursionCap = 40;

}  // namespace tzlab
