// Copyright 2026 The Mathieu Series Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// \file special_fn.hpp
/// \brief Real special functions used throughout the library: log-Gamma,
/// log-factorial, principal Lambert W, inverse Gamma, upper incomplete Gamma,
/// and exact Bernoulli numbers.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mathieu/taylor.hpp"

namespace mathieu {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kE = 2.718281828459045235360287471352662498;
inline constexpr double kHalfLog2Pi = 0.918938533204672741780329736405617640;

/// log Gamma(x) for finite x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// Gamma(x) for real x that is not a non-positive integer; uses reflection for x < 0.
double gamma_fn(double x);

/// Digamma psi(x) for x > 0.
double digamma(double x);

/// log(n!), using an exact table for n <= 20.
double log_factorial(std::int64_t n);

/// Principal branch W_0(z) for z >= -1/e.
double lambert_w(double z);

/// Quantities of the asymptotic inverse-Gamma seed. `x` itself may exceed the
/// double range, so the seed is parametrized by log x.
struct InverseGammaSeed {
  double log_x;  ///< log x
  double log_v;  ///< log(x / sqrt(2 pi))
  double w;      ///< W(log v / e)
  double u0;     ///< log v / w; satisfies u0 log u0 - u0 = log v
  double seed;   ///< u0 + 1/2
};

InverseGammaSeed inverse_gamma_seed(double x);
InverseGammaSeed inverse_gamma_seed_log(double log_x);

/// The g >= 3 with Gamma(g) = x, for x >= 2.
double inverse_gamma(double x);
/// Same as inverse_gamma(exp(log_x)), for log_x >= log 2.
double inverse_gamma_log(double log_x);

/// log Gamma(a, y) = log of the integral of t^{a-1} e^{-t} over [y, inf),
/// for any real a and y > 0.
double log_upper_incomplete_gamma(double a, double y);
inline double upper_incomplete_gamma(double a, double y) {
  return std::exp(log_upper_incomplete_gamma(a, y));
}

/// Stirling series for log Gamma on a Taylor jet; requires x.value() >= 10.
template <int N>
Taylor<N> log_gamma_taylor(const Taylor<N>& x) {
  // B_{2k} / (2k (2k-1)), k = 1..8
  constexpr double kStirling[] = {1.0 / 12.0,     -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0,
                                  1.0 / 1188.0,   -691.0 / 360360.0, 1.0 / 156.0,
                                  -3617.0 / 122400.0};
  const Taylor<N> inv = Taylor<N>(1.0) / x;
  const Taylor<N> inv2 = inv * inv;
  Taylor<N> series(0.0);
  for (int k = 7; k >= 0; --k) series = series * inv2 + Taylor<N>(kStirling[k]);
  return (x - Taylor<N>(0.5)) * log(x) - x + Taylor<N>(kHalfLog2Pi) + series * inv;
}

/// Even-index Bernoulli numbers B_0, B_2, ..., B_max as exact rationals.
class BernoulliTable {
 public:
  static constexpr int kDefaultMaxIndex = 64;

  explicit BernoulliTable(int max_index = kDefaultMaxIndex);

  /// Shared immutable table with the default capacity.
  static const BernoulliTable& instance();

  int max_index() const { return max_index_; }
  /// B_index for even index in [0, max_index]; CapacityError beyond.
  const Rational& at(int index) const;

 private:
  int max_index_;
  std::vector<Rational> even_;  // even_[k] = B_{2k}
};

/// zeta(-2k-1) = -B_{2k+2} / (2k+2), exact.
Rational zeta_neg_odd(int k);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace mathieu
