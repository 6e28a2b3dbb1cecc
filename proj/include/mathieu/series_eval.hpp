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

/// \file series_eval.hpp
/// \brief Direct evaluation of Mathieu-type series
///
///   S_{a,b,mu}(r) = sum_n a_n / (b_n + r^2)^(mu+1)
///
/// for power-logarithmic, factorial, user-supplied and power-series
/// sequences. Every evaluator returns the value together with a bound on the
/// error of what was not summed explicitly.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace mathieu {

/// a_n = n^alpha (log n)^gamma, b_n = n^beta (log n)^delta, summed from n = 2.
struct PowerLogParams {
  double alpha = 1.0;
  double beta = 2.0;
  double gamma = 0.0;
  double delta = 0.0;
  double mu = 1.0;

  /// Throws ParameterError naming the violated constraint.
  void validate() const;
  /// alpha - beta (mu + 1); the far-tail power of the summand.
  double tail_exponent() const { return alpha - beta * (mu + 1.0); }
};

/// a_n = (n!)^alpha, b_n = (n!)^beta, summed from n = 0.
struct FactorialParams {
  double alpha = 1.0;
  double beta = 2.0;
  double mu = 1.0;

  void validate() const;
  /// Throws UnsupportedError when alpha == 0; the two-summand asymptotics
  /// need alpha > 0.
  void require_positive_alpha(const std::string& operation) const;
  double ratio_exponent() const { return alpha - beta * (mu + 1.0); }
};

/// User-supplied sequences for the generic series. Both callbacks must be
/// reentrant; they may be invoked concurrently.
struct SequencePair {
  std::function<double(std::int64_t)> a;
  std::function<double(std::int64_t)> b;
  /// b is promised nondecreasing (and divergent) for n >= b_monotone_from.
  std::int64_t b_monotone_from = 0;
  /// Optional certified bound on sum_{n >= N} a_n / (b_n + r^2)^(mu+1),
  /// called as tail_envelope(N, mu, r). When absent, a power-law envelope is
  /// fitted to the last octave of evaluated terms (see eval_general).
  std::function<double(std::int64_t, double, double)> tail_envelope;
  /// For power series: |a_n| <= |a_N| (n / N)^a_growth_degree for n >= N.
  double a_growth_degree = 0.0;
};

struct EvalResult {
  double value = 0.0;
  double log_value = 0.0;       ///< log(value), finite even when value underflows
  double tail_bound = 0.0;      ///< bound on |value - true sum|
  std::int64_t terms_used = 0;  ///< summands evaluated explicitly
  std::int64_t peak_index = 0;  ///< index of the largest summand
};

inline constexpr std::int64_t kPowerLogTermCap = 1'000'000'000;
inline constexpr std::int64_t kGeneralTermCap = 1'000'000;

/// Term cap for the explicit part of a summation: `fallback`, unless the
/// environment variable MATHIEU_TERM_CAP holds a positive integer.
std::int64_t configured_term_cap(std::int64_t fallback);

/// S_{alpha,beta,gamma,delta,mu}(r). The summands n = 2..N-1 are added
/// explicitly and the rest is taken by Euler-Maclaurin with two derivative
/// corrections, the integral done by quadrature in log x. N doubles until
/// the Euler-Maclaurin remainder bound meets the tolerance; exceeding
/// `hard_cap` raises ResourceError.
EvalResult eval_powerlog(const PowerLogParams& p, double r, double rel_tol,
                         std::int64_t hard_cap = configured_term_cap(kPowerLogTermCap));

/// sum_{n >= 0} a_n / (b_n + r^2)^(mu+1) by direct summation with a tail
/// envelope. Terms with a_n == 0 are allowed.
EvalResult eval_general(const SequencePair& s, double mu, double r, double rel_tol,
                        std::int64_t hard_cap = configured_term_cap(kGeneralTermCap));

/// log A_n for the factorial series; never overflows.
double factorial_summand_log(const FactorialParams& p, double r, std::int64_t n);

/// The n0 with (n0!)^beta <= r^2 < ((n0+1)!)^beta, for r >= 1.
std::int64_t peak_index_n0(double beta, double r);

/// S^!_{alpha,beta,mu}(r) in log space, with a geometric tail bound past n0.
EvalResult eval_factorial(const FactorialParams& p, double r, double rel_tol,
                          std::int64_t hard_cap = configured_term_cap(kGeneralTermCap));

/// sum_{n >= 0} a_n x^n / (b_n + r^2)^(mu+1) for |x| < 1, truncated by the
/// geometric tail bound implied by `a_growth_degree`.
EvalResult eval_power_series(const SequencePair& s, double mu, double x, double r, double rel_tol,
                             std::int64_t hard_cap = configured_term_cap(kGeneralTermCap));

/// Continuous power-log summand at real x > 1, in log space.
double powerlog_log_summand(const PowerLogParams& p, double log_r, double x);

}  // namespace mathieu
