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

/// \file asymptotics.hpp
/// \brief Closed-form large-r behaviour of the Mathieu-type series:
/// leading-order power-log predictions, factorial-series diagnostics,
/// estimates and bounds, and the classical asymptotic expansion.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mathieu/dirichlet.hpp"
#include "mathieu/series_eval.hpp"

namespace mathieu {

/// constant * r^r_exponent * (log r)^log_exponent.
struct AsymptoticPrediction {
  double constant = 0.0;
  double r_exponent = 0.0;
  double log_exponent = 0.0;

  double value(double r) const;
  double log_value(double r) const;
};

/// The exponent m = delta(alpha+1)/beta - gamma that selects the branch of
/// the leading constant.
double log_power_index(const PowerLogParams& p);

/// Leading constant for S_{alpha,beta,gamma,delta,mu}. Away from positive
/// integer m it is (beta/2)^{m-1} G / (2 Gamma(mu+1)) with
/// G = Gamma(mu+1 - (alpha+1)/beta) Gamma((alpha+1)/beta); for m = 1, 2, ...
/// it is beta^{m-1} G / (2^m Gamma(mu+1)). The two agree, so C is continuous
/// in m.
double constant_C(const PowerLogParams& p, BranchMode mode = BranchMode::kAuto);

/// The non-integer constant multiplied by Gamma(m+1) / Gamma(1-m). This is
/// the variant obtained when the singular coefficient of the Dirichlet series
/// is taken as Gamma(m+1) instead of Gamma(1-m); it vanishes as m -> 1 and is
/// kept only so tests can show the evaluator rejects it.
double constant_C_gamma_ratio_variant(const PowerLogParams& p);

AsymptoticPrediction powerlog_prediction(const PowerLogParams& p, BranchMode mode = BranchMode::kAuto);

/// C r^{2(alpha+1)/beta - 2(mu+1)} (log r)^{gamma - delta(alpha+1)/beta}, r > e.
double predict_powerlog(const PowerLogParams& p, double r, BranchMode mode = BranchMode::kAuto);

/// Prediction when a_n ~ n^alpha (log n)^alpha and b_n ~ n^beta (log n)^beta,
/// e.g. a_n = (log n!)^alpha and b_n = (log n!)^beta. The log exponent is -1
/// exactly.
AsymptoticPrediction matched_log_prediction(double alpha, double beta, double mu);

inline constexpr double kDefaultD1 = 0.2;
inline constexpr double kDefaultD2 = 0.8;

struct FactorialDiagnostics {
  double g = 0.0;       ///< inverse Gamma of r^{2/beta}
  double frac_g = 0.0;  ///< fractional part of g
  std::int64_t n0 = 0;  ///< peak index
  double m_r = 0.0;     ///< min(alpha {g}, (beta(mu+1) - alpha)(1 - {g}))
  bool in_R = false;    ///< d1 <= {g} <= d2
  bool in_R0 = false;   ///< -alpha {g} >= (alpha - beta(mu+1))(1 - {g}): A_{n0} is the larger summand
  bool in_R1 = false;   ///< in_R and not in_R0
};

/// Raised when a factorial estimate is requested outside the good set.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, FactorialDiagnostics diagnostics)
      : std::runtime_error(what), diagnostics_(diagnostics) {}
  const FactorialDiagnostics& diagnostics() const noexcept { return diagnostics_; }

 private:
  FactorialDiagnostics diagnostics_;
};

/// Requires alpha > 0 (UnsupportedError), r >= 10, 0 < d1 < d2 < 1.
FactorialDiagnostics factorial_diagnostics(const FactorialParams& p, double r, double d1 = kDefaultD1,
                                           double d2 = kDefaultD2);

struct FactorialEstimate {
  double value = 0.0;           ///< r^{-stilde} exp(-m_r log log r)
  double log_value = 0.0;
  double slack_exponent = 0.0;  ///< log log log r; the unquantified error is exp(O(slack_exponent))
  FactorialDiagnostics diagnostics;
};

/// Central estimate of the factorial series on the good set; throws
/// PreconditionError when {g} lies outside [d1, d2].
FactorialEstimate predict_factorial(const FactorialParams& p, double r, double d1 = kDefaultD1,
                                    double d2 = kDefaultD2);

/// A_{n0} + A_{n0+1}.
double two_term_estimate(const FactorialParams& p, double r);

struct FactorialEnvelope {
  double lower = 0.0;       ///< r^{2 alpha/beta - 2(mu+1) - eps}
  double upper = 0.0;       ///< r^{2 alpha/beta - 2(mu+1) + eps}
  double log_center = 0.0;  ///< -2(mu+1 - alpha/beta) log r
};

FactorialEnvelope factorial_envelope(const FactorialParams& p, double r, double epsilon);

inline constexpr double kDefaultCeilingSlack = 5.0;

/// r^{-stilde} exp(eps log log r + slack log log log r) for r >= 100: an
/// empirically checkable ceiling for the factorial series.
double factorial_ceiling(const FactorialParams& p, double r, double epsilon,
                         double slack = kDefaultCeilingSlack);

/// One term of the large-r expansion of sum_{n>=1} 2n / (n^2 + r^2)^{mu+1}.
struct ExpansionTerm {
  int k = -1;               ///< -1 for the leading 1/mu term
  double coefficient = 0.0;
  double r_power = 0.0;     ///< -2 mu for k = -1, else -2k - 2mu - 2
};

/// Terms k = -1, 0, ..., max_k for mu > 0; CapacityError when
/// B_{2 max_k + 2} is not tabulated.
std::vector<ExpansionTerm> classical_expansion_terms(double mu, int max_k);

enum class Truncation { kFixed, kOptimal };

struct ExpansionSum {
  double value = 0.0;
  double error_estimate = 0.0;
  int last_k = -1;  ///< index of the last term included
};

/// Partial sum of the expansion at r > 1 for mu > 3/2. kFixed sums
/// k = -1 ... fixed_k and reports the first omitted term. kOptimal adds
/// terms while their magnitudes decrease and reports the first term that
/// would grow (or the last available term) as the error estimate.
ExpansionSum eval_classical_expansion(double mu, double r, Truncation mode, int fixed_k = 0);

/// sum_{n>=1} 2n / (n^2 + r^2)^{mu+1} evaluated directly.
EvalResult classical_series_direct(double mu, double r, double rel_tol);

}  // namespace mathieu
