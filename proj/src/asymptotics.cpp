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

#include "mathieu/asymptotics.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "mathieu/errors.hpp"
#include "mathieu/special_fn.hpp"

namespace mathieu {

namespace {

// log Gamma at a point that must not be a pole; `factor` names the term in
// the error message.
double checked_log_abs_gamma(double x, const char* factor) {
  if (x <= 0.0 && x == std::round(x)) {
    throw DomainError(fmt::format("constant_C: Gamma({}) has a pole at {}", factor, x));
  }
  return x > 0.0 ? log_gamma(x) : std::log(std::abs(gamma_fn(x)));
}

// log of Gamma(mu+1 - (alpha+1)/beta) Gamma((alpha+1)/beta) / Gamma(mu+1).
double log_gamma_product(double alpha, double beta, double mu) {
  const double ratio = (alpha + 1.0) / beta;
  return checked_log_abs_gamma(mu + 1.0 - ratio, "mu+1-(alpha+1)/beta") +
         checked_log_abs_gamma(ratio, "(alpha+1)/beta") - log_gamma(mu + 1.0);
}

void check_r(double r, double minimum, const char* op) {
  if (!(r >= minimum) || !std::isfinite(r)) {
    throw DomainError(fmt::format("{}: r >= {} required (r = {})", op, minimum, r));
  }
}

}  // namespace

double AsymptoticPrediction::log_value(double r) const {
  return std::log(constant) + r_exponent * std::log(r) + log_exponent * std::log(std::log(r));
}

double AsymptoticPrediction::value(double r) const {
  const double direct = constant * std::pow(r, r_exponent) * std::pow(std::log(r), log_exponent);
  if (std::isnormal(direct)) return direct;
  return std::exp(log_value(r));
}

double log_power_index(const PowerLogParams& p) { return p.delta * (p.alpha + 1.0) / p.beta - p.gamma; }

double constant_C(const PowerLogParams& p, BranchMode mode) {
  p.validate();
  const double m = log_power_index(p);
  const double log_gammas = log_gamma_product(p.alpha, p.beta, p.mu);
  if (integer_branch(m, mode)) {
    const double k = std::round(m);
    if (k < 1.0) throw DomainError("constant_C: integer branch needs m >= 1");
    return std::exp((k - 1.0) * std::log(p.beta) - k * std::log(2.0) + log_gammas);
  }
  return std::exp((m - 1.0) * std::log(p.beta / 2.0) - std::log(2.0) + log_gammas);
}

double constant_C_gamma_ratio_variant(const PowerLogParams& p) {
  p.validate();
  const double m = log_power_index(p);
  if (1.0 - m <= 0.0 && 1.0 - m == std::round(1.0 - m)) return 0.0;  // 1/Gamma at a pole
  return constant_C(p, BranchMode::kNonInteger) * gamma_fn(m + 1.0) / gamma_fn(1.0 - m);
}

AsymptoticPrediction powerlog_prediction(const PowerLogParams& p, BranchMode mode) {
  return {constant_C(p, mode), 2.0 * (p.alpha + 1.0) / p.beta - 2.0 * (p.mu + 1.0), 0.0 - log_power_index(p)};
}

double predict_powerlog(const PowerLogParams& p, double r, BranchMode mode) {
  if (!(r > kE) || !std::isfinite(r)) throw DomainError(fmt::format("predict_powerlog: r > e required (r = {})", r));
  return powerlog_prediction(p, mode).value(r);
}

AsymptoticPrediction matched_log_prediction(double alpha, double beta, double mu) {
  const PowerLogParams p{alpha, beta, alpha, beta, mu};
  p.validate();
  // m = 1: the integer-branch constant with beta^0 / 2.
  return {std::exp(log_gamma_product(alpha, beta, mu) - std::log(2.0)),
          2.0 * (alpha + 1.0) / beta - 2.0 * (mu + 1.0), -1.0};
}

FactorialDiagnostics factorial_diagnostics(const FactorialParams& p, double r, double d1, double d2) {
  p.validate();
  p.require_positive_alpha("factorial_diagnostics");
  check_r(r, 10.0, "factorial_diagnostics");
  if (!(0.0 < d1 && d1 < d2 && d2 < 1.0)) {
    throw ParameterError(fmt::format("0 < d1 < d2 < 1 violated (d1 = {}, d2 = {})", d1, d2));
  }
  FactorialDiagnostics d;
  d.g = inverse_gamma_log(2.0 * std::log(r) / p.beta);
  d.frac_g = d.g - std::floor(d.g);
  d.n0 = peak_index_n0(p.beta, r);
  const double drop = p.beta * (p.mu + 1.0) - p.alpha;
  d.m_r = std::min(p.alpha * d.frac_g, drop * (1.0 - d.frac_g));
  d.in_R = d1 <= d.frac_g && d.frac_g <= d2;
  d.in_R0 = -p.alpha * d.frac_g >= -drop * (1.0 - d.frac_g);
  d.in_R1 = d.in_R && !d.in_R0;
  return d;
}

FactorialEstimate predict_factorial(const FactorialParams& p, double r, double d1, double d2) {
  FactorialEstimate out;
  out.diagnostics = factorial_diagnostics(p, r, d1, d2);
  if (!out.diagnostics.in_R) {
    throw PreconditionError(fmt::format("predict_factorial: frac(g) = {} outside [{}, {}]",
                                        out.diagnostics.frac_g, d1, d2),
                            out.diagnostics);
  }
  const double log_r = std::log(r);
  const double stilde = 2.0 * (p.mu + 1.0 - p.alpha / p.beta);
  out.log_value = -stilde * log_r - out.diagnostics.m_r * std::log(log_r);
  out.value = std::exp(out.log_value);
  out.slack_exponent = std::log(std::log(log_r));
  return out;
}

double two_term_estimate(const FactorialParams& p, double r) {
  p.validate();
  check_r(r, 1.0, "two_term_estimate");
  const std::int64_t n0 = peak_index_n0(p.beta, r);
  const double a0 = factorial_summand_log(p, r, n0);
  const double a1 = factorial_summand_log(p, r, n0 + 1);
  const double hi = std::max(a0, a1);
  return std::exp(hi + std::log1p(std::exp(-std::abs(a0 - a1))));
}

FactorialEnvelope factorial_envelope(const FactorialParams& p, double r, double epsilon) {
  p.validate();
  p.require_positive_alpha("factorial_envelope");
  check_r(r, 100.0, "factorial_envelope");
  if (!(epsilon > 0.0)) throw ParameterError("factorial_envelope: epsilon > 0 required");
  const double log_r = std::log(r);
  const double power = 2.0 * p.alpha / p.beta - 2.0 * (p.mu + 1.0);
  return {std::exp((power - epsilon) * log_r), std::exp((power + epsilon) * log_r), power * log_r};
}

double factorial_ceiling(const FactorialParams& p, double r, double epsilon, double slack) {
  p.validate();
  p.require_positive_alpha("factorial_ceiling");
  check_r(r, 100.0, "factorial_ceiling");
  if (!(epsilon > 0.0)) throw ParameterError("factorial_ceiling: epsilon > 0 required");
  const double log_r = std::log(r);
  const double log_log_r = std::log(log_r);
  const double stilde = 2.0 * (p.mu + 1.0 - p.alpha / p.beta);
  return std::exp(-stilde * log_r + epsilon * log_log_r + slack * std::log(log_log_r));
}

std::vector<ExpansionTerm> classical_expansion_terms(double mu, int max_k) {
  // The coefficients are defined for every mu > 0; only the summation
  // routine insists on mu > 3/2.
  if (!(mu > 0.0) || !std::isfinite(mu)) throw ParameterError(fmt::format("mu > 0 violated (mu = {})", mu));
  if (max_k < 0) throw ParameterError("classical_expansion_terms: max_k >= 0 required");
  const auto& table = BernoulliTable::instance();
  if (2 * max_k + 2 > table.max_index()) {
    throw CapacityError(fmt::format("classical_expansion_terms: B_{} is not tabulated (capacity B_{})",
                                    2 * max_k + 2, table.max_index()),
                        2 * max_k + 2);
  }
  std::vector<ExpansionTerm> terms;
  terms.push_back({-1, 1.0 / mu, -2.0 * mu});
  double gamma_ratio = 1.0;  // Gamma(k+mu+1) / (Gamma(mu+1) k!)
  for (int k = 0; k <= max_k; ++k) {
    if (k > 0) gamma_ratio *= (mu + k) / k;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    terms.push_back({k, 2.0 * sign * to_double(zeta_neg_odd(k)) * gamma_ratio, -2.0 * k - 2.0 * mu - 2.0});
  }
  return terms;
}

ExpansionSum eval_classical_expansion(double mu, double r, Truncation mode, int fixed_k) {
  if (!(mu > 1.5) || !std::isfinite(mu)) throw ParameterError(fmt::format("mu > 3/2 violated (mu = {})", mu));
  if (!(r > 1.0) || !std::isfinite(r)) throw DomainError(fmt::format("eval_classical_expansion: r > 1 required (r = {})", r));
  const int capacity = BernoulliTable::instance().max_index() / 2 - 1;
  const int max_k = (mode == Truncation::kFixed) ? fixed_k : capacity;
  if (mode == Truncation::kFixed && fixed_k > capacity) {
    throw CapacityError(fmt::format("eval_classical_expansion: k = {} exceeds the table", fixed_k), 2 * fixed_k + 2);
  }
  const auto terms = classical_expansion_terms(mu, std::min(max_k + 1, capacity));
  const double log_r = std::log(r);
  auto magnitude = [&](const ExpansionTerm& t) { return std::abs(t.coefficient) * std::exp(t.r_power * log_r); };

  ExpansionSum out;
  double sum = 0.0;
  double previous = std::numeric_limits<double>::infinity();
  for (const auto& t : terms) {
    const double size = magnitude(t);
    const bool stop = (mode == Truncation::kFixed) ? t.k > fixed_k : (t.k >= 1 && size > previous);
    if (stop) {
      out.error_estimate = size;
      break;
    }
    sum += t.coefficient * std::exp(t.r_power * log_r);
    out.last_k = t.k;
    out.error_estimate = size;
    previous = size;
  }
  out.value = sum;
  return out;
}

EvalResult classical_series_direct(double mu, double r, double rel_tol) {
  const PowerLogParams p{1.0, 2.0, 0.0, 0.0, mu};
  EvalResult tail = eval_powerlog(p, r, rel_tol);
  const double first = 2.0 / std::pow(1.0 + r * r, mu + 1.0);
  tail.value = 2.0 * tail.value + first;
  tail.log_value = std::log(tail.value);
  tail.tail_bound *= 2.0;
  tail.terms_used += 1;
  return tail;
}

}  // namespace mathieu
