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

#include "mathieu/dirichlet.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "mathieu/errors.hpp"
#include "mathieu/kernels.hpp"
#include "mathieu/quadrature.hpp"
#include "mathieu/special_fn.hpp"
#include "mathieu/taylor.hpp"

namespace mathieu {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_tol(double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw ParameterError("rel_tol must lie in (0, 1)");
}

// Largest index ever summed explicitly by the Dirichlet evaluators.
constexpr std::int64_t kMaxExplicitTerms = 4'000'000'000;

// log of Gamma(mu+1 - s/2) Gamma(s/2) / (2 Gamma(mu+1)) for real s in (0, 2mu+2).
double log_gamma_pair(double mu, double s) {
  return log_gamma(mu + 1.0 - s / 2.0) + log_gamma(s / 2.0) - std::log(2.0) - log_gamma(mu + 1.0);
}

}  // namespace

TransformFrame transform_frame(const PowerLogParams& p) {
  p.validate();
  return {2.0 * (p.mu + 1.0) - 2.0 * (p.alpha + 1.0) / p.beta, kNaN, p.gamma - p.alpha * p.delta / p.beta,
          p.delta / p.beta};
}

TransformFrame transform_frame(const FactorialParams& p) {
  p.validate();
  return {kNaN, 2.0 * (p.mu + 1.0 - p.alpha / p.beta), kNaN, kNaN};
}

bool integer_branch(double m, BranchMode mode) {
  switch (mode) {
    case BranchMode::kInteger:
      return true;
    case BranchMode::kNonInteger:
      return false;
    case BranchMode::kAuto:
      break;
  }
  const double nearest = std::round(m);
  return nearest >= 1.0 && std::abs(m - nearest) < kIntegerTolerance;
}

double zeta_eta_theta(const DirichletParams& p, double s, double rel_tol) {
  if (!(s > 1.0) || !std::isfinite(s)) throw DomainError(fmt::format("zeta_eta_theta: s > 1 required (s = {})", s));
  check_tol(rel_tol);
  const double c = p.eta - p.theta * s;  // summand (log n)^c n^{-s}
  const double sm1 = s - 1.0;
  auto log_term = [=](double x) {
    const double lx = std::log(x);
    return c * std::log(lx) - s * lx;
  };
  const TermFn term = [&](std::int64_t n) { return std::exp(log_term(static_cast<double>(n))); };

  std::int64_t cutoff = static_cast<std::int64_t>(std::max(1e4, std::ceil(1.0 / sm1)));
  CompensatedSum head;
  head.add(sum_terms(term, 2, cutoff).sum);
  for (;;) {
    const double x0 = static_cast<double>(cutoff);
    const double y = sm1 * std::log(x0);
    const double integral = std::exp((-c - 1.0) * std::log(sm1) + log_upper_incomplete_gamma(c + 1.0, y));
    const auto x = Taylor<3>::variable(x0);
    const auto lx = log(x);
    const auto f = exp(c * log(lx) - s * lx);
    const double correction = f.c[0] / 2.0 - f.derivative(1) / 12.0 + f.derivative(3) / 720.0;
    const double value = head.value() + integral + correction;
    // f''' is monotone this far out, so its total variation is |f'''(N)|.
    const double remainder = 2.0 * std::abs(f.derivative(3)) / 720.0 + 1e-14 * integral;
    if (remainder <= rel_tol * value) return value;
    if (cutoff > kMaxExplicitTerms / 4) throw NumericError("zeta_eta_theta: tail did not meet the tolerance");
    head.add(sum_terms(term, cutoff, cutoff * 4).sum);
    cutoff *= 4;
  }
}

double zeta_singular_prediction(const DirichletParams& p, double s, BranchMode mode) {
  const double sm1 = s - 1.0;
  if (!(sm1 > 0.0 && sm1 < 0.5)) {
    throw DomainError(fmt::format("zeta_singular_prediction: s - 1 must lie in (0, 0.5) (s = {})", s));
  }
  const double m = p.theta - p.eta;
  if (integer_branch(m, mode)) {
    const double k = std::round(m);
    if (k < 1.0) throw DomainError("zeta_singular_prediction: integer branch needs theta - eta >= 1");
    const double sign = (static_cast<std::int64_t>(k) % 2 == 1) ? 1.0 : -1.0;
    return sign / std::exp(log_gamma(k)) * std::pow(sm1, k - 1.0) * std::log(1.0 / sm1);
  }
  const double arg = p.eta - p.theta + 1.0;
  if (arg <= 0.0 && arg == std::round(arg)) {
    throw DomainError(fmt::format("zeta_singular_prediction: Gamma(eta - theta + 1) has a pole at {}", arg));
  }
  return gamma_fn(arg) * std::pow(sm1, -arg);
}

double eta_factorial(double s, double rel_tol) {
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError(fmt::format("eta_factorial: s > 0 required (s = {})", s));
  check_tol(rel_tol);
  const double target = rel_tol * 1e-2;
  CompensatedSum total;
  std::int64_t lo = 0;
  std::int64_t chunk = 64;
  for (;;) {
    total.add(sum_factorial_power(s, lo, lo + chunk).sum);
    lo += chunk;
    // For n >= N, t_{n+1}/t_n = (n+1)^{-s} <= (N+1)^{-s} = q.
    const double log_next = -s * log_factorial(lo);
    const double log_q = -s * std::log(static_cast<double>(lo + 1));
    const double tail = std::exp(log_next) / -std::expm1(log_q);
    if (tail <= target * total.value()) return total.value();
    if (lo > kMaxExplicitTerms) throw NumericError("eta_factorial: term budget exhausted");
    chunk *= 2;
  }
}

double log_factorial_dirichlet(double s, double rel_tol) {
  if (!(s > 1.0) || !std::isfinite(s)) {
    throw DomainError(fmt::format("log_factorial_dirichlet: s > 1 required (s = {})", s));
  }
  check_tol(rel_tol);
  const TermFn term = [s](std::int64_t n) { return std::exp(-s * std::log(log_factorial(n))); };
  // log(log Gamma(e^t + 1)) without forming e^t once Stirling is exact to rounding.
  auto log_log_fact = [](double t) {
    if (t < 40.0) return std::log(log_gamma(std::exp(t) + 1.0));
    return t + std::log(t - 1.0);
  };
  auto h = [&](double t) { return std::exp(t - s * log_log_fact(t)); };
  // log n! >= n log n - n gives the integral over [e^t, inf) at most
  // e^{1-s} (s-1)^{s-1} Gamma(1-s, (s-1)(t-1)).
  auto far = [s](double t) {
    if (t <= 2.0) return kInf;
    return std::exp((1.0 - s) + (s - 1.0) * std::log(s - 1.0) +
                    log_upper_incomplete_gamma(1.0 - s, (s - 1.0) * (t - 1.0)));
  };

  const std::int64_t cutoff = 10000;
  const double head = sum_terms(term, 2, cutoff).sum;
  const double x0 = static_cast<double>(cutoff);
  const auto jet = exp(-s * log(log_gamma_taylor(Taylor<3>::variable(x0 + 1.0))));
  const double correction = jet.c[0] / 2.0 - jet.derivative(1) / 12.0 + jet.derivative(3) / 720.0;
  const double remainder = 2.0 * std::abs(jet.derivative(3)) / 720.0;
  const double estimate = head + jet.c[0] * x0;
  const auto integral =
      integrate_to_infinity(h, std::log(x0), 1.0, far, rel_tol * estimate / 8, 1e-14, 400);
  const double value = head + integral.value + correction;
  if (remainder + integral.abs_error > rel_tol * value) {
    throw NumericError("log_factorial_dirichlet: tail did not meet the tolerance");
  }
  return value;
}

double mellin_powerlog(const PowerLogParams& p, double s, double rel_tol) {
  const TransformFrame frame = transform_frame(p);
  if (!(s > 0.0 && s < frame.shat)) {
    throw DomainError(fmt::format("mellin_powerlog: s must lie in (0, {}) (s = {})", frame.shat, s));
  }
  const double zeta = zeta_eta_theta({frame.map_eta, frame.map_theta}, 1.0 + p.beta * (frame.shat - s) / 2.0, rel_tol);
  return zeta * std::exp(log_gamma_pair(p.mu, s));
}

double mellin_factorial(const FactorialParams& p, double s, double rel_tol) {
  const TransformFrame frame = transform_frame(p);
  if (!(s > 0.0 && s < frame.stilde)) {
    throw DomainError(fmt::format("mellin_factorial: s must lie in (0, {}) (s = {})", frame.stilde, s));
  }
  return eta_factorial(p.beta * (frame.stilde - s) / 2.0, rel_tol) * std::exp(log_gamma_pair(p.mu, s));
}

double log_abs_gamma(double x, double y) {
  if (!(x > 0.0)) throw DomainError("log_abs_gamma: x > 0 required");
  // Recurrence up to Re z >= 10, then the Stirling series.
  std::complex<double> z(x, y);
  double shift = 0.0;
  while (z.real() < 10.0) {
    shift += std::log(std::abs(z));
    z += 1.0;
  }
  constexpr double kStirling[] = {1.0 / 12.0,   -1.0 / 360.0,       1.0 / 1260.0, -1.0 / 1680.0,
                                  1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0};
  const std::complex<double> inv = 1.0 / z;
  const std::complex<double> inv2 = inv * inv;
  std::complex<double> series = 0.0;
  for (int k = 6; k >= 0; --k) series = series * inv2 + kStirling[k];
  const std::complex<double> lg = (z - 0.5) * std::log(z) - z + kHalfLog2Pi + series * inv;
  return lg.real() - shift;
}

double saddle_line_integral(double mu, double sigma) {
  if (!(sigma > 0.0 && sigma < 2.0 * (mu + 1.0))) {
    throw DomainError("saddle_line_integral: 0 < sigma < 2(mu+1) required");
  }
  const double offset = log_gamma(mu + 1.0) + std::log(2.0);
  auto g = [=](double y) {
    return std::exp(log_abs_gamma(mu + 1.0 - sigma / 2.0, -y / 2.0) + log_abs_gamma(sigma / 2.0, y / 2.0) - offset);
  };
  // For large |y| the integrand behaves like |y|^mu e^{-pi |y| / 2}; the
  // tail beyond Y is at most g(Y) / (pi/2 - mu/Y), doubled for safety, once
  // the decay has set in (mu/Y <= pi/4).
  auto tail = [&](double y) {
    if (mu / y > kPi / 4.0) return kInf;
    return 2.0 * g(y) / (kPi / 2.0 - mu / y);
  };
  const auto half = integrate_to_infinity(g, 0.0, 1.0, tail, 0.0, 1e-12);
  return half.value / kPi;  // symmetric in y; (1/2pi) * 2 * half-line integral
}

double saddle_bound(const FactorialParams& p, double r) {
  const TransformFrame frame = transform_frame(p);
  if (!(r >= 10.0) || !std::isfinite(r)) throw DomainError(fmt::format("saddle_bound: r >= 10 required (r = {})", r));
  const double log_r = std::log(r);
  const double sigma = frame.stilde - 1.0 / log_r;
  if (!(sigma > 0.0)) throw DomainError(fmt::format("saddle_bound: sigma_r = {} is not positive", sigma));
  const double eta = eta_factorial(p.beta / (2.0 * log_r), 1e-10);
  return std::exp(1.0 - frame.stilde * log_r + std::log(eta) + std::log(saddle_line_integral(p.mu, sigma)));
}

}  // namespace mathieu
