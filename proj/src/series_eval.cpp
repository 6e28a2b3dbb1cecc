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

#include "mathieu/series_eval.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <type_traits>

#include "mathieu/errors.hpp"
#include "mathieu/kernels.hpp"
#include "mathieu/quadrature.hpp"
#include "mathieu/special_fn.hpp"
#include "mathieu/taylor.hpp"

namespace mathieu {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw ParameterError(fmt::format("{} must be finite", name));
}

void check_rel_tol(double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-2)) {
    throw ParameterError(fmt::format("rel_tol must lie in (0, 1e-2], got {}", rel_tol));
  }
}

double log_add_exp(double x, double y) {
  if (x == -kInf) return y;
  if (y == -kInf) return x;
  return std::max(x, y) + std::log1p(std::exp(-std::abs(x - y)));
}

double softplus_value(double a) {
  return a > 0.0 ? a + std::log1p(std::exp(-a)) : std::log1p(std::exp(a));
}

// log of the continuous summand as a function of t = log x, generic over
// doubles and Taylor jets.
template <class T>
T log_summand_in_t(const PowerLogParams& p, double log_r, const T& t) {
  const double two_log_r = 2.0 * log_r;
  T numer = p.alpha * t;
  T base = p.beta * t;
  if (p.gamma != 0.0 || p.delta != 0.0) {
    T log_t;
    if constexpr (std::is_same_v<T, double>) {
      log_t = std::log(t);
    } else {
      log_t = log(t);
    }
    numer += p.gamma * log_t;
    base += p.delta * log_t;
  }
  T shifted = base - T(two_log_r);
  T sp;
  if constexpr (std::is_same_v<T, double>) {
    sp = softplus_value(shifted);
  } else {
    sp = softplus(shifted);
  }
  return numer - (p.mu + 1.0) * (T(two_log_r) + sp);
}

// Jet of f(x) = exp(log_summand) at x0 in the variable x.
template <int N>
Taylor<N> summand_jet(const PowerLogParams& p, double log_r, double x0) {
  const Taylor<N> x = Taylor<N>::variable(x0);
  const Taylor<N> t = log_with_value(x, std::log(x0));
  return exp(log_summand_in_t(p, log_r, t));
}

// Location of the maximum of h(t) = f(e^t) e^t, searched on [t_lo, inf).
double integrand_peak(const PowerLogParams& p, double log_r, double t_lo) {
  auto slope = [&](double t) {
    const Taylor<1> tt = Taylor<1>::variable(t);
    return log_summand_in_t(p, log_r, tt).c[1] + 1.0;
  };
  if (slope(t_lo) <= 0.0) return t_lo;
  double lo = t_lo;
  double step = 1.0;
  double hi = std::max(t_lo, 2.0 * log_r / p.beta) + step;
  while (slope(hi) > 0.0) {
    lo = hi;
    step *= 2.0;
    hi += step;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-12 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    (slope(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Upper bound on the integral of f over [e^t, inf), from
// f(x) <= x^A (log x)^B with A = alpha - beta(mu+1), B = gamma - delta(mu+1).
double far_tail_bound(const PowerLogParams& p, double t) {
  const double c = -(p.tail_exponent() + 1.0);
  const double b = p.gamma - p.delta * (p.mu + 1.0);
  return std::exp((-b - 1.0) * std::log(c) + log_upper_incomplete_gamma(b + 1.0, c * t));
}

struct TailPieces {
  double integral = 0.0;
  double integral_error = 0.0;
  double correction = 0.0;  // f(N)/2 - f'(N)/12 + f'''(N)/720
  double remainder = 0.0;   // bound on the Euler-Maclaurin remainder
};

TailPieces euler_maclaurin_tail(const PowerLogParams& p, double log_r, std::int64_t n_split,
                                double t_peak, double abs_tol) {
  TailPieces out;
  const double x0 = static_cast<double>(n_split);
  const double t0 = std::log(x0);
  auto h = [&](double t) { return std::exp(log_summand_in_t(p, log_r, t) + t); };
  auto far = [&](double t) { return far_tail_bound(p, t); };

  const double t_mid = std::max(t0, t_peak);
  QuadResult left;
  if (t_mid > t0) left = integrate(h, t0, t_mid, abs_tol / 8, 1e-15, 20000);
  const QuadResult right = integrate_to_infinity(h, t_mid, 2.0, far, abs_tol / 8, 1e-15);
  out.integral = left.value + right.value;
  out.integral_error = left.abs_error + right.abs_error;

  const auto jet = summand_jet<3>(p, log_r, x0);
  out.correction = jet.c[0] / 2.0 - jet.derivative(1) / 12.0 + jet.derivative(3) / 720.0;

  // |R| <= (1/720) * total variation of f''' on [N, inf).
  auto abs_d4 = [&](double t) {
    const double x = std::exp(t);
    return std::abs(summand_jet<4>(p, log_r, x).derivative(4)) * x;
  };
  const double d4_tol = abs_tol * 1e-2;
  QuadResult tv_left;
  if (t_mid > t0) tv_left = integrate(abs_d4, t0, t_mid, d4_tol, 1e-3, 20000);
  // Past the peak f''' is eventually monotone; its magnitude at the panel
  // edge, doubled, bounds the remaining variation.
  auto tv_far = [&](double t) { return 2.0 * std::abs(summand_jet<3>(p, log_r, std::exp(t)).derivative(3)); };
  const QuadResult tv_right = integrate_to_infinity(abs_d4, t_mid, 2.0, tv_far, d4_tol, 1e-3);
  const double variation = 1.5 * (tv_left.value + tv_left.abs_error + tv_right.value + tv_right.abs_error);
  out.remainder = variation / 720.0;
  return out;
}

}  // namespace

std::int64_t configured_term_cap(std::int64_t fallback) {
  if (const char* env = std::getenv("MATHIEU_TERM_CAP")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::int64_t>(v);
  }
  return fallback;
}

void PowerLogParams::validate() const {
  require_finite(alpha, "alpha");
  require_finite(beta, "beta");
  require_finite(gamma, "gamma");
  require_finite(delta, "delta");
  require_finite(mu, "mu");
  if (!(alpha > 0.0)) throw ParameterError(fmt::format("alpha > 0 violated (alpha = {})", alpha));
  if (!(beta > 0.0)) throw ParameterError(fmt::format("beta > 0 violated (beta = {})", beta));
  if (!(mu >= 0.0)) throw ParameterError(fmt::format("mu >= 0 violated (mu = {})", mu));
  if (!(tail_exponent() < -1.0)) {
    throw ParameterError(
        fmt::format("alpha - beta*(mu+1) < -1 violated (alpha - beta*(mu+1) = {})", tail_exponent()));
  }
}

void FactorialParams::validate() const {
  require_finite(alpha, "alpha");
  require_finite(beta, "beta");
  require_finite(mu, "mu");
  if (!(alpha >= 0.0)) throw ParameterError(fmt::format("alpha >= 0 violated (alpha = {})", alpha));
  if (!(beta > 0.0)) throw ParameterError(fmt::format("beta > 0 violated (beta = {})", beta));
  if (!(mu >= 0.0)) throw ParameterError(fmt::format("mu >= 0 violated (mu = {})", mu));
  if (!(ratio_exponent() < 0.0)) {
    throw ParameterError(
        fmt::format("alpha - beta*(mu+1) < 0 violated (alpha - beta*(mu+1) = {})", ratio_exponent()));
  }
}

void FactorialParams::require_positive_alpha(const std::string& operation) const {
  if (!(alpha > 0.0)) throw UnsupportedError(operation + " requires alpha > 0");
}

double powerlog_log_summand(const PowerLogParams& p, double log_r, double x) {
  return log_summand_in_t(p, log_r, std::log(x));
}

EvalResult eval_powerlog(const PowerLogParams& p, double r, double rel_tol, std::int64_t hard_cap) {
  p.validate();
  check_rel_tol(rel_tol);
  if (!(r > 1.0) || !std::isfinite(r)) throw ParameterError(fmt::format("r > 1 violated (r = {})", r));
  const double log_r = std::log(r);
  const PowerLogTerm term{p.alpha, p.beta, p.gamma, p.delta, p.mu, log_r};

  if (hard_cap < 16) {
    throw ResourceError(fmt::format("eval_powerlog: term cap {} below the minimum head length 16", hard_cap),
                        hard_cap, kInf);
  }
  std::int64_t n_split = std::min<std::int64_t>(1024, hard_cap);
  KernelSum head = sum_powerlog(term, 2, n_split);
  double last_bound = kInf;
  for (;;) {
    const double t_peak = integrand_peak(p, log_r, std::log(static_cast<double>(n_split)));
    // Tolerance budget: quadrature and remainder each get a quarter of the
    // allowance, relative to a cheap estimate of the total.
    const double peak_h = std::exp(log_summand_in_t(p, log_r, t_peak) + t_peak);
    const double scale = head.sum + peak_h;
    const TailPieces tail = euler_maclaurin_tail(p, log_r, n_split, t_peak, rel_tol * scale / 4);
    const double value = head.sum + tail.integral + tail.correction;
    const double bound = tail.remainder + tail.integral_error;
    last_bound = bound / value;
    if (bound <= rel_tol * value) {
      EvalResult out;
      out.value = value;
      out.log_value = std::log(value);
      out.tail_bound = bound;
      out.terms_used = n_split - 2;
      if (head.argmax >= 2 && head.argmax < n_split - 1) {
        out.peak_index = head.argmax;
      } else {
        const double x_peak = std::exp(t_peak);
        // h peaks at t_peak; f itself peaks slightly earlier. Scan nearby integers.
        const double x_lo = std::max(static_cast<double>(n_split - 1), std::floor(x_peak / 4.0));
        std::int64_t best = static_cast<std::int64_t>(x_lo);
        double best_log = term.log_term(best);
        const std::int64_t hi = static_cast<std::int64_t>(std::ceil(x_peak)) + 1;
        // Golden-section on the integers would be cheaper; the summand is
        // unimodal here so a ternary search is enough.
        std::int64_t lo = best;
        std::int64_t up = std::max(hi, lo);
        while (up - lo > 2) {
          const std::int64_t m1 = lo + (up - lo) / 3;
          const std::int64_t m2 = up - (up - lo) / 3;
          if (term.log_term(m1) < term.log_term(m2)) {
            lo = m1 + 1;
          } else {
            up = m2 - 1;
          }
        }
        for (std::int64_t n = lo; n <= up; ++n) {
          const double lt = term.log_term(n);
          if (lt > best_log) {
            best_log = lt;
            best = n;
          }
        }
        out.peak_index = best;
      }
      return out;
    }
    if (n_split >= hard_cap) break;
    const std::int64_t next = std::min(n_split * 2, hard_cap);
    const KernelSum more = sum_powerlog(term, n_split, next);
    CompensatedSum acc;
    acc.add(head.sum);
    acc.add(more.sum);
    if (more.max_term > head.max_term) {
      head.max_term = more.max_term;
      head.argmax = more.argmax;
    }
    head.sum = acc.value();
    n_split = next;
  }
  throw ResourceError(fmt::format("eval_powerlog: term cap {} reached with relative error bound {:.3g}",
                                  hard_cap, last_bound),
                      hard_cap, last_bound);
}

EvalResult eval_general(const SequencePair& s, double mu, double r, double rel_tol, std::int64_t hard_cap) {
  if (!s.a || !s.b) throw ParameterError("eval_general: both sequence callbacks are required");
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw ParameterError(fmt::format("mu >= 0 violated (mu = {})", mu));
  if (!(r > 0.0) || !std::isfinite(r)) throw ParameterError(fmt::format("r > 0 violated (r = {})", r));
  check_rel_tol(rel_tol);
  const double r2 = r * r;
  const double power = mu + 1.0;
  const TermFn term = [&](std::int64_t n) { return s.a(n) / std::pow(s.b(n) + r2, power); };

  // Spot check of the monotonicity promise on geometrically spaced pairs.
  auto check_monotone = [&](std::int64_t lo, std::int64_t hi) {
    lo = std::max(lo, s.b_monotone_from);
    if (hi - 1 <= lo) return;
    const double ratio = std::pow(static_cast<double>(hi - 1) / static_cast<double>(std::max<std::int64_t>(lo, 1)),
                                  1.0 / 32.0);
    double pos = static_cast<double>(std::max<std::int64_t>(lo, 1));
    std::int64_t prev = -1;
    for (int i = 0; i <= 32; ++i, pos *= ratio) {
      const std::int64_t n = std::clamp<std::int64_t>(static_cast<std::int64_t>(pos), lo, hi - 2);
      if (n == prev) continue;
      prev = n;
      if (s.b(n + 1) < s.b(n)) {
        throw ContractViolation(
            fmt::format("b is not nondecreasing past index {}: b({}) > b({})", s.b_monotone_from, n, n + 1));
      }
    }
  };

  auto envelope = [&](std::int64_t n_end, double last_term) -> double {
    if (s.tail_envelope) return s.tail_envelope(n_end, mu, r);
    // Power-law fit t(n) ~ t(N) (n/N)^-p over the last octave.
    const std::int64_t half = n_end / 2;
    const std::int64_t three_q = (n_end * 3) / 4;
    const double t_half = term(half);
    const double t_three_q = term(three_q);
    if (last_term == 0.0 && t_half == 0.0) return 0.0;
    if (!(t_half > t_three_q && t_three_q > last_term && last_term > 0.0)) return kInf;
    const double decay = std::log(t_half / last_term) / std::log(static_cast<double>(n_end - 1) / half);
    if (decay <= 1.05) return kInf;
    return 2.0 * last_term * (1.0 + static_cast<double>(n_end - 1) / (decay - 1.0));
  };

  std::int64_t n_end = std::min<std::int64_t>(std::max<std::int64_t>(64, 2 * s.b_monotone_from + 2), hard_cap);
  KernelSum total = sum_terms(term, 0, n_end);
  check_monotone(0, n_end);
  std::int64_t checked_to = n_end;
  double last_bound = kInf;
  for (;;) {
    const double tail = envelope(n_end, term(n_end - 1));
    last_bound = tail / total.sum;
    if (tail <= rel_tol * total.sum) {
      EvalResult out;
      out.value = total.sum;
      out.log_value = std::log(total.sum);
      out.tail_bound = tail;
      out.terms_used = n_end;
      out.peak_index = total.argmax;
      return out;
    }
    if (n_end >= hard_cap) break;
    const std::int64_t next = std::min(n_end * 2, hard_cap);
    const KernelSum more = sum_terms(term, n_end, next);
    check_monotone(checked_to, next);
    checked_to = next;
    CompensatedSum acc;
    acc.add(total.sum);
    acc.add(more.sum);
    total.sum = acc.value();
    if (more.max_term > total.max_term) {
      total.max_term = more.max_term;
      total.argmax = more.argmax;
    }
    n_end = next;
  }
  throw ResourceError(fmt::format("eval_general: term cap {} reached with relative tail bound {:.3g}",
                                  hard_cap, last_bound),
                      hard_cap, last_bound);
}

double factorial_summand_log(const FactorialParams& p, double r, std::int64_t n) {
  const double lf = log_factorial(n);
  return p.alpha * lf - (p.mu + 1.0) * log_add_exp(p.beta * lf, 2.0 * std::log(r));
}

std::int64_t peak_index_n0(double beta, double r) {
  if (!(beta > 0.0)) throw DomainError("peak_index_n0: beta must be positive");
  if (!(r >= 1.0) || !std::isfinite(r)) throw DomainError("peak_index_n0: r >= 1 required");
  const double target = 2.0 * std::log(r);
  std::int64_t n = 1;
  if (target / beta >= std::log(2.0)) {
    n = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(inverse_gamma_log(target / beta))) - 1);
  }
  while (beta * log_factorial(n + 1) <= target) ++n;
  while (n > 0 && beta * log_factorial(n) > target) --n;
  return n;
}

EvalResult eval_factorial(const FactorialParams& p, double r, double rel_tol, std::int64_t hard_cap) {
  p.validate();
  check_rel_tol(rel_tol);
  if (!(r > 0.0) || !std::isfinite(r)) throw ParameterError(fmt::format("r > 0 violated (r = {})", r));
  const double two_log_r = 2.0 * std::log(r);
  const double ratio_power = p.ratio_exponent();

  // Running log-sum-exp with compensated accumulation of the scaled terms.
  double shift = -kInf;
  CompensatedSum scaled;
  double best_log = -kInf;
  std::int64_t best = 0;
  double last_bound = kInf;
  for (std::int64_t n = 0; n < hard_cap; ++n) {
    const double lf = log_factorial(n);
    const double lt = p.alpha * lf - (p.mu + 1.0) * log_add_exp(p.beta * lf, two_log_r);
    if (lt > best_log) {
      best_log = lt;
      best = n;
    }
    if (lt > shift) {
      const double rescale = std::isfinite(shift) ? std::exp(shift - lt) : 0.0;
      CompensatedSum rescaled;
      rescaled.add(scaled.value() * rescale);
      scaled = rescaled;
      shift = lt;
    }
    scaled.add(std::exp(lt - shift));
    if (p.beta * lf < two_log_r) continue;
    // For k >= n, A_{k+1}/A_k <= kappa^{mu+1} (n+1)^{alpha - beta(mu+1)}.
    const double log_kappa = std::log1p(std::exp(two_log_r - p.beta * lf));
    const double log_rho = (p.mu + 1.0) * log_kappa + ratio_power * std::log(static_cast<double>(n + 1));
    if (log_rho >= 0.0) continue;
    const double rho = std::exp(log_rho);
    const double log_sum = shift + std::log(scaled.value());
    const double log_tail = lt + std::log(rho / (1.0 - rho));
    last_bound = std::exp(log_tail - log_sum);
    if (log_tail <= std::log(rel_tol) + log_sum) {
      EvalResult out;
      out.log_value = log_sum;
      out.value = std::exp(log_sum);
      out.tail_bound = std::exp(log_tail);
      out.terms_used = n + 1;
      out.peak_index = best;
      return out;
    }
  }
  throw ResourceError(fmt::format("eval_factorial: term cap {} reached with relative tail bound {:.3g}",
                                  hard_cap, last_bound),
                      hard_cap, last_bound);
}

EvalResult eval_power_series(const SequencePair& s, double mu, double x, double r, double rel_tol,
                             std::int64_t hard_cap) {
  if (!s.a || !s.b) throw ParameterError("eval_power_series: both sequence callbacks are required");
  if (!(std::abs(x) < 1.0)) throw DomainError(fmt::format("eval_power_series: |x| < 1 required (x = {})", x));
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw ParameterError(fmt::format("mu >= 0 violated (mu = {})", mu));
  if (!(r > 0.0) || !std::isfinite(r)) throw ParameterError(fmt::format("r > 0 violated (r = {})", r));
  check_rel_tol(rel_tol);
  const double power = mu + 1.0;
  const double log_r2 = 2.0 * std::log(r);
  const double ax = std::abs(x);

  CompensatedSum acc;
  double x_pow = 1.0;
  double best = -1.0;
  std::int64_t best_n = 0;
  double last_bound = kInf;
  for (std::int64_t n = 0; n < hard_cap; ++n) {
    const double a = s.a(n);
    const double b = s.b(n);
    if (b < 0.0) throw ContractViolation(fmt::format("eval_power_series: b({}) = {} is negative", n, b));
    const double t = a * x_pow / std::pow(b + r * r, power);
    acc.add(t);
    if (std::abs(t) > best) {
      best = std::abs(t);
      best_n = n;
    }
    // Tail past n from |a_k| <= |a_n| (k/n)^d and b_k >= 0.
    double tail = kInf;
    if (ax == 0.0) {
      tail = 0.0;
    } else if (n >= 1) {
      const double q = std::pow(static_cast<double>(n + 1) / n, s.a_growth_degree) * ax;
      if (q < 1.0) tail = std::abs(a) * std::abs(x_pow) * q / (1.0 - q) * std::exp(-power * log_r2);
    }
    const double partial = acc.value();
    last_bound = tail / std::abs(partial);
    if (tail <= rel_tol * std::abs(partial)) {
      EvalResult out;
      out.value = partial;
      out.log_value = std::log(std::abs(partial));
      out.tail_bound = tail;
      out.terms_used = n + 1;
      out.peak_index = best_n;
      return out;
    }
    x_pow *= x;
  }
  throw ResourceError(fmt::format("eval_power_series: term cap {} reached with relative tail bound {:.3g}",
                                  hard_cap, last_bound),
                      hard_cap, last_bound);
}

}  // namespace mathieu
