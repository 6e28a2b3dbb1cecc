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

#include "mathieu/special_fn.hpp"

#include <array>
#include <limits>
#include <string>

#include "mathieu/errors.hpp"
#include "mathieu/quadrature.hpp"

namespace mathieu {

namespace {

// B_{2k} / (2k (2k-1)), k = 1..8
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,   -1.0 / 360.0,      1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0};

constexpr double kStirlingMin = 10.0;
constexpr int kShift = 11;

double stirling_correction(double y) {
  const double inv = 1.0 / y;
  const double inv2 = inv * inv;
  double s = 0.0;
  for (int k = 7; k >= 0; --k) s = s * inv2 + kStirling[k];
  return s * inv;
}

double log_gamma_stirling(double y) {
  return (y - 0.5) * std::log(y) - y + kHalfLog2Pi + stirling_correction(y);
}

// corr(a + z) - corr(a), with the power differences factored through z so the
// result is accurate even when z is tiny.
double stirling_correction_difference(double a, double z) {
  const double b = a + z;
  double total = 0.0;
  double pow_a = a;  // a^m for m = 2k - 1
  double pow_b = b;
  for (int k = 0; k < 8; ++k) {
    const int m = 2 * k + 1;
    // b^m - a^m = z * sum_{j<m} b^j a^{m-1-j}
    double geometric = 0.0;
    double bj = 1.0;
    for (int j = 0; j < m; ++j) {
      geometric += bj * std::pow(a, m - 1 - j);
      bj *= b;
    }
    total -= kStirling[k] * z * geometric / (pow_a * pow_b);
    pow_a *= a * a;
    pow_b *= b * b;
  }
  return total;
}

// log Gamma(1 + z) for z in (-1, 9], via the shifted product identity
// Gamma(n + 1 + z) = Gamma(1 + z) * n! * prod_{k<=n} (1 + z/k),
// arranged so that every piece is O(z).
double log_gamma_one_plus(double z) {
  const double a = kShift;
  const double b = a + z;
  double shifted = (a - 0.5) * std::log1p(z / a) + z * (std::log(b) - 1.0) +
                   stirling_correction_difference(a, z);
  for (int k = 1; k < kShift; ++k) shifted -= std::log1p(z / k);
  return shifted;
}

std::array<double, 21> make_log_factorial_table() {
  std::array<double, 21> table{};
  std::uint64_t f = 1;
  table[0] = 0.0;
  for (int n = 1; n <= 20; ++n) {
    f *= static_cast<std::uint64_t>(n);
    table[n] = std::log(static_cast<double>(f));
  }
  return table;
}

double sin_pi(double x) {
  // Reduce to [-1, 1] so sin(pi x) keeps relative accuracy near integers.
  double r = std::fmod(x, 2.0);
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

}  // namespace

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("log_gamma: argument must be finite and positive, got " + std::to_string(x));
  }
  if (x >= kStirlingMin) return log_gamma_stirling(x);
  if (x < 0.5) return log_gamma_one_plus(x) - std::log(x);
  if (x < 1.5) return log_gamma_one_plus(x - 1.0);
  const double eps = x - 2.0;
  return std::log1p(eps) + log_gamma_one_plus(eps);
}

double gamma_fn(double x) {
  if (!std::isfinite(x)) throw DomainError("gamma_fn: non-finite argument");
  if (x > 0.0) return std::exp(log_gamma(x));
  if (x == std::floor(x)) {
    throw DomainError("gamma_fn: pole at non-positive integer " + std::to_string(x));
  }
  return kPi / (sin_pi(x) * std::exp(log_gamma(1.0 - x)));
}

double digamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) throw DomainError("digamma: argument must be positive");
  double shift = 0.0;
  while (x < kStirlingMin) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  // B_{2k} / (2k)
  constexpr std::array<double, 7> kCoef = {1.0 / 12.0,  -1.0 / 120.0, 1.0 / 252.0,
                                           -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0,
                                           1.0 / 12.0};
  const double inv2 = 1.0 / (x * x);
  double s = 0.0;
  for (int k = 6; k >= 0; --k) s = s * inv2 + kCoef[k];
  return shift + std::log(x) - 0.5 / x - s * inv2;
}

double log_factorial(std::int64_t n) {
  static const std::array<double, 21> table = make_log_factorial_table();
  if (n < 0) throw DomainError("log_factorial: negative argument " + std::to_string(n));
  if (n <= 20) return table[static_cast<std::size_t>(n)];
  return log_gamma(static_cast<double>(n) + 1.0);
}

double lambert_w(double z) {
  constexpr double kBranch = -0.36787944117144232159552377016146;  // -1/e
  if (std::isnan(z) || z < kBranch) {
    throw DomainError("lambert_w: argument below -1/e");
  }
  if (std::isinf(z)) return z;
  if (z == kBranch) return -1.0;
  if (z == 0.0) return 0.0;

  double w;
  if (z < -0.25) {
    const double p = std::sqrt(2.0 * (kE * z + 1.0));
    w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * 11.0 / 72.0));
  } else if (z < 3.0) {
    const double l = std::log1p(z);
    w = l * (1.0 - std::log1p(l) / (2.0 + l));
  } else {
    const double l1 = std::log(z);
    const double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }

  for (int iter = 0; iter < 64; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double denom = ew * wp1 - 0.5 * (w + 2.0) * f / wp1;
    const double step = f / denom;
    w -= step;
    if (!(std::abs(step) > 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(w)))) {
      break;
    }
  }
  return w;
}

InverseGammaSeed inverse_gamma_seed_log(double log_x) {
  if (!(log_x >= std::log(2.0))) {
    throw DomainError("inverse_gamma_seed: x must be >= 2");
  }
  InverseGammaSeed s{};
  s.log_x = log_x;
  s.log_v = log_x - kHalfLog2Pi;
  s.w = lambert_w(s.log_v / kE);
  s.u0 = (s.w == 0.0) ? kE : s.log_v / s.w;
  s.seed = s.u0 + 0.5;
  return s;
}

InverseGammaSeed inverse_gamma_seed(double x) {
  if (!(x >= 2.0)) throw DomainError("inverse_gamma_seed: x must be >= 2");
  return inverse_gamma_seed_log(std::log(x));
}

double inverse_gamma_log(double log_x) {
  if (!(log_x >= std::log(2.0)) || !std::isfinite(log_x)) {
    throw DomainError("inverse_gamma: x must be finite and >= 2");
  }
  const double scale = std::max(1.0, std::abs(log_x));
  double g = inverse_gamma_seed_log(log_x).seed;
  bool converged = false;
  for (int iter = 0; iter < 50; ++iter) {
    const double f = log_gamma(g) - log_x;
    const double step = f / digamma(g);
    double next = g - step;
    if (next < 2.5) next = 0.5 * (g + 2.5);
    const bool tiny = std::abs(next - g) <= 2.0 * std::numeric_limits<double>::epsilon() * g;
    g = next;
    if (tiny || std::abs(f) <= 1e-15 * scale) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    double lo = 3.0;
    double hi = std::max(4.0, 2.0 * g);
    while (log_gamma(hi) < log_x) hi *= 2.0;
    for (int iter = 0; iter < 200 && hi - lo > 2.0 * std::numeric_limits<double>::epsilon() * hi;
         ++iter) {
      const double mid = 0.5 * (lo + hi);
      (log_gamma(mid) < log_x ? lo : hi) = mid;
    }
    g = 0.5 * (lo + hi);
  }
  // An integer within root-finding accuracy is itself the root.
  const double gi = std::round(g);
  if (std::abs(g - gi) <= 1e-9 * g &&
      std::abs(log_gamma(gi) - log_x) <= std::abs(log_gamma(g) - log_x)) {
    g = gi;
  }
  return std::max(g, 3.0);
}

double inverse_gamma(double x) {
  if (!(x >= 2.0) || !std::isfinite(x)) {
    throw DomainError("inverse_gamma: x must be finite and >= 2");
  }
  if (x == 2.0) return 3.0;
  return inverse_gamma_log(std::log(x));
}

double log_upper_incomplete_gamma(double a, double y) {
  if (!(y > 0.0) || !std::isfinite(y) || !std::isfinite(a)) {
    throw DomainError("upper_incomplete_gamma: requires finite a and y > 0");
  }
  // Gamma(a, y) = int_{log y}^inf exp(a u - e^u) du. The integrand is
  // normalized by its maximum on the range, attained at uc, and the exponent
  // is written in d = u - uc to avoid cancellation.
  const double u0 = std::log(y);
  const double uc = (a > y) ? std::log(a) : u0;
  const double euc = (a > y) ? a : y;
  const double shift = a * uc - euc;
  auto exponent = [=](double u) {
    const double d = u - uc;
    return a * d - euc * std::expm1(d);
  };
  auto integrand = [=](double u) { return std::exp(exponent(u)); };
  auto remainder = [=](double u) {
    const double eu = std::exp(u);
    if (eu <= a + 1.0) return std::numeric_limits<double>::infinity();
    return std::exp(exponent(u)) / (eu - a);
  };
  // The exponent falls off at rate |a - e^u|; start panels at that scale.
  QuadResult result;
  if (uc > u0) result = integrate(integrand, u0, uc, 0.0, 1e-14, 20000);
  const double rate = std::max(1.0, std::max(std::sqrt(std::abs(a)), euc - a));
  const auto rest = integrate_to_infinity(integrand, uc, 2.0 / rate, remainder, 0.0, 1e-14);
  result.value += rest.value;
  return shift + std::log(result.value);
}

BernoulliTable::BernoulliTable(int max_index) : max_index_(max_index) {
  if (max_index < 0 || max_index % 2 != 0) {
    throw DomainError("BernoulliTable: max_index must be a non-negative even integer");
  }
  // sum_{j=0}^{m} binom(m+1, j) B_j = 0 for m >= 1.
  std::vector<Rational> all(static_cast<std::size_t>(max_index) + 1);
  all[0] = 1;
  for (int m = 1; m <= max_index; ++m) {
    if (m > 1 && m % 2 == 1) {
      all[m] = 0;
      continue;
    }
    boost::multiprecision::cpp_int binom = 1;  // binom(m+1, j)
    Rational s = 0;
    for (int j = 0; j < m; ++j) {
      s += Rational(binom) * all[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    all[m] = -s / (m + 1);
  }
  for (int k = 0; 2 * k <= max_index; ++k) even_.push_back(all[2 * k]);
}

const BernoulliTable& BernoulliTable::instance() {
  static const BernoulliTable table;
  return table;
}

const Rational& BernoulliTable::at(int index) const {
  if (index < 0 || index % 2 != 0) {
    throw DomainError("BernoulliTable: only even non-negative indices are stored");
  }
  if (index > max_index_) {
    throw CapacityError("BernoulliTable: B_" + std::to_string(index) + " requested, capacity is B_" +
                            std::to_string(max_index_),
                        index);
  }
  return even_[static_cast<std::size_t>(index / 2)];
}

Rational zeta_neg_odd(int k) {
  if (k < 0) throw DomainError("zeta_neg_odd: k must be >= 0");
  const int index = 2 * k + 2;
  return -BernoulliTable::instance().at(index) / index;
}

}  // namespace mathieu
