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

#include <gtest/gtest.h>

#include <cmath>

#include "mathieu/errors.hpp"
#include "mathieu/special_fn.hpp"

using namespace mathieu;

TEST(LogGamma, MatchesStdLgamma) {
  for (double x = 0.05; x < 300.0; x *= 1.17) EXPECT_NEAR(log_gamma(x), std::lgamma(x), 2e-14 * std::max(1.0, std::abs(std::lgamma(x)))) << x;
}

TEST(LogGamma, RejectsNonPositive) {
  EXPECT_THROW(log_gamma(0.0), DomainError);
  EXPECT_THROW(log_gamma(-1.5), DomainError);
  EXPECT_THROW(log_gamma(NAN), DomainError);
}

TEST(GammaFn, KnownValues) {
  EXPECT_NEAR(gamma_fn(5.0), 24.0, 1e-12);
  EXPECT_NEAR(gamma_fn(0.5), std::sqrt(kPi), 1e-14);
  EXPECT_NEAR(gamma_fn(-0.5), -2.0 * std::sqrt(kPi), 1e-13);
  EXPECT_THROW(gamma_fn(-2.0), DomainError);
}

TEST(Digamma, KnownValues) {
  constexpr double kEulerGamma = 0.57721566490153286061;
  EXPECT_NEAR(digamma(1.0), -kEulerGamma, 1e-14);
  EXPECT_NEAR(digamma(0.5), -kEulerGamma - 2.0 * std::log(2.0), 1e-14);
  EXPECT_NEAR(digamma(100.0) - digamma(99.0), 1.0 / 99.0, 1e-14);
}

TEST(LogFactorial, TableAndAsymptotic) {
  EXPECT_DOUBLE_EQ(log_factorial(0), 0.0);
  EXPECT_DOUBLE_EQ(log_factorial(1), 0.0);
  EXPECT_NEAR(log_factorial(10), std::log(3628800.0), 1e-15);
  for (std::int64_t n : {21, 100, 12345, 1000000}) EXPECT_NEAR(log_factorial(n), std::lgamma(n + 1.0), 1e-14 * log_factorial(n));
  EXPECT_THROW(log_factorial(-1), DomainError);
}

TEST(LambertW, Identity) {
  EXPECT_DOUBLE_EQ(lambert_w(0.0), 0.0);
  EXPECT_NEAR(lambert_w(kE), 1.0, 1e-15);
  EXPECT_NEAR(lambert_w(-1.0 / kE), -1.0, 1e-7);
  for (double z = -0.36; z < 1e15; z = z < 1 ? z + 0.05 : z * 3.0) {
    const double w = lambert_w(z);
    EXPECT_NEAR(w * std::exp(w), z, 1e-13 * std::max(1.0, std::abs(z))) << z;
  }
  EXPECT_THROW(lambert_w(-0.5), DomainError);
}

TEST(InverseGamma, RoundTripAndIntegers) {
  EXPECT_DOUBLE_EQ(inverse_gamma(24.0), 5.0);
  EXPECT_DOUBLE_EQ(inverse_gamma(3628800.0), 11.0);
  for (double lx = std::log(2.0); lx < 690.0; lx += 7.3) {
    const double g = inverse_gamma_log(lx);
    EXPECT_GE(g, 3.0 - 1e-12);
    EXPECT_NEAR(log_gamma(g), lx, 1e-12) << lx;
  }
  // Far beyond the double range of x itself.
  EXPECT_NEAR(log_gamma(inverse_gamma_log(1e5)), 1e5, 1e-12 * 1e5);
  EXPECT_THROW(inverse_gamma(1.5), DomainError);
}

TEST(InverseGamma, SeedSatisfiesItsEquation) {
  const auto seed = inverse_gamma_seed(1e20);
  EXPECT_NEAR(seed.u0 * std::log(seed.u0) - seed.u0, seed.log_v, 1e-12 * seed.log_v);
  EXPECT_DOUBLE_EQ(seed.seed, seed.u0 + 0.5);
}

TEST(UpperIncompleteGamma, ClosedForms) {
  for (double y : {0.01, 0.5, 3.0, 40.0, 700.0}) {
    EXPECT_NEAR(log_upper_incomplete_gamma(1.0, y), -y, 1e-12 * std::max(1.0, y)) << y;
    EXPECT_NEAR(upper_incomplete_gamma(0.5, y) / (std::sqrt(kPi) * std::erfc(std::sqrt(y))), 1.0, 1e-11) << y;
    // Gamma(2, y) = (1 + y) e^{-y}
    EXPECT_NEAR(log_upper_incomplete_gamma(2.0, y), std::log1p(y) - y, 1e-12 * std::max(1.0, y)) << y;
  }
  EXPECT_NEAR(upper_incomplete_gamma(5.0, 1e-12), 24.0, 1e-10);
  // Negative shape: Gamma(0, y) = E1(y); E1(1) = 0.21938393439552...
  EXPECT_NEAR(upper_incomplete_gamma(0.0, 1.0), 0.21938393439552027, 1e-13);
}

TEST(LogGammaTaylor, DerivativesMatchDigamma) {
  const auto jet = log_gamma_taylor(Taylor<2>::variable(12.5));
  EXPECT_NEAR(jet.c[0], std::lgamma(12.5), 1e-13);
  EXPECT_NEAR(jet.derivative(1), digamma(12.5), 1e-14);
  // trigamma(12.5) ~ 1/x + 1/(2x^2) + 1/(6x^3)
  const double x = 12.5;
  EXPECT_NEAR(jet.derivative(2), 1 / x + 1 / (2 * x * x) + 1 / (6 * x * x * x) - 1 / (30 * std::pow(x, 5)), 1e-9);
}

TEST(Bernoulli, ExactValues) {
  const auto& t = BernoulliTable::instance();
  EXPECT_EQ(t.at(0), Rational(1));
  EXPECT_EQ(t.at(2), Rational(1, 6));
  EXPECT_EQ(t.at(4), Rational(-1, 30));
  EXPECT_EQ(t.at(12), Rational(-691, 2730));
  EXPECT_EQ(t.at(30), Rational(8615841276005LL, 14322));
  EXPECT_THROW(t.at(66), CapacityError);
  EXPECT_THROW(t.at(3), DomainError);
}

TEST(Bernoulli, ZetaAtNegativeOddIntegers) {
  EXPECT_EQ(zeta_neg_odd(0), Rational(-1, 12));
  EXPECT_EQ(zeta_neg_odd(1), Rational(1, 120));
  EXPECT_EQ(zeta_neg_odd(2), Rational(-1, 252));
  EXPECT_EQ(zeta_neg_odd(3), Rational(1, 240));
  EXPECT_NEAR(to_double(zeta_neg_odd(5)), 691.0 / 32760.0, 1e-18);
}
