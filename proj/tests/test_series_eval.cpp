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
#include "mathieu/series_eval.hpp"
#include "mathieu/special_fn.hpp"

using namespace mathieu;

namespace {

// Oracles: plain summation past 2e5 terms plus an Euler-Maclaurin tail in
// extended precision, independent of the library.
constexpr double kPowerLog12001R10 = 0.00489362027430581565671720413113;
constexpr double kPowerLog12111R10 = 0.0038912397590467936;
constexpr double kLogFactorial12R100 = 1.4182987771673152e-05;
constexpr double kFactorial121R10 = 0.00075845752073454903114804953809;
constexpr double kFactorial121R1e3 = 4.70126410906883954887952376143e-10;

SequencePair power_pair(double alpha, double beta) {
  SequencePair s;
  s.a = [alpha](std::int64_t n) { return std::pow(static_cast<double>(n), alpha); };
  s.b = [beta](std::int64_t n) { return std::pow(static_cast<double>(n), beta); };
  return s;
}

}  // namespace

TEST(Params, Validation) {
  EXPECT_NO_THROW((PowerLogParams{1, 2, 0, 0, 1}.validate()));
  EXPECT_THROW((PowerLogParams{1, 1, 0, 0, 0}.validate()), ParameterError);
  EXPECT_THROW((PowerLogParams{0, 2, 0, 0, 1}.validate()), ParameterError);
  EXPECT_THROW((PowerLogParams{1, 2, 0, 0, -1}.validate()), ParameterError);
  EXPECT_THROW((PowerLogParams{1, 2, NAN, 0, 1}.validate()), ParameterError);
  EXPECT_NO_THROW((FactorialParams{0, 1, 1}.validate()));
  EXPECT_THROW((FactorialParams{1, 1, 0}.validate()), ParameterError);
  EXPECT_THROW((FactorialParams{0, 1, 1}.require_positive_alpha("x")), UnsupportedError);
}

TEST(EvalPowerLog, MatchesOracle) {
  const auto res = eval_powerlog({1, 2, 0, 0, 1}, 10.0, 1e-10);
  EXPECT_NEAR(res.value, kPowerLog12001R10, 1e-10 * kPowerLog12001R10);
  EXPECT_LE(res.tail_bound, 1e-10 * res.value);
  EXPECT_NEAR(res.log_value, std::log(res.value), 1e-14);
  EXPECT_GT(res.terms_used, 0);
  EXPECT_EQ(res.peak_index, 6);  // n/(n^2+100)^2 peaks near 10/sqrt(3)

  const auto logs = eval_powerlog({1, 2, 1, 1, 1}, 10.0, 1e-12);
  EXPECT_NEAR(logs.value, kPowerLog12111R10, 1e-12 * kPowerLog12111R10);
}

TEST(EvalPowerLog, DecreasingInRadius) {
  const PowerLogParams p{1, 2, 0, 0, 1};
  EXPECT_GT(eval_powerlog(p, 10.0, 1e-10).value, eval_powerlog(p, 20.0, 1e-10).value);
}

TEST(EvalPowerLog, LargeRadiusReportsInteriorPeak) {
  const auto res = eval_powerlog({1, 2, 0, 0, 1}, 1e7, 1e-10);
  EXPECT_NEAR(res.value * 1e14, 0.5, 1e-6);
  EXPECT_NEAR(static_cast<double>(res.peak_index), 1e7 / std::sqrt(3.0), 2.0);
}

TEST(EvalPowerLog, Errors) {
  const PowerLogParams p{1, 2, 0, 0, 1};
  EXPECT_THROW(eval_powerlog(p, 10.0, 0.0), ParameterError);
  EXPECT_THROW(eval_powerlog(p, 10.0, 0.5), ParameterError);
  EXPECT_THROW(eval_powerlog(p, 1.0, 1e-8), ParameterError);
  EXPECT_THROW(eval_powerlog(p, 1e6, 1e-12, 8), ResourceError);
  try {
    eval_powerlog(p, 1e6, 1e-12, 8);
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.cap(), 8);
  }
  // The Euler-Maclaurin tail carries the sum well before the peak.
  EXPECT_NO_THROW(eval_powerlog(p, 1e6, 1e-12, 64));
}

TEST(EvalGeneral, ReproducesPowerLogPlusLowTerms) {
  const auto general = eval_general(power_pair(1, 2), 1.0, 10.0, 1e-8);
  const double expected = kPowerLog12001R10 + 1.0 / (101.0 * 101.0);
  EXPECT_NEAR(general.value, expected, 1e-8 * expected);
  EXPECT_LE(general.tail_bound, 1e-8 * general.value);
}

TEST(EvalGeneral, LogFactorialSequences) {
  SequencePair s;
  s.a = [](std::int64_t n) { return n < 2 ? 0.0 : log_factorial(n); };
  s.b = [](std::int64_t n) { return n < 2 ? 0.0 : std::pow(log_factorial(n), 2.0); };
  const auto res = eval_general(s, 1.0, 100.0, 1e-8);
  EXPECT_NEAR(res.value, kLogFactorial12R100, 1e-8 * kLogFactorial12R100);
}

TEST(EvalGeneral, UserEnvelope) {
  auto s = power_pair(1, 2);
  // sum_{n>=N} n/(n^2+r^2)^2 <= 1/(2(N-1)^2) + N/(N^2+r^2)^2 for the decreasing tail.
  s.tail_envelope = [](std::int64_t n, double, double r) {
    const double x = static_cast<double>(n);
    return 0.5 / ((x - 1) * (x - 1)) + x / std::pow(x * x + r * r, 2);
  };
  const auto res = eval_general(s, 1.0, 10.0, 1e-6);
  EXPECT_NEAR(res.value, kPowerLog12001R10 + 1.0 / (101.0 * 101.0), 1e-6 * res.value);
}

TEST(EvalGeneral, MonotonicityContract) {
  SequencePair s = power_pair(1, 2);
  s.b = [](std::int64_t n) { return (n % 7 == 3) ? 1.0 : static_cast<double>(n) * n; };
  EXPECT_THROW(eval_general(s, 1.0, 10.0, 1e-8), ContractViolation);
  SequencePair missing;
  EXPECT_THROW(eval_general(missing, 1.0, 10.0, 1e-8), ParameterError);
}

TEST(EvalGeneral, CapExceeded) {
  EXPECT_THROW(eval_general(power_pair(1, 2), 1.0, 1e4, 1e-10, 1000), ResourceError);
}

TEST(FactorialSummand, ExactSmallCases) {
  EXPECT_NEAR(factorial_summand_log({1, 1, 0}, 1.0, 3), std::log(6.0 / 7.0), 1e-15);
  EXPECT_NEAR(factorial_summand_log({1, 2, 1}, 10.0, 5), std::log(120.0 / std::pow(120.0 * 120.0 + 100.0, 2)),
              1e-14);
  for (double r : {0.5, 3.0, 1e9}) {
    EXPECT_NEAR(factorial_summand_log({0.7, 1.3, 2.0}, r, 0), -3.0 * std::log1p(r * r), 1e-12) << r;
  }
}

TEST(PeakIndex, Examples) {
  EXPECT_EQ(peak_index_n0(2.0, 6.0), 3);
  EXPECT_EQ(peak_index_n0(1.0, 2.0), 2);
  EXPECT_EQ(peak_index_n0(2.0, 1.0), 1);
  const double log_r = 50.0 * std::log(10.0);
  EXPECT_EQ(peak_index_n0(2.0, 1e50), static_cast<std::int64_t>(std::floor(inverse_gamma_log(log_r))) - 1);
  EXPECT_THROW(peak_index_n0(2.0, 0.5), DomainError);
}

TEST(EvalFactorial, MatchesOracle) {
  const auto small = eval_factorial({1, 2, 1}, 10.0, 1e-12);
  EXPECT_NEAR(small.value, kFactorial121R10, 1e-12 * kFactorial121R10);
  const auto mid = eval_factorial({1, 2, 1}, 1e3, 1e-12);
  EXPECT_NEAR(mid.value, kFactorial121R1e3, 1e-12 * kFactorial121R1e3);
  EXPECT_LE(mid.tail_bound, 1e-12 * mid.value);
  const auto n0 = peak_index_n0(2.0, 1e3);
  EXPECT_TRUE(mid.peak_index == n0 || mid.peak_index == n0 + 1) << mid.peak_index;
}

TEST(EvalFactorial, ExtremeRadiusInLogSpace) {
  const auto res = eval_factorial({1, 2, 1}, 1e200, 1e-10);
  EXPECT_EQ(res.value, 0.0);
  EXPECT_TRUE(std::isfinite(res.log_value));
  EXPECT_LT(res.log_value, -3.0 * 200 * std::log(10.0) + 200.0);
}

TEST(EvalFactorial, FirstTermLowerBound) {
  const auto res = eval_factorial({1, 1, 1}, 1.0, 1e-12);
  EXPECT_GT(res.value, 0.25);  // A_0 = 1/(1+1)^2
  EXPECT_THROW(eval_factorial({1, 2, 1}, 0.0, 1e-8), ParameterError);
}

TEST(EvalPowerSeries, SingleTermAtZero) {
  const auto res = eval_power_series(power_pair(0, 2), 1.0, 0.0, 3.0, 1e-12);
  EXPECT_DOUBLE_EQ(res.value, 1.0 / 81.0);
  EXPECT_EQ(res.tail_bound, 0.0);
}

TEST(EvalPowerSeries, GeometricLimit) {
  SequencePair s;
  s.a = [](std::int64_t) { return 1.0; };
  s.b = [](std::int64_t n) { return static_cast<double>(n) * n; };
  double previous = 1.0;
  for (double r : {1e2, 1e3, 1e4}) {
    const double dev = std::abs(r * r * eval_power_series(s, 0.0, 0.5, r, 1e-12).value - 2.0) / 2.0;
    EXPECT_LT(dev, previous);
    previous = dev;
  }
  EXPECT_LE(previous, 0.01);
}

TEST(EvalPowerSeries, FactorialDenominators) {
  SequencePair s;
  s.a = [](std::int64_t n) { return static_cast<double>(n); };
  s.b = [](std::int64_t n) { return std::exp(log_factorial(n)); };
  s.a_growth_degree = 1.0;
  double previous = 1.0;
  for (double r : {1e2, 1e3, 1e4}) {
    const double dev = std::abs(std::pow(r, 4.0) * eval_power_series(s, 1.0, 1.0 / 3.0, r, 1e-12).value - 0.75);
    EXPECT_LT(dev, previous);
    previous = dev;
  }
  EXPECT_LE(previous, 0.75 * 0.01);
}

TEST(EvalPowerSeries, AlternatingArgument) {
  SequencePair s;
  s.a = [](std::int64_t n) { return n + 1.0; };
  s.b = [](std::int64_t n) { return static_cast<double>(n) * n; };
  s.a_growth_degree = 1.0;
  const auto res = eval_power_series(s, 1.0, -0.3, 2.0, 1e-12);
  EXPECT_NEAR(res.value, 0.0421662821196299796018868552144, 1e-12 * 0.0421662821196299796);
  EXPECT_THROW(eval_power_series(s, 1.0, 1.0, 2.0, 1e-12), DomainError);
}

TEST(TermCap, EnvironmentOverride) {
  ::setenv("MATHIEU_TERM_CAP", "1234", 1);
  EXPECT_EQ(configured_term_cap(99), 1234);
  ::setenv("MATHIEU_TERM_CAP", "junk", 1);
  EXPECT_EQ(configured_term_cap(99), 99);
  ::unsetenv("MATHIEU_TERM_CAP");
  EXPECT_EQ(configured_term_cap(99), 99);
}
