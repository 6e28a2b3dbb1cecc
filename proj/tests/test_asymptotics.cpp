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

#include "mathieu/asymptotics.hpp"
#include "mathieu/errors.hpp"
#include "mathieu/special_fn.hpp"

using namespace mathieu;

namespace {

// r with r^{2/beta} = Gamma(g).
double radius_for(double g, double beta) { return std::exp(0.5 * beta * log_gamma(g)); }

}  // namespace

TEST(ConstantC, Examples) {
  EXPECT_NEAR(constant_C({1, 2, 0, 0, 1}), 0.5, 1e-15);
  EXPECT_NEAR(constant_C({1, 1, 0, 1, 2}), 0.125, 1e-15);
  // gamma = alpha, delta = beta: m = 1 and C = G / (2 Gamma(mu+1)).
  const PowerLogParams p{1, 3, 1, 3, 1};
  const double g = gamma_fn(2.0 - 2.0 / 3.0) * gamma_fn(2.0 / 3.0);
  EXPECT_NEAR(constant_C(p), g / 2.0, 1e-14);
  EXPECT_NEAR(matched_log_prediction(1, 3, 1).constant, g / 2.0, 1e-14);
}

TEST(ConstantC, ContinuousAcrossIntegerIndex) {
  // m = delta (alpha+1)/beta - gamma crosses 2 as delta passes 2.
  const PowerLogParams exact{1, 1, 0, 1, 2};
  const PowerLogParams nearby{1, 1, 0, 1.0 + 1e-7, 2};
  EXPECT_NEAR(constant_C(nearby) / constant_C(exact), 1.0, 1e-6);
  EXPECT_NEAR(constant_C(exact, BranchMode::kInteger), constant_C(exact, BranchMode::kNonInteger), 1e-14);
}

TEST(ConstantC, RatioVariantDiffers) {
  const PowerLogParams p{1, 2, 0, 0.5, 1};  // m = 0.5
  EXPECT_NEAR(constant_C_gamma_ratio_variant(p) / constant_C(p), gamma_fn(1.5) / gamma_fn(0.5), 1e-14);
  // The evaluator sides with the continuous constant.
  const double r = 1e8;
  const double ratio = eval_powerlog(p, r, 1e-10).value / predict_powerlog(p, r);
  EXPECT_NEAR(ratio, 1.0, 0.01);
}

TEST(ConstantC, IntegerBranchNeedsPositiveIndex) {
  // The integer branch is undefined below m = 1.
  EXPECT_THROW(constant_C({1, 2, 0, 0, 1}, BranchMode::kInteger), DomainError);
}

TEST(PredictPowerLog, Examples) {
  EXPECT_NEAR(predict_powerlog({1, 2, 0, 0, 1}, 100.0), 5e-5, 1e-18);
  const auto pred = powerlog_prediction({1, 2, 0, 0, 1});
  EXPECT_DOUBLE_EQ(pred.r_exponent, -2.0);
  EXPECT_EQ(pred.log_exponent, 0.0);
  EXPECT_EQ(matched_log_prediction(1, 3, 1).log_exponent, -1.0);
  EXPECT_THROW(predict_powerlog({1, 2, 0, 0, 1}, 2.0), DomainError);
}

TEST(PredictPowerLog, RatioApproachesOne) {
  const PowerLogParams p{1, 2, 1, 1, 1};
  double previous = 1.0;
  for (double r : {1e2, 1e4, 1e6}) {
    const double dev = std::abs(eval_powerlog(p, r, 1e-12).value / predict_powerlog(p, r) - 1.0);
    EXPECT_LT(dev, previous) << r;
    previous = dev;
  }
}

TEST(FactorialDiagnostics, ConstructedFraction) {
  const FactorialParams p{1, 2, 1};
  const auto d = factorial_diagnostics(p, radius_for(7.5, 2.0));
  EXPECT_NEAR(d.g, 7.5, 1e-10);
  EXPECT_NEAR(d.frac_g, 0.5, 1e-10);
  EXPECT_TRUE(d.in_R);
  EXPECT_NEAR(d.m_r, 0.5, 1e-10);
  EXPECT_EQ(d.n0, 6);
}

TEST(FactorialDiagnostics, IntegerBoundary) {
  const auto d = factorial_diagnostics({1, 2, 1}, radius_for(9.0, 2.0));
  EXPECT_NEAR(d.frac_g, 0.0, 1e-9);
  EXPECT_NEAR(d.m_r, 0.0, 1e-9);
  EXPECT_FALSE(d.in_R);
}

TEST(FactorialDiagnostics, MrRange) {
  const FactorialParams p{1, 2, 1};
  for (double r = 11.0; r < 1e12; r *= 3.7) {
    const auto d = factorial_diagnostics(p, r);
    EXPECT_GE(d.m_r, 0.0);
    EXPECT_LT(d.m_r, std::max(p.alpha, p.beta * (p.mu + 1) - p.alpha));
    EXPECT_EQ(d.in_R1, d.in_R && !d.in_R0);
  }
}

TEST(FactorialDiagnostics, Errors) {
  EXPECT_THROW(factorial_diagnostics({0, 1, 1}, 100.0), UnsupportedError);
  EXPECT_THROW(factorial_diagnostics({1, 2, 1}, 5.0), DomainError);
  EXPECT_THROW(factorial_diagnostics({1, 2, 1}, 100.0, 0.5, 0.4), ParameterError);
}

TEST(PredictFactorial, NearOneE8) {
  const FactorialParams p{1, 2, 1};
  // Gamma(11.5)^{1} ~ 1.2e7; r^{2/beta} = r for beta = 2.
  const double r = radius_for(11.5, 2.0);
  const auto est = predict_factorial(p, r);
  const double log_ratio = std::abs(eval_factorial(p, r, 1e-12).log_value - est.log_value);
  EXPECT_LE(log_ratio, 5.0 * est.slack_exponent);
}

TEST(PredictFactorial, Monotonicity) {
  const double r = radius_for(10.5, 2.0);
  EXPECT_GT(predict_factorial({1, 2, 1}, r).value, predict_factorial({1, 2, 2}, r).value);
  const double r1 = radius_for(10.5, 2.0), r2 = radius_for(12.5, 2.0);
  const auto e1 = predict_factorial({1, 2, 1}, r1), e2 = predict_factorial({1, 2, 1}, r2);
  const double power = -3.0 * std::log(r2 / r1);
  const double logs = -0.5 * (std::log(std::log(r2)) - std::log(std::log(r1)));
  EXPECT_NEAR(e2.log_value - e1.log_value, power + logs, 1e-8);
}

TEST(PredictFactorial, OutsideGoodSet) {
  const double r = radius_for(9.05, 2.0);
  try {
    predict_factorial({1, 2, 1}, r);
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_FALSE(e.diagnostics().in_R);
    EXPECT_NEAR(e.diagnostics().frac_g, 0.05, 1e-8);
  }
}

TEST(TwoTerm, SmallCaseAndBounds) {
  EXPECT_NEAR(two_term_estimate({1, 1, 1}, 2.0), 2.0 / 36.0 + 6.0 / 100.0, 1e-15);
  for (double r = 10.0; r < 1e12; r *= 7.0) {
    const FactorialParams p{1, 2, 1};
    const double ratio = two_term_estimate(p, r) / eval_factorial(p, r, 1e-13).value;
    EXPECT_GT(ratio, 0.0);
    EXPECT_LE(ratio, 1.0 + 1e-12);
  }
}

TEST(Envelope, LogCenterAndOrdering) {
  const FactorialParams p{1, 2, 1};
  for (int k = 3; k <= 10; ++k) {
    const double r = std::pow(10.0, k);
    const auto env = factorial_envelope(p, r, 0.1);
    EXPECT_LT(env.lower, env.upper);
    EXPECT_LE(std::abs(eval_factorial(p, r, 1e-12).log_value - env.log_center), 10.0 * std::log(std::log(r)));
  }
  EXPECT_THROW(factorial_envelope(p, 50.0, 0.1), DomainError);
  EXPECT_THROW(factorial_envelope(p, 1e3, 0.0), ParameterError);
}

TEST(Ceiling, AboveSeriesAndTwoTerms) {
  const FactorialParams p{1, 2, 1};
  for (int k = 3; k <= 12; ++k) {
    const double r = std::pow(10.0, k);
    const double bound = factorial_ceiling(p, r, 0.2);
    EXPECT_GE(bound, eval_factorial(p, r, 1e-12).value);
    EXPECT_GE(bound, two_term_estimate(p, r));
    EXPECT_GT(factorial_ceiling(p, r, 0.3), bound);
  }
  EXPECT_THROW(factorial_ceiling({0, 1, 1}, 1e3, 0.2), UnsupportedError);
}

TEST(Expansion, Coefficients) {
  const auto terms = classical_expansion_terms(2.0, 3);
  ASSERT_EQ(terms.size(), 5u);
  EXPECT_EQ(terms[0].k, -1);
  EXPECT_DOUBLE_EQ(terms[0].coefficient, 0.5);
  EXPECT_DOUBLE_EQ(terms[0].r_power, -4.0);
  EXPECT_NEAR(terms[1].coefficient, -1.0 / 6.0, 1e-16);
  EXPECT_DOUBLE_EQ(terms[1].r_power, -6.0);
  EXPECT_NEAR(classical_expansion_terms(1.0, 1)[2].coefficient, -1.0 / 30.0, 1e-16);
  EXPECT_THROW(classical_expansion_terms(2.0, 40), CapacityError);
  EXPECT_THROW(classical_expansion_terms(0.0, 1), ParameterError);
}

TEST(Expansion, AgreesWithDirectSum) {
  const double direct = classical_series_direct(2.0, 10.0, 1e-15).value;
  const double oracle = 2.0 * eval_powerlog({1, 2, 0, 0, 2}, 10.0, 1e-15).value + 2.0 / std::pow(101.0, 3.0);
  EXPECT_DOUBLE_EQ(direct, oracle);
  const auto opt = eval_classical_expansion(2.0, 10.0, Truncation::kOptimal);
  EXPECT_NEAR(opt.value, direct, 1e-10 * direct);
  EXPECT_GT(opt.error_estimate, 0.0);
}

TEST(Expansion, DivergenceOnset) {
  const auto terms = classical_expansion_terms(2.0, 31);
  std::vector<double> size;
  for (const auto& t : terms) size.push_back(std::abs(t.coefficient) * std::pow(10.0, t.r_power));
  const auto smallest = std::min_element(size.begin() + 1, size.end()) - size.begin();
  EXPECT_GT(smallest, 2);
  EXPECT_LT(smallest, static_cast<long>(size.size()) - 1);
  EXPECT_GT(size.back(), size[smallest]);
}

TEST(Expansion, FixedTruncationImproves) {
  const double direct = classical_series_direct(2.0, 100.0, 1e-15).value;
  const double lead = eval_classical_expansion(2.0, 100.0, Truncation::kFixed, -1).value;
  const double with_k0 = eval_classical_expansion(2.0, 100.0, Truncation::kFixed, 0).value;
  EXPECT_LT(std::abs(with_k0 - direct), std::abs(lead - direct));
  EXPECT_THROW(eval_classical_expansion(2.0, 100.0, Truncation::kFixed, 40), CapacityError);
  EXPECT_THROW(eval_classical_expansion(1.0, 100.0, Truncation::kOptimal), ParameterError);
}
