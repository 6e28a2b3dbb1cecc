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

#include "mathieu/kernels.hpp"
#include "mathieu/special_fn.hpp"

using namespace mathieu;

TEST(CompensatedSum, RecoversLostLowBits) {
  CompensatedSum s;
  s.add(1.0);
  for (int i = 0; i < 1000000; ++i) s.add(1e-16);
  EXPECT_NEAR(s.value(), 1.0 + 1e-10, 1e-22);
}

TEST(Kernels, PowerLogParallelMatchesSerial) {
  const PowerLogTerm term{1.0, 2.0, 1.0, 1.0, 1.0, std::log(300.0)};
  for (std::int64_t last : {std::int64_t{5}, kBlockSize + 7, 5 * kBlockSize + 123}) {
    const auto par = sum_powerlog(term, 2, last);
    const auto ser = sum_powerlog_serial(term, 2, last);
    EXPECT_NEAR(par.sum, ser.sum, 1e-15 * ser.sum) << last;
    EXPECT_EQ(par.argmax, ser.argmax);
    EXPECT_DOUBLE_EQ(par.max_term, ser.max_term);
  }
}

TEST(Kernels, SummandFormula) {
  const PowerLogTerm term{1.0, 2.0, 0.0, 0.0, 1.0, std::log(10.0)};
  EXPECT_NEAR(term.term(3), 3.0 / (109.0 * 109.0), 1e-17);
}

TEST(Kernels, FactorialPowerParallelMatchesSerial) {
  for (double s : {1e-3, 0.5, 2.0}) {
    const auto par = sum_factorial_power(s, 0, 3 * kBlockSize + 11);
    const auto ser = sum_factorial_power_serial(s, 0, 3 * kBlockSize + 11);
    EXPECT_NEAR(par.sum, ser.sum, 1e-13 * ser.sum) << s;
  }
  // sum 1/(n!)^2 = I_0(2)
  EXPECT_NEAR(sum_factorial_power(2.0, 0, 40).sum, 2.2795853023360673, 1e-15);
}

TEST(Kernels, CallbackParallelMatchesSerialAndIsReproducible) {
  const TermFn f = [](std::int64_t n) { return 1.0 / ((n + 1.0) * (n + 1.0)); };
  const auto a = sum_terms(f, 0, 7 * kBlockSize);
  const auto b = sum_terms(f, 0, 7 * kBlockSize);
  const auto ser = sum_terms_serial(f, 0, 7 * kBlockSize);
  EXPECT_EQ(a.sum, b.sum);
  EXPECT_NEAR(a.sum, ser.sum, 1e-15);
  EXPECT_EQ(a.argmax, 0);
  EXPECT_NEAR(a.sum, kPi * kPi / 6.0 - 1.0 / (7.0 * kBlockSize), 1e-10);
}

TEST(Kernels, EmptyRange) {
  const TermFn f = [](std::int64_t) { return 1.0; };
  EXPECT_EQ(sum_terms(f, 10, 10).sum, 0.0);
  EXPECT_EQ(sum_terms(f, 10, 10).argmax, -1);
}

TEST(Kernels, ExceptionsPropagateOutOfParallelRegion) {
  const TermFn f = [](std::int64_t n) -> double {
    if (n == 3 * kBlockSize + 5) throw std::runtime_error("bad term");
    return 1.0;
  };
  EXPECT_THROW(sum_terms(f, 0, 4 * kBlockSize), std::runtime_error);
}

TEST(Kernels, ThreadsReported) { EXPECT_GE(kernel_threads(), 1); }
