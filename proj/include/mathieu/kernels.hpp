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

/// \file kernels.hpp
/// \brief Summation kernels over index ranges [first, last).
///
/// Each kernel comes in two flavours. The `*_serial` functions are the
/// straightforward reference loops kept for testing. The parallel functions
/// split the range into fixed blocks of `kBlockSize` terms, sum each block
/// with a compensated accumulator under OpenMP, and merge the block partials
/// in index order. Because the block layout does not depend on the thread
/// count, parallel results are bitwise reproducible across runs and machines
/// with the same floating-point model.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>

namespace mathieu {

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

struct KernelSum {
  double sum = 0.0;
  double max_term = 0.0;
  std::int64_t argmax = -1;  ///< first index attaining max_term
};

inline constexpr std::int64_t kBlockSize = 1 << 14;

/// Summand n^a (log n)^c / (n^b (log n)^d + r^2)^(mu+1), evaluated in log space.
struct PowerLogTerm {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double mu = 0.0;
  double log_r = 0.0;

  double log_term(std::int64_t n) const;
  double term(std::int64_t n) const { return std::exp(log_term(n)); }
};

KernelSum sum_powerlog(const PowerLogTerm& term, std::int64_t first, std::int64_t last);
KernelSum sum_powerlog_serial(const PowerLogTerm& term, std::int64_t first, std::int64_t last);

/// Terms (n!)^{-s}. The parallel kernel advances log n! incrementally inside
/// each block; the serial reference calls log_factorial per term.
KernelSum sum_factorial_power(double s, std::int64_t first, std::int64_t last);
KernelSum sum_factorial_power_serial(double s, std::int64_t first, std::int64_t last);

/// Arbitrary reentrant term callback.
using TermFn = std::function<double(std::int64_t)>;
KernelSum sum_terms(const TermFn& term, std::int64_t first, std::int64_t last);
KernelSum sum_terms_serial(const TermFn& term, std::int64_t first, std::int64_t last);

/// Number of OpenMP threads the parallel kernels will use.
int kernel_threads();

}  // namespace mathieu
