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

#include "mathieu/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <vector>

#include "mathieu/special_fn.hpp"

namespace mathieu {

namespace {

struct BlockPartial {
  double sum = 0.0;
  double max_term = 0.0;
  std::int64_t argmax = -1;
};

// Runs `block(lo, hi)` over fixed-size blocks in parallel and merges the
// partials in block order.
template <class BlockFn>
KernelSum blocked_sum(std::int64_t first, std::int64_t last, BlockFn block) {
  if (last <= first) return {};
  const std::int64_t count = last - first;
  const std::int64_t blocks = (count + kBlockSize - 1) / kBlockSize;
  std::vector<BlockPartial> partials(static_cast<std::size_t>(blocks));
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::int64_t lo = first + b * kBlockSize;
    const std::int64_t hi = std::min(last, lo + kBlockSize);
    try {
      partials[static_cast<std::size_t>(b)] = block(lo, hi);
    } catch (...) {
#pragma omp critical(mathieu_kernel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  CompensatedSum total;
  KernelSum out;
  for (const auto& p : partials) {
    total.add(p.sum);
    if (p.max_term > out.max_term) {
      out.max_term = p.max_term;
      out.argmax = p.argmax;
    }
  }
  out.sum = total.value();
  return out;
}

template <class Term>
BlockPartial sum_block(Term&& term, std::int64_t lo, std::int64_t hi) {
  CompensatedSum acc;
  BlockPartial p;
  for (std::int64_t n = lo; n < hi; ++n) {
    const double t = term(n);
    acc.add(t);
    if (t > p.max_term) {
      p.max_term = t;
      p.argmax = n;
    }
  }
  p.sum = acc.value();
  return p;
}

template <class Term>
KernelSum serial_sum(Term&& term, std::int64_t first, std::int64_t last) {
  CompensatedSum acc;
  KernelSum out;
  for (std::int64_t n = first; n < last; ++n) {
    const double t = term(n);
    acc.add(t);
    if (t > out.max_term) {
      out.max_term = t;
      out.argmax = n;
    }
  }
  out.sum = acc.value();
  return out;
}

double log_add_exp(double x, double y) {
  const double hi = std::max(x, y);
  return hi + std::log1p(std::exp(-std::abs(x - y)));
}

}  // namespace

double PowerLogTerm::log_term(std::int64_t n) const {
  const double log_n = std::log(static_cast<double>(n));
  double numer = alpha * log_n;
  double base = beta * log_n;
  if (gamma != 0.0 || delta != 0.0) {
    const double log_log_n = std::log(log_n);
    numer += gamma * log_log_n;
    base += delta * log_log_n;
  }
  return numer - (mu + 1.0) * log_add_exp(base, 2.0 * log_r);
}

KernelSum sum_powerlog(const PowerLogTerm& term, std::int64_t first, std::int64_t last) {
  return blocked_sum(first, last, [&term](std::int64_t lo, std::int64_t hi) {
    return sum_block([&term](std::int64_t n) { return term.term(n); }, lo, hi);
  });
}

KernelSum sum_powerlog_serial(const PowerLogTerm& term, std::int64_t first, std::int64_t last) {
  return serial_sum([&term](std::int64_t n) { return term.term(n); }, first, last);
}

KernelSum sum_factorial_power(double s, std::int64_t first, std::int64_t last) {
  return blocked_sum(first, last, [s](std::int64_t lo, std::int64_t hi) {
    // log n! advanced incrementally within the block, restarted per block.
    double log_fact = log_factorial(lo);
    CompensatedSum acc;
    BlockPartial p;
    for (std::int64_t n = lo; n < hi; ++n) {
      if (n > lo) log_fact += std::log(static_cast<double>(n));
      const double t = std::exp(-s * log_fact);
      acc.add(t);
      if (t > p.max_term) {
        p.max_term = t;
        p.argmax = n;
      }
    }
    p.sum = acc.value();
    return p;
  });
}

KernelSum sum_factorial_power_serial(double s, std::int64_t first, std::int64_t last) {
  return serial_sum([s](std::int64_t n) { return std::exp(-s * log_factorial(n)); }, first, last);
}

KernelSum sum_terms(const TermFn& term, std::int64_t first, std::int64_t last) {
  return blocked_sum(first, last, [&term](std::int64_t lo, std::int64_t hi) {
    return sum_block(term, lo, hi);
  });
}

KernelSum sum_terms_serial(const TermFn& term, std::int64_t first, std::int64_t last) {
  return serial_sum(term, first, last);
}

int kernel_threads() { return omp_get_max_threads(); }

}  // namespace mathieu
