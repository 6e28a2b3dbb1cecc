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

/// \file taylor.hpp
/// \brief Truncated Taylor polynomials for forward-mode higher derivatives.
///
/// A `Taylor<N>` holds the coefficients c_0..c_N of f(x0 + h) in powers of h,
/// so f^{(k)}(x0) = k! c_k. Only the handful of elementary operations needed
/// by the Euler-Maclaurin tail corrections are provided.

#pragma once

#include <array>
#include <cmath>

namespace mathieu {

template <int N>
struct Taylor {
  static_assert(N >= 0);
  std::array<double, N + 1> c{};

  Taylor() = default;
  constexpr Taylor(double value) { c[0] = value; }  // NOLINT: implicit constant

  static Taylor variable(double x0) {
    Taylor t(x0);
    if constexpr (N >= 1) t.c[1] = 1.0;
    return t;
  }

  double value() const { return c[0]; }

  /// k-th derivative at the expansion point.
  double derivative(int k) const {
    double f = 1.0;
    for (int j = 2; j <= k; ++j) f *= j;
    return c[k] * f;
  }

  Taylor& operator+=(const Taylor& o) {
    for (int k = 0; k <= N; ++k) c[k] += o.c[k];
    return *this;
  }
  Taylor& operator-=(const Taylor& o) {
    for (int k = 0; k <= N; ++k) c[k] -= o.c[k];
    return *this;
  }
  Taylor& operator*=(double s) {
    for (auto& v : c) v *= s;
    return *this;
  }
  Taylor operator-() const {
    Taylor r = *this;
    r *= -1.0;
    return r;
  }
};

template <int N>
Taylor<N> operator+(Taylor<N> a, const Taylor<N>& b) { return a += b; }
template <int N>
Taylor<N> operator-(Taylor<N> a, const Taylor<N>& b) { return a -= b; }
template <int N>
Taylor<N> operator*(Taylor<N> a, double s) { return a *= s; }
template <int N>
Taylor<N> operator*(double s, Taylor<N> a) { return a *= s; }

template <int N>
Taylor<N> operator*(const Taylor<N>& a, const Taylor<N>& b) {
  Taylor<N> r;
  for (int k = 0; k <= N; ++k) {
    double s = 0.0;
    for (int j = 0; j <= k; ++j) s += a.c[j] * b.c[k - j];
    r.c[k] = s;
  }
  return r;
}

template <int N>
Taylor<N> operator/(const Taylor<N>& a, const Taylor<N>& b) {
  Taylor<N> q;
  for (int k = 0; k <= N; ++k) {
    double s = a.c[k];
    for (int j = 1; j <= k; ++j) s -= b.c[j] * q.c[k - j];
    q.c[k] = s / b.c[0];
  }
  return q;
}

template <int N>
Taylor<N> exp(const Taylor<N>& a) {
  Taylor<N> e;
  e.c[0] = std::exp(a.c[0]);
  for (int k = 1; k <= N; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * a.c[j] * e.c[k - j];
    e.c[k] = s / k;
  }
  return e;
}

// log(a) given the value log(a0) separately, so callers can pass an
// accurately computed log1p value.
template <int N>
Taylor<N> log_with_value(const Taylor<N>& a, double log_a0) {
  Taylor<N> l;
  l.c[0] = log_a0;
  for (int k = 1; k <= N; ++k) {
    double s = a.c[k];
    for (int j = 1; j < k; ++j) s -= (static_cast<double>(j) / k) * l.c[j] * a.c[k - j];
    l.c[k] = s / a.c[0];
  }
  return l;
}

template <int N>
Taylor<N> log(const Taylor<N>& a) { return log_with_value(a, std::log(a.c[0])); }

/// log(1 + a), accurate for small a.c[0].
template <int N>
Taylor<N> log1p(const Taylor<N>& a) {
  Taylor<N> one_plus = a;
  one_plus.c[0] += 1.0;
  return log_with_value(one_plus, std::log1p(a.c[0]));
}

/// log(1 + e^a) without overflow.
template <int N>
Taylor<N> softplus(const Taylor<N>& a) {
  if (a.c[0] > 0.0) return a + log1p(exp(-a));
  return log1p(exp(a));
}

}  // namespace mathieu
