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

/// \file quadrature.hpp
/// \brief Adaptive Gauss-Kronrod (7/15) quadrature.
///
/// The error estimate of a panel is the raw |K15 - G7| difference, which for
/// smooth integrands overstates the true K15 error by orders of magnitude.
/// Tail bounds built on it are therefore conservative. Panels whose error
/// has dropped to the rounding level of their own sum are not split further,
/// so tolerances near machine precision terminate instead of thrashing.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "mathieu/errors.hpp"

namespace mathieu {

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
};

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for Kronrod nodes 1, 3, 5, 7.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  double noise = 0.0;  ///< rounding floor of the panel sum
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gauss_kronrod_panel(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double lower[7], upper[7];
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    lower[j] = f(center - dx);
    upper[j] = f(center + dx);
    const double fsum = lower[j] + upper[j];
    kronrod += kKronrodWeights[j] * fsum;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * fsum;
  }
  double magnitude = kKronrodWeights[7] * std::abs(fc);
  for (int j = 0; j < 7; ++j) magnitude += kKronrodWeights[j] * (std::abs(lower[j]) + std::abs(upper[j]));
  magnitude *= std::abs(half);
  const double error = std::abs((kronrod - gauss) * half);
  kronrod *= half;
  // Below a few ulps of the panel magnitude the estimate is rounding noise.
  const double noise = 4.0 * std::numeric_limits<double>::epsilon() * magnitude;
  return {a, b, kronrod, error, noise};
}

}  // namespace detail

/// Integrates f over [a, b] until the summed panel error is at most
/// max(abs_tol, rel_tol * |value|). Throws NumericError if `max_panels`
/// is exhausted first.
template <class F>
QuadResult integrate(F f, double a, double b, double abs_tol, double rel_tol,
                     int max_panels = 4000) {
  if (a == b) return {};
  std::priority_queue<detail::Panel> heap;
  auto first = detail::gauss_kronrod_panel(f, a, b);
  double total = first.value;
  double error = first.error;
  heap.push(first);
  int evaluations = 15;
  while (error > std::max(abs_tol, rel_tol * std::abs(total))) {
    if (static_cast<int>(heap.size()) >= max_panels) {
      throw NumericError("integrate: panel budget exhausted before reaching tolerance");
    }
    const auto worst = heap.top();
    heap.pop();
    if (worst.error <= worst.noise) {
      // Nothing left to resolve here; freeze the panel at its noise floor.
      heap.push({worst.a, worst.b, worst.value, 0.0, worst.noise});
      error -= worst.error;
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Panel collapsed to machine resolution; keep its estimate.
      heap.push({worst.a, worst.b, worst.value, 0.0, worst.noise});
      error -= worst.error;
      continue;
    }
    const auto left = detail::gauss_kronrod_panel(f, worst.a, mid);
    const auto right = detail::gauss_kronrod_panel(f, mid, worst.b);
    evaluations += 30;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum from the panels to shed the drift of incremental updates.
  double value = 0.0;
  double err = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {value, err, evaluations};
}

/// Integrates f over [a, inf) in geometrically growing panels
/// [a, a+w], [a+w, a+3w], ... and stops once `remainder_bound(t)`, an upper
/// bound on the integral over [t, inf), drops below `abs_tol / 4`. The bound
/// at the stopping point is folded into abs_error.
template <class F, class Bound>
QuadResult integrate_to_infinity(F f, double a, double initial_width, Bound remainder_bound,
                                 double abs_tol, double rel_tol, int max_steps = 200) {
  QuadResult out;
  double lo = a;
  double width = initial_width;
  for (int step = 0; step < max_steps; ++step) {
    const double hi = lo + width;
    const double panel_abs = std::max(abs_tol, rel_tol * std::abs(out.value)) / 4;
    auto panel = integrate(f, lo, hi, panel_abs, rel_tol / 4);
    out.value += panel.value;
    out.abs_error += panel.abs_error;
    out.evaluations += panel.evaluations;
    lo = hi;
    width *= 2.0;
    const double rest = remainder_bound(lo);
    if (rest <= std::max(abs_tol, rel_tol * std::abs(out.value)) / 4) {
      out.abs_error += rest;
      return out;
    }
  }
  throw NumericError("integrate_to_infinity: remainder bound did not decay");
}

}  // namespace mathieu
