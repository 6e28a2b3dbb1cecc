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

/// \file dirichlet.hpp
/// \brief Real-axis Dirichlet series attached to the Mathieu-type series,
/// their Mellin transforms, and the saddle-point bound for the factorial
/// family.

#pragma once

#include "mathieu/series_eval.hpp"

namespace mathieu {

/// Exponents of zeta_{eta,theta}(s) = sum_{n>=2} (log n)^eta / (n (log n)^theta)^s.
struct DirichletParams {
  double eta = 0.0;
  double theta = 0.0;
};

/// Strip edges and the (eta, theta) substitution of the Mellin transforms.
/// Built from power-log parameters, `stilde` is NaN; built from factorial
/// parameters, `shat`, `map_eta` and `map_theta` are NaN.
struct TransformFrame {
  double shat;       ///< 2(mu+1) - 2(alpha+1)/beta
  double stilde;     ///< 2(mu+1 - alpha/beta)
  double map_eta;    ///< gamma - alpha delta / beta
  double map_theta;  ///< delta / beta
};

TransformFrame transform_frame(const PowerLogParams& p);
TransformFrame transform_frame(const FactorialParams& p);

/// Selects between the power and the logarithmic singular model.
enum class BranchMode { kAuto, kInteger, kNonInteger };

/// Tolerance for treating a floating exponent as an integer.
inline constexpr double kIntegerTolerance = 1e-9;

/// True when `m` selects the integer branch: round(m) >= 1 and
/// |m - round(m)| < kIntegerTolerance, unless `mode` forces a branch.
bool integer_branch(double m, BranchMode mode = BranchMode::kAuto);

/// zeta_{eta,theta}(s) for real s > 1: explicit partial sum plus an
/// Euler-Maclaurin tail whose integral is an incomplete Gamma function.
double zeta_eta_theta(const DirichletParams& p, double s, double rel_tol);

/// Leading behaviour of zeta_{eta,theta}(s) as s -> 1+, for s - 1 in (0, 0.5).
double zeta_singular_prediction(const DirichletParams& p, double s, BranchMode mode = BranchMode::kAuto);

/// sum_{n>=0} (n!)^{-s} for s > 0, with a geometric tail bound.
double eta_factorial(double s, double rel_tol);

/// sum_{n>=2} (log n!)^{-s} for s > 1.
double log_factorial_dirichlet(double s, double rel_tol);

/// Mellin transform of S_{alpha,beta,gamma,delta,mu}(r) at real s in (0, shat).
double mellin_powerlog(const PowerLogParams& p, double s, double rel_tol);

/// Mellin transform of the factorial series at real s in (0, stilde).
double mellin_factorial(const FactorialParams& p, double s, double rel_tol);

/// (1/2pi) * integral over the line Re = sigma of
/// |Gamma(mu+1 - z/2) Gamma(z/2)| / (2 Gamma(mu+1)) |dz|, for 0 < sigma < 2(mu+1).
double saddle_line_integral(double mu, double sigma);

/// Unconditional upper bound for the factorial series at r >= 10, from the
/// Mellin inversion integral moved to sigma_r = stilde - 1/log r.
double saddle_bound(const FactorialParams& p, double r);

/// log |Gamma(x + iy)| for x > 0.
double log_abs_gamma(double x, double y);

}  // namespace mathieu
