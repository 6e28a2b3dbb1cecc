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

#include "mathieu/verify.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>

#include "mathieu/asymptotics.hpp"
#include "mathieu/dirichlet.hpp"
#include "mathieu/errors.hpp"
#include "mathieu/quadrature.hpp"
#include "mathieu/special_fn.hpp"

namespace mathieu {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

bool strictly_increasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] > v[i - 1])) return false;
  }
  return true;
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += fmt::format("{}{:.4g}", i ? " " : "", v[i]);
  return out;
}

std::vector<double> decades(int first, int last, int step = 1) {
  std::vector<double> out;
  for (int k = first; k <= last; k += step) out.push_back(std::pow(10.0, k));
  return out;
}

std::string format_params(const PowerLogParams& p) {
  return fmt::format("({:g},{:g},{:g},{:g},{:g})", p.alpha, p.beta, p.gamma, p.delta, p.mu);
}

std::string format_params(const FactorialParams& p) {
  return fmt::format("({:g},{:g},{:g})", p.alpha, p.beta, p.mu);
}

// --- thresholds -----------------------------------------------------------

constexpr double kExpansionTolR10 = 1e-10;
constexpr double kExpansionTolR100 = 1e-14;
constexpr double kExpansionBudgetSeconds = 1.0;
constexpr double kPowerLogTrendFinal = 0.25;
constexpr double kPowerLogBudgetSeconds = 60.0;
constexpr double kLogFactorialFinal = 0.30;
constexpr double kTwoTermFinal = 0.99;
constexpr double kFactorialSlack = 5.0;
constexpr int kFactorialMinPoints = 5;
constexpr double kCeilingEpsilon = 0.2;
constexpr double kEnvelopeEpsilon = 0.1;
constexpr double kSingularFinal = 0.20;
constexpr double kEtaOriginFinal = 0.30;
constexpr double kEtaAtOneTol = 1e-12;
constexpr double kMellinTol = 1e-6;
constexpr double kPowerSeriesTol = 0.01;
constexpr double kRoundtripTol = 1e-12;
constexpr double kLambertTol = 1e-13;

// --- individual checks ------------------------------------------------------

CheckResult check_expansion(const SuiteOptions& options) {
  const auto start = Clock::now();
  const double mu = 2.0;
  auto rel_error = [&](double r) {
    const double direct = classical_series_direct(mu, r, 1e-15).value;
    const double expansion = eval_classical_expansion(mu, r, Truncation::kOptimal).value;
    return std::abs(expansion - direct) / direct;
  };
  const double at10 = rel_error(10.0);
  const double elapsed = seconds_since(start);
  const double at100 = rel_error(100.0);
  CheckResult c;
  c.name = "expansion agrees with direct evaluation (mu=2)";
  c.measured = at10;
  c.threshold = kExpansionTolR10;
  c.passed = at10 <= kExpansionTolR10 && at100 <= kExpansionTolR100 &&
             (!options.strict || elapsed < kExpansionBudgetSeconds);
  c.detail = fmt::format("rel err r=10: {:.3g} (<= {:g}, {:.3f} s); r=100: {:.3g} (<= {:g})", at10,
                         kExpansionTolR10, elapsed, at100, kExpansionTolR100);
  return c;
}

CheckResult check_powerlog_trend(const SuiteOptions& options) {
  std::vector<PowerLogParams> sets = {{1, 2, 0, 0, 1}, {1, 2, 1, 1, 1}, {2, 3, -1, 2, 1}, {1, 1, 0, 1, 2}};
  if (options.powerlog) sets = {*options.powerlog};
  const auto start = Clock::now();
  const auto grid = decades(2, 6);
  bool ok = true;
  double worst = 0.0;
  std::string detail;
  for (const auto& p : sets) {
    std::vector<double> dev;
    for (double r : grid) dev.push_back(std::abs(eval_powerlog(p, r, 1e-14).value / predict_powerlog(p, r) - 1.0));
    const bool mono = strictly_decreasing(dev);
    ok = ok && mono && dev.back() <= kPowerLogTrendFinal;
    worst = std::max(worst, dev.back());
    detail += fmt::format("{}{} |ratio-1|: {}{}", detail.empty() ? "" : "; ", format_params(p), join(dev),
                          mono ? "" : " (not decreasing)");
  }
  const double elapsed = seconds_since(start);
  if (options.strict && elapsed >= kPowerLogBudgetSeconds) ok = false;
  detail += fmt::format("; {:.2f} s", elapsed);
  return {"power-log ratio to prediction decreases to <= 0.25 at r=1e6", ok, worst, kPowerLogTrendFinal, detail};
}

SequencePair log_factorial_pair(double alpha, double beta) {
  SequencePair s;
  s.a = [alpha](std::int64_t n) { return n < 2 ? 0.0 : std::pow(log_factorial(n), alpha); };
  s.b = [beta](std::int64_t n) { return n < 2 ? 0.0 : std::pow(log_factorial(n), beta); };
  return s;
}

CheckResult check_log_factorial(const SuiteOptions& options) {
  double alpha = 1.0, beta = 3.0, mu = 1.0;
  if (options.powerlog) {
    alpha = options.powerlog->alpha;
    beta = options.powerlog->beta;
    mu = options.powerlog->mu;
  }
  const auto pred = matched_log_prediction(alpha, beta, mu);
  const auto pair = log_factorial_pair(alpha, beta);
  std::vector<double> dev;
  for (double r : decades(2, 6)) dev.push_back(std::abs(eval_general(pair, mu, r, 1e-8).value / pred.value(r) - 1.0));
  const bool mono = strictly_decreasing(dev);
  return {fmt::format("log-factorial sequences ({:g},{:g},{:g}) approach the prediction", alpha, beta, mu),
          mono && dev.back() <= kLogFactorialFinal, dev.back(), kLogFactorialFinal,
          fmt::format("|ratio-1| over r=1e2..1e6: {}{}", join(dev), mono ? "" : " (not decreasing)")};
}

CheckResult check_shift_insensitivity(const SuiteOptions& options) {
  PowerLogParams p{1, 3, 1, 1, 1};
  if (options.powerlog) p = *options.powerlog;
  SequencePair shifted;
  shifted.a = [p](std::int64_t n) {
    const double x = static_cast<double>(n);
    return std::pow(x + 3.0, p.alpha) * std::pow(std::log(x + 2.0), p.gamma);
  };
  shifted.b = [p](std::int64_t n) {
    const double x = static_cast<double>(n);
    return std::pow(x, p.beta) * std::pow(std::log(x + 1.0), p.delta);
  };
  shifted.b_monotone_from = 1;
  std::vector<double> dev;
  for (double r : decades(2, 5)) {
    const double unshifted = eval_powerlog(p, r, 1e-10).value;
    dev.push_back(std::abs(eval_general(shifted, p.mu, r, 1e-7).value / unshifted - 1.0));
  }
  const bool mono = strictly_decreasing(dev);
  return {fmt::format("index shifts {} fade relative to the unshifted series", format_params(p)), mono, dev.back(),
          std::nan(""), fmt::format("|shifted/unshifted-1| over r=1e2..1e5: {}{}", join(dev), mono ? "" : " (not decreasing)")};
}

CheckResult check_two_term(const SuiteOptions& options) {
  FactorialParams p{1, 2, 1};
  if (options.factorial) p = *options.factorial;
  p.require_positive_alpha("two-term dominance");
  std::vector<double> ratios;
  double at_1e6 = 0.0;
  for (double r : decades(2, 12, 2)) {
    ratios.push_back(two_term_estimate(p, r) / eval_factorial(p, r, 1e-12).value);
    if (r == 1e6) at_1e6 = ratios.back();
  }
  const bool mono = strictly_increasing(ratios);
  return {fmt::format("two peak summands dominate {}", format_params(p)), mono && at_1e6 >= kTwoTermFinal, at_1e6,
          kTwoTermFinal,
          fmt::format("(A_n0+A_n0+1)/S over r=1e2,1e4..1e12: {}{}", join(ratios), mono ? "" : " (not increasing)")};
}

CheckResult check_factorial_estimate(const SuiteOptions& options) {
  FactorialParams p{1, 2, 1};
  if (options.factorial) p = *options.factorial;
  p.require_positive_alpha("factorial estimate");
  // Radii with r^{2/beta} = Gamma(n + f) have {g} = f by construction.
  std::vector<double> radii;
  for (int n = 3; n <= 200; ++n) {
    for (double f : {0.3, 0.5, 0.7}) {
      const double log_r = 0.5 * p.beta * log_gamma(n + f);
      if (log_r >= std::log(1e6) && log_r <= std::log(1e10)) radii.push_back(std::exp(log_r));
    }
  }
  double worst = 0.0;
  std::vector<double> constants;
  for (double r : radii) {
    const auto est = predict_factorial(p, r);
    const double c = std::abs(eval_factorial(p, r, 1e-12).log_value - est.log_value) / est.slack_exponent;
    constants.push_back(c);
    worst = std::max(worst, c);
  }
  const bool enough = static_cast<int>(radii.size()) >= kFactorialMinPoints;
  return {fmt::format("factorial estimate within exp(c log log log r) {}", format_params(p)),
          enough && worst <= kFactorialSlack, worst, kFactorialSlack,
          fmt::format("{} points in [1e6,1e10]; c values: {}", radii.size(), join(constants))};
}

CheckResult check_ceiling(const SuiteOptions& options) {
  std::vector<FactorialParams> sets = {{1, 2, 1}, {0.5, 1, 1}};
  if (options.factorial) sets = {*options.factorial};
  int violations = 0;
  int points = 0;
  double worst = 0.0;
  for (const auto& p : sets) {
    if (p.alpha <= 0.0) continue;
    for (double r : decades(3, 12)) {
      const double ratio = eval_factorial(p, r, 1e-12).value / factorial_ceiling(p, r, kCeilingEpsilon);
      worst = std::max(worst, ratio);
      ++points;
      if (ratio > 1.0) ++violations;
    }
  }
  return {"factorial series below the ceiling (eps=0.2)", violations == 0 && points > 0, worst, 1.0,
          fmt::format("{} violations in {} points; max S/ceiling {:.4g}", violations, points, worst)};
}

CheckResult check_saddle(const SuiteOptions& options) {
  std::vector<FactorialParams> sets = {{1, 2, 1}, {0.5, 1, 1}, {0, 1, 1}};
  if (options.factorial) sets = {*options.factorial};
  int violations = 0;
  int points = 0;
  double worst = 0.0;
  for (const auto& p : sets) {
    for (double r : decades(3, 12)) {
      const double ratio = eval_factorial(p, r, 1e-12).value / saddle_bound(p, r);
      worst = std::max(worst, ratio);
      ++points;
      if (ratio > 1.0) ++violations;
    }
  }
  return {"factorial series below the saddle-point bound", violations == 0, worst, 1.0,
          fmt::format("{} violations in {} points; max S/bound {:.4g}", violations, points, worst)};
}

CheckResult check_envelope(const SuiteOptions& options) {
  std::vector<FactorialParams> sets = {{1, 2, 1}, {0.5, 1, 1}};
  if (options.factorial) sets = {*options.factorial};
  int violations = 0;
  int points = 0;
  std::string misses;
  double worst = 0.0;  // largest |log S - log center| / (eps log r)
  for (const auto& p : sets) {
    p.require_positive_alpha("factorial envelope");
    for (double r : decades(3, 12)) {
      const auto env = factorial_envelope(p, r, kEnvelopeEpsilon);
      const auto s = eval_factorial(p, r, 1e-12);
      worst = std::max(worst, std::abs(s.log_value - env.log_center) / (kEnvelopeEpsilon * std::log(r)));
      ++points;
      if (!(env.lower <= s.value && s.value <= env.upper)) {
        ++violations;
        misses += fmt::format(" {}@r={:g}", format_params(p), r);
      }
    }
  }
  return {"power envelope r^(-stilde +- 0.1) contains the factorial series", violations == 0, worst, 1.0,
          fmt::format("{} violations in {} points{}", violations, points, misses.empty() ? "" : ":" + misses)};
}

CheckResult check_singular(const SuiteOptions&) {
  const std::vector<DirichletParams> pairs = {{0, 0}, {0, 1}, {0.5, 0}};
  bool ok = true;
  double worst = 0.0;
  std::string detail;
  for (const auto& p : pairs) {
    std::vector<double> dev;
    for (double d : {1e-2, 1e-3, 1e-4}) {
      dev.push_back(std::abs(zeta_eta_theta(p, 1.0 + d, 1e-10) / zeta_singular_prediction(p, 1.0 + d) - 1.0));
    }
    const bool mono = strictly_decreasing(dev);
    ok = ok && mono && dev.back() <= kSingularFinal;
    worst = std::max(worst, dev.back());
    detail += fmt::format("{}({:g},{:g}): {}{}", detail.empty() ? "" : "; ", p.eta, p.theta, join(dev),
                          mono ? "" : " (not decreasing)");
  }
  return {"Dirichlet series approach their singular models as s -> 1", ok, worst, kSingularFinal, detail};
}

CheckResult check_eta_origin(const SuiteOptions&) {
  std::vector<double> dev;
  std::vector<double> scaled;
  for (double s : {1e-2, 1e-4, 1e-6, 1e-8}) {
    scaled.push_back(s * eta_factorial(s, 1e-6) * std::log(1.0 / s));
    dev.push_back(std::abs(scaled.back() - 1.0));
  }
  const double at_one = std::abs(eta_factorial(1.0, 1e-14) - kE) / kE;
  const bool mono = strictly_decreasing(dev);
  return {"s eta(s) log(1/s) -> 1 as s -> 0, and eta(1) = e", mono && dev.back() <= kEtaOriginFinal &&
                                                                 at_one <= kEtaAtOneTol,
          dev.back(), kEtaOriginFinal,
          fmt::format("s eta log(1/s) at s=1e-2..1e-8: {}{}; |eta(1)-e|/e = {:.3g}", join(scaled),
                      mono ? "" : " (not monotone)", at_one)};
}

// Mellin transform by quadrature in t = log r over [-T, T]; the neglected
// ends decay like exp(-min(s, edge - s) T).
double mellin_oracle(const std::function<double(double)>& series, double s, double edge) {
  const double span = 45.0 / std::min(s, edge - s);
  auto integrand = [&](double t) { return series(std::exp(t)) * std::exp(s * t); };
  return integrate(integrand, -span, span, 0.0, 1e-9, 20000).value;
}

CheckResult check_mellin(const SuiteOptions& options) {
  PowerLogParams pl{1, 2, 0, 0, 1};
  if (options.powerlog) pl = *options.powerlog;
  FactorialParams fp{1, 2, 1};
  if (options.factorial) fp = *options.factorial;

  const double shat = transform_frame(pl).shat;
  const double s_pl = shat / 2.0;
  SequencePair small_r;
  small_r.a = [pl](std::int64_t n) {
    if (n < 2) return 0.0;
    const double x = static_cast<double>(n);
    return std::pow(x, pl.alpha) * std::pow(std::log(x), pl.gamma);
  };
  small_r.b = [pl](std::int64_t n) {
    if (n < 2) return 0.0;
    const double x = static_cast<double>(n);
    return std::pow(x, pl.beta) * std::pow(std::log(x), pl.delta);
  };
  small_r.b_monotone_from = 2;
  auto powerlog_series = [&](double r) {
    return r > 1.5 ? eval_powerlog(pl, r, 1e-11).value : eval_general(small_r, pl.mu, r, 1e-10).value;
  };
  const double pl_quad = mellin_oracle(powerlog_series, s_pl, shat);
  const double pl_closed = mellin_powerlog(pl, s_pl, 1e-12);
  const double pl_err = std::abs(pl_closed - pl_quad) / pl_quad;

  const double stilde = transform_frame(fp).stilde;
  const double s_f = std::min(1.0, stilde / 2.0);
  auto factorial_series = [&](double r) { return eval_factorial(fp, r, 1e-11).value; };
  const double f_quad = mellin_oracle(factorial_series, s_f, stilde);
  const double f_closed = mellin_factorial(fp, s_f, 1e-12);
  const double f_err = std::abs(f_closed - f_quad) / f_quad;

  const double worst = std::max(pl_err, f_err);
  return {"Mellin closed forms match quadrature of the series", worst <= kMellinTol, worst, kMellinTol,
          fmt::format("power-log {} at s={:g}: {:.3g}; factorial {} at s={:g}: {:.3g}", format_params(pl), s_pl,
                      pl_err, format_params(fp), s_f, f_err)};
}

CheckResult check_power_series(const SuiteOptions&) {
  SequencePair s;
  s.a = [](std::int64_t) { return 1.0; };
  s.b = [](std::int64_t n) { return static_cast<double>(n) * static_cast<double>(n); };
  std::vector<double> scaled;
  for (double r : {1e2, 1e3, 1e4}) scaled.push_back(r * r * eval_power_series(s, 0.0, 0.5, r, 1e-12).value);
  const double dev = std::abs(scaled.back() - 2.0) / 2.0;
  return {"r^2 sum (1/2)^n / (n^2 + r^2) -> 2", dev <= kPowerSeriesTol, dev, kPowerSeriesTol,
          fmt::format("r^2 S at r=1e2,1e3,1e4: {}", join(scaled))};
}

CheckResult check_special_functions(const SuiteOptions&) {
  double roundtrip = 0.0;
  bool increasing = true;
  double prev_g = 0.0;
  const double lo = std::log(2.0);
  const double hi = std::log(1e300);
  for (int i = 0; i < 50; ++i) {
    const double log_x = lo + (hi - lo) * i / 49.0;
    const double g = inverse_gamma_log(log_x);
    roundtrip = std::max(roundtrip, std::abs(log_gamma(g) - log_x));
    if (i > 0 && !(g > prev_g)) increasing = false;
    prev_g = g;
  }
  double lambert = 0.0;
  const double branch = -1.0 / kE + 1e-6;
  for (int i = 0; i <= 200; ++i) {
    // Dense near the branch point, geometric beyond 1.
    const double z = i < 100 ? branch + (1.0 - branch) * i / 100.0 : std::pow(1e12, (i - 100) / 100.0);
    const double w = lambert_w(z);
    lambert = std::max(lambert, std::abs(w * std::exp(w) - z) / std::max(1.0, std::abs(z)));
  }
  const bool zetas = zeta_neg_odd(0) == Rational(-1, 12) && zeta_neg_odd(1) == Rational(1, 120) &&
                     zeta_neg_odd(2) == Rational(-1, 252);
  return {"special-function floor", roundtrip <= kRoundtripTol && increasing && lambert <= kLambertTol && zetas,
          roundtrip, kRoundtripTol,
          fmt::format("inverse Gamma roundtrip {:.3g} (<= {:g}){}; Lambert W residual {:.3g} (<= {:g}); "
                      "zeta(-1,-3,-5) exact: {}",
                      roundtrip, kRoundtripTol, increasing ? "" : " not monotone", lambert, kLambertTol,
                      zetas ? "yes" : "no")};
}

// A check that throws is reported as a failure rather than aborting the run.
CheckResult guarded(const std::string& name, const std::function<CheckResult()>& check) {
  try {
    return check();
  } catch (const ParameterError&) {
    throw;
  } catch (const std::exception& e) {
    return {name, false, std::nan(""), std::nan(""), fmt::format("raised: {}", e.what())};
  }
}

#define MATHIEU_GUARD(fn, opts) guarded(#fn, [&] { return fn(opts); })

using SuiteFn = std::function<std::vector<CheckResult>(const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"thm11", [](const SuiteOptions& o) { return std::vector{MATHIEU_GUARD(check_powerlog_trend, o)}; }},
      {"thm12", [](const SuiteOptions& o) { return std::vector{MATHIEU_GUARD(check_shift_insensitivity, o)}; }},
      {"thm13", [](const SuiteOptions& o) { return std::vector{MATHIEU_GUARD(check_factorial_estimate, o)}; }},
      {"thm14", [](const SuiteOptions& o) { return std::vector{MATHIEU_GUARD(check_ceiling, o), MATHIEU_GUARD(check_envelope, o)}; }},
      {"thm15", [](const SuiteOptions& o) { return std::vector{MATHIEU_GUARD(check_saddle, o)}; }},
      {"lemma22", [](const SuiteOptions& o) { return std::vector{MATHIEU_GUARD(check_singular, o)}; }},
      {"lemma31", [](const SuiteOptions& o) { return std::vector{MATHIEU_GUARD(check_eta_origin, o)}; }},
      {"lemma41", [](const SuiteOptions& o) { return std::vector{MATHIEU_GUARD(check_two_term, o)}; }},
      {"expansion", [](const SuiteOptions& o) { return std::vector{MATHIEU_GUARD(check_expansion, o)}; }},
      {"prop62", [](const SuiteOptions& o) { return std::vector{MATHIEU_GUARD(check_power_series, o)}; }},
      {"cor61", [](const SuiteOptions& o) { return std::vector{MATHIEU_GUARD(check_log_factorial, o)}; }},
      {"mellin", [](const SuiteOptions& o) { return std::vector{MATHIEU_GUARD(check_mellin, o)}; }},
      {"special", [](const SuiteOptions& o) { return std::vector{MATHIEU_GUARD(check_special_functions, o)}; }},
      {"envelope", [](const SuiteOptions& o) { return std::vector{MATHIEU_GUARD(check_envelope, o)}; }},
  };
  return table;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suite_table()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (options.powerlog) options.powerlog->validate();
  if (options.factorial) options.factorial->validate();
  SuiteReport report;
  report.suite = name;
  for (const auto& [suite, fn] : suite_table()) {
    if (name == "all" ? suite != "envelope" : suite == name) {
      for (auto& c : fn(options)) report.checks.push_back(std::move(c));
      if (name != "all") return report;
    }
  }
  if (report.checks.empty()) throw ParameterError(fmt::format("unknown verification suite '{}'", name));
  return report;
}

std::vector<CheckResult> acceptance_checks() {
  SuiteOptions strict;
  strict.strict = true;
  std::vector<CheckResult> out;
  out.push_back(MATHIEU_GUARD(check_expansion, strict));
  out.push_back(MATHIEU_GUARD(check_powerlog_trend, strict));
  out.push_back(MATHIEU_GUARD(check_log_factorial, strict));
  out.push_back(MATHIEU_GUARD(check_two_term, strict));
  out.push_back(MATHIEU_GUARD(check_factorial_estimate, strict));
  const auto ceiling = MATHIEU_GUARD(check_ceiling, strict);
  const auto saddle = MATHIEU_GUARD(check_saddle, strict);
  out.push_back({"factorial series below the ceiling and the saddle-point bound", ceiling.passed && saddle.passed,
                 std::max(ceiling.measured, saddle.measured), 1.0, ceiling.detail + "; " + saddle.detail});
  out.push_back(MATHIEU_GUARD(check_envelope, strict));
  out.push_back(MATHIEU_GUARD(check_singular, strict));
  out.push_back(MATHIEU_GUARD(check_eta_origin, strict));
  out.push_back(MATHIEU_GUARD(check_mellin, strict));
  out.push_back(MATHIEU_GUARD(check_power_series, strict));
  out.push_back(MATHIEU_GUARD(check_special_functions, strict));
  return out;
}

}  // namespace mathieu
