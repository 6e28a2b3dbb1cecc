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

#include "mathieu/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <variant>

#include "mathieu/asymptotics.hpp"
#include "mathieu/errors.hpp"
#include "mathieu/special_fn.hpp"
#include "mathieu/verify.hpp"

namespace mathieu {

namespace {

using Json = nlohmann::ordered_json;
using Field = std::variant<double, std::int64_t, bool, std::string>;
using Record = std::vector<std::pair<std::string, Field>>;

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt::format("{}", x);  // shortest round-trip form
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_field(const Field& f) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return format_number(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
        else return csv_escape(v);
      },
      f);
}

Json json_field(const Field& f) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return std::isfinite(v) ? Json(v) : Json(nullptr);
        else return Json(v);
      },
      f);
}

Json json_record(const Record& rec) {
  Json j = Json::object();
  for (const auto& [key, value] : rec) j[key] = json_field(value);
  return j;
}

struct Params {
  std::optional<double> alpha, beta, gamma, delta, mu;
  bool gamma_eq_alpha = false;
  bool delta_eq_beta = false;

  PowerLogParams powerlog() const {
    PowerLogParams p;
    p.alpha = alpha.value_or(p.alpha);
    p.beta = beta.value_or(p.beta);
    p.gamma = gamma.value_or(p.gamma);
    p.delta = delta.value_or(p.delta);
    p.mu = mu.value_or(p.mu);
    if (gamma_eq_alpha) p.gamma = p.alpha;
    if (delta_eq_beta) p.delta = p.beta;
    p.validate();
    return p;
  }
  FactorialParams factorial() const {
    FactorialParams p;
    p.alpha = alpha.value_or(p.alpha);
    p.beta = beta.value_or(p.beta);
    p.mu = mu.value_or(p.mu);
    p.validate();
    return p;
  }
  bool any() const { return alpha || beta || gamma || delta || mu; }
  bool matched_logs() const { return gamma_eq_alpha && delta_eq_beta; }
};

void add_param_options(CLI::App* cmd, Params& p, bool corollary_flags) {
  cmd->add_option("--alpha", p.alpha, "numerator exponent");
  cmd->add_option("--beta", p.beta, "denominator exponent");
  cmd->add_option("--gamma", p.gamma, "numerator log exponent");
  cmd->add_option("--delta", p.delta, "denominator log exponent");
  cmd->add_option("--mu", p.mu, "outer exponent is mu+1");
  if (corollary_flags) {
    cmd->add_flag("--gamma-eq-alpha", p.gamma_eq_alpha, "set gamma = alpha");
    cmd->add_flag("--delta-eq-beta", p.delta_eq_beta, "set delta = beta");
  }
}

// --- sequence presets for the generic and power-series families ----------

SequencePair log_factorial_sequences(double alpha, double beta) {
  SequencePair s;
  s.a = [alpha](std::int64_t n) { return n < 2 ? 0.0 : std::pow(log_factorial(n), alpha); };
  s.b = [beta](std::int64_t n) { return n < 2 ? 0.0 : std::pow(log_factorial(n), beta); };
  s.b_monotone_from = 2;
  return s;
}

SequencePair powerlog_sequences(const PowerLogParams& p) {
  SequencePair s;
  s.a = [p](std::int64_t n) {
    if (n < 2) return 0.0;
    const double x = static_cast<double>(n);
    return std::pow(x, p.alpha) * std::pow(std::log(x), p.gamma);
  };
  s.b = [p](std::int64_t n) {
    if (n < 2) return 0.0;
    const double x = static_cast<double>(n);
    return std::pow(x, p.beta) * std::pow(std::log(x), p.delta);
  };
  s.b_monotone_from = 2;
  return s;
}

// a_n = (n+1)^alpha, b_n = n^beta.
SequencePair power_series_sequences(double alpha, double beta) {
  SequencePair s;
  s.a = [alpha](std::int64_t n) { return std::pow(static_cast<double>(n) + 1.0, alpha); };
  s.b = [beta](std::int64_t n) { return n == 0 ? 0.0 : std::pow(static_cast<double>(n), beta); };
  s.a_growth_degree = std::max(alpha, 0.0);
  return s;
}

struct GeneralSetup {
  SequencePair sequences;
  double mu;
  AsymptoticPrediction prediction;
};

GeneralSetup general_setup(const Params& params, const std::string& preset) {
  if (preset == "log-factorial") {
    const double alpha = params.alpha.value_or(1.0);
    const double beta = params.beta.value_or(3.0);
    const double mu = params.mu.value_or(1.0);
    return {log_factorial_sequences(alpha, beta), mu, matched_log_prediction(alpha, beta, mu)};
  }
  const auto p = params.powerlog();
  return {powerlog_sequences(p), p.mu, powerlog_prediction(p)};
}

// --- geometric grids ---------------------------------------------------------

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string piece; std::getline(ss, piece, ':');) parts.push_back(piece);
  if (parts.size() != 3) throw ParameterError(fmt::format("--r-grid '{}': expected r_min:r_max:points", spec));
  double lo = 0.0, hi = 0.0;
  long points = 0;
  try {
    lo = std::stod(parts[0]);
    hi = std::stod(parts[1]);
    points = std::stol(parts[2]);
  } catch (const std::exception&) {
    throw ParameterError(fmt::format("--r-grid '{}': malformed number", spec));
  }
  if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi)) {
    throw ParameterError(fmt::format("--r-grid '{}': need 0 < r_min <= r_max", spec));
  }
  if (points < 1 || points > 100000) throw ParameterError(fmt::format("--r-grid '{}': points in [1, 1e5]", spec));
  if (points > 1 && hi == lo) throw ParameterError(fmt::format("--r-grid '{}': r_min == r_max with several points", spec));
  std::vector<double> grid(static_cast<std::size_t>(points));
  // Spaced in log10 so decade grids land on exact powers of ten.
  const double first = std::log10(lo);
  const double step = points > 1 ? (std::log10(hi) - first) / static_cast<double>(points - 1) : 0.0;
  for (long i = 0; i < points; ++i) grid[i] = std::pow(10.0, first + step * static_cast<double>(i));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

// --- error classification -------------------------------------------------

int classify(std::exception_ptr e, std::string& message) {
  try {
    std::rethrow_exception(e);
  } catch (const PreconditionError& x) {
    message = x.what();
    return kExitPrecondition;
  } catch (const ResourceError& x) {
    message = x.what();
    return kExitResource;
  } catch (const CapacityError& x) {
    message = x.what();
    return kExitResource;
  } catch (const ParameterError& x) {
    message = x.what();
    return kExitParameter;
  } catch (const UnsupportedError& x) {
    message = x.what();
    return kExitParameter;
  } catch (const DomainError& x) {
    message = x.what();
    return kExitParameter;
  } catch (const ContractViolation& x) {
    message = x.what();
    return kExitParameter;
  } catch (const std::exception& x) {
    message = x.what();
    return kExitVerifyFailed;
  }
}

Record diagnostics_fields(const FactorialDiagnostics& d) {
  return {{"g", d.g}, {"frac_g", d.frac_g}, {"n0", d.n0}, {"m_r", d.m_r}, {"in_R", d.in_R}};
}

// --- output sinks -------------------------------------------------------------

struct Output {
  std::string format = "json";
  std::string path;

  void write(std::ostream& fallback, const std::string& text) const {
    if (path.empty() || path == "-") {
      fallback << text;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ParameterError(fmt::format("--out: cannot open '{}'", path));
    file << text;
    if (!file) throw ParameterError(fmt::format("--out: write to '{}' failed", path));
  }
};

void add_output_options(CLI::App* cmd, Output& o) {
  cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.path, "output file (default stdout)");
}

Json meta_json(const std::string& command, const std::string& family, const Record& params) {
  Json meta = {{"version", kVersion}, {"command", command}, {"family", family}};
  for (const auto& [k, v] : params) meta[k] = json_field(v);
  return meta;
}

std::string meta_line(const std::string& command, const std::string& family, const Record& params) {
  std::string line = fmt::format("# mathieu {} {} {}", kVersion, command, family);
  for (const auto& [k, v] : params) line += fmt::format(" {}={}", k, csv_field(v));
  return line + "\n";
}

// One flat record: JSON object, or a metadata line, a header and a row.
std::string render_single(const Output& o, const std::string& command, const std::string& family,
                          const Record& params, const Record& rec) {
  if (o.format == "json") {
    Json j = json_record(rec);
    j["meta"] = meta_json(command, family, params);
    return j.dump(2) + "\n";
  }
  std::string header, row;
  for (std::size_t i = 0; i < rec.size(); ++i) {
    header += (i ? "," : "") + rec[i].first;
    row += (i ? "," : "") + csv_field(rec[i].second);
  }
  return meta_line(command, family, params) + header + "\n" + row + "\n";
}

Record powerlog_param_record(const PowerLogParams& p) {
  return {{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}, {"delta", p.delta}, {"mu", p.mu}};
}

Record factorial_param_record(const FactorialParams& p) {
  return {{"alpha", p.alpha}, {"beta", p.beta}, {"mu", p.mu}};
}

BranchMode parse_branch(const std::string& s) {
  if (s == "integer") return BranchMode::kInteger;
  if (s == "noninteger") return BranchMode::kNonInteger;
  return BranchMode::kAuto;
}

// --- subcommands ----------------------------------------------------------------

struct EvalArgs {
  std::string family;
  Params params;
  double r = 0.0;
  double tol = 1e-10;
  double x = 0.5;
  std::string preset = "log-factorial";
  Output output;
};

std::string cmd_eval(const EvalArgs& a) {
  Record params;
  EvalResult res;
  if (a.family == "powerlog") {
    const auto p = a.params.powerlog();
    params = powerlog_param_record(p);
    res = eval_powerlog(p, a.r, a.tol);
  } else if (a.family == "factorial") {
    const auto p = a.params.factorial();
    params = factorial_param_record(p);
    res = eval_factorial(p, a.r, a.tol);
  } else if (a.family == "general") {
    const auto g = general_setup(a.params, a.preset);
    params = {{"sequence", a.preset}, {"mu", g.mu}};
    res = eval_general(g.sequences, g.mu, a.r, a.tol);
  } else {
    const double alpha = a.params.alpha.value_or(0.0);
    const double beta = a.params.beta.value_or(2.0);
    const double mu = a.params.mu.value_or(0.0);
    params = {{"alpha", alpha}, {"beta", beta}, {"mu", mu}, {"x", a.x}};
    res = eval_power_series(power_series_sequences(alpha, beta), mu, a.x, a.r, a.tol);
  }
  params.push_back({"tol", a.tol});
  const Record rec = {{"r", a.r},
                      {"value", res.value},
                      {"log_value", res.log_value},
                      {"tail_bound", res.tail_bound},
                      {"terms_used", res.terms_used},
                      {"peak_index", res.peak_index}};
  return render_single(a.output, "eval", a.family, params, rec);
}

struct PredictArgs {
  std::string family;
  Params params;
  double r = 0.0;
  std::string branch = "auto";
  double d1 = kDefaultD1;
  double d2 = kDefaultD2;
  Output output;
};

// Returns the rendered text and the exit code (4 with diagnostics when the
// factorial point lies outside the good set).
std::pair<std::string, int> cmd_predict(const PredictArgs& a, std::ostream& err) {
  if (a.family == "powerlog") {
    const auto p = a.params.powerlog();
    const auto pred = a.params.matched_logs() ? matched_log_prediction(p.alpha, p.beta, p.mu)
                                              : powerlog_prediction(p, parse_branch(a.branch));
    if (!(a.r > kE)) throw DomainError(fmt::format("predict powerlog: r > e required (r = {})", a.r));
    const Record rec = {{"r", a.r},
                        {"constant", pred.constant},
                        {"r_exponent", pred.r_exponent},
                        {"log_exponent", pred.log_exponent},
                        {"value", pred.value(a.r)}};
    return {render_single(a.output, "predict", a.family, powerlog_param_record(p), rec), kExitOk};
  }
  const auto p = a.params.factorial();
  try {
    const auto est = predict_factorial(p, a.r, a.d1, a.d2);
    Record rec = {{"r", a.r}, {"value", est.value}, {"log_value", est.log_value},
                  {"slack_exponent", est.slack_exponent}};
    for (auto& f : diagnostics_fields(est.diagnostics)) rec.push_back(std::move(f));
    return {render_single(a.output, "predict", a.family, factorial_param_record(p), rec), kExitOk};
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    Record rec = {{"r", a.r}};
    for (auto& f : diagnostics_fields(e.diagnostics())) rec.push_back(std::move(f));
    rec.push_back({"error", std::string(e.what())});
    return {render_single(a.output, "predict", a.family, factorial_param_record(p), rec), kExitPrecondition};
  }
}

struct SweepArgs {
  std::string family;
  Params params;
  std::string grid = "1e2:1e6:5";
  double tol = 1e-10;
  std::string preset = "log-factorial";
  Output output;
};

struct SweepRow {
  double r = 0.0;
  double value = NAN;
  double prediction = NAN;
  double ratio = NAN;
  double tail_bound = NAN;
  std::optional<FactorialDiagnostics> diagnostics;
  std::string error;
  int code = kExitOk;
};

std::pair<std::string, int> cmd_sweep(const SweepArgs& a) {
  const auto grid = parse_grid(a.grid);
  Record params;
  std::function<void(SweepRow&)> evaluate;
  const bool factorial = a.family == "factorial";

  std::optional<PowerLogParams> pl;
  std::optional<FactorialParams> fp;
  std::optional<GeneralSetup> general;
  AsymptoticPrediction prediction;
  double expansion_mu = 0.0;
  if (a.family == "powerlog") {
    pl = a.params.powerlog();
    params = powerlog_param_record(*pl);
    prediction = a.params.matched_logs() ? matched_log_prediction(pl->alpha, pl->beta, pl->mu)
                                         : powerlog_prediction(*pl);
    evaluate = [&](SweepRow& row) {
      const auto res = eval_powerlog(*pl, row.r, a.tol);
      row.value = res.value;
      row.tail_bound = res.tail_bound;
      if (row.r > kE) row.prediction = prediction.value(row.r);
    };
  } else if (factorial) {
    fp = a.params.factorial();
    params = factorial_param_record(*fp);
    evaluate = [&](SweepRow& row) {
      const auto res = eval_factorial(*fp, row.r, a.tol);
      row.value = res.value;
      row.tail_bound = res.tail_bound;
      row.diagnostics = factorial_diagnostics(*fp, row.r);
      if (row.diagnostics->in_R) row.prediction = predict_factorial(*fp, row.r).value;
    };
  } else if (a.family == "general") {
    general = general_setup(a.params, a.preset);
    params = {{"sequence", a.preset}, {"mu", general->mu}};
    evaluate = [&](SweepRow& row) {
      const auto res = eval_general(general->sequences, general->mu, row.r, a.tol);
      row.value = res.value;
      row.tail_bound = res.tail_bound;
      if (row.r > 1.0) row.prediction = general->prediction.value(row.r);
    };
  } else {
    // Expansion: value is the directly summed series, prediction the
    // optimally truncated expansion.
    expansion_mu = a.params.mu.value_or(2.0);
    params = {{"mu", expansion_mu}};
    evaluate = [&](SweepRow& row) {
      const auto res = classical_series_direct(expansion_mu, row.r, a.tol);
      row.value = res.value;
      row.tail_bound = res.tail_bound;
      row.prediction = eval_classical_expansion(expansion_mu, row.r, Truncation::kOptimal).value;
    };
  }
  params.push_back({"tol", a.tol});
  params.push_back({"r_grid", a.grid});

  std::vector<SweepRow> rows(grid.size());
  const long count = static_cast<long>(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    SweepRow& row = rows[i];
    row.r = grid[i];
    try {
      evaluate(row);
      if (row.prediction > 0.0) row.ratio = row.value / row.prediction;
    } catch (...) {
      row.code = classify(std::current_exception(), row.error);
      row.value = row.prediction = row.ratio = row.tail_bound = NAN;
    }
  }

  int code = kExitOk;
  bool any_ok = false;
  for (const auto& row : rows) {
    if (row.code == kExitOk) any_ok = true;
    else if (code == kExitOk) code = row.code;
  }
  if (any_ok) code = kExitOk;

  std::vector<Record> records;
  for (const auto& row : rows) {
    Record rec = {{"r", row.r}, {"value", row.value}, {"prediction", row.prediction}, {"ratio", row.ratio},
                  {"tail_bound", row.tail_bound}};
    if (factorial) {
      if (row.diagnostics) {
        for (auto& f : diagnostics_fields(*row.diagnostics)) rec.push_back(std::move(f));
      } else {
        for (const char* k : {"g", "frac_g", "n0", "m_r", "in_R"}) rec.push_back({k, std::string()});
      }
    }
    rec.push_back({"error", row.error});
    records.push_back(std::move(rec));
  }

  std::string text;
  if (a.output.format == "json") {
    Json j = {{"meta", meta_json("sweep", a.family, params)}, {"records", Json::array()}};
    for (const auto& rec : records) {
      Json jr = json_record(rec);
      // Absent diagnostics become null rather than empty strings.
      for (auto& [k, v] : jr.items()) {
        if (k != "error" && v.is_string() && v.get<std::string>().empty()) v = nullptr;
      }
      j["records"].push_back(std::move(jr));
    }
    text = j.dump(2) + "\n";
  } else {
    text = meta_line("sweep", a.family, params);
    std::string header;
    for (std::size_t i = 0; i < records.front().size(); ++i) header += (i ? "," : "") + records.front()[i].first;
    text += header + "\n";
    for (const auto& rec : records) {
      std::string line;
      for (std::size_t i = 0; i < rec.size(); ++i) line += (i ? "," : "") + csv_field(rec[i].second);
      text += line + "\n";
    }
  }
  return {text, code};
}

struct VerifyArgs {
  std::string suite;
  bool strict = false;
  Params params;
  std::string format = "text";
};

bool uses_factorial_overrides(const std::string& suite) {
  for (const char* s : {"thm13", "thm14", "thm15", "lemma41", "envelope", "all"}) {
    if (suite == s) return true;
  }
  return false;
}

bool uses_powerlog_overrides(const std::string& suite) {
  for (const char* s : {"thm11", "thm12", "cor61", "mellin", "all"}) {
    if (suite == s) return true;
  }
  return false;
}

std::pair<std::string, int> cmd_verify(const VerifyArgs& a) {
  SuiteOptions options;
  options.strict = a.strict;
  if (a.params.any()) {
    if (uses_powerlog_overrides(a.suite)) options.powerlog = a.params.powerlog();
    if (uses_factorial_overrides(a.suite)) options.factorial = a.params.factorial();
  }
  const auto report = run_suite(a.suite, options);
  std::string text;
  if (a.format == "json") {
    Json j = {{"suite", report.suite}, {"passed", report.passed()}, {"checks", Json::array()}};
    for (const auto& c : report.checks) {
      j["checks"].push_back({{"name", c.name},
                             {"passed", c.passed},
                             {"measured", json_field(c.measured)},
                             {"threshold", json_field(c.threshold)},
                             {"detail", c.detail}});
    }
    text = j.dump(2) + "\n";
  } else {
    for (const auto& c : report.checks) {
      const std::string threshold = std::isnan(c.threshold) ? "(trend only)" : format_number(c.threshold);
      text += fmt::format("{} {}: measured {} vs threshold {}\n    {}\n", c.passed ? "PASS" : "FAIL", c.name,
                          format_number(c.measured), threshold, c.detail);
    }
    text += fmt::format("{}: {}\n", report.suite, report.passed() ? "PASS" : "FAIL");
  }
  return {text, report.passed() ? kExitOk : kExitVerifyFailed};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mathieu-type series: evaluation, asymptotic predictions and numerical verification"};
  app.name(args.empty() ? "mathieu" : args.front());
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate a series at one radius");
  eval->add_option("family", eval_args.family, "powerlog, factorial, general or powerseries")
      ->required()
      ->check(CLI::IsMember({"powerlog", "factorial", "general", "powerseries"}));
  add_param_options(eval, eval_args.params, true);
  eval->add_option("--r", eval_args.r, "radius")->required();
  eval->add_option("--tol", eval_args.tol, "relative tolerance");
  eval->add_option("--x", eval_args.x, "power-series argument, |x| < 1");
  eval->add_option("--sequence", eval_args.preset, "general family: log-factorial or powerlog")
      ->check(CLI::IsMember({"log-factorial", "powerlog"}));
  add_output_options(eval, eval_args.output);

  PredictArgs predict_args;
  auto* predict = app.add_subcommand("predict", "closed-form large-r prediction");
  predict->add_option("family", predict_args.family, "powerlog or factorial")
      ->required()
      ->check(CLI::IsMember({"powerlog", "factorial"}));
  add_param_options(predict, predict_args.params, true);
  predict->add_option("--r", predict_args.r, "radius")->required();
  predict->add_option("--branch", predict_args.branch, "auto, integer or noninteger")
      ->check(CLI::IsMember({"auto", "integer", "noninteger"}));
  predict->add_option("--d1", predict_args.d1, "lower edge of the good set");
  predict->add_option("--d2", predict_args.d2, "upper edge of the good set");
  add_output_options(predict, predict_args.output);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "evaluate and predict on a geometric radius grid");
  sweep->add_option("family", sweep_args.family, "powerlog, factorial, general or expansion")
      ->required()
      ->check(CLI::IsMember({"powerlog", "factorial", "general", "expansion"}));
  add_param_options(sweep, sweep_args.params, true);
  sweep->add_option("--r-grid", sweep_args.grid, "r_min:r_max:points, geometric");
  sweep->add_option("--tol", sweep_args.tol, "relative tolerance");
  sweep->add_option("--sequence", sweep_args.preset, "general family: log-factorial or powerlog")
      ->check(CLI::IsMember({"log-factorial", "powerlog"}));
  add_output_options(sweep, sweep_args.output);
  sweep_args.output.format = "csv";

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run a numerical verification suite");
  verify->add_option("suite", verify_args.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_flag("--strict", verify_args.strict, "enforce runtime budgets");
  add_param_options(verify, verify_args.params, false);
  verify->add_option("--format", verify_args.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  if (argv.empty()) argv.push_back("mathieu");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParameter;
  }

  try {
    if (*eval) {
      const auto text = cmd_eval(eval_args);
      eval_args.output.write(out, text);
      return kExitOk;
    }
    if (*predict) {
      const auto [text, code] = cmd_predict(predict_args, err);
      predict_args.output.write(out, text);
      return code;
    }
    if (*sweep) {
      const auto [text, code] = cmd_sweep(sweep_args);
      sweep_args.output.write(out, text);
      if (code != kExitOk) err << "error: every grid point failed\n";
      return code;
    }
    const auto [text, code] = cmd_verify(verify_args);
    out << text;
    return code;
  } catch (...) {
    std::string message;
    const int code = classify(std::current_exception(), message);
    err << "error: " << message << "\n";
    return code;
  }
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace mathieu
