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

/// \file verify.hpp
/// \brief Numerical verification suites. Each check compares a measured
/// quantity with a frozen threshold; the thresholds live here and nowhere
/// else, so the CLI and the acceptance binary agree.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mathieu/series_eval.hpp"

namespace mathieu {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;  ///< free-form measured values, e.g. a trend
};

struct SuiteOptions {
  bool strict = false;  ///< also enforce runtime budgets
  std::optional<PowerLogParams> powerlog;    ///< replaces the default power-log sets
  std::optional<FactorialParams> factorial;  ///< replaces the default factorial sets
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Names accepted by run_suite, in display order.
const std::vector<std::string>& suite_names();

/// Runs one suite. Throws ParameterError for an unknown name or for override
/// parameters that fail validation; the validation happens before any
/// computation.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

/// The twelve acceptance checks, in order, with runtime budgets enforced.
std::vector<CheckResult> acceptance_checks();

}  // namespace mathieu
