#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kwise/numeric.hpp"
#include "kwise/params.hpp"
#include "kwise/weight_pmf.hpp"

namespace kwise {

/// Pr[P >= t] - Pr[Q >= t].
Rational advantage(const WeightPmf& p, const WeightPmf& q, int t);

struct ThresholdChoice {
  int t = 0;
  Rational advantage;
};

struct IntervalChoice {
  int a = 0;
  int b = 0;
  Rational advantage;
};

/// Maximizes advantage(P, Q, t) over admissible t; smallest t on ties.
ThresholdChoice best_threshold(const WeightPmf& p, const WeightPmf& q);
/// Maximizes Pr[P in [a,b]] - Pr[Q in [a,b]] over admissible a <= b;
/// lexicographically smallest (a, b) on ties.
IntervalChoice best_interval(const WeightPmf& p, const WeightPmf& q);

enum class Scenario { thm8, thm9, thm10 };
const char* to_string(Scenario s);
Scenario parse_scenario(const std::string& s);

struct SeparationReport {
  Scenario scenario = Scenario::thm8;
  ParamSet params;
  int t = 0;
  std::optional<std::pair<int, int>> interval;
  Rational lhs;
  Rational rhs;
  Rational advantage;
  Real template_value;
  /// Scenario-specific diagnostics, in insertion order.
  std::vector<std::pair<std::string, std::string>> notes;
};

/// thm8 : concentrated k-uniform input -> bu_to_sb -> smooth; best positive threshold
///        advantage of B over the smoothed distribution.
/// thm9 : extremal k-uniform input at t' -> bu_to_sb -> smooth; tail at t
///        against the exact max tail over all k'-uniform distributions.
/// thm10: two-slice mixture -> smooth; best interval against B.
SeparationReport run_separation(Scenario scenario, const ParamSet& params);

std::string separation_csv_header();
std::string separation_csv_row(const SeparationReport& r);

}  // namespace kwise
