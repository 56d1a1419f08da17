// Copyright 2026 The gra-engine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRA_GROWTH_HPP_
#define GRA_GROWTH_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string_view>

#include "gra/trace.hpp"

namespace gra {

enum class GrowthModel { Linear, Power, Exponential };

std::string_view growth_model_name(GrowthModel m) noexcept;
std::optional<GrowthModel> parse_growth_model(std::string_view s) noexcept;

// Two-parameter least-squares fit of the order series.
//   Linear:      o = a + b t
//   Power:       o = a t^b        (log-log regression, t >= 1)
//   Exponential: o = a b^t        (log-linear regression)
// R^2 is measured on the original scale so the three models compare on the
// same residuals.
struct ModelFit {
  GrowthModel model = GrowthModel::Linear;
  double a = 0.0;
  double b = 0.0;
  double r2 = 0.0;
  double adjusted_r2 = 0.0;
  std::size_t points = 0;

  double predict(double t) const noexcept;
};

struct GrowthFits {
  ModelFit linear;
  ModelFit power;
  ModelFit exponential;
  std::size_t begin = 0;
  std::size_t end = 0;
};

inline constexpr std::size_t kMinFitPoints = 10;

struct FitOptions {
  // t assigned to orders[0]. Set to 1 for one-based time.
  double time_origin = 0.0;
  // Polish the power and exponential fits with Levenberg-Marquardt on the
  // original scale, starting from the log-space estimates.
  bool nonlinear_refinement = false;

  friend bool operator==(const FitOptions&, const FitOptions&) = default;
};

// Fits orders[begin, end). Throws DegenerateWindow when the window has fewer
// than 10 points or holds a non-positive order.
GrowthFits fit_growth(std::span<const std::uint64_t> orders, std::size_t begin,
                      std::size_t end, const FitOptions& options = {});

struct IncrementPeriod {
  std::size_t period = 0;
  std::size_t preperiod = 0;
};

inline constexpr std::size_t kDefaultPeriodCap = 128;

// Smallest p <= cap for which increments[i] == increments[i + p] holds from
// some preperiod m on, with the periodic part covering at least three
// periods and at least half of the sequence. The cap shrinks to a third of
// the sequence length for short inputs.
std::optional<IncrementPeriod> increment_periodicity(
    std::span<const std::uint64_t> increments,
    std::size_t cap = kDefaultPeriodCap);

enum class GrowthCategory {
  Halted,
  LinearStrict,
  LinearPeriodic,
  LinearChaotic,
  Quadratic,
  Exponential,
  Unclassified,
};

inline constexpr GrowthCategory kAllCategories[] = {
    GrowthCategory::Halted,        GrowthCategory::LinearStrict,
    GrowthCategory::LinearPeriodic, GrowthCategory::LinearChaotic,
    GrowthCategory::Quadratic,     GrowthCategory::Exponential,
    GrowthCategory::Unclassified,
};

std::string_view category_name(GrowthCategory c) noexcept;
std::optional<GrowthCategory> parse_category(std::string_view s) noexcept;

struct ClassifierConfig {
  double linear_r2 = 0.999;
  double power_r2 = 0.999;
  double exponential_r2 = 0.999;
  // Fraction of the trace (from the end) used for model fits.
  double fit_fraction = 0.75;
  double quadratic_min_exponent = 1.7;
  double quadratic_max_exponent = 2.5;
  std::size_t period_cap = kDefaultPeriodCap;
  FitOptions fit_options;

  friend bool operator==(const ClassifierConfig&,
                         const ClassifierConfig&) = default;
};

struct GrowthClassification {
  GrowthCategory category = GrowthCategory::Unclassified;
  std::optional<std::uint64_t> cycle_period;
  std::optional<ModelFit> fit;
  std::optional<std::size_t> increment_period;
  std::optional<std::size_t> increment_preperiod;

  friend bool operator==(const GrowthClassification& a,
                         const GrowthClassification& b) noexcept;
};

// Decision order: Halted (cycle), LinearStrict / LinearPeriodic (eventually
// periodic increments with positive mean), then the best adjusted R^2 among
// the three fits on the trailing window, with ties going to the simpler
// model.
GrowthClassification classify(const EvolutionTrace& trace,
                              const ClassifierConfig& config = {});

// Trailing fit window [begin, end) used by classify().
std::pair<std::size_t, std::size_t> trailing_window(std::size_t points,
                                                    double fraction);

// Length of each maximal run of zero increments -> number of such runs.
using IntervalHistogram = std::map<std::size_t, std::size_t>;
IntervalHistogram zero_growth_intervals(
    std::span<const std::uint64_t> increments);

// Distinct values of increments[begin, end).
std::set<std::uint64_t> increment_support(
    std::span<const std::uint64_t> increments, std::size_t begin,
    std::size_t end);

}  // namespace gra

#endif  // GRA_GROWTH_HPP_
