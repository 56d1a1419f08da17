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

#include "gra/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "gra/error.hpp"

namespace gra {

std::string_view growth_model_name(GrowthModel m) noexcept {
  switch (m) {
    case GrowthModel::Linear: return "linear";
    case GrowthModel::Power: return "power";
    case GrowthModel::Exponential: return "exponential";
  }
  return "linear";
}

std::optional<GrowthModel> parse_growth_model(std::string_view s) noexcept {
  for (auto m :
       {GrowthModel::Linear, GrowthModel::Power, GrowthModel::Exponential}) {
    if (growth_model_name(m) == s) return m;
  }
  return std::nullopt;
}

std::string_view category_name(GrowthCategory c) noexcept {
  switch (c) {
    case GrowthCategory::Halted: return "Halted";
    case GrowthCategory::LinearStrict: return "LinearStrict";
    case GrowthCategory::LinearPeriodic: return "LinearPeriodic";
    case GrowthCategory::LinearChaotic: return "LinearChaotic";
    case GrowthCategory::Quadratic: return "Quadratic";
    case GrowthCategory::Exponential: return "Exponential";
    case GrowthCategory::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

std::optional<GrowthCategory> parse_category(std::string_view s) noexcept {
  for (auto c : kAllCategories) {
    if (category_name(c) == s) return c;
  }
  return std::nullopt;
}

double ModelFit::predict(double t) const noexcept {
  switch (model) {
    case GrowthModel::Linear: return a + b * t;
    case GrowthModel::Power: return a * std::pow(t, b);
    case GrowthModel::Exponential: return a * std::pow(b, t);
  }
  return 0.0;
}

bool operator==(const GrowthClassification& a,
                const GrowthClassification& b) noexcept {
  auto same_fit = [](const std::optional<ModelFit>& x,
                     const std::optional<ModelFit>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    return x->model == y->model && x->a == y->a && x->b == y->b &&
           x->r2 == y->r2 && x->adjusted_r2 == y->adjusted_r2 &&
           x->points == y->points;
  };
  return a.category == b.category && a.cycle_period == b.cycle_period &&
         same_fit(a.fit, b.fit) && a.increment_period == b.increment_period &&
         a.increment_preperiod == b.increment_preperiod;
}

namespace {

struct Line {
  double intercept;
  double slope;
};

// Ordinary least squares y = intercept + slope x on centered data.
Line least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  long double mx = 0;
  long double my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  long double sxx = 0;
  long double sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const long double dx = x[i] - mx;
    sxx += dx * dx;
    sxy += dx * (y[i] - my);
  }
  const long double slope = sxx > 0 ? sxy / sxx : 0.0L;
  return {static_cast<double>(my - slope * mx), static_cast<double>(slope)};
}

void score(ModelFit& fit, const std::vector<double>& t,
           const std::vector<double>& o) {
  const std::size_t n = t.size();
  fit.points = n;
  long double mean = 0;
  long double total_sq = 0;
  for (double v : o) {
    mean += v;
    total_sq += static_cast<long double>(v) * v;
  }
  mean /= static_cast<long double>(n);
  long double ss_tot = 0;
  long double ss_res = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const long double d = o[i] - mean;
    const long double r = o[i] - fit.predict(t[i]);
    ss_tot += d * d;
    ss_res += r * r;
  }
  if (!std::isfinite(static_cast<double>(ss_res))) {
    fit.r2 = -std::numeric_limits<double>::infinity();
  } else if (ss_tot == 0) {
    fit.r2 = ss_res <= 1e-18L * total_sq ? 1.0 : 0.0;
  } else {
    fit.r2 = static_cast<double>(1.0L - ss_res / ss_tot);
  }
  fit.adjusted_r2 =
      n > 2 ? 1.0 - (1.0 - fit.r2) * static_cast<double>(n - 1) /
                        static_cast<double>(n - 2)
            : fit.r2;
}

// Levenberg-Marquardt for y = a exp(k x) on the original scale. Power fits
// pass x = ln t, exponential fits pass x = t. Returns false if no step ever
// improved on the starting point.
bool refine_scaled_exponential(const std::vector<double>& x,
                               const std::vector<double>& y, double& a,
                               double& k) {
  auto sse = [&](double pa, double pk) {
    long double s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const long double r = y[i] - pa * std::exp(pk * x[i]);
      s += r * r;
    }
    return std::isfinite(static_cast<double>(s))
               ? static_cast<double>(s)
               : std::numeric_limits<double>::infinity();
  };

  double current = sse(a, k);
  double lambda = 1e-3;
  bool improved = false;
  for (int iter = 0; iter < 500; ++iter) {
    long double jaa = 0, jak = 0, jkk = 0, ga = 0, gk = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double e = std::exp(k * x[i]);
      const double da = e;
      const double dk = a * x[i] * e;
      const double r = y[i] - a * e;
      jaa += da * da;
      jak += da * dk;
      jkk += dk * dk;
      ga += da * r;
      gk += dk * r;
    }
    bool stepped = false;
    while (lambda < 1e16) {
      const long double m00 = jaa * (1 + lambda);
      const long double m11 = jkk * (1 + lambda);
      const long double det = m00 * m11 - jak * jak;
      if (det == 0) {
        lambda *= 10;
        continue;
      }
      const double step_a = static_cast<double>((m11 * ga - jak * gk) / det);
      const double step_k = static_cast<double>((m00 * gk - jak * ga) / det);
      const double trial = sse(a + step_a, k + step_k);
      if (trial < current) {
        const double rel = (current - trial) / std::max(current, 1e-300);
        a += step_a;
        k += step_k;
        current = trial;
        lambda = std::max(lambda / 10, 1e-12);
        stepped = improved = true;
        if (rel < 1e-15) return true;
        break;
      }
      lambda *= 10;
    }
    if (!stepped) break;
  }
  return improved;
}

}  // namespace

GrowthFits fit_growth(std::span<const std::uint64_t> orders, std::size_t begin,
                      std::size_t end, const FitOptions& options) {
  if (end > orders.size() || begin >= end || end - begin < kMinFitPoints) {
    throw Error(Errc::DegenerateWindow,
                "fit window [" + std::to_string(begin) + ", " +
                    std::to_string(end) + ") needs at least " +
                    std::to_string(kMinFitPoints) + " points");
  }
  std::vector<double> t;
  std::vector<double> o;
  std::vector<double> log_o;
  for (std::size_t i = begin; i < end; ++i) {
    if (orders[i] == 0) {
      throw Error(Errc::DegenerateWindow,
                  "non-positive order at t=" + std::to_string(i));
    }
    t.push_back(static_cast<double>(i) + options.time_origin);
    o.push_back(static_cast<double>(orders[i]));
    log_o.push_back(std::log(static_cast<double>(orders[i])));
  }

  GrowthFits fits;
  fits.begin = begin;
  fits.end = end;

  const Line lin = least_squares(t, o);
  fits.linear = {GrowthModel::Linear, lin.intercept, lin.slope};
  score(fits.linear, t, o);

  const Line ex = least_squares(t, log_o);
  double ea = std::exp(ex.intercept);
  double ek = ex.slope;
  if (options.nonlinear_refinement) refine_scaled_exponential(t, o, ea, ek);
  fits.exponential = {GrowthModel::Exponential, ea, std::exp(ek)};
  score(fits.exponential, t, o);

  std::vector<double> pt;
  std::vector<double> po;
  std::vector<double> log_t;
  std::vector<double> log_po;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 1.0) continue;
    pt.push_back(t[i]);
    po.push_back(o[i]);
    log_t.push_back(std::log(t[i]));
    log_po.push_back(log_o[i]);
  }
  const Line pw = least_squares(log_t, log_po);
  double pa = std::exp(pw.intercept);
  double pk = pw.slope;
  if (options.nonlinear_refinement && pt.size() >= 2) {
    refine_scaled_exponential(log_t, po, pa, pk);
  }
  fits.power = {GrowthModel::Power, pa, pk};
  score(fits.power, pt, po);
  return fits;
}

std::optional<IncrementPeriod> increment_periodicity(
    std::span<const std::uint64_t> increments, std::size_t cap) {
  const std::size_t n = increments.size();
  cap = std::min(cap, n / 3);
  for (std::size_t p = 1; p <= cap; ++p) {
    // Smallest m with increments[i] == increments[i + p] for all i >= m.
    std::size_t m = 0;
    for (std::size_t i = n - p; i-- > 0;) {
      if (increments[i] != increments[i + p]) {
        m = i + 1;
        break;
      }
    }
    const std::size_t periodic = n - m;
    if (periodic >= 3 * p && 2 * periodic >= n) {
      return IncrementPeriod{p, m};
    }
  }
  return std::nullopt;
}

std::pair<std::size_t, std::size_t> trailing_window(std::size_t points,
                                                    double fraction) {
  auto len = static_cast<std::size_t>(
      std::ceil(fraction * static_cast<double>(points)));
  len = std::min(points, std::max(len, kMinFitPoints));
  return {points - len, points};
}

GrowthClassification classify(const EvolutionTrace& trace,
                              const ClassifierConfig& config) {
  GrowthClassification out;
  if (trace.cycle_period) {
    out.category = GrowthCategory::Halted;
    out.cycle_period = trace.cycle_period;
    return out;
  }

  if (auto per = increment_periodicity(trace.increments, config.period_cap)) {
    std::uint64_t gained = 0;
    for (std::size_t i = 0; i < per->period; ++i) {
      gained += trace.increments[per->preperiod + i];
    }
    out.increment_period = per->period;
    out.increment_preperiod = per->preperiod;
    if (gained > 0) {
      out.category = per->period == 1 ? GrowthCategory::LinearStrict
                                      : GrowthCategory::LinearPeriodic;
    }
    // Zero net growth without a confirmed cycle stays Unclassified.
    return out;
  }

  if (trace.orders.size() < kMinFitPoints) return out;
  const auto [begin, end] =
      trailing_window(trace.orders.size(), config.fit_fraction);
  const GrowthFits fits =
      fit_growth(trace.orders, begin, end, config.fit_options);

  // Simpler model wins unless a richer one is strictly better.
  constexpr double kTie = 1e-9;
  const ModelFit* best = &fits.linear;
  if (fits.power.adjusted_r2 > best->adjusted_r2 + kTie) best = &fits.power;
  if (fits.exponential.adjusted_r2 > best->adjusted_r2 + kTie) {
    best = &fits.exponential;
  }
  out.fit = *best;

  switch (best->model) {
    case GrowthModel::Linear:
      if (best->adjusted_r2 >= config.linear_r2 && best->b > 0) {
        out.category = GrowthCategory::LinearChaotic;
      }
      break;
    case GrowthModel::Power:
      if (best->adjusted_r2 >= config.power_r2 &&
          best->b >= config.quadratic_min_exponent &&
          best->b <= config.quadratic_max_exponent) {
        out.category = GrowthCategory::Quadratic;
      }
      break;
    case GrowthModel::Exponential:
      if (best->adjusted_r2 >= config.exponential_r2 && best->b > 1.0) {
        out.category = GrowthCategory::Exponential;
      }
      break;
  }
  return out;
}

IntervalHistogram zero_growth_intervals(
    std::span<const std::uint64_t> increments) {
  IntervalHistogram hist;
  std::size_t run = 0;
  for (auto inc : increments) {
    if (inc == 0) {
      ++run;
    } else if (run > 0) {
      ++hist[run];
      run = 0;
    }
  }
  if (run > 0) ++hist[run];
  return hist;
}

std::set<std::uint64_t> increment_support(
    std::span<const std::uint64_t> increments, std::size_t begin,
    std::size_t end) {
  if (begin > end || end > increments.size()) {
    throw Error(Errc::IndexOutOfRange,
                "support window [" + std::to_string(begin) + ", " +
                    std::to_string(end) + ") outside sequence of length " +
                    std::to_string(increments.size()));
  }
  return {increments.begin() + static_cast<std::ptrdiff_t>(begin),
          increments.begin() + static_cast<std::ptrdiff_t>(end)};
}

}  // namespace gra
