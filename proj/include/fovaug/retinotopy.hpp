// Copyright (c) 2026, the fovaug authors. All rights reserved.
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

#ifndef FOVAUG_RETINOTOPY_HPP_
#define FOVAUG_RETINOTOPY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "fovaug/errors.hpp"

namespace fovaug {

/// One retinotopy measurement: cortical distance r (e.g. mm) to a reference
/// point vs retinal eccentricity e (e.g. deg). Units are free but must be
/// consistent; r must be >= 0 for the radial model.
struct RetinotopyPoint {
  double r = 0.0;
  double e = 0.0;
};

/// Multi-start initialization grid: candidate fovea radii crossed with
/// candidate dimensionless curvatures K/r_fov (each > -1).
struct FitGrid {
  std::vector<double> fovea_radii;
  std::vector<double> curvature_ratios;
};

/// Data-driven default: fovea radii spanning the observed r range plus a
/// beyond-data candidate that reduces the model to a line through the
/// origin, and a curvature-ratio ladder covering strong compression
/// through strong expansion.
FitGrid default_fit_grid(const std::vector<RetinotopyPoint>& points);

struct FitResult {
  double scale = 0.0;         // C
  double curvature = 0.0;     // K
  double fovea_radius = 0.0;  // r_fov
  double scale_ratio = 0.0;      // C / r_fov
  double curvature_ratio = 0.0;  // K / r_fov
  double r_squared = 0.0;
  double sse = 0.0;
  std::vector<double> residuals;  // model(r_i) - e_i
  /// True when every point lands in a single branch of the fitted model,
  /// leaving K (or the quadratic shape) unidentified.
  bool degenerate = false;
};

/// Least-squares fit of the linear-quadratic radial model over C > 0,
/// r_fov > 0, K > -r_fov: coarse grid with closed-form optimal 1/C per
/// candidate, then derivative-free simplex refinement from the best five
/// starts. Deterministic; ties broken lexicographically on (C, K, r_fov).
FitResult fit_radial_model(const std::vector<RetinotopyPoint>& points,
                           const FitGrid& grid);
FitResult fit_radial_model(const std::vector<RetinotopyPoint>& points);

struct ExponentialFit {
  double alpha = 0.0;
  double beta = 0.0;
  double r_squared = 0.0;
  double sse = 0.0;
  std::vector<double> residuals;
};

/// Least squares for e = alpha * exp(beta * r) in the original (not log)
/// domain, alpha > 0 enforced so the curve never reaches e = 0.
ExponentialFit fit_exponential(const std::vector<RetinotopyPoint>& points);

struct Dimensionless {
  double scale_ratio = 0.0;      // C~
  double curvature_ratio = 0.0;  // K~
};

/// (C, K, r_fov) -> (C/r_fov, K/r_fov); exact division.
Dimensionless nondimensionalize(double scale, double curvature,
                                double fovea_radius);

/// 1 - SS_res/SS_tot with SS_tot about the observed mean.
double r_squared(const std::vector<double>& predicted,
                 const std::vector<double>& observed);

/// CSV with header "r,e", one point per row.
std::vector<RetinotopyPoint> load_points_csv(const std::string& path);

struct BootstrapInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Percentile confidence intervals from nonparametric resampling.
struct BootstrapReport {
  BootstrapInterval scale;
  BootstrapInterval curvature;
  BootstrapInterval fovea_radius;
  BootstrapInterval curvature_ratio;
  int resamples = 0;
  double level = 0.95;
  std::uint64_t seed = 0;
};

BootstrapReport bootstrap_radial_ci(const std::vector<RetinotopyPoint>& points,
                                    int resamples, std::uint64_t seed);

}  // namespace fovaug

#endif  // FOVAUG_RETINOTOPY_HPP_
