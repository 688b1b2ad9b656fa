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

#include "fovaug/retinotopy.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>
#include <gsl/gsl_vector.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <tuple>

#include "fovaug/cortmagnif.hpp"
#include "fovaug/rng.hpp"

namespace fovaug {

namespace {

void disable_gsl_abort() {
  static const bool done = [] {
    gsl_set_error_handler_off();
    return true;
  }();
  (void)done;
}

double model_ecc(double r, double scale, double curvature,
                 double fovea_radius) {
  return ecc_of_radius(r, RadialTransform{scale, curvature, fovea_radius});
}

double radial_sse(const std::vector<RetinotopyPoint>& pts, double scale,
                  double curvature, double fovea_radius) {
  double sse = 0.0;
  for (const auto& p : pts) {
    const double d = model_ecc(p.r, scale, curvature, fovea_radius) - p.e;
    sse += d * d;
  }
  return sse;
}

struct RadialParams {
  double scale, curvature, fovea_radius;
};

// Unconstrained reparameterization keeping C > 0, r_fov > 0, K > -r_fov:
// x = (log r_fov, log(K + r_fov), log C).
RadialParams radial_from_log(const gsl_vector* x) {
  const double fovea_radius = std::exp(gsl_vector_get(x, 0));
  const double shifted = std::exp(gsl_vector_get(x, 1));
  const double scale = std::exp(gsl_vector_get(x, 2));
  return {scale, shifted - fovea_radius, fovea_radius};
}

struct RadialObjective {
  const std::vector<RetinotopyPoint>* points;
};

double radial_objective(const gsl_vector* x, void* data) {
  const auto* obj = static_cast<const RadialObjective*>(data);
  const RadialParams p = radial_from_log(x);
  if (!std::isfinite(p.scale) || !std::isfinite(p.fovea_radius) ||
      !std::isfinite(p.curvature)) {
    return std::numeric_limits<double>::max();
  }
  return radial_sse(*obj->points, p.scale, p.curvature, p.fovea_radius);
}

struct ExpObjective {
  const std::vector<RetinotopyPoint>* points;
};

double exp_sse(const std::vector<RetinotopyPoint>& pts, double alpha,
               double beta) {
  double sse = 0.0;
  for (const auto& p : pts) {
    const double d = alpha * std::exp(beta * p.r) - p.e;
    sse += d * d;
  }
  return std::isfinite(sse) ? sse : std::numeric_limits<double>::max();
}

double exp_objective(const gsl_vector* x, void* data) {
  const auto* obj = static_cast<const ExpObjective*>(data);
  const double alpha = std::exp(gsl_vector_get(x, 0));
  const double beta = gsl_vector_get(x, 1);
  if (!std::isfinite(alpha)) return std::numeric_limits<double>::max();
  return exp_sse(*obj->points, alpha, beta);
}

// Nelder-Mead to convergence with one polish restart from the found
// minimum. Writes the final point back into start.
double nm_minimize(gsl_multimin_function* fn, std::vector<double>& start,
                   double step, int max_iter) {
  disable_gsl_abort();
  const std::size_t dim = start.size();
  gsl_vector* x = gsl_vector_alloc(dim);
  gsl_vector* steps = gsl_vector_alloc(dim);
  gsl_multimin_fminimizer* s = gsl_multimin_fminimizer_alloc(
      gsl_multimin_fminimizer_nmsimplex2, dim);

  double best = std::numeric_limits<double>::max();
  for (int round = 0; round < 2; ++round) {
    for (std::size_t i = 0; i < dim; ++i) gsl_vector_set(x, i, start[i]);
    gsl_vector_set_all(steps, round == 0 ? step : step * 0.1);
    if (gsl_multimin_fminimizer_set(s, fn, x, steps) != GSL_SUCCESS) break;
    for (int iter = 0; iter < max_iter; ++iter) {
      if (gsl_multimin_fminimizer_iterate(s) != GSL_SUCCESS) break;
      if (gsl_multimin_fminimizer_size(s) < 1e-12) break;
    }
    if (s->fval < best) {
      best = s->fval;
      for (std::size_t i = 0; i < dim; ++i) {
        start[i] = gsl_vector_get(s->x, i);
      }
    }
  }
  gsl_multimin_fminimizer_free(s);
  gsl_vector_free(steps);
  gsl_vector_free(x);
  return best;
}

void check_points(const std::vector<RetinotopyPoint>& points,
                  std::size_t minimum) {
  if (points.size() < minimum) {
    throw InsufficientData("retinotopy fit: need at least " +
                           std::to_string(minimum) + " points, got " +
                           std::to_string(points.size()));
  }
  for (const auto& p : points) {
    if (!std::isfinite(p.r) || !std::isfinite(p.e)) {
      throw InvalidParameter("retinotopy fit: non-finite data point");
    }
    if (p.r < 0.0 || p.e < 0.0) {
      throw InvalidParameter("retinotopy fit: r and e must be >= 0");
    }
  }
}

double safe_r_squared(const std::vector<double>& predicted,
                      const std::vector<double>& observed) {
  double mean = 0.0;
  for (const double o : observed) mean += o;
  mean /= static_cast<double>(observed.size());
  double ss_tot = 0.0;
  for (const double o : observed) ss_tot += (o - mean) * (o - mean);
  if (ss_tot == 0.0) return std::numeric_limits<double>::quiet_NaN();
  double ss_res = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double d = predicted[i] - observed[i];
    ss_res += d * d;
  }
  return 1.0 - ss_res / ss_tot;
}

struct Start {
  double sse;
  double fovea_radius;
  double curvature;
  double scale;
};

FitResult fit_radial_impl(const std::vector<RetinotopyPoint>& points,
                          const FitGrid& grid, int top_starts, int nm_iters) {
  check_points(points, 4);
  if (grid.fovea_radii.empty() || grid.curvature_ratios.empty()) {
    throw InvalidParameter("fit_radial_model: empty initialization grid");
  }

  std::vector<Start> starts;
  for (const double r_fov : grid.fovea_radii) {
    if (!(r_fov > 0.0)) continue;
    for (const double k_tilde : grid.curvature_ratios) {
      if (!(k_tilde > -1.0)) continue;
      const double curvature = k_tilde * r_fov;
      double he = 0.0, hh = 0.0;
      for (const auto& p : points) {
        const double h = model_ecc(p.r, 1.0, curvature, r_fov);
        he += h * p.e;
        hh += h * h;
      }
      if (!(hh > 0.0) || !(he > 0.0)) continue;
      const double inv_scale = he / hh;
      const double scale = 1.0 / inv_scale;
      starts.push_back(
          {radial_sse(points, scale, curvature, r_fov), r_fov, curvature, scale});
    }
  }
  if (starts.empty()) {
    throw InvalidParameter("fit_radial_model: no feasible grid start");
  }
  std::sort(starts.begin(), starts.end(), [](const Start& a, const Start& b) {
    return std::tie(a.sse, a.fovea_radius, a.curvature) <
           std::tie(b.sse, b.fovea_radius, b.curvature);
  });
  if (static_cast<int>(starts.size()) > top_starts) starts.resize(top_starts);

  RadialObjective data{&points};
  gsl_multimin_function fn;
  fn.n = 3;
  fn.f = radial_objective;
  fn.params = &data;

  double best_sse = std::numeric_limits<double>::max();
  RadialParams best{starts[0].scale, starts[0].curvature,
                    starts[0].fovea_radius};
  for (const Start& st : starts) {
    std::vector<double> x = {std::log(st.fovea_radius),
                             std::log(st.curvature + st.fovea_radius),
                             std::log(st.scale)};
    const double sse = nm_minimize(&fn, x, 0.2, nm_iters);
    gsl_vector_view view = gsl_vector_view_array(x.data(), 3);
    const RadialParams p = radial_from_log(&view.vector);
    const auto cand = std::tie(sse, p.scale, p.curvature, p.fovea_radius);
    const auto cur =
        std::tie(best_sse, best.scale, best.curvature, best.fovea_radius);
    if (cand < cur) {
      best_sse = sse;
      best = p;
    }
    // The refined candidate must never regress past its own grid start.
    if (st.sse < best_sse) {
      best_sse = st.sse;
      best = {st.scale, st.curvature, st.fovea_radius};
    }
  }

  FitResult result;
  result.scale = best.scale;
  result.curvature = best.curvature;
  result.fovea_radius = best.fovea_radius;
  result.scale_ratio = best.scale / best.fovea_radius;
  result.curvature_ratio = best.curvature / best.fovea_radius;
  result.sse = best_sse;
  std::vector<double> predicted, observed;
  predicted.reserve(points.size());
  observed.reserve(points.size());
  for (const auto& p : points) {
    predicted.push_back(
        model_ecc(p.r, best.scale, best.curvature, best.fovea_radius));
    observed.push_back(p.e);
    result.residuals.push_back(predicted.back() - p.e);
  }
  result.r_squared = safe_r_squared(predicted, observed);

  bool any_below = false, any_above = false;
  for (const auto& p : points) {
    (p.r < best.fovea_radius ? any_below : any_above) = true;
  }
  result.degenerate = !(any_below && any_above);
  return result;
}

}  // namespace

FitGrid default_fit_grid(const std::vector<RetinotopyPoint>& points) {
  check_points(points, 4);
  double r_max = 0.0;
  for (const auto& p : points) r_max = std::max(r_max, p.r);
  if (r_max == 0.0) {
    throw InvalidParameter("default_fit_grid: all r are zero");
  }
  FitGrid grid;
  for (int i = 1; i <= 20; ++i) {
    grid.fovea_radii.push_back(r_max * 0.06 * i);
  }
  // Beyond-data candidate: the whole dataset falls in the linear branch, so
  // the model nests a straight line through the origin.
  grid.fovea_radii.push_back(2.0 * r_max);
  grid.curvature_ratios = {-0.95, -0.8, -0.65, -0.509, -0.35, -0.2, 0.0,
                           0.25,  0.5,  0.75,  1.0,    1.5,   2.0,  3.0};
  return grid;
}

FitResult fit_radial_model(const std::vector<RetinotopyPoint>& points,
                           const FitGrid& grid) {
  return fit_radial_impl(points, grid, 5, 2000);
}

FitResult fit_radial_model(const std::vector<RetinotopyPoint>& points) {
  return fit_radial_model(points, default_fit_grid(points));
}

ExponentialFit fit_exponential(const std::vector<RetinotopyPoint>& points) {
  check_points(points, 3);
  double r_min = points[0].r, r_max = points[0].r;
  for (const auto& p : points) {
    if (!(p.e > 0.0)) {
      throw InvalidParameter("fit_exponential: all e must be > 0");
    }
    r_min = std::min(r_min, p.r);
    r_max = std::max(r_max, p.r);
  }

  // Log-domain regression seeds beta; original-domain least squares decides.
  const double n = static_cast<double>(points.size());
  double sr = 0.0, sl = 0.0, srr = 0.0, srl = 0.0;
  for (const auto& p : points) {
    const double l = std::log(p.e);
    sr += p.r;
    sl += l;
    srr += p.r * p.r;
    srl += p.r * l;
  }
  const double denom = n * srr - sr * sr;
  double beta0 = denom != 0.0 ? (n * srl - sr * sl) / denom : 0.0;
  if (!std::isfinite(beta0) || beta0 == 0.0) {
    beta0 = r_max > r_min ? 1.0 / (r_max - r_min) : 0.1;
  }

  struct ExpStart {
    double sse, beta, alpha;
  };
  std::vector<ExpStart> starts;
  for (const double scale_factor : {0.5, 0.8, 1.0, 1.2, 1.5, -1.0}) {
    const double beta = beta0 * scale_factor;
    double ex = 0.0, xx = 0.0;
    for (const auto& p : points) {
      const double x = std::exp(beta * p.r);
      ex += p.e * x;
      xx += x * x;
    }
    if (!(xx > 0.0) || !std::isfinite(xx) || !(ex > 0.0)) continue;
    const double alpha = ex / xx;
    starts.push_back({exp_sse(points, alpha, beta), beta, alpha});
  }
  if (starts.empty()) {
    throw InvalidParameter("fit_exponential: no feasible start");
  }
  std::sort(starts.begin(), starts.end(),
            [](const ExpStart& a, const ExpStart& b) {
              return std::tie(a.sse, a.beta) < std::tie(b.sse, b.beta);
            });
  if (starts.size() > 3) starts.resize(3);

  ExpObjective data{&points};
  gsl_multimin_function fn;
  fn.n = 2;
  fn.f = exp_objective;
  fn.params = &data;

  double best_sse = std::numeric_limits<double>::max();
  double best_alpha = starts[0].alpha, best_beta = starts[0].beta;
  for (const ExpStart& st : starts) {
    std::vector<double> x = {std::log(st.alpha), st.beta};
    const double sse = nm_minimize(&fn, x, 0.2, 2000);
    const double alpha = std::exp(x[0]);
    if (std::tie(sse, alpha, x[1]) < std::tie(best_sse, best_alpha, best_beta)) {
      best_sse = sse;
      best_alpha = alpha;
      best_beta = x[1];
    }
    if (st.sse < best_sse) {
      best_sse = st.sse;
      best_alpha = st.alpha;
      best_beta = st.beta;
    }
  }

  ExponentialFit fit;
  fit.alpha = best_alpha;
  fit.beta = best_beta;
  fit.sse = best_sse;
  std::vector<double> predicted, observed;
  for (const auto& p : points) {
    predicted.push_back(best_alpha * std::exp(best_beta * p.r));
    observed.push_back(p.e);
    fit.residuals.push_back(predicted.back() - p.e);
  }
  fit.r_squared = safe_r_squared(predicted, observed);
  return fit;
}

Dimensionless nondimensionalize(double scale, double curvature,
                                double fovea_radius) {
  if (!(fovea_radius > 0.0) || !std::isfinite(fovea_radius)) {
    throw InvalidParameter("nondimensionalize: r_fov must be > 0");
  }
  return Dimensionless{scale / fovea_radius, curvature / fovea_radius};
}

double r_squared(const std::vector<double>& predicted,
                 const std::vector<double>& observed) {
  if (predicted.size() != observed.size() || observed.size() < 2) {
    throw InvalidParameter("r_squared: need equal lengths >= 2");
  }
  const double value = safe_r_squared(predicted, observed);
  if (std::isnan(value)) {
    throw InvalidParameter("r_squared: observed values are all equal");
  }
  return value;
}

std::vector<RetinotopyPoint> load_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw IoError(path + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "r,e") throw IoError(path + ": expected 'r,e' header");
  std::vector<RetinotopyPoint> points;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string a, b;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b)) {
      throw IoError(path + ": malformed row " + std::to_string(lineno));
    }
    try {
      points.push_back({std::stod(a), std::stod(b)});
    } catch (const std::exception&) {
      throw IoError(path + ": bad number at row " + std::to_string(lineno));
    }
  }
  return points;
}

BootstrapReport bootstrap_radial_ci(const std::vector<RetinotopyPoint>& points,
                                    int resamples, std::uint64_t seed) {
  check_points(points, 4);
  if (resamples < 2) {
    throw InvalidParameter("bootstrap_radial_ci: need >= 2 resamples");
  }
  const FitResult full = fit_radial_model(points);

  // Narrow grid around the full-data optimum keeps each refit cheap.
  FitGrid grid;
  for (const double f : {0.6, 0.8, 1.0, 1.2, 1.5}) {
    grid.fovea_radii.push_back(full.fovea_radius * f);
  }
  for (const double d : {-0.3, -0.15, 0.0, 0.15, 0.3}) {
    const double ratio = full.curvature_ratio + d;
    if (ratio > -0.95) grid.curvature_ratios.push_back(ratio);
  }

  Philox rng(seed, Philox::hash_string("bootstrap"));
  const auto count = static_cast<std::uint32_t>(points.size());
  std::vector<double> scales, curvatures, radii, ratios;
  std::vector<RetinotopyPoint> resample(points.size());
  for (int b = 0; b < resamples; ++b) {
    for (auto& p : resample) p = points[rng.uniform_index(count)];
    try {
      const FitResult fit = fit_radial_impl(resample, grid, 2, 600);
      scales.push_back(fit.scale);
      curvatures.push_back(fit.curvature);
      radii.push_back(fit.fovea_radius);
      ratios.push_back(fit.curvature_ratio);
    } catch (const Error&) {
      // Degenerate resamples (e.g. one repeated point) carry no information.
    }
  }
  if (scales.size() < 2) {
    throw InsufficientData("bootstrap_radial_ci: too few successful refits");
  }

  const auto interval = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const auto quantile = [&v](double q) {
      const double h = q * static_cast<double>(v.size() - 1);
      const std::size_t lo = static_cast<std::size_t>(h);
      const std::size_t hi = std::min(lo + 1, v.size() - 1);
      return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
    };
    return BootstrapInterval{quantile(0.025), quantile(0.975)};
  };

  BootstrapReport report;
  report.scale = interval(scales);
  report.curvature = interval(curvatures);
  report.fovea_radius = interval(radii);
  report.curvature_ratio = interval(ratios);
  report.resamples = resamples;
  report.seed = seed;
  return report;
}

}  // namespace fovaug
