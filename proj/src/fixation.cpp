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

#include "fovaug/fixation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace fovaug {

GazeDensity::GazeDensity(ScalarField probabilities, double temperature)
    : probabilities_(std::move(probabilities)), temperature_(temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw InvalidParameter("GazeDensity: temperature must be positive");
  }
  double sum = 0.0;
  for (const double p : probabilities_.data()) {
    if (!std::isfinite(p) || p < 0.0) {
      throw InvalidParameter("GazeDensity: probabilities must be >= 0");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw InvalidParameter("GazeDensity: probabilities must sum to 1");
  }
  cdf_.reserve(probabilities_.data().size());
  double acc = 0.0;
  for (double& p : probabilities_.data()) {
    p /= sum;
    acc += p;
    cdf_.push_back(acc);
  }
  cdf_.back() = 1.0;
}

FixationPoint GazeDensity::sample(Philox& rng) const {
  const double u = rng.next_double();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  std::size_t idx = static_cast<std::size_t>(it - cdf_.begin());
  if (idx >= cdf_.size()) idx = cdf_.size() - 1;
  const int w = probabilities_.width();
  const int row = static_cast<int>(idx) / w;
  const int col = static_cast<int>(idx) % w;
  const double jx = rng.next_double();
  const double jy = rng.next_double();
  FixationPoint p;
  p.x = std::min(col + jx, static_cast<double>(w - 1));
  p.y = std::min(row + jy, static_cast<double>(probabilities_.height() - 1));
  return p;
}

GazeDensity saliency_to_density(const ScalarField& saliency,
                                double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw InvalidParameter("saliency_to_density: temperature must be > 0");
  }
  double max_s = -std::numeric_limits<double>::infinity();
  for (const double s : saliency.data()) {
    if (!std::isfinite(s)) {
      throw InvalidParameter("saliency_to_density: non-finite saliency value");
    }
    max_s = std::max(max_s, s);
  }
  ScalarField probs(saliency.height(), saliency.width());
  double z = 0.0;
  for (std::size_t i = 0; i < probs.data().size(); ++i) {
    const double e = std::exp((saliency.data()[i] - max_s) / temperature);
    probs.data()[i] = e;
    z += e;
  }
  for (double& p : probs.data()) p /= z;
  return GazeDensity(std::move(probs), temperature);
}

std::vector<FixationPoint> sample_fixations(const GazeDensity& density, int n,
                                            Philox& rng) {
  if (n < 1) throw InvalidParameter("sample_fixations: n must be >= 1");
  std::vector<FixationPoint> points;
  points.reserve(n);
  for (int i = 0; i < n; ++i) points.push_back(density.sample(rng));
  return points;
}

std::vector<FixationPoint> uniform_central_sampler(int width, int height,
                                                   double margin_fraction,
                                                   int n, Philox& rng) {
  if (width < 1 || height < 1) {
    throw InvalidParameter("uniform_central_sampler: bad shape");
  }
  if (n < 1) throw InvalidParameter("uniform_central_sampler: n must be >= 1");
  if (!(margin_fraction >= 0.0 && margin_fraction < 0.5)) {
    throw InvalidParameter(
        "uniform_central_sampler: margin_fraction must be in [0, 0.5)");
  }
  std::vector<FixationPoint> points;
  points.reserve(n);
  for (int i = 0; i < n; ++i) {
    FixationPoint p;
    p.x = std::min(rng.uniform(margin_fraction * width,
                               (1.0 - margin_fraction) * width),
                   static_cast<double>(width - 1));
    p.y = std::min(rng.uniform(margin_fraction * height,
                               (1.0 - margin_fraction) * height),
                   static_cast<double>(height - 1));
    points.push_back(p);
  }
  return points;
}

void validate(const SamplerSpec& spec) {
  if (spec.mode == SamplerSpec::Mode::kUniformCentral) {
    if (!(spec.margin_fraction >= 0.0 && spec.margin_fraction < 0.5)) {
      throw InvalidParameter("SamplerSpec: margin_fraction must be in [0, 0.5)");
    }
  } else {
    if (!(spec.temperature > 0.0) || !std::isfinite(spec.temperature)) {
      throw InvalidParameter("SamplerSpec: temperature must be > 0");
    }
  }
}

}  // namespace fovaug
