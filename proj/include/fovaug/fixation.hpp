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

#ifndef FOVAUG_FIXATION_HPP_
#define FOVAUG_FIXATION_HPP_

#include <cstdint>
#include <vector>

#include "fovaug/image.hpp"
#include "fovaug/rng.hpp"

namespace fovaug {

/// Continuous pixel coordinate where a view is centered.
/// Invariant: 0 <= x <= W-1, 0 <= y <= H-1 for the frame it was drawn on.
struct FixationPoint {
  double x = 0.0;
  double y = 0.0;
};

/// Normalized gaze probability over the pixel grid, with a precomputed
/// cumulative sum for inverse-CDF sampling.
///
/// Draw order per sample: u_category, then u_jitter_x, then u_jitter_y.
/// The chosen pixel (row, col) is de-quantized to
///   (col + u_jitter_x, row + u_jitter_y)
/// and clamped to [0, W-1] x [0, H-1].
class GazeDensity {
 public:
  /// Validates: entries finite and >= 0, summing to 1 within 1e-9. The
  /// stored probabilities are renormalized by the exact sum so the CDF ends
  /// at 1.
  GazeDensity(ScalarField probabilities, double temperature);

  const ScalarField& probabilities() const { return probabilities_; }
  double temperature() const { return temperature_; }
  int height() const { return probabilities_.height(); }
  int width() const { return probabilities_.width(); }

  FixationPoint sample(Philox& rng) const;

 private:
  ScalarField probabilities_;
  double temperature_;
  std::vector<double> cdf_;
};

/// P[x,y] = exp((S[x,y] - max S)/T) / Z. The max subtraction keeps every
/// exponent argument <= 0, so the softmax never overflows.
GazeDensity saliency_to_density(const ScalarField& saliency,
                                double temperature);

/// n i.i.d. draws from the density. Deterministic given the rng state.
std::vector<FixationPoint> sample_fixations(const GazeDensity& density, int n,
                                            Philox& rng);

/// Points uniform on [m*W, (1-m)*W) x [m*H, (1-m)*H), clamped to pixel
/// bounds. Draw order per point: x then y.
std::vector<FixationPoint> uniform_central_sampler(int width, int height,
                                                   double margin_fraction,
                                                   int n, Philox& rng);

/// How a pipeline picks the center of each view.
struct SamplerSpec {
  enum class Mode { kUniformCentral, kSaliency };

  Mode mode = Mode::kUniformCentral;
  /// Uniform-central mode: fraction of each side excluded on both ends.
  double margin_fraction = 0.25;
  /// Saliency mode: softmax temperature.
  double temperature = 1.0;
  /// Saliency mode: ignore the map and use a constant field (uniform
  /// density), so no saliency input is required.
  bool flat = false;
  /// Used by standalone sampling tools; pipelines use their master seed.
  std::uint64_t seed = 0;
};

void validate(const SamplerSpec& spec);

}  // namespace fovaug

#endif  // FOVAUG_FIXATION_HPP_
