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

#ifndef FOVAUG_PIPELINE_HPP_
#define FOVAUG_PIPELINE_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fovaug/cortmagnif.hpp"
#include "fovaug/fixation.hpp"
#include "fovaug/fovblur.hpp"
#include "fovaug/image.hpp"
#include "fovaug/imageops.hpp"
#include "fovaug/rng.hpp"

namespace fovaug {

enum class StageKind {
  kFovBlur,
  kMagnify,
  kRandomResizedCrop,
  kSaliencyCrop,
  kHFlip,
  kGrayscale,
  kColorJitter,
  kUniformBlur,
};

inline constexpr int kStageKindCount = 8;

const char* stage_kind_name(StageKind kind);
StageKind stage_kind_from_name(const std::string& name);

/// Spatial stages change the frame geometry; a config must contain exactly
/// one of them unless spatial_stage_override is set.
bool is_spatial(StageKind kind);

/// Stages that center themselves on a fixation point.
bool consumes_fixation(StageKind kind);

struct CropParams {
  double scale_lo = 0.08;
  double scale_hi = 1.0;
  double ratio_lo = 3.0 / 4.0;
  double ratio_hi = 4.0 / 3.0;
};

void validate(const CropParams& params);

struct StageSpec {
  StageKind kind = StageKind::kHFlip;
  double probability = 1.0;
  CropParams crop;               // random_resized_crop, saliency_crop
  FovBlurParams fovblur;         // fovblur
  MagnifParams magnif;           // magnify
  double jitter_strength = 1.0;  // color_jitter
  double sigma_lo = 0.1;         // uniform_blur
  double sigma_hi = 2.0;
};

struct PipelineConfig {
  int schema_version = 1;
  std::uint64_t master_seed = 0;
  int views_per_image = 2;
  int output_size = 96;
  bool spatial_stage_override = false;
  SamplerSpec fixation;
  std::vector<StageSpec> stages;
  std::string preset_name;
  std::vector<std::string> notes;
};

void validate(const PipelineConfig& config);

/// Strict JSON: schema_version is required and unknown keys are errors.
PipelineConfig config_from_json(const std::string& text);
std::string config_to_json(const PipelineConfig& config);
PipelineConfig load_config(const std::string& path);
void save_config(const PipelineConfig& config, const std::string& path);

/// Integer crop window, [x0, x0+width) x [y0, y0+height) inside the image.
struct CropBox {
  int x0 = 0;
  int y0 = 0;
  int width = 0;
  int height = 0;
};

/// Materializes the window and bilinearly resizes it to out_size x out_size.
ImageBuffer crop_and_resize(const ImageBuffer& image, CropBox box,
                            int out_height, int out_width);

/// Area fraction uniform in [scale_lo, scale_hi], aspect log-uniform in
/// [ratio_lo, ratio_hi], up to 10 tries then an aspect-clamped center
/// fallback. Placement maps a unit coordinate t to floor(t * (W - w + 1)):
/// with center == nullptr, t is drawn uniformly (draws t_x then t_y);
/// otherwise t = center.x / W (resp. y / H), which keeps the center's pixel
/// inside the box and makes a uniform center law match the uniform draw
/// exactly. Draw order per try: area, then log-aspect.
ImageBuffer random_resized_crop(const ImageBuffer& image, Philox& rng,
                                const CropParams& params, int out_size,
                                const FixationPoint* center = nullptr,
                                CropBox* out_box = nullptr);

/// Everything sampled while producing one view; replaying it reproduces the
/// view bit-exactly.
struct StageRecord {
  StageKind kind = StageKind::kHFlip;
  bool fired = false;
  /// Set when the stage drew its own uniform-central fixation because an
  /// earlier stage had already consumed the view fixation.
  bool fresh_fixation = false;
  FixationPoint stage_fixation;  // consumers only
  double fov_area = 0.0;         // fovblur
  double cover = 0.0;            // magnify
  double scale = 0.0;            // magnify (solved C)
  CropBox box;                   // crop kinds
  ColorJitterFactors jitter;     // color_jitter
  double sigma = 0.0;            // uniform_blur
};

struct ViewRecord {
  std::string image_id;
  int view_index = 0;
  std::uint64_t master_seed = 0;
  std::uint64_t stream = 0;
  std::string rng_algorithm = Philox::kAlgorithmId;
  bool has_fixation = false;
  FixationPoint fixation;
  std::vector<StageRecord> stages;
};

std::string record_to_json(const ViewRecord& record);
ViewRecord record_from_json(const std::string& text);

/// Wall time accumulated per stage kind, for the benchmark.
struct StageTimer {
  std::array<double, kStageKindCount> total_ms{};
  std::array<long long, kStageKindCount> count{};
};

/// Derivation per view: stream = Philox::view_stream(image_id, view_index),
/// generator = Philox(master_seed, stream). Draw order within a view: the
/// view fixation (when any stage consumes one), then per stage in config
/// order: the firing draw (skipped when probability is 0 or 1), a fresh
/// uniform-central fixation for consumers after the first, then the stage's
/// own parameter draws. Saliency maps that do not match the image size are
/// bilinearly resized before the softmax.
std::vector<std::pair<ImageBuffer, ViewRecord>> generate_views(
    const ImageBuffer& image, const ScalarField* saliency,
    const std::string& image_id, const PipelineConfig& config,
    StageTimer* timer = nullptr);

/// Applies the recorded parameters with no rng; bit-identical to the
/// original view.
ImageBuffer replay_view(const ImageBuffer& image, const PipelineConfig& config,
                        const ViewRecord& record);

}  // namespace fovaug

#endif  // FOVAUG_PIPELINE_HPP_
