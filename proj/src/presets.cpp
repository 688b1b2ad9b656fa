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

#include "fovaug/presets.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <utility>

namespace fovaug {

namespace {

constexpr const char* kSimclrNote =
    "color_jitter, grayscale, uniform_blur and hflip probabilities and "
    "strengths follow SimCLR defaults; the source tables do not restate them";
constexpr const char* kFovBlurNote =
    "k_blur, n_belts and e_r are not reported upstream; library defaults "
    "recorded here";
constexpr const char* kTemperatureNote =
    "temperature applies to saliency maps ingested as values in [0, 1]; "
    "upstream temperatures assume a log-density saliency scale";
constexpr const char* kCropTemperatureNote =
    "crop guidance temperature assumed 1.0; upstream reports temperatures "
    "only for the temperature-sweep settings";

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string range_tag(double lo, double hi) {
  return "[" + fmt(lo) + "," + fmt(hi) + "]";
}

StageSpec jitter_stage() {
  StageSpec s;
  s.kind = StageKind::kColorJitter;
  s.probability = 0.8;
  s.jitter_strength = 1.0;
  return s;
}

StageSpec grayscale_stage() {
  StageSpec s;
  s.kind = StageKind::kGrayscale;
  s.probability = 0.2;
  return s;
}

StageSpec uniform_blur_stage() {
  StageSpec s;
  s.kind = StageKind::kUniformBlur;
  s.probability = 0.5;
  s.sigma_lo = 0.1;
  s.sigma_hi = 2.0;
  return s;
}

StageSpec hflip_stage() {
  StageSpec s;
  s.kind = StageKind::kHFlip;
  s.probability = 0.5;
  return s;
}

StageSpec crop_stage(StageKind kind) {
  StageSpec s;
  s.kind = kind;
  s.probability = 1.0;
  return s;
}

StageSpec fovblur_stage(double lo, double hi) {
  StageSpec s;
  s.kind = StageKind::kFovBlur;
  s.probability = 1.0;
  s.fovblur.fov_area_lo = lo;
  s.fovblur.fov_area_hi = hi;
  return s;
}

StageSpec magnify_stage(double r_fov, double curvature, double cover_lo,
                        double cover_hi) {
  StageSpec s;
  s.kind = StageKind::kMagnify;
  s.probability = 1.0;
  s.magnif.fovea_radius = r_fov;
  s.magnif.curvature = curvature;
  s.magnif.cover_lo = cover_lo;
  s.magnif.cover_hi = cover_hi;
  s.magnif.out_size = 96;
  return s;
}

PipelineConfig base_config(const std::string& name) {
  PipelineConfig config;
  config.schema_version = 1;
  config.views_per_image = 2;
  config.output_size = 96;
  config.preset_name = name;
  config.notes.push_back(kSimclrNote);
  return config;
}

void append_tail(PipelineConfig& config, bool with_blur) {
  config.stages.push_back(jitter_stage());
  config.stages.push_back(grayscale_stage());
  if (with_blur) config.stages.push_back(uniform_blur_stage());
  config.stages.push_back(hflip_stage());
}

using Builder = std::function<void(PipelineConfig&)>;

struct Entry {
  std::string name;
  Builder build;
};

std::vector<Entry> registry() {
  std::vector<Entry> entries;
  const auto add = [&entries](std::string name, Builder build) {
    entries.push_back({std::move(name), std::move(build)});
  };

  // Foveation-as-blur rows. The crop column is saliency guided except for
  // the starred baseline; the flat variant keeps the saliency sampler but
  // levels the map. Fixations for the fovblur stage are uniform central:
  // the guided crop consumes the view fixation first (when present), so
  // fovblur always draws a fresh uniform one.
  add("exp1_crop_blur_baseline", [](PipelineConfig& c) {
    c.stages.push_back(crop_stage(StageKind::kRandomResizedCrop));
    append_tail(c, true);
  });
  add("exp1_saliency_crop_flat_blur", [](PipelineConfig& c) {
    c.fixation.mode = SamplerSpec::Mode::kSaliency;
    c.fixation.flat = true;
    c.stages.push_back(crop_stage(StageKind::kSaliencyCrop));
    append_tail(c, true);
  });
  add("exp1_saliency_crop_blur", [](PipelineConfig& c) {
    c.fixation.mode = SamplerSpec::Mode::kSaliency;
    c.fixation.temperature = 1.0;
    c.notes.push_back(kCropTemperatureNote);
    c.stages.push_back(crop_stage(StageKind::kSaliencyCrop));
    append_tail(c, true);
  });
  for (const auto& [lo, hi] : {std::pair{0.01, 0.1}, std::pair{0.01, 0.5},
                               std::pair{0.1, 0.5}}) {
    add("exp1_crop_fovblur_" + range_tag(lo, hi),
        [lo = lo, hi = hi](PipelineConfig& c) {
          c.fixation.mode = SamplerSpec::Mode::kSaliency;
          c.fixation.temperature = 1.0;
          c.spatial_stage_override = true;
          c.notes.push_back(kCropTemperatureNote);
          c.notes.push_back(kFovBlurNote);
          c.stages.push_back(crop_stage(StageKind::kSaliencyCrop));
          c.stages.push_back(fovblur_stage(lo, hi));
          append_tail(c, false);
        });
  }
  for (const auto& [lo, hi] : {std::pair{0.01, 0.1}, std::pair{0.01, 0.5},
                               std::pair{0.1, 0.5}}) {
    add("exp1_fovblur_" + range_tag(lo, hi),
        [lo = lo, hi = hi](PipelineConfig& c) {
          c.notes.push_back(kFovBlurNote);
          c.stages.push_back(fovblur_stage(lo, hi));
          append_tail(c, false);
        });
  }
  add("exp1_blur_only", [](PipelineConfig& c) {
    c.spatial_stage_override = true;
    append_tail(c, true);
  });

  // Magnification rows, r_fov = 30, K = 20.
  add("exp2_crop_blur_baseline", [](PipelineConfig& c) {
    c.stages.push_back(crop_stage(StageKind::kRandomResizedCrop));
    append_tail(c, true);
  });
  for (const auto& [lo, hi] :
       {std::pair{0.01, 0.35}, std::pair{0.05, 0.35}, std::pair{0.05, 0.7},
        std::pair{0.01, 1.5}}) {
    add("exp2_magnif_" + range_tag(lo, hi),
        [lo = lo, hi = hi](PipelineConfig& c) {
          c.stages.push_back(magnify_stage(30.0, 20.0, lo, hi));
          append_tail(c, false);
        });
  }

  // Temperature sweeps for saliency-guided sampling. The grid covers the
  // reported sweet spots [0.3, 4.5] (crops) and [0.3, 1.5] (magnification).
  const double kTemperatures[] = {0.01, 0.1, 0.3, 1.0, 1.5, 4.5};
  for (double t : kTemperatures) {
    add("exp3_saliency_crop_T" + fmt(t), [t](PipelineConfig& c) {
      c.fixation.mode = SamplerSpec::Mode::kSaliency;
      c.fixation.temperature = t;
      c.notes.push_back(kTemperatureNote);
      c.stages.push_back(crop_stage(StageKind::kSaliencyCrop));
      append_tail(c, true);
    });
  }
  for (double t : kTemperatures) {
    add("exp4_saliency_magnif_T" + fmt(t), [t](PipelineConfig& c) {
      c.fixation.mode = SamplerSpec::Mode::kSaliency;
      c.fixation.temperature = t;
      c.notes.push_back(kTemperatureNote);
      c.stages.push_back(magnify_stage(30.0, 20.0, 0.05, 0.35));
      append_tail(c, false);
    });
  }

  // Shape sweep for the magnification transform. Blur disabled; jitter,
  // grayscale and flip stay in place. The (15, -15) pairs are registered
  // but degenerate: K = -r_fov has no valid radial transform.
  const double kFovs[] = {15.0, 30.0, 45.0};
  const double kCurvatures[] = {-15.0, -7.5, 5.0, 20.0, 35.0, 50.0};
  const std::pair<double, double> kCovers[] = {
      {0.01, 0.35}, {0.05, 0.35}, {0.05, 0.7}, {0.01, 1.5}};
  const auto sweep_builder = [](double fov, double curvature, double lo,
                                double hi) {
    return [fov, curvature, lo, hi](PipelineConfig& c) {
      c.stages.push_back(magnify_stage(fov, curvature, lo, hi));
      append_tail(c, false);
    };
  };
  for (double fov : kFovs) {
    for (double curvature : kCurvatures) {
      const std::string stem = "sweep_fov" + fmt(fov) + "_K" + fmt(curvature);
      add(stem, sweep_builder(fov, curvature, 0.05, 0.35));
      for (const auto& [lo, hi] : kCovers) {
        add(stem + "_cover_" + range_tag(lo, hi),
            sweep_builder(fov, curvature, lo, hi));
      }
    }
  }

  return entries;
}

const std::vector<Entry>& registry_singleton() {
  static const std::vector<Entry> entries = registry();
  return entries;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& entry : registry_singleton()) names.push_back(entry.name);
  std::sort(names.begin(), names.end());
  return names;
}

PipelineConfig preset(const std::string& name) {
  for (const auto& entry : registry_singleton()) {
    if (entry.name != name) continue;
    PipelineConfig config = base_config(name);
    entry.build(config);
    validate(config);
    return config;
  }
  throw UnknownPreset("no preset named '" + name + "'");
}

}  // namespace fovaug
