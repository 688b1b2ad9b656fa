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

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "fovaug/bench.hpp"
#include "fovaug/pipeline.hpp"
#include "fovaug/presets.hpp"
#include "oracles.hpp"

using namespace fovaug;
using namespace fovaug::testing;

TEST_CASE("config JSON round trips to the same text") {
  const char* names[] = {
      "exp1_crop_blur_baseline",    "exp1_fovblur_[0.01,0.5]",
      "exp1_crop_fovblur_[0.1,0.5]", "exp2_magnif_[0.05,0.35]",
      "exp3_saliency_crop_T0.3",    "sweep_fov30_K20_cover_[0.05,0.7]",
  };
  for (const char* name : names) {
    const std::string text = config_to_json(preset(name));
    const PipelineConfig parsed = config_from_json(text);
    CHECK(config_to_json(parsed) == text);
  }

  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "fovaug_unit";
  fs::create_directories(dir);
  const std::string path = (dir / "config.json").string();
  save_config(preset("exp2_magnif_[0.05,0.35]"), path);
  CHECK(config_to_json(load_config(path)) ==
        config_to_json(preset("exp2_magnif_[0.05,0.35]")));
}

TEST_CASE("config parsing is strict") {
  const std::string text = config_to_json(preset("exp1_crop_blur_baseline"));

  auto mutate = [&text](auto&& edit) {
    nlohmann::json j = nlohmann::json::parse(text);
    edit(j);
    return j.dump();
  };

  CHECK_THROWS_AS(
      config_from_json(mutate([](nlohmann::json& j) { j["typo"] = 1; })),
      ConfigError);
  CHECK_THROWS_AS(config_from_json(mutate(
                      [](nlohmann::json& j) { j["schema_version"] = 2; })),
                  ConfigError);
  CHECK_THROWS_AS(config_from_json(mutate(
                      [](nlohmann::json& j) { j.erase("schema_version"); })),
                  ConfigError);
  CHECK_THROWS_AS(config_from_json(mutate([](nlohmann::json& j) {
                    j["stages"][0]["surprise"] = true;
                  })),
                  ConfigError);
  CHECK_THROWS_AS(config_from_json(mutate([](nlohmann::json& j) {
                    j["stages"][0]["probability"] = 1.5;
                  })),
                  ConfigError);
  CHECK_THROWS_AS(config_from_json("not json"), ConfigError);
}

TEST_CASE("exactly one spatial stage unless overridden") {
  PipelineConfig config;
  config.stages.push_back({});  // hflip only, no spatial stage
  CHECK_THROWS_AS(validate(config), ConfigError);
  config.spatial_stage_override = true;
  CHECK_NOTHROW(validate(config));

  PipelineConfig two;
  StageSpec crop;
  crop.kind = StageKind::kRandomResizedCrop;
  StageSpec mag;
  mag.kind = StageKind::kMagnify;
  two.stages = {crop, mag};
  CHECK_THROWS_AS(validate(two), ConfigError);
  two.spatial_stage_override = true;
  CHECK_NOTHROW(validate(two));
}

TEST_CASE("views regenerate and replay bit-exactly") {
  Philox noise(801, 0);
  const ImageBuffer image = noise_image(128, 112, 3, noise);
  const ScalarField saliency = noise_field(64, 56, noise);

  const char* names[] = {
      "exp1_fovblur_[0.1,0.5]",
      "exp3_saliency_crop_T0.3",
      "exp2_magnif_[0.05,0.35]",
      "exp1_saliency_crop_flat_blur",
  };
  for (const char* name : names) {
    PipelineConfig config = preset(name);
    config.master_seed = 11;
    const auto views = generate_views(image, &saliency, "img0", config);
    REQUIRE(static_cast<int>(views.size()) == config.views_per_image);

    const auto again = generate_views(image, &saliency, "img0", config);
    for (std::size_t v = 0; v < views.size(); ++v) {
      CHECK(views[v].first.height() == config.output_size);
      CHECK(views[v].first.width() == config.output_size);
      CHECK(bit_identical(views[v].first, again[v].first));
      CHECK(record_to_json(views[v].second) ==
            record_to_json(again[v].second));

      const ImageBuffer replayed =
          replay_view(image, config, views[v].second);
      CHECK(bit_identical(views[v].first, replayed));

      const ViewRecord reloaded =
          record_from_json(record_to_json(views[v].second));
      CHECK(bit_identical(views[v].first,
                          replay_view(image, config, reloaded)));
      CHECK(reloaded.stream ==
            Philox::view_stream("img0", static_cast<int>(v)));
    }
  }
}

TEST_CASE("a pipeline with nothing to fire returns the resized input") {
  Philox noise(802, 0);
  const ImageBuffer image = noise_image(96, 96, 3, noise);
  PipelineConfig config;
  config.spatial_stage_override = true;
  StageSpec flip;
  flip.kind = StageKind::kHFlip;
  flip.probability = 0.0;
  config.stages = {flip};
  config.views_per_image = 3;

  const auto views = generate_views(image, nullptr, "id", config);
  for (const auto& [view, record] : views) {
    CHECK(bit_identical(view, image));
    CHECK_FALSE(record.has_fixation);
    REQUIRE(record.stages.size() == 1);
    CHECK_FALSE(record.stages[0].fired);
  }
}

TEST_CASE("later consumers draw a fresh central fixation") {
  Philox noise(803, 0);
  const ImageBuffer image = noise_image(128, 128, 3, noise);
  const ScalarField saliency = noise_field(128, 128, noise);

  PipelineConfig config;
  config.fixation.mode = SamplerSpec::Mode::kSaliency;
  config.fixation.temperature = 1.0;
  config.spatial_stage_override = true;  // crop + fovblur is two spatial stages
  StageSpec crop;
  crop.kind = StageKind::kSaliencyCrop;
  StageSpec blur;
  blur.kind = StageKind::kFovBlur;
  config.stages = {crop, blur};

  const auto views = generate_views(image, &saliency, "id", config);
  for (const auto& [view, record] : views) {
    CHECK(record.has_fixation);
    CHECK(record.fixation.x >= 0.0);
    CHECK(record.fixation.x <= 127.0);
    REQUIRE(record.stages.size() == 2);
    CHECK_FALSE(record.stages[0].fresh_fixation);
    CHECK(record.stages[0].stage_fixation.x == record.fixation.x);
    CHECK(record.stages[0].stage_fixation.y == record.fixation.y);

    // The crop changed the frame, so fovblur gets a central draw on the
    // 96 x 96 intermediate.
    CHECK(record.stages[1].fresh_fixation);
    CHECK(record.stages[1].stage_fixation.x >= 24.0);
    CHECK(record.stages[1].stage_fixation.x < 72.0);
    CHECK(record.stages[1].stage_fixation.y >= 24.0);
    CHECK(record.stages[1].stage_fixation.y < 72.0);
  }
}

TEST_CASE("saliency mode without a map is an error, flat mode is not") {
  Philox noise(804, 0);
  const ImageBuffer image = noise_image(96, 96, 3, noise);
  PipelineConfig config = preset("exp3_saliency_crop_T1");
  CHECK_THROWS_AS(generate_views(image, nullptr, "id", config),
                  MissingSaliency);

  PipelineConfig flat = preset("exp1_saliency_crop_flat_blur");
  CHECK_NOTHROW(generate_views(image, nullptr, "id", flat));
}

TEST_CASE("flat saliency crop placement matches the uniform crop law") {
  Philox noise(805, 0);
  const ImageBuffer image = noise_image(48, 48, 1, noise);
  CropParams params;
  params.scale_lo = params.scale_hi = 0.25;
  params.ratio_lo = params.ratio_hi = 1.0;  // fixed 24 x 24 window

  const int n = 100000;
  std::vector<long long> uniform_x(25, 0), uniform_y(25, 0);
  std::vector<long long> guided_x(25, 0), guided_y(25, 0);

  Philox uniform_rng(806, 0);
  for (int i = 0; i < n; ++i) {
    CropBox box;
    random_resized_crop(image, uniform_rng, params, 24, nullptr, &box);
    REQUIRE(box.width == 24);
    REQUIRE(box.height == 24);
    ++uniform_x[box.x0];
    ++uniform_y[box.y0];
  }

  const GazeDensity flat(ScalarField(48, 48, 1.0 / (48.0 * 48.0)), 1.0);
  Philox center_rng(807, 0);
  Philox crop_rng(808, 0);
  for (int i = 0; i < n; ++i) {
    const FixationPoint center = flat.sample(center_rng);
    CropBox box;
    random_resized_crop(image, crop_rng, params, 24, &center, &box);
    ++guided_x[box.x0];
    ++guided_y[box.y0];
  }

  CHECK(chi_square_two_sample_p(uniform_x, guided_x) > 1e-3);
  CHECK(chi_square_two_sample_p(uniform_y, guided_y) > 1e-3);
}

TEST_CASE("guided crops keep the center pixel inside the box") {
  Philox noise(809, 0);
  const ImageBuffer image = noise_image(64, 80, 3, noise);
  CropParams params;
  Philox rng(810, 0);
  for (int i = 0; i < 200; ++i) {
    const FixationPoint center{rng.uniform(0.0, 79.0), rng.uniform(0.0, 63.0)};
    CropBox box;
    random_resized_crop(image, rng, params, 32, &center, &box);
    CHECK(box.x0 >= 0);
    CHECK(box.y0 >= 0);
    CHECK(box.x0 + box.width <= 80);
    CHECK(box.y0 + box.height <= 64);
    const int cx = static_cast<int>(center.x);
    const int cy = static_cast<int>(center.y);
    CHECK(box.x0 <= cx);
    CHECK(cx < box.x0 + box.width);
    CHECK(box.y0 <= cy);
    CHECK(cy < box.y0 + box.height);
  }
}

TEST_CASE("crop_and_resize validates its window") {
  Philox noise(811, 0);
  const ImageBuffer image = noise_image(32, 32, 3, noise);
  CHECK_THROWS_AS(crop_and_resize(image, CropBox{20, 0, 16, 16}, 16, 16),
                  InvalidParameter);
  CHECK_THROWS_AS(crop_and_resize(image, CropBox{0, 0, 0, 4}, 16, 16),
                  InvalidParameter);
  const ImageBuffer full = crop_and_resize(image, CropBox{0, 0, 32, 32}, 32, 32);
  CHECK(bit_identical(full, image));
}

TEST_CASE("preset registry") {
  const std::vector<std::string> names = preset_names();
  CHECK(names.size() >= 100);
  CHECK(std::is_sorted(names.begin(), names.end()));

  CHECK_THROWS_AS(preset("exp9_nothing"), UnknownPreset);

  std::vector<std::string> degenerate;
  for (const std::string& name : names) {
    try {
      const PipelineConfig config = preset(name);
      CHECK(config.schema_version == 1);
      CHECK(config.views_per_image == 2);
      CHECK(config.output_size == 96);
      CHECK(config.preset_name == name);
    } catch (const DegenerateWarp&) {
      degenerate.push_back(name);
    }
  }
  // K = -r_fov rows are listed but cannot be built.
  for (const std::string& name : degenerate) {
    CHECK(name.find("fov15_K-15") != std::string::npos);
  }
  CHECK(degenerate.size() == 5);

  const PipelineConfig magnif = preset("exp2_magnif_[0.05,0.35]");
  REQUIRE(magnif.stages.size() == 4);
  CHECK(magnif.stages[0].kind == StageKind::kMagnify);
  CHECK(magnif.stages[0].magnif.fovea_radius == 30.0);
  CHECK(magnif.stages[0].magnif.curvature == 20.0);
  CHECK(magnif.stages[0].magnif.cover_lo == 0.05);
  CHECK(magnif.stages[0].magnif.cover_hi == 0.35);
  CHECK(magnif.stages[1].kind == StageKind::kColorJitter);
  CHECK(magnif.stages[1].probability == 0.8);
  CHECK(magnif.stages[2].kind == StageKind::kGrayscale);
  CHECK(magnif.stages[2].probability == 0.2);
  CHECK(magnif.stages[3].kind == StageKind::kHFlip);
  CHECK(magnif.stages[3].probability == 0.5);

  const PipelineConfig blur_only = preset("exp1_blur_only");
  CHECK(blur_only.spatial_stage_override);
  REQUIRE(blur_only.stages.size() == 4);
  CHECK(blur_only.stages[0].kind == StageKind::kColorJitter);
  CHECK(blur_only.stages[1].kind == StageKind::kGrayscale);
  CHECK(blur_only.stages[2].kind == StageKind::kUniformBlur);
  CHECK(blur_only.stages[2].probability == 0.5);
  CHECK(blur_only.stages[2].sigma_lo == 0.1);
  CHECK(blur_only.stages[2].sigma_hi == 2.0);
  CHECK(blur_only.stages[3].kind == StageKind::kHFlip);

  const PipelineConfig baseline = preset("exp1_crop_blur_baseline");
  REQUIRE(baseline.stages.size() == 5);
  CHECK(baseline.stages[0].kind == StageKind::kRandomResizedCrop);
  CHECK(baseline.stages[0].crop.scale_lo == 0.08);
  CHECK(baseline.stages[0].crop.scale_hi == 1.0);
  CHECK(baseline.stages[2].kind == StageKind::kGrayscale);
}

TEST_CASE("stage kind names round trip") {
  for (int i = 0; i < kStageKindCount; ++i) {
    const StageKind kind = static_cast<StageKind>(i);
    CHECK(stage_kind_from_name(stage_kind_name(kind)) == kind);
  }
  CHECK_THROWS_AS(stage_kind_from_name("sharpen"), ConfigError);
}

TEST_CASE("benchmark measures or stays empty") {
  ThroughputReport empty;
  CHECK(empty.to_csv() == "metric,value\n");

  Philox noise(812, 0);
  std::vector<BenchInput> inputs;
  for (int i = 0; i < 2; ++i) {
    BenchInput input;
    input.id = "bench" + std::to_string(i);
    input.image = noise_image(96, 96, 3, noise);
    inputs.push_back(std::move(input));
  }
  PipelineConfig config = preset("exp2_magnif_[0.05,0.35]");

  const ThroughputReport none = run_bench(inputs, config, 0.0);
  CHECK(none.views == 0);

  const ThroughputReport report = run_bench(inputs, config, 0.1);
  CHECK(report.views > 0);
  CHECK(report.views_per_second > 0.0);
  const std::string csv = report.to_csv();
  CHECK(csv.find("views_per_second,") != std::string::npos);
  CHECK(csv.find("stage_magnify_mean_ms,") != std::string::npos);

  CHECK_THROWS_AS(run_bench({}, config, 0.1), IoError);
}
