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

#include "fovaug/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

namespace fovaug {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr const char* kKindNames[kStageKindCount] = {
    "fovblur",   "magnify",      "random_resized_crop", "saliency_crop",
    "hflip",     "grayscale",    "color_jitter",        "uniform_blur"};

void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : allowed) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ConfigError(where + ": unknown key '" + it.key() + "'");
    }
  }
}

template <typename T>
T get_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) {
    throw ConfigError(where + ": missing key '" + key + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(where + ": bad value for '" + key + "': " + e.what());
  }
}

template <typename T>
T get_field_or(const json& obj, const char* key, const std::string& where,
               T fallback) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(where + ": bad value for '" + key + "': " + e.what());
  }
}

std::pair<double, double> get_range(const json& obj, const char* key,
                                    const std::string& where) {
  const auto v = get_field<std::vector<double>>(obj, key, where);
  if (v.size() != 2) {
    throw ConfigError(where + ": '" + key + "' must be a [lo, hi] pair");
  }
  return {v[0], v[1]};
}

std::chrono::steady_clock::time_point now() {
  return std::chrono::steady_clock::now();
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(now() - t0).count();
}

CropBox sample_crop_box(int height, int width, Philox& rng,
                        const CropParams& params, const FixationPoint* center) {
  const double area = static_cast<double>(width) * height;
  int w = 0, h = 0;
  bool placed = false;
  for (int attempt = 0; attempt < 10 && !placed; ++attempt) {
    const double target = rng.uniform(params.scale_lo, params.scale_hi) * area;
    const double aspect = std::exp(
        rng.uniform(std::log(params.ratio_lo), std::log(params.ratio_hi)));
    w = static_cast<int>(std::lround(std::sqrt(target * aspect)));
    h = static_cast<int>(std::lround(std::sqrt(target / aspect)));
    placed = w > 0 && h > 0 && w <= width && h <= height;
  }
  if (!placed) {
    const double in_ratio = static_cast<double>(width) / height;
    if (in_ratio < params.ratio_lo) {
      w = width;
      h = static_cast<int>(std::lround(width / params.ratio_lo));
    } else if (in_ratio > params.ratio_hi) {
      h = height;
      w = static_cast<int>(std::lround(height * params.ratio_hi));
    } else {
      w = width;
      h = height;
    }
    w = std::clamp(w, 1, width);
    h = std::clamp(h, 1, height);
    return CropBox{(width - w) / 2, (height - h) / 2, w, h};
  }
  const double tx = center ? center->x / width : rng.next_double();
  const double ty = center ? center->y / height : rng.next_double();
  const int x0 = std::min(static_cast<int>(tx * (width - w + 1)), width - w);
  const int y0 = std::min(static_cast<int>(ty * (height - h + 1)), height - h);
  return CropBox{x0, y0, w, h};
}

}  // namespace

const char* stage_kind_name(StageKind kind) {
  return kKindNames[static_cast<int>(kind)];
}

StageKind stage_kind_from_name(const std::string& name) {
  for (int i = 0; i < kStageKindCount; ++i) {
    if (name == kKindNames[i]) return static_cast<StageKind>(i);
  }
  throw ConfigError("unknown stage kind '" + name + "'");
}

bool is_spatial(StageKind kind) {
  switch (kind) {
    case StageKind::kFovBlur:
    case StageKind::kMagnify:
    case StageKind::kRandomResizedCrop:
    case StageKind::kSaliencyCrop:
      return true;
    default:
      return false;
  }
}

bool consumes_fixation(StageKind kind) {
  switch (kind) {
    case StageKind::kFovBlur:
    case StageKind::kMagnify:
    case StageKind::kSaliencyCrop:
      return true;
    default:
      return false;
  }
}

void validate(const CropParams& params) {
  if (!(params.scale_lo > 0.0) || !(params.scale_hi <= 1.0) ||
      !(params.scale_lo <= params.scale_hi)) {
    throw InvalidParameter("CropParams: scale_range must satisfy 0 < lo <= hi <= 1");
  }
  if (!(params.ratio_lo > 0.0) || !(params.ratio_lo <= params.ratio_hi) ||
      !std::isfinite(params.ratio_hi)) {
    throw InvalidParameter("CropParams: ratio_range must be positive");
  }
}

void validate(const PipelineConfig& config) {
  if (config.schema_version != 1) {
    throw ConfigError("PipelineConfig: unsupported schema_version " +
                      std::to_string(config.schema_version));
  }
  if (config.views_per_image < 1) {
    throw ConfigError("PipelineConfig: views_per_image must be >= 1");
  }
  if (config.output_size < 1) {
    throw ConfigError("PipelineConfig: output_size must be >= 1");
  }
  validate(config.fixation);
  int spatial = 0;
  for (const auto& stage : config.stages) {
    if (!(stage.probability >= 0.0 && stage.probability <= 1.0)) {
      throw ConfigError("PipelineConfig: stage probability must be in [0, 1]");
    }
    switch (stage.kind) {
      case StageKind::kFovBlur:
        validate(stage.fovblur);
        break;
      case StageKind::kMagnify:
        validate(stage.magnif);
        break;
      case StageKind::kRandomResizedCrop:
      case StageKind::kSaliencyCrop:
        validate(stage.crop);
        break;
      case StageKind::kColorJitter:
        if (!(stage.jitter_strength >= 0.0 && stage.jitter_strength <= 1.0)) {
          throw ConfigError("PipelineConfig: color_jitter strength must be in [0, 1]");
        }
        break;
      case StageKind::kUniformBlur:
        if (!(stage.sigma_lo >= 0.0) || !(stage.sigma_lo <= stage.sigma_hi) ||
            !std::isfinite(stage.sigma_hi)) {
          throw ConfigError("PipelineConfig: uniform_blur sigma_range invalid");
        }
        break;
      default:
        break;
    }
    if (is_spatial(stage.kind)) ++spatial;
  }
  if (!config.spatial_stage_override && spatial != 1) {
    throw ConfigError(
        "PipelineConfig: expected exactly one spatial stage, got " +
        std::to_string(spatial) +
        " (set spatial_stage_override to allow this)");
  }
}

PipelineConfig config_from_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: JSON parse failure: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config: root must be an object");
  require_keys(root,
               {"schema_version", "master_seed", "views_per_image",
                "output_size", "spatial_stage_override", "fixation", "stages",
                "preset_name", "notes"},
               "config");

  PipelineConfig config;
  config.schema_version = get_field<int>(root, "schema_version", "config");
  config.master_seed =
      get_field_or<std::uint64_t>(root, "master_seed", "config", 0);
  config.views_per_image =
      get_field_or<int>(root, "views_per_image", "config", 2);
  config.output_size = get_field_or<int>(root, "output_size", "config", 96);
  config.spatial_stage_override =
      get_field_or<bool>(root, "spatial_stage_override", "config", false);
  config.preset_name =
      get_field_or<std::string>(root, "preset_name", "config", "");
  config.notes = get_field_or<std::vector<std::string>>(root, "notes",
                                                        "config", {});

  if (root.contains("fixation")) {
    const json& fx = root.at("fixation");
    if (!fx.is_object()) throw ConfigError("config.fixation: must be an object");
    require_keys(fx, {"mode", "margin_fraction", "temperature", "flat", "seed"},
                 "config.fixation");
    const auto mode = get_field<std::string>(fx, "mode", "config.fixation");
    if (mode == "uniform_central") {
      config.fixation.mode = SamplerSpec::Mode::kUniformCentral;
    } else if (mode == "saliency") {
      config.fixation.mode = SamplerSpec::Mode::kSaliency;
    } else {
      throw ConfigError("config.fixation: unknown mode '" + mode + "'");
    }
    config.fixation.margin_fraction = get_field_or<double>(
        fx, "margin_fraction", "config.fixation", 0.25);
    config.fixation.temperature =
        get_field_or<double>(fx, "temperature", "config.fixation", 1.0);
    config.fixation.flat =
        get_field_or<bool>(fx, "flat", "config.fixation", false);
    config.fixation.seed =
        get_field_or<std::uint64_t>(fx, "seed", "config.fixation", 0);
  }

  if (!root.contains("stages") || !root.at("stages").is_array()) {
    throw ConfigError("config: 'stages' must be an array");
  }
  int index = 0;
  for (const json& st : root.at("stages")) {
    const std::string where = "config.stages[" + std::to_string(index++) + "]";
    if (!st.is_object()) throw ConfigError(where + ": must be an object");
    StageSpec spec;
    spec.kind = stage_kind_from_name(get_field<std::string>(st, "kind", where));
    spec.probability = get_field_or<double>(st, "probability", where, 1.0);
    switch (spec.kind) {
      case StageKind::kRandomResizedCrop:
      case StageKind::kSaliencyCrop: {
        require_keys(st, {"kind", "probability", "scale_range", "ratio_range"},
                     where);
        if (st.contains("scale_range")) {
          std::tie(spec.crop.scale_lo, spec.crop.scale_hi) =
              get_range(st, "scale_range", where);
        }
        if (st.contains("ratio_range")) {
          std::tie(spec.crop.ratio_lo, spec.crop.ratio_hi) =
              get_range(st, "ratio_range", where);
        }
        break;
      }
      case StageKind::kFovBlur: {
        require_keys(st, {"kind", "probability", "fov_area_range", "k_blur",
                          "n_belts", "e_r"},
                     where);
        std::tie(spec.fovblur.fov_area_lo, spec.fovblur.fov_area_hi) =
            get_range(st, "fov_area_range", where);
        spec.fovblur.k_blur = get_field_or<double>(st, "k_blur", where, 0.06);
        spec.fovblur.n_belts = get_field_or<int>(st, "n_belts", where, 5);
        spec.fovblur.e_r = get_field_or<double>(st, "e_r", where, 0.0);
        break;
      }
      case StageKind::kMagnify: {
        require_keys(st, {"kind", "probability", "r_fov", "K", "cover_range",
                          "out_size"},
                     where);
        spec.magnif.fovea_radius = get_field<double>(st, "r_fov", where);
        spec.magnif.curvature = get_field<double>(st, "K", where);
        std::tie(spec.magnif.cover_lo, spec.magnif.cover_hi) =
            get_range(st, "cover_range", where);
        spec.magnif.out_size = get_field_or<int>(st, "out_size", where, 96);
        break;
      }
      case StageKind::kColorJitter: {
        require_keys(st, {"kind", "probability", "strength"}, where);
        spec.jitter_strength = get_field_or<double>(st, "strength", where, 1.0);
        break;
      }
      case StageKind::kUniformBlur: {
        require_keys(st, {"kind", "probability", "sigma_range"}, where);
        if (st.contains("sigma_range")) {
          std::tie(spec.sigma_lo, spec.sigma_hi) =
              get_range(st, "sigma_range", where);
        }
        break;
      }
      default:
        require_keys(st, {"kind", "probability"}, where);
        break;
    }
    config.stages.push_back(spec);
  }

  validate(config);
  return config;
}

std::string config_to_json(const PipelineConfig& config) {
  ordered_json root;
  root["schema_version"] = config.schema_version;
  root["master_seed"] = config.master_seed;
  root["views_per_image"] = config.views_per_image;
  root["output_size"] = config.output_size;
  root["spatial_stage_override"] = config.spatial_stage_override;
  ordered_json fx;
  fx["mode"] = config.fixation.mode == SamplerSpec::Mode::kSaliency
                   ? "saliency"
                   : "uniform_central";
  fx["margin_fraction"] = config.fixation.margin_fraction;
  fx["temperature"] = config.fixation.temperature;
  fx["flat"] = config.fixation.flat;
  fx["seed"] = config.fixation.seed;
  root["fixation"] = fx;
  root["stages"] = ordered_json::array();
  for (const auto& spec : config.stages) {
    ordered_json st;
    st["kind"] = stage_kind_name(spec.kind);
    st["probability"] = spec.probability;
    switch (spec.kind) {
      case StageKind::kRandomResizedCrop:
      case StageKind::kSaliencyCrop:
        st["scale_range"] = {spec.crop.scale_lo, spec.crop.scale_hi};
        st["ratio_range"] = {spec.crop.ratio_lo, spec.crop.ratio_hi};
        break;
      case StageKind::kFovBlur:
        st["fov_area_range"] = {spec.fovblur.fov_area_lo,
                                spec.fovblur.fov_area_hi};
        st["k_blur"] = spec.fovblur.k_blur;
        st["n_belts"] = spec.fovblur.n_belts;
        st["e_r"] = spec.fovblur.e_r;
        break;
      case StageKind::kMagnify:
        st["r_fov"] = spec.magnif.fovea_radius;
        st["K"] = spec.magnif.curvature;
        st["cover_range"] = {spec.magnif.cover_lo, spec.magnif.cover_hi};
        st["out_size"] = spec.magnif.out_size;
        break;
      case StageKind::kColorJitter:
        st["strength"] = spec.jitter_strength;
        break;
      case StageKind::kUniformBlur:
        st["sigma_range"] = {spec.sigma_lo, spec.sigma_hi};
        break;
      default:
        break;
    }
    root["stages"].push_back(st);
  }
  root["preset_name"] = config.preset_name;
  root["notes"] = config.notes;
  return root.dump(2) + "\n";
}

PipelineConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return config_from_json(buffer.str());
}

void save_config(const PipelineConfig& config, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << config_to_json(config);
  if (!out) throw IoError("write failed for " + path);
}

ImageBuffer crop_and_resize(const ImageBuffer& image, CropBox box,
                            int out_height, int out_width) {
  if (box.width < 1 || box.height < 1 || box.x0 < 0 || box.y0 < 0 ||
      box.x0 + box.width > image.width() ||
      box.y0 + box.height > image.height()) {
    throw InvalidParameter("crop_and_resize: box outside image");
  }
  ImageBuffer window(box.height, box.width, image.channels());
  for (int y = 0; y < box.height; ++y) {
    const float* src = image.pixel(box.y0 + y, box.x0);
    float* dst = window.pixel(y, 0);
    std::copy(src, src + static_cast<std::size_t>(box.width) * image.channels(),
              dst);
  }
  return resize_bilinear(window, out_height, out_width);
}

ImageBuffer random_resized_crop(const ImageBuffer& image, Philox& rng,
                                const CropParams& params, int out_size,
                                const FixationPoint* center,
                                CropBox* out_box) {
  validate(params);
  if (image.empty()) throw InvalidParameter("random_resized_crop: empty image");
  if (out_size < 1) {
    throw InvalidParameter("random_resized_crop: out_size must be >= 1");
  }
  const CropBox box =
      sample_crop_box(image.height(), image.width(), rng, params, center);
  if (out_box) *out_box = box;
  return crop_and_resize(image, box, out_size, out_size);
}

std::vector<std::pair<ImageBuffer, ViewRecord>> generate_views(
    const ImageBuffer& image, const ScalarField* saliency,
    const std::string& image_id, const PipelineConfig& config,
    StageTimer* timer) {
  validate(config);
  if (image.empty()) throw InvalidParameter("generate_views: empty image");

  bool needs_fixation = false;
  for (const auto& stage : config.stages) {
    needs_fixation = needs_fixation || consumes_fixation(stage.kind);
  }
  const bool saliency_mode =
      config.fixation.mode == SamplerSpec::Mode::kSaliency;
  if (needs_fixation && saliency_mode && !config.fixation.flat &&
      saliency == nullptr) {
    throw MissingSaliency("generate_views: '" + image_id +
                          "' needs a saliency map");
  }

  std::optional<GazeDensity> density;
  if (needs_fixation && saliency_mode) {
    if (config.fixation.flat) {
      density.emplace(saliency_to_density(
          ScalarField(image.height(), image.width(), 0.0),
          config.fixation.temperature));
    } else if (saliency->height() != image.height() ||
               saliency->width() != image.width()) {
      density.emplace(saliency_to_density(
          resize_bilinear(*saliency, image.height(), image.width()),
          config.fixation.temperature));
    } else {
      density.emplace(
          saliency_to_density(*saliency, config.fixation.temperature));
    }
  }

  std::vector<std::pair<ImageBuffer, ViewRecord>> views;
  views.reserve(config.views_per_image);
  for (int v = 0; v < config.views_per_image; ++v) {
    const std::uint64_t stream = Philox::view_stream(image_id, v);
    Philox rng(config.master_seed, stream);

    ViewRecord record;
    record.image_id = image_id;
    record.view_index = v;
    record.master_seed = config.master_seed;
    record.stream = stream;

    FixationPoint view_fixation;
    if (needs_fixation) {
      if (density) {
        view_fixation = density->sample(rng);
      } else {
        view_fixation = uniform_central_sampler(
            image.width(), image.height(), config.fixation.margin_fraction, 1,
            rng)[0];
      }
      record.has_fixation = true;
      record.fixation = view_fixation;
    }

    ImageBuffer current = image;
    bool fixation_available = record.has_fixation;
    bool frame_is_original = true;
    for (const auto& spec : config.stages) {
      StageRecord sr;
      sr.kind = spec.kind;
      if (spec.probability >= 1.0) {
        sr.fired = true;
      } else if (spec.probability <= 0.0) {
        sr.fired = false;
      } else {
        sr.fired = rng.next_double() < spec.probability;
      }
      if (sr.fired) {
        if (consumes_fixation(spec.kind)) {
          if (fixation_available && frame_is_original) {
            sr.stage_fixation = view_fixation;
            fixation_available = false;
          } else {
            sr.fresh_fixation = true;
            sr.stage_fixation = uniform_central_sampler(
                current.width(), current.height(), 0.25, 1, rng)[0];
          }
        }
        const auto t0 = now();
        switch (spec.kind) {
          case StageKind::kRandomResizedCrop:
            current = random_resized_crop(current, rng, spec.crop,
                                          config.output_size, nullptr, &sr.box);
            frame_is_original = false;
            break;
          case StageKind::kSaliencyCrop:
            current = random_resized_crop(current, rng, spec.crop,
                                          config.output_size,
                                          &sr.stage_fixation, &sr.box);
            frame_is_original = false;
            break;
          case StageKind::kFovBlur:
            current = foveate_blur(current, sr.stage_fixation, spec.fovblur,
                                   rng, &sr.fov_area);
            break;
          case StageKind::kMagnify: {
            MagnifySample sample;
            current =
                magnify(current, sr.stage_fixation, spec.magnif, rng, &sample);
            sr.cover = sample.cover;
            sr.scale = sample.scale;
            frame_is_original = false;
            break;
          }
          case StageKind::kHFlip:
            current = hflip(current);
            frame_is_original = false;
            break;
          case StageKind::kGrayscale:
            current = to_grayscale(current);
            break;
          case StageKind::kColorJitter:
            sr.jitter = ColorJitterFactors::sample(rng, spec.jitter_strength);
            current = color_jitter_with(current, sr.jitter);
            break;
          case StageKind::kUniformBlur:
            sr.sigma = rng.uniform(spec.sigma_lo, spec.sigma_hi);
            current = gaussian_blur(current, sr.sigma);
            break;
        }
        if (timer) {
          timer->total_ms[static_cast<int>(spec.kind)] += ms_since(t0);
          ++timer->count[static_cast<int>(spec.kind)];
        }
      }
      record.stages.push_back(sr);
    }

    if (current.height() != config.output_size ||
        current.width() != config.output_size) {
      current = resize_bilinear(current, config.output_size,
                                config.output_size);
    }
    views.emplace_back(std::move(current), std::move(record));
  }
  return views;
}

ImageBuffer replay_view(const ImageBuffer& image, const PipelineConfig& config,
                        const ViewRecord& record) {
  validate(config);
  if (record.stages.size() != config.stages.size()) {
    throw ConfigError("replay_view: record does not match the config");
  }
  ImageBuffer current = image;
  for (std::size_t i = 0; i < config.stages.size(); ++i) {
    const StageSpec& spec = config.stages[i];
    const StageRecord& sr = record.stages[i];
    if (sr.kind != spec.kind) {
      throw ConfigError("replay_view: stage kind mismatch at index " +
                        std::to_string(i));
    }
    if (!sr.fired) continue;
    switch (spec.kind) {
      case StageKind::kRandomResizedCrop:
      case StageKind::kSaliencyCrop:
        current = crop_and_resize(current, sr.box, config.output_size,
                                  config.output_size);
        break;
      case StageKind::kFovBlur:
        current = foveate_blur_with(current, sr.stage_fixation, sr.fov_area,
                                    spec.fovblur);
        break;
      case StageKind::kMagnify: {
        const RadialTransform transform = make_radial_transform(
            sr.scale, spec.magnif.curvature, spec.magnif.fovea_radius);
        current = magnify_with_transform(current, sr.stage_fixation, transform,
                                         spec.magnif.out_size,
                                         spec.magnif.out_size);
        break;
      }
      case StageKind::kHFlip:
        current = hflip(current);
        break;
      case StageKind::kGrayscale:
        current = to_grayscale(current);
        break;
      case StageKind::kColorJitter:
        current = color_jitter_with(current, sr.jitter);
        break;
      case StageKind::kUniformBlur:
        current = gaussian_blur(current, sr.sigma);
        break;
    }
  }
  if (current.height() != config.output_size ||
      current.width() != config.output_size) {
    current = resize_bilinear(current, config.output_size, config.output_size);
  }
  return current;
}

std::string record_to_json(const ViewRecord& record) {
  ordered_json root;
  root["image_id"] = record.image_id;
  root["view_index"] = record.view_index;
  root["master_seed"] = record.master_seed;
  root["stream"] = record.stream;
  root["rng"] = record.rng_algorithm;
  if (record.has_fixation) {
    root["fixation"] = {record.fixation.x, record.fixation.y};
  }
  root["stages"] = ordered_json::array();
  for (const auto& sr : record.stages) {
    ordered_json st;
    st["kind"] = stage_kind_name(sr.kind);
    st["fired"] = sr.fired;
    if (sr.fired) {
      if (consumes_fixation(sr.kind)) {
        st["fixation"] = {sr.stage_fixation.x, sr.stage_fixation.y};
        st["fresh_fixation"] = sr.fresh_fixation;
      }
      switch (sr.kind) {
        case StageKind::kRandomResizedCrop:
        case StageKind::kSaliencyCrop:
          st["box"] = {sr.box.x0, sr.box.y0, sr.box.width, sr.box.height};
          break;
        case StageKind::kFovBlur:
          st["fov_area"] = sr.fov_area;
          break;
        case StageKind::kMagnify:
          st["cover"] = sr.cover;
          st["scale"] = sr.scale;
          break;
        case StageKind::kColorJitter:
          st["jitter"] = {sr.jitter.brightness, sr.jitter.contrast,
                          sr.jitter.saturation, sr.jitter.hue_turns};
          break;
        case StageKind::kUniformBlur:
          st["sigma"] = sr.sigma;
          break;
        default:
          break;
      }
    }
    root["stages"].push_back(st);
  }
  return root.dump();
}

ViewRecord record_from_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("record: JSON parse failure: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("record: root must be an object");
  require_keys(root,
               {"image_id", "view_index", "master_seed", "stream", "rng",
                "fixation", "stages"},
               "record");
  ViewRecord record;
  record.image_id = get_field<std::string>(root, "image_id", "record");
  record.view_index = get_field<int>(root, "view_index", "record");
  record.master_seed = get_field<std::uint64_t>(root, "master_seed", "record");
  record.stream = get_field<std::uint64_t>(root, "stream", "record");
  record.rng_algorithm = get_field<std::string>(root, "rng", "record");
  if (root.contains("fixation")) {
    const auto fx = get_field<std::vector<double>>(root, "fixation", "record");
    if (fx.size() != 2) throw ConfigError("record: fixation must be [x, y]");
    record.has_fixation = true;
    record.fixation = {fx[0], fx[1]};
  }
  if (!root.contains("stages") || !root.at("stages").is_array()) {
    throw ConfigError("record: 'stages' must be an array");
  }
  for (const json& st : root.at("stages")) {
    const std::string where = "record.stages";
    if (!st.is_object()) throw ConfigError(where + ": must be objects");
    StageRecord sr;
    sr.kind = stage_kind_from_name(get_field<std::string>(st, "kind", where));
    sr.fired = get_field<bool>(st, "fired", where);
    if (st.contains("fixation")) {
      const auto fx = get_field<std::vector<double>>(st, "fixation", where);
      if (fx.size() != 2) throw ConfigError(where + ": fixation must be [x, y]");
      sr.stage_fixation = {fx[0], fx[1]};
      sr.fresh_fixation = get_field_or<bool>(st, "fresh_fixation", where, false);
    }
    if (st.contains("box")) {
      const auto box = get_field<std::vector<int>>(st, "box", where);
      if (box.size() != 4) throw ConfigError(where + ": box must have 4 entries");
      sr.box = {box[0], box[1], box[2], box[3]};
    }
    sr.fov_area = get_field_or<double>(st, "fov_area", where, 0.0);
    sr.cover = get_field_or<double>(st, "cover", where, 0.0);
    sr.scale = get_field_or<double>(st, "scale", where, 0.0);
    sr.sigma = get_field_or<double>(st, "sigma", where, 0.0);
    if (st.contains("jitter")) {
      const auto j = get_field<std::vector<double>>(st, "jitter", where);
      if (j.size() != 4) throw ConfigError(where + ": jitter must have 4 entries");
      sr.jitter.brightness = j[0];
      sr.jitter.contrast = j[1];
      sr.jitter.saturation = j[2];
      sr.jitter.hue_turns = j[3];
    }
    record.stages.push_back(sr);
  }
  return record;
}

}  // namespace fovaug
