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

#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fovaug/bench.hpp"
#include "fovaug/cortmagnif.hpp"
#include "fovaug/csv.hpp"
#include "fovaug/errors.hpp"
#include "fovaug/fixation.hpp"
#include "fovaug/pipeline.hpp"
#include "fovaug/png_io.hpp"
#include "fovaug/presets.hpp"
#include "fovaug/retinotopy.hpp"

namespace fs = std::filesystem;
using fovaug::ImageBuffer;
using fovaug::ScalarField;
using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<fs::path> collect_pngs(const std::string& input) {
  std::vector<fs::path> paths;
  const fs::path p(input);
  if (fs::is_directory(p)) {
    for (const auto& entry : fs::directory_iterator(p)) {
      if (entry.is_regular_file() && entry.path().extension() == ".png") {
        paths.push_back(entry.path());
      }
    }
    std::sort(paths.begin(), paths.end());
  } else if (fs::is_regular_file(p)) {
    paths.push_back(p);
  }
  if (paths.empty()) {
    throw fovaug::IoError("no .png inputs under " + input);
  }
  return paths;
}

/// stem.csv preferred over stem.png; empty when neither exists.
std::string find_saliency(const std::string& saliency_arg,
                          const fs::path& image_path) {
  if (saliency_arg.empty()) return "";
  const fs::path s(saliency_arg);
  if (fs::is_regular_file(s)) return s.string();
  if (fs::is_directory(s)) {
    for (const char* ext : {".csv", ".png"}) {
      const fs::path candidate = s / (image_path.stem().string() + ext);
      if (fs::is_regular_file(candidate)) return candidate.string();
    }
    return "";
  }
  throw fovaug::IoError("saliency path does not exist: " + saliency_arg);
}

fovaug::PipelineConfig resolve_config(const std::string& preset_name,
                                      const std::string& config_path) {
  if (preset_name.empty() == config_path.empty()) {
    throw fovaug::ConfigError("pass exactly one of --preset and --config");
  }
  return preset_name.empty() ? fovaug::load_config(config_path)
                             : fovaug::preset(preset_name);
}

ImageBuffer ensure_rgb(const ImageBuffer& image) {
  if (image.channels() == 3) return image;
  ImageBuffer out(image.height(), image.width(), 3);
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      const float v = *image.pixel(y, x);
      float* dst = out.pixel(y, x);
      dst[0] = dst[1] = dst[2] = v;
    }
  }
  return out;
}

/// Views side by side with a 2-pixel white gutter.
ImageBuffer montage_row(const std::vector<ImageBuffer>& views) {
  const int gutter = 2;
  int height = 0, width = 0;
  for (const auto& v : views) {
    height = std::max(height, v.height());
    width += v.width();
  }
  width += gutter * (static_cast<int>(views.size()) - 1);
  ImageBuffer out(height, width, 3);
  std::fill(out.data().begin(), out.data().end(), 1.0f);
  int x_off = 0;
  for (const auto& view : views) {
    const ImageBuffer rgb = ensure_rgb(view);
    for (int y = 0; y < rgb.height(); ++y) {
      const float* src = rgb.pixel(y, 0);
      float* dst = out.pixel(y, x_off);
      std::copy(src, src + static_cast<std::size_t>(rgb.width()) * 3, dst);
    }
    x_off += rgb.width() + gutter;
  }
  return out;
}

// ---------------------------------------------------------------- augment

struct AugmentOpts {
  std::string input, saliency, preset, config, out, records, panel;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int views = 0;
  int threads = 1;
};

int run_augment(const AugmentOpts& opts) {
  fovaug::PipelineConfig config = resolve_config(opts.preset, opts.config);
  if (opts.seed_set) config.master_seed = opts.seed;
  if (opts.views > 0) config.views_per_image = opts.views;
  fovaug::validate(config);

  const std::vector<fs::path> inputs = collect_pngs(opts.input);
  fs::create_directories(opts.out);

  struct PerImage {
    std::string stem;
    std::vector<std::pair<ImageBuffer, fovaug::ViewRecord>> views;
  };
  std::vector<PerImage> results(inputs.size());

  std::atomic<std::size_t> cursor{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  const auto worker = [&] {
    for (std::size_t i; (i = cursor.fetch_add(1)) < inputs.size();) {
      try {
        const ImageBuffer image = fovaug::load_png(inputs[i].string());
        const std::string saliency_path =
            find_saliency(opts.saliency, inputs[i]);
        ScalarField saliency;
        if (!saliency_path.empty()) {
          saliency = fovaug::load_saliency(saliency_path);
        }
        results[i].stem = inputs[i].stem().string();
        results[i].views = fovaug::generate_views(
            image, saliency_path.empty() ? nullptr : &saliency,
            results[i].stem, config, nullptr);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  const int n_threads =
      std::max(1, std::min(opts.threads, static_cast<int>(inputs.size())));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  for (const auto& result : results) {
    for (const auto& [view, record] : result.views) {
      const fs::path out_path =
          fs::path(opts.out) /
          (result.stem + "_view" + std::to_string(record.view_index) + ".png");
      fovaug::save_png(view, out_path.string());
    }
  }

  if (!opts.records.empty()) {
    std::ofstream out(opts.records);
    if (!out) throw fovaug::IoError("cannot open " + opts.records);
    out << "image_id,view_index,stream,record_json\n";
    for (const auto& result : results) {
      for (const auto& [view, record] : result.views) {
        out << fovaug::csv_escape(record.image_id) << ","
            << record.view_index << "," << record.stream << ","
            << fovaug::csv_escape(fovaug::record_to_json(record)) << "\n";
      }
    }
    if (!out) throw fovaug::IoError("write failed for " + opts.records);
  }

  if (!opts.panel.empty()) {
    std::vector<ImageBuffer> strip;
    for (const auto& [view, record] : results.front().views) {
      strip.push_back(view);
      if (strip.size() == 4) break;
    }
    fovaug::save_png(montage_row(strip), opts.panel);
  }

  std::size_t total = 0;
  for (const auto& r : results) total += r.views.size();
  std::cerr << "wrote " << total << " views for " << inputs.size()
            << " images to " << opts.out << "\n";
  return 0;
}

// ------------------------------------------------------- sample-fixations

struct SampleFixOpts {
  std::string saliency, out, image_id;
  double temperature = 1.0;
  int n = 100;
  std::uint64_t seed = 0;
};

int run_sample_fixations(const SampleFixOpts& opts) {
  const ScalarField field = fovaug::load_saliency(opts.saliency);
  const fovaug::GazeDensity density =
      fovaug::saliency_to_density(field, opts.temperature);
  fovaug::Philox rng(opts.seed,
                     fovaug::Philox::hash_string("sample-fixations"));
  const auto points = fovaug::sample_fixations(density, opts.n, rng);
  const std::string id =
      opts.image_id.empty() ? fs::path(opts.saliency).stem().string()
                            : opts.image_id;
  std::vector<fovaug::FixationRow> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    rows.push_back({id, p.x, p.y, opts.seed});
  }
  fovaug::save_fixations_csv(rows, opts.out);
  return 0;
}

// ------------------------------------------------------------- warp-grid

struct WarpGridOpts {
  int width = 96, height = 96, out_size = 96;
  double r_fov = 30.0, curvature = 20.0;
  double cover = 0.35, scale = 0.0;
  bool scale_set = false;
  double fix_x = -1.0, fix_y = -1.0;
  std::string out;
};

int run_warp_grid(const WarpGridOpts& opts) {
  fovaug::MagnifParams params;
  params.fovea_radius = opts.r_fov;
  params.curvature = opts.curvature;
  params.cover_lo = params.cover_hi = opts.cover;
  params.out_size = opts.out_size;
  const double scale =
      opts.scale_set
          ? opts.scale
          : fovaug::solve_scale_for_cover(opts.cover, opts.height, opts.width,
                                          params);
  const auto transform =
      fovaug::make_radial_transform(scale, opts.curvature, opts.r_fov);
  fovaug::FixationPoint fixation{
      opts.fix_x >= 0.0 ? opts.fix_x : (opts.width - 1) / 2.0,
      opts.fix_y >= 0.0 ? opts.fix_y : (opts.height - 1) / 2.0};
  const fovaug::GridMap grid =
      fovaug::build_grid(fixation, transform, opts.out_size, opts.out_size);
  fovaug::save_grid_csv(grid, opts.out);
  std::cerr << "scale C = " << scale << "\n";
  return 0;
}

// -------------------------------------------------------- fit-retinotopy

struct FitOpts {
  std::string points, out;
  int bootstrap = 0;
  std::uint64_t seed = 0;
};

int run_fit_retinotopy(const FitOpts& opts) {
  const auto points = fovaug::load_points_csv(opts.points);
  const fovaug::FitResult radial = fovaug::fit_radial_model(points);
  const fovaug::ExponentialFit expo = fovaug::fit_exponential(points);

  ordered_json report;
  report["n_points"] = points.size();
  ordered_json rj;
  rj["form"] =
      "e(r) = (1/C) * (r if r < r_fov else "
      "(r + K)^2 / (2 (r_fov + K)) + (r_fov - K) / 2)";
  rj["C"] = radial.scale;
  rj["K"] = radial.curvature;
  rj["r_fov"] = radial.fovea_radius;
  rj["K_over_r_fov"] = radial.curvature_ratio;
  rj["C_over_r_fov"] = radial.scale_ratio;
  rj["r_squared"] = radial.r_squared;
  rj["sse"] = radial.sse;
  rj["degenerate"] = radial.degenerate;
  report["radial_model"] = rj;
  ordered_json ej;
  ej["form"] = "e(r) = alpha * exp(beta * r)";
  ej["alpha"] = expo.alpha;
  ej["beta"] = expo.beta;
  ej["r_squared"] = expo.r_squared;
  ej["sse"] = expo.sse;
  report["exponential_model"] = ej;
  if (opts.bootstrap > 0) {
    const fovaug::BootstrapReport ci =
        fovaug::bootstrap_radial_ci(points, opts.bootstrap, opts.seed);
    ordered_json bj;
    bj["method"] = "nonparametric percentile";
    bj["resamples"] = ci.resamples;
    bj["level"] = ci.level;
    bj["seed"] = ci.seed;
    bj["rng"] = fovaug::Philox::kAlgorithmId;
    bj["C"] = {ci.scale.lo, ci.scale.hi};
    bj["K"] = {ci.curvature.lo, ci.curvature.hi};
    bj["r_fov"] = {ci.fovea_radius.lo, ci.fovea_radius.hi};
    bj["K_over_r_fov"] = {ci.curvature_ratio.lo, ci.curvature_ratio.hi};
    report["bootstrap"] = bj;
  }

  std::ofstream out(opts.out);
  if (!out) throw fovaug::IoError("cannot open " + opts.out);
  out << report.dump(2) << "\n";
  if (!out) throw fovaug::IoError("write failed for " + opts.out);
  return 0;
}

// ----------------------------------------------------------------- bench

struct BenchOpts {
  std::string input, saliency, preset, config, out;
  double duration = 5.0;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

int run_bench_cmd(const BenchOpts& opts) {
  fovaug::PipelineConfig config = resolve_config(opts.preset, opts.config);
  if (opts.seed_set) config.master_seed = opts.seed;
  std::vector<fovaug::BenchInput> inputs;
  for (const auto& path : collect_pngs(opts.input)) {
    fovaug::BenchInput input;
    input.id = path.stem().string();
    input.image = fovaug::load_png(path.string());
    const std::string saliency_path = find_saliency(opts.saliency, path);
    if (!saliency_path.empty()) {
      input.saliency = fovaug::load_saliency(saliency_path);
      input.has_saliency = true;
    }
    inputs.push_back(std::move(input));
  }
  const fovaug::ThroughputReport report =
      fovaug::run_bench(inputs, config, opts.duration);
  if (opts.out.empty()) {
    std::cout << report.to_csv();
  } else {
    std::ofstream out(opts.out);
    if (!out) throw fovaug::IoError("cannot open " + opts.out);
    out << report.to_csv();
    if (!out) throw fovaug::IoError("write failed for " + opts.out);
  }
  return 0;
}

// --------------------------------------------------------------- presets

int run_presets(bool list, const std::string& show) {
  if (!show.empty()) {
    std::cout << fovaug::config_to_json(fovaug::preset(show));
    return 0;
  }
  (void)list;
  for (const auto& name : fovaug::preset_names()) {
    std::cout << name << "\n";
  }
  return 0;
}

// ----------------------------------------------------------- sample-image

struct SampleImageOpts {
  std::string kind = "blobs";
  int width = 96, height = 96;
  std::uint64_t seed = 0;
  std::string out, saliency_out;
};

void add_blob(ImageBuffer& image, ScalarField& weight, double cx, double cy,
              double sigma, const float color[3]) {
  const double inv = 1.0 / (2.0 * sigma * sigma);
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      const double d2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
      const float w = static_cast<float>(std::exp(-d2 * inv));
      float* px = image.pixel(y, x);
      for (int c = 0; c < 3; ++c) px[c] += w * color[c];
      weight.at(y, x) += w;
    }
  }
}

int run_sample_image(const SampleImageOpts& opts) {
  if (opts.width < 1 || opts.height < 1) {
    throw fovaug::InvalidParameter("sample-image: bad dimensions");
  }
  fovaug::Philox rng(opts.seed, fovaug::Philox::hash_string("sample-image"));
  ImageBuffer image(opts.height, opts.width, 3);
  ScalarField saliency(opts.height, opts.width, 0.0);
  const double side = std::min(opts.width, opts.height);

  if (opts.kind == "blobs") {
    for (int c = 0; c < 3; ++c) {
      const float base = static_cast<float>(rng.uniform(0.05, 0.25));
      for (int y = 0; y < opts.height; ++y) {
        for (int x = 0; x < opts.width; ++x) image.pixel(y, x)[c] = base;
      }
    }
    for (int b = 0; b < 6; ++b) {
      const double cx = rng.uniform(0.0, opts.width - 1.0);
      const double cy = rng.uniform(0.0, opts.height - 1.0);
      const double sigma = rng.uniform(side / 12.0, side / 5.0);
      float color[3];
      for (float& c : color) {
        c = static_cast<float>(rng.uniform(0.3, 1.0));
      }
      add_blob(image, saliency, cx, cy, sigma, color);
    }
  } else if (opts.kind == "rings") {
    const double cx = rng.uniform(0.3, 0.7) * (opts.width - 1);
    const double cy = rng.uniform(0.3, 0.7) * (opts.height - 1);
    const double wavelength = rng.uniform(side / 16.0, side / 6.0);
    double phase[3];
    for (double& p : phase) p = rng.uniform(0.0, 6.283185307179586);
    for (int y = 0; y < opts.height; ++y) {
      for (int x = 0; x < opts.width; ++x) {
        const double r = std::hypot(x - cx, y - cy);
        float* px = image.pixel(y, x);
        for (int c = 0; c < 3; ++c) {
          px[c] = static_cast<float>(
              0.5 + 0.45 * std::sin(r / wavelength * 6.283185307179586 +
                                    phase[c]));
        }
        saliency.at(y, x) = std::exp(-r * r / (2.0 * side * side / 16.0));
      }
    }
  } else if (opts.kind == "checker") {
    const int cell = std::max(2, static_cast<int>(side) / 8);
    float a[3], b[3];
    for (int c = 0; c < 3; ++c) {
      a[c] = static_cast<float>(rng.uniform(0.0, 0.45));
      b[c] = static_cast<float>(rng.uniform(0.55, 1.0));
    }
    const double cx = rng.uniform(0.0, opts.width - 1.0);
    const double cy = rng.uniform(0.0, opts.height - 1.0);
    for (int y = 0; y < opts.height; ++y) {
      for (int x = 0; x < opts.width; ++x) {
        const bool odd = ((x / cell) + (y / cell)) % 2 != 0;
        float* px = image.pixel(y, x);
        for (int c = 0; c < 3; ++c) px[c] = odd ? a[c] : b[c];
        const double d2 =
            (x - cx) * (x - cx) + (y - cy) * (y - cy);
        saliency.at(y, x) = std::exp(-d2 / (2.0 * side * side / 25.0));
      }
    }
  } else if (opts.kind == "gradient") {
    const double angle = rng.uniform(0.0, 6.283185307179586);
    const double nx = std::cos(angle), ny = std::sin(angle);
    float a[3], b[3];
    for (int c = 0; c < 3; ++c) {
      a[c] = static_cast<float>(rng.uniform(0.0, 1.0));
      b[c] = static_cast<float>(rng.uniform(0.0, 1.0));
    }
    const double cx = rng.uniform(0.2, 0.8) * (opts.width - 1);
    const double cy = rng.uniform(0.2, 0.8) * (opts.height - 1);
    for (int y = 0; y < opts.height; ++y) {
      for (int x = 0; x < opts.width; ++x) {
        double t = (nx * x + ny * y) /
                   (std::abs(nx) * (opts.width - 1) +
                    std::abs(ny) * (opts.height - 1) + 1e-12);
        t = std::clamp(0.5 + t, 0.0, 1.0);
        float* px = image.pixel(y, x);
        for (int c = 0; c < 3; ++c) {
          px[c] = static_cast<float>((1.0 - t) * a[c] + t * b[c]);
        }
        const double d2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
        saliency.at(y, x) = std::exp(-d2 / (2.0 * side * side / 25.0));
      }
    }
  } else {
    throw fovaug::InvalidParameter("sample-image: unknown kind '" +
                                   opts.kind + "'");
  }

  for (float& v : image.data()) v = std::clamp(v, 0.0f, 1.0f);
  fovaug::save_png(image, opts.out);

  if (!opts.saliency_out.empty()) {
    double peak = 0.0;
    for (const double v : saliency.data()) peak = std::max(peak, v);
    if (peak > 0.0) {
      for (double& v : saliency.data()) v /= peak;
    }
    if (fs::path(opts.saliency_out).extension() == ".png") {
      ImageBuffer gray(opts.height, opts.width, 1);
      for (int y = 0; y < opts.height; ++y) {
        for (int x = 0; x < opts.width; ++x) {
          *gray.pixel(y, x) = static_cast<float>(saliency.at(y, x));
        }
      }
      fovaug::save_png(gray, opts.saliency_out);
    } else {
      fovaug::save_scalar_field_csv(saliency, opts.saliency_out);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biologically inspired image augmentations"};
  app.require_subcommand(1);

  AugmentOpts augment;
  auto* cmd_augment =
      app.add_subcommand("augment", "Generate augmented views");
  cmd_augment->add_option("--input", augment.input, "Input PNG or directory")
      ->required();
  cmd_augment->add_option("--saliency", augment.saliency,
                          "Saliency map file or directory");
  auto* opt_preset =
      cmd_augment->add_option("--preset", augment.preset, "Preset name");
  cmd_augment->add_option("--config", augment.config, "Config JSON path")
      ->excludes(opt_preset);
  cmd_augment->add_option("--out", augment.out, "Output directory")
      ->required();
  auto* opt_seed =
      cmd_augment->add_option("--seed", augment.seed, "Master seed override");
  cmd_augment->add_option("--views", augment.views, "Views per image override");
  cmd_augment->add_option("--threads", augment.threads, "Worker threads");
  cmd_augment->add_option("--records", augment.records,
                          "Write per-view records CSV here");
  cmd_augment->add_option("--panel", augment.panel,
                          "Write a 4-view panel PNG for the first image");

  SampleFixOpts sfix;
  auto* cmd_sfix = app.add_subcommand("sample-fixations",
                                      "Draw fixations from a saliency map");
  cmd_sfix->add_option("--saliency", sfix.saliency, "Saliency PNG or CSV")
      ->required();
  cmd_sfix->add_option("--temperature", sfix.temperature, "Softmax temperature");
  cmd_sfix->add_option("--n", sfix.n, "Number of draws");
  cmd_sfix->add_option("--seed", sfix.seed, "Seed");
  cmd_sfix->add_option("--out", sfix.out, "Output CSV")->required();
  cmd_sfix->add_option("--image-id", sfix.image_id, "Image id for the CSV");

  WarpGridOpts wgrid;
  auto* cmd_wgrid =
      app.add_subcommand("warp-grid", "Export a magnification sampling grid");
  cmd_wgrid->add_option("--width", wgrid.width, "Source width");
  cmd_wgrid->add_option("--height", wgrid.height, "Source height");
  cmd_wgrid->add_option("--out-size", wgrid.out_size, "Output grid side");
  cmd_wgrid->add_option("--r-fov", wgrid.r_fov, "Fovea radius");
  cmd_wgrid->add_option("--K", wgrid.curvature, "Curvature K");
  cmd_wgrid->add_option("--cover", wgrid.cover, "Cover ratio");
  auto* opt_scale =
      cmd_wgrid->add_option("--scale", wgrid.scale, "Scale C (overrides cover)");
  cmd_wgrid->add_option("--fix-x", wgrid.fix_x, "Fixation x (default center)");
  cmd_wgrid->add_option("--fix-y", wgrid.fix_y, "Fixation y (default center)");
  cmd_wgrid->add_option("--out", wgrid.out, "Output CSV")->required();

  FitOpts fit;
  auto* cmd_fit =
      app.add_subcommand("fit-retinotopy", "Fit the radial cortical model");
  cmd_fit->add_option("--points", fit.points, "Input CSV with header r,e")
      ->required();
  cmd_fit->add_option("--out", fit.out, "Output JSON report")->required();
  cmd_fit->add_option("--bootstrap", fit.bootstrap,
                      "Bootstrap resamples (0 = off)");
  cmd_fit->add_option("--seed", fit.seed, "Bootstrap seed");

  BenchOpts bench;
  auto* cmd_bench = app.add_subcommand("bench", "Measure pipeline throughput");
  cmd_bench->add_option("--input", bench.input, "Input PNG or directory")
      ->required();
  cmd_bench->add_option("--saliency", bench.saliency,
                        "Saliency file or directory");
  auto* opt_bpreset =
      cmd_bench->add_option("--preset", bench.preset, "Preset name");
  cmd_bench->add_option("--config", bench.config, "Config JSON path")
      ->excludes(opt_bpreset);
  cmd_bench->add_option("--duration", bench.duration, "Seconds to measure");
  auto* opt_bseed = cmd_bench->add_option("--seed", bench.seed, "Seed override");
  cmd_bench->add_option("--out", bench.out, "Output CSV (default stdout)");

  bool presets_list = false;
  std::string presets_show;
  auto* cmd_presets = app.add_subcommand("presets", "List or show presets");
  cmd_presets->add_flag("--list", presets_list, "List preset names");
  cmd_presets->add_option("--show", presets_show, "Print one preset as JSON");

  SampleImageOpts simg;
  auto* cmd_simg =
      app.add_subcommand("sample-image", "Write a procedural test image");
  cmd_simg->add_option("--kind", simg.kind,
                       "blobs | rings | checker | gradient");
  cmd_simg->add_option("--width", simg.width, "Width");
  cmd_simg->add_option("--height", simg.height, "Height");
  cmd_simg->add_option("--seed", simg.seed, "Seed");
  cmd_simg->add_option("--out", simg.out, "Output PNG")->required();
  cmd_simg->add_option("--saliency-out", simg.saliency_out,
                       "Also write the generator's saliency map (.png or .csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    augment.seed_set = opt_seed->count() > 0;
    bench.seed_set = opt_bseed->count() > 0;
    wgrid.scale_set = opt_scale->count() > 0;
    if (cmd_augment->parsed()) return run_augment(augment);
    if (cmd_sfix->parsed()) return run_sample_fixations(sfix);
    if (cmd_wgrid->parsed()) return run_warp_grid(wgrid);
    if (cmd_fit->parsed()) return run_fit_retinotopy(fit);
    if (cmd_bench->parsed()) return run_bench_cmd(bench);
    if (cmd_presets->parsed()) return run_presets(presets_list, presets_show);
    if (cmd_simg->parsed()) return run_sample_image(simg);
  } catch (const fovaug::InvalidParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fovaug::UnknownPreset& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fovaug::DegenerateWarp& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fovaug::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fovaug::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
