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

#include <cmath>

#include "fovaug/cortmagnif.hpp"
#include "fovaug/imageops.hpp"
#include "fovaug/retinotopy.hpp"
#include "oracles.hpp"

using namespace fovaug;
using namespace fovaug::testing;

namespace {

RadialTransform random_transform(Philox& rng) {
  const double r_fov = rng.uniform(10.0, 50.0);
  const double k = rng.uniform(-0.8 * r_fov, 50.0);
  const double c = rng.uniform(0.5, 3.0);
  return make_radial_transform(c, k, r_fov);
}

}  // namespace

TEST_CASE("cmf is piecewise with the documented values") {
  const RadialTransform t = make_radial_transform(1.8, 20.0, 30.0);
  CHECK(cmf(0.0, t) == 1.8);
  CHECK(cmf(15.0, t) == 1.8);
  CHECK(cmf(29.999, t) == 1.8);
  CHECK(cmf(50.0, t) ==
        doctest::Approx(1.8 * 50.0 / 70.0).epsilon(1e-12));
  CHECK(cmf(30.0, t) == doctest::Approx(1.8).epsilon(1e-12));
}

TEST_CASE("eccentricity is continuous at the fovea edge") {
  Philox rng(501, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const RadialTransform t = random_transform(rng);
    const double at_edge = ecc_of_radius(t.fovea_radius, t);
    CHECK(at_edge ==
          doctest::Approx(t.fovea_radius / t.scale).epsilon(1e-12));
    const double below = ecc_of_radius(std::nextafter(t.fovea_radius, 0.0), t);
    CHECK(std::abs(below - at_edge) < 1e-9 * at_edge);
  }
}

TEST_CASE("finite differences of ecc match the reciprocal cmf") {
  Philox rng(502, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const RadialTransform t = random_transform(rng);
    int tested = 0;
    while (tested < 40) {
      const double r = rng.uniform(0.1, 3.0 * t.fovea_radius);
      const double delta = 1e-5 * (1.0 + r);
      if (std::abs(r - t.fovea_radius) < 2.0 * delta) continue;
      const double fd =
          (ecc_of_radius(r + delta, t) - ecc_of_radius(r - delta, t)) /
          (2.0 * delta);
      const double expected = 1.0 / cmf(r, t);
      CHECK(std::abs(fd - expected) <= 1e-4 * std::abs(expected));
      ++tested;
    }
  }
}

TEST_CASE("cover solver reproduces the worked example") {
  MagnifParams params;
  params.fovea_radius = 30.0;
  params.curvature = 20.0;
  params.out_size = 96;
  const double c = solve_scale_for_cover(0.35, 96, 96, params);

  const double h_edge = 68.0 * 68.0 / 100.0 + 5.0;  // h(48) = 51.24
  CHECK(h_edge == doctest::Approx(51.24).epsilon(1e-12));
  const double e_max = std::sqrt(0.35 * 96.0 * 96.0) / 2.0;
  CHECK(e_max == doctest::Approx(28.39718).epsilon(1e-6));
  CHECK(c == doctest::Approx(h_edge / e_max).epsilon(1e-12));
  CHECK(c == doctest::Approx(1.80440).epsilon(1e-4));
}

TEST_CASE("solved scale varies as the inverse square root of cover") {
  MagnifParams params;
  const double base = solve_scale_for_cover(0.05, 128, 72, params) *
                      std::sqrt(0.05);
  for (const double cover : {0.1, 0.35, 0.7, 1.5}) {
    const double c = solve_scale_for_cover(cover, 128, 72, params);
    CHECK(c * std::sqrt(cover) == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("unit transform with a wide fovea is the identity bit for bit") {
  Philox rng(503, 0);
  for (int trial = 0; trial < 3; ++trial) {
    const ImageBuffer image = noise_image(96, 96, 3, rng);
    const RadialTransform t = make_radial_transform(1.0, 20.0, 100.0);
    const ImageBuffer out =
        magnify_with_transform(image, FixationPoint{47.5, 47.5}, t, 96, 96);
    CHECK(bit_identical(out, image));
  }
}

TEST_CASE("grid center maps to the fixation exactly") {
  const RadialTransform t = make_radial_transform(1.7, 20.0, 30.0);
  const GridMap grid = build_grid(FixationPoint{13.25, 61.0}, t, 5, 5);
  CHECK(grid.src_x[grid.index(2, 2)] == 13.25);
  CHECK(grid.src_y[grid.index(2, 2)] == 61.0);
}

TEST_CASE("warp equals the closed-form resampling oracle") {
  Philox rng(504, 0);
  struct Config {
    double c, k, r_fov, fx, fy;
    int out;
  };
  const Config configs[] = {
      {1.8044, 20.0, 30.0, 47.5, 47.5, 96},
      {1.2, -10.0, 25.0, 33.0, 64.25, 80},
      {2.6, 35.0, 12.0, 10.5, 90.0, 33},
  };
  for (const Config& cfg : configs) {
    const ImageBuffer image = noise_image(101, 97, 3, rng);
    const RadialTransform t =
        make_radial_transform(cfg.c, cfg.k, cfg.r_fov);
    const ImageBuffer out = magnify_with_transform(
        image, FixationPoint{cfg.fx, cfg.fy}, t, cfg.out, cfg.out);

    const double cx = (cfg.out - 1) / 2.0;
    const double cy = (cfg.out - 1) / 2.0;
    for (int i = 0; i < cfg.out; ++i) {
      for (int j = 0; j < cfg.out; ++j) {
        const double u = j - cx;
        const double v = i - cy;
        const double r = std::hypot(u, v);
        double sx = cfg.fx, sy = cfg.fy;
        if (r != 0.0) {
          double ecc;
          if (r < cfg.r_fov) {
            ecc = r / cfg.c;
          } else {
            const double rk = r + cfg.k;
            ecc = (rk * rk / (2.0 * (cfg.r_fov + cfg.k)) +
                   (cfg.r_fov - cfg.k) / 2.0) /
                  cfg.c;
          }
          const double s = ecc / r;
          sx = cfg.fx + s * u;
          sy = cfg.fy + s * v;
        }
        for (int c = 0; c < 3; ++c) {
          REQUIRE(out.at(i, j, c) == bilinear_sample(image, sx, sy, c));
        }
      }
    }
  }
}

TEST_CASE("eccentricity reduces to the dimensionless profile") {
  const auto profile = [](double x, double kappa) {
    if (x < 1.0) return x;
    return (x + kappa) * (x + kappa) / (2.0 * (1.0 + kappa)) +
           (1.0 - kappa) / 2.0;
  };
  Philox rng(505, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const RadialTransform t = random_transform(rng);
    const double r = rng.uniform(0.0, 4.0 * t.fovea_radius);
    const double direct = ecc_of_radius(r, t);
    const double via_profile =
        (t.fovea_radius / t.scale) *
        profile(r / t.fovea_radius, t.curvature / t.fovea_radius);
    CHECK(std::abs(direct - via_profile) <=
          1e-12 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("dimensionless form of the reference parameters") {
  const Dimensionless d = nondimensionalize(1.0, -7.73, 15.2);
  CHECK(std::abs(d.curvature_ratio - (-0.5086)) < 0.001);
  CHECK(d.scale_ratio == 1.0 / 15.2);
}

TEST_CASE("degenerate and invalid transforms are rejected") {
  CHECK_THROWS_AS(make_radial_transform(1.0, -30.0, 30.0), DegenerateWarp);
  CHECK_THROWS_AS(make_radial_transform(1.0, -31.0, 30.0), DegenerateWarp);
  CHECK_THROWS_AS(make_radial_transform(0.0, 0.0, 30.0), InvalidParameter);
  CHECK_THROWS_AS(make_radial_transform(-1.0, 0.0, 30.0), InvalidParameter);
  CHECK_THROWS_AS(make_radial_transform(1.0, 0.0, 0.0), InvalidParameter);
  CHECK_NOTHROW(make_radial_transform(1.0, -29.999, 30.0));

  MagnifParams params;
  params.fovea_radius = 15.0;
  params.curvature = -15.0;
  CHECK_THROWS_AS(validate(params), DegenerateWarp);
  params.curvature = -14.0;
  CHECK_NOTHROW(validate(params));
  params.cover_lo = 0.0;
  CHECK_THROWS_AS(validate(params), InvalidParameter);

  CHECK_THROWS_AS(cmf(-1.0, make_radial_transform(1.0, 20.0, 30.0)),
                  InvalidParameter);
  CHECK_THROWS_AS(ecc_of_radius(-0.5, make_radial_transform(1.0, 20.0, 30.0)),
                  InvalidParameter);
}

TEST_CASE("magnify draws cover from its range and reports the solved scale") {
  Philox rng(506, 0);
  const ImageBuffer image = noise_image(96, 96, 3, rng);
  MagnifParams params;
  MagnifySample sample;
  const ImageBuffer out =
      magnify(image, FixationPoint{40.0, 50.0}, params, rng, &sample);
  CHECK(out.height() == params.out_size);
  CHECK(out.width() == params.out_size);
  CHECK(sample.cover >= params.cover_lo);
  CHECK(sample.cover <= params.cover_hi);
  CHECK(sample.scale ==
        solve_scale_for_cover(sample.cover, 96, 96, params));

  const RadialTransform t = make_radial_transform(
      sample.scale, params.curvature, params.fovea_radius);
  const ImageBuffer replay = magnify_with_transform(
      image, FixationPoint{40.0, 50.0}, t, params.out_size, params.out_size);
  CHECK(bit_identical(out, replay));

  CHECK_THROWS_AS(
      magnify(image, FixationPoint{-3.0, 50.0}, params, rng, nullptr),
      InvalidParameter);
}
