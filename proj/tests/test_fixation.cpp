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
#include <vector>

#include "fovaug/fixation.hpp"
#include "oracles.hpp"

using namespace fovaug;
using namespace fovaug::testing;

TEST_CASE("constant saliency gives the uniform density") {
  const ScalarField flat(6, 9, 0.42);
  for (const double t : {0.01, 1.0, 250.0}) {
    const GazeDensity density = saliency_to_density(flat, t);
    for (const double p : density.probabilities().data()) {
      CHECK(p == doctest::Approx(1.0 / 54.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("analytic 2x2 softmax values") {
  ScalarField s(2, 2, 0.0);
  s.at(0, 1) = std::log(3.0);

  const GazeDensity t1 = saliency_to_density(s, 1.0);
  CHECK(t1.probabilities().at(0, 0) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(t1.probabilities().at(0, 1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(t1.probabilities().at(1, 0) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(t1.probabilities().at(1, 1) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

  const GazeDensity t05 = saliency_to_density(s, 0.5);
  CHECK(t05.probabilities().at(0, 0) ==
        doctest::Approx(1.0 / 12.0).epsilon(1e-12));
  CHECK(t05.probabilities().at(0, 1) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(t05.probabilities().at(1, 0) ==
        doctest::Approx(1.0 / 12.0).epsilon(1e-12));
  CHECK(t05.probabilities().at(1, 1) ==
        doctest::Approx(1.0 / 12.0).epsilon(1e-12));
}

TEST_CASE("softmax is exactly invariant to additive shifts") {
  // Binary-fraction saliency values keep S + c exact in floating point, so
  // the max-subtracted exponents are bitwise identical.
  ScalarField s(3, 3, 0.0);
  const double values[9] = {0.0,  0.25, 0.5,  0.75, 1.5,
                            2.25, 3.0,  0.125, 1.0};
  for (int i = 0; i < 9; ++i) s.data()[i] = values[i];
  ScalarField shifted = s;
  for (double& v : shifted.data()) v += 0.5;

  const GazeDensity a = saliency_to_density(s, 0.7);
  const GazeDensity b = saliency_to_density(shifted, 0.7);
  for (std::size_t i = 0; i < a.probabilities().data().size(); ++i) {
    CHECK(a.probabilities().data()[i] == b.probabilities().data()[i]);
  }
}

TEST_CASE("temperature extremes flatten or sharpen the density") {
  Philox rng(201, 0);
  ScalarField s = noise_field(24, 24, rng, 0.0, 1.0);
  std::size_t argmax = 0;
  for (std::size_t i = 0; i < s.data().size(); ++i) {
    if (s.data()[i] > s.data()[argmax]) argmax = i;
  }
  // The sharpening limit needs a unique argmax; raw noise can have a
  // near-tie that no finite temperature resolves.
  s.at(argmax / 24, argmax % 24) += 0.25;
  double lo = s.data()[0], hi = s.data()[0];
  for (const double v : s.data()) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double range = hi - lo;

  const GazeDensity hot = saliency_to_density(s, 1e4 * range);
  double tv = 0.0;
  const double uniform = 1.0 / (24.0 * 24.0);
  for (const double p : hot.probabilities().data()) {
    tv += 0.5 * std::abs(p - uniform);
  }
  CHECK(tv < 0.01);

  const GazeDensity cold = saliency_to_density(s, range / 1e4);
  CHECK(cold.probabilities().data()[argmax] >= 0.999);
}

TEST_CASE("point mass lands inside its pixel cell") {
  ScalarField p(8, 8, 0.0);
  p.at(4, 3) = 1.0;
  const GazeDensity density(p, 1.0);
  Philox rng(202, 0);
  for (int i = 0; i < 2000; ++i) {
    const FixationPoint f = density.sample(rng);
    CHECK(f.x >= 3.0);
    CHECK(f.x < 4.0);
    CHECK(f.y >= 4.0);
    CHECK(f.y < 5.0);
  }
}

TEST_CASE("sampling uses exactly category, jitter-x, jitter-y draws") {
  ScalarField p(2, 2, 0.25);
  const GazeDensity density(p, 1.0);
  Philox rng(203, 5);
  Philox replay(203, 5);
  for (int i = 0; i < 100; ++i) {
    const FixationPoint f = density.sample(rng);
    const double u = replay.next_double();
    const int idx = u < 0.25 ? 0 : (u < 0.5 ? 1 : (u < 0.75 ? 2 : 3));
    const int row = idx / 2, col = idx % 2;
    const double jx = replay.next_double();
    const double jy = replay.next_double();
    CHECK(f.x == std::min(col + jx, 1.0));
    CHECK(f.y == std::min(row + jy, 1.0));
  }
}

TEST_CASE("sample frequencies match the density within 4 sigma") {
  ScalarField p(2, 2);
  p.at(0, 0) = 1.0 / 6.0;
  p.at(0, 1) = 0.5;
  p.at(1, 0) = 1.0 / 6.0;
  p.at(1, 1) = 1.0 / 6.0;
  const GazeDensity density(p, 1.0);
  Philox rng(204, 0);
  const int n = 100000;
  long long counts[4] = {};
  for (int i = 0; i < n; ++i) {
    const FixationPoint f = density.sample(rng);
    const int col = static_cast<int>(f.x);
    const int row = static_cast<int>(f.y);
    ++counts[row * 2 + col];
  }
  const double probs[4] = {1.0 / 6.0, 0.5, 1.0 / 6.0, 1.0 / 6.0};
  for (int i = 0; i < 4; ++i) {
    const double sigma = std::sqrt(probs[i] * (1.0 - probs[i]) / n);
    CHECK(std::abs(counts[i] / static_cast<double>(n) - probs[i]) <
          4.0 * sigma);
  }
}

TEST_CASE("identical seeds give identical fixation sequences") {
  Philox a(205, 9), b(205, 9);
  ScalarField p(4, 4, 1.0 / 16.0);
  const GazeDensity density(p, 1.0);
  const auto fa = sample_fixations(density, 50, a);
  const auto fb = sample_fixations(density, 50, b);
  for (int i = 0; i < 50; ++i) {
    CHECK(fa[i].x == fb[i].x);
    CHECK(fa[i].y == fb[i].y);
  }
}

TEST_CASE("uniform central sampler respects margins") {
  Philox rng(206, 0);
  const auto points = uniform_central_sampler(96, 96, 0.25, 5000, rng);
  for (const auto& f : points) {
    CHECK(f.x >= 24.0);
    CHECK(f.x < 72.0);
    CHECK(f.y >= 24.0);
    CHECK(f.y < 72.0);
  }
}

TEST_CASE("uniform central sampler mean concentrates at the center") {
  Philox rng(207, 0);
  const int n = 100000;
  const auto points = uniform_central_sampler(96, 96, 0.25, n, rng);
  double mx = 0.0, my = 0.0;
  for (const auto& f : points) {
    mx += f.x;
    my += f.y;
  }
  mx /= n;
  my /= n;
  // Uniform on [24, 72): mean 48, sd of the mean = 48/sqrt(12 n).
  const double sigma = 48.0 / std::sqrt(12.0 * n);
  CHECK(std::abs(mx - 48.0) < 4.0 * sigma);
  CHECK(std::abs(my - 48.0) < 4.0 * sigma);
}

TEST_CASE("margin zero spans the full frame") {
  Philox rng(208, 0);
  const auto points = uniform_central_sampler(10, 10, 0.0, 20000, rng);
  double max_x = 0.0;
  for (const auto& f : points) {
    CHECK(f.x >= 0.0);
    CHECK(f.x <= 9.0);
    max_x = std::max(max_x, f.x);
  }
  CHECK(max_x > 8.9);
}

TEST_CASE("sampler validation") {
  ScalarField bad(2, 2, 0.3);
  CHECK_THROWS_AS(GazeDensity(bad, 1.0), InvalidParameter);
  ScalarField neg(2, 2, 0.5);
  neg.at(0, 0) = -0.5;
  CHECK_THROWS_AS(GazeDensity(neg, 1.0), InvalidParameter);
  ScalarField ok(2, 2, 0.25);
  CHECK_THROWS_AS(GazeDensity(ok, 0.0), InvalidParameter);
  CHECK_THROWS_AS(saliency_to_density(ok, -1.0), InvalidParameter);
  Philox rng(209, 0);
  CHECK_THROWS_AS(uniform_central_sampler(96, 96, 0.5, 1, rng),
                  InvalidParameter);

  SamplerSpec spec;
  spec.margin_fraction = 0.7;
  CHECK_THROWS_AS(validate(spec), InvalidParameter);
  spec.margin_fraction = 0.25;
  CHECK_NOTHROW(validate(spec));
  spec.mode = SamplerSpec::Mode::kSaliency;
  spec.temperature = 0.0;
  CHECK_THROWS_AS(validate(spec), InvalidParameter);
}
