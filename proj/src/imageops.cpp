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

#include "fovaug/imageops.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace fovaug {

namespace {

inline double clampd(double v, double lo, double hi) {
  return v < lo ? lo : (v > hi ? hi : v);
}

inline int clampi(int v, int lo, int hi) {
  return v < lo ? lo : (v > hi ? hi : v);
}

struct BilinearCoeffs {
  int x0, x1, y0, y1;
  double fx, fy;
};

template <typename Raster>
BilinearCoeffs bilinear_coeffs(const Raster& img, double x, double y) {
  const double xc = clampd(x, 0.0, static_cast<double>(img.width() - 1));
  const double yc = clampd(y, 0.0, static_cast<double>(img.height() - 1));
  BilinearCoeffs c;
  c.x0 = static_cast<int>(std::floor(xc));
  c.y0 = static_cast<int>(std::floor(yc));
  c.x1 = std::min(c.x0 + 1, img.width() - 1);
  c.y1 = std::min(c.y0 + 1, img.height() - 1);
  c.fx = xc - c.x0;
  c.fy = yc - c.y0;
  return c;
}

std::vector<double> gaussian_kernel(double sigma) {
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> kernel(2 * radius + 1);
  const double inv = 1.0 / (2.0 * sigma * sigma);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double w = std::exp(-static_cast<double>(i) * i * inv);
    kernel[i + radius] = w;
    sum += w;
  }
  for (double& w : kernel) w /= sum;
  return kernel;
}

void rgb_to_hsv(double r, double g, double b, double* h, double* s, double* v) {
  const double mx = std::max({r, g, b});
  const double mn = std::min({r, g, b});
  const double d = mx - mn;
  *v = mx;
  *s = mx <= 0.0 ? 0.0 : d / mx;
  if (d <= 0.0) {
    *h = 0.0;
    return;
  }
  double hue;
  if (mx == r) {
    hue = (g - b) / d;
    if (hue < 0.0) hue += 6.0;
  } else if (mx == g) {
    hue = (b - r) / d + 2.0;
  } else {
    hue = (r - g) / d + 4.0;
  }
  *h = hue / 6.0;
}

void hsv_to_rgb(double h, double s, double v, double* r, double* g, double* b) {
  h -= std::floor(h);
  const double h6 = h * 6.0;
  const int i = std::min(5, static_cast<int>(std::floor(h6)));
  const double f = h6 - i;
  const double p = v * (1.0 - s);
  const double q = v * (1.0 - s * f);
  const double t = v * (1.0 - s * (1.0 - f));
  switch (i) {
    case 0: *r = v; *g = t; *b = p; break;
    case 1: *r = q; *g = v; *b = p; break;
    case 2: *r = p; *g = v; *b = t; break;
    case 3: *r = p; *g = q; *b = v; break;
    case 4: *r = t; *g = p; *b = v; break;
    default: *r = v; *g = p; *b = q; break;
  }
}

inline double luma(const float* px) {
  return 0.299 * px[0] + 0.587 * px[1] + 0.114 * px[2];
}

double mean_luma(const ImageBuffer& img) {
  double sum = 0.0;
  if (img.channels() == 1) {
    for (const float v : img.data()) sum += v;
    return sum / static_cast<double>(img.data().size());
  }
  const std::size_t n = static_cast<std::size_t>(img.height()) * img.width();
  for (std::size_t i = 0; i < n; ++i) {
    sum += luma(img.data().data() + i * 3);
  }
  return sum / static_cast<double>(n);
}

}  // namespace

float bilinear_sample(const ImageBuffer& image, double x, double y,
                      int channel) {
  const BilinearCoeffs c = bilinear_coeffs(image, x, y);
  const double top = (1.0 - c.fx) * image.at(c.y0, c.x0, channel) +
                     c.fx * image.at(c.y0, c.x1, channel);
  const double bot = (1.0 - c.fx) * image.at(c.y1, c.x0, channel) +
                     c.fx * image.at(c.y1, c.x1, channel);
  return static_cast<float>((1.0 - c.fy) * top + c.fy * bot);
}

double bilinear_sample(const ScalarField& field, double x, double y) {
  const BilinearCoeffs c = bilinear_coeffs(field, x, y);
  const double top = (1.0 - c.fx) * field.at(c.y0, c.x0) +
                     c.fx * field.at(c.y0, c.x1);
  const double bot = (1.0 - c.fx) * field.at(c.y1, c.x0) +
                     c.fx * field.at(c.y1, c.x1);
  return (1.0 - c.fy) * top + c.fy * bot;
}

void bilinear_sample_pixel(const ImageBuffer& image, double x, double y,
                           float* out) {
  const BilinearCoeffs c = bilinear_coeffs(image, x, y);
  const float* p00 = image.pixel(c.y0, c.x0);
  const float* p01 = image.pixel(c.y0, c.x1);
  const float* p10 = image.pixel(c.y1, c.x0);
  const float* p11 = image.pixel(c.y1, c.x1);
  for (int ch = 0; ch < image.channels(); ++ch) {
    const double top = (1.0 - c.fx) * p00[ch] + c.fx * p01[ch];
    const double bot = (1.0 - c.fx) * p10[ch] + c.fx * p11[ch];
    out[ch] = static_cast<float>((1.0 - c.fy) * top + c.fy * bot);
  }
}

ImageBuffer gaussian_blur(const ImageBuffer& image, double sigma) {
  if (std::isnan(sigma) || sigma < 0.0) {
    throw InvalidParameter("gaussian_blur: sigma must be finite and >= 0");
  }
  if (sigma < kMinBlurSigma) return image;

  const std::vector<double> kernel = gaussian_kernel(sigma);
  const int radius = (static_cast<int>(kernel.size()) - 1) / 2;
  const int h = image.height(), w = image.width(), nc = image.channels();

  ImageBuffer tmp(h, w, nc);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int ch = 0; ch < nc; ++ch) {
        double acc = 0.0;
        for (int k = -radius; k <= radius; ++k) {
          acc += kernel[k + radius] * image.at(y, clampi(x + k, 0, w - 1), ch);
        }
        tmp.at(y, x, ch) = static_cast<float>(acc);
      }
    }
  }
  ImageBuffer out(h, w, nc);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int ch = 0; ch < nc; ++ch) {
        double acc = 0.0;
        for (int k = -radius; k <= radius; ++k) {
          acc += kernel[k + radius] * tmp.at(clampi(y + k, 0, h - 1), x, ch);
        }
        out.at(y, x, ch) = static_cast<float>(acc);
      }
    }
  }
  return out;
}

ImageBuffer hflip(const ImageBuffer& image) {
  ImageBuffer out(image.height(), image.width(), image.channels());
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      const float* src = image.pixel(y, image.width() - 1 - x);
      float* dst = out.pixel(y, x);
      for (int ch = 0; ch < image.channels(); ++ch) dst[ch] = src[ch];
    }
  }
  return out;
}

ImageBuffer to_grayscale(const ImageBuffer& image) {
  if (image.channels() == 1) return image;
  ImageBuffer out(image.height(), image.width(), 3);
  const std::size_t n =
      static_cast<std::size_t>(image.height()) * image.width();
  for (std::size_t i = 0; i < n; ++i) {
    const double l = clampd(luma(image.data().data() + i * 3), 0.0, 1.0);
    float* dst = out.data().data() + i * 3;
    dst[0] = dst[1] = dst[2] = static_cast<float>(l);
  }
  return out;
}

ColorJitterFactors ColorJitterFactors::sample(Philox& rng, double strength) {
  if (std::isnan(strength) || strength < 0.0 || strength > 1.0) {
    throw InvalidParameter("color_jitter: strength must be in [0, 1]");
  }
  ColorJitterFactors f;
  const double lo = 1.0 - 0.8 * strength;
  const double hi = 1.0 + 0.8 * strength;
  f.brightness = rng.uniform(lo, hi);
  f.contrast = rng.uniform(lo, hi);
  f.saturation = rng.uniform(lo, hi);
  f.hue_turns = rng.uniform(-0.2 * strength, 0.2 * strength);
  return f;
}

ImageBuffer color_jitter_with(const ImageBuffer& image,
                              const ColorJitterFactors& factors) {
  ImageBuffer out = image;
  const int nc = out.channels();

  if (factors.brightness != 1.0) {
    for (float& v : out.data()) {
      v = static_cast<float>(clampd(factors.brightness * v, 0.0, 1.0));
    }
  }
  if (factors.contrast != 1.0) {
    const double mean = mean_luma(out);
    for (float& v : out.data()) {
      v = static_cast<float>(clampd(mean + factors.contrast * (v - mean), 0.0, 1.0));
    }
  }
  if (nc == 3 && factors.saturation != 1.0) {
    const std::size_t n = static_cast<std::size_t>(out.height()) * out.width();
    for (std::size_t i = 0; i < n; ++i) {
      float* px = out.data().data() + i * 3;
      const double l = luma(px);
      for (int ch = 0; ch < 3; ++ch) {
        px[ch] = static_cast<float>(
            clampd(l + factors.saturation * (px[ch] - l), 0.0, 1.0));
      }
    }
  }
  if (nc == 3 && factors.hue_turns != 0.0) {
    const std::size_t n = static_cast<std::size_t>(out.height()) * out.width();
    for (std::size_t i = 0; i < n; ++i) {
      float* px = out.data().data() + i * 3;
      double h, s, v;
      rgb_to_hsv(px[0], px[1], px[2], &h, &s, &v);
      double r, g, b;
      hsv_to_rgb(h + factors.hue_turns, s, v, &r, &g, &b);
      px[0] = static_cast<float>(clampd(r, 0.0, 1.0));
      px[1] = static_cast<float>(clampd(g, 0.0, 1.0));
      px[2] = static_cast<float>(clampd(b, 0.0, 1.0));
    }
  }
  return out;
}

ImageBuffer color_jitter(const ImageBuffer& image, Philox& rng,
                         double strength) {
  return color_jitter_with(image, ColorJitterFactors::sample(rng, strength));
}

ImageBuffer resize_bilinear(const ImageBuffer& image, int out_height,
                            int out_width) {
  if (out_height < 1 || out_width < 1) {
    throw InvalidParameter("resize_bilinear: output shape must be positive");
  }
  ImageBuffer out(out_height, out_width, image.channels());
  const double sy = static_cast<double>(image.height()) / out_height;
  const double sx = static_cast<double>(image.width()) / out_width;
  for (int y = 0; y < out_height; ++y) {
    const double src_y = (y + 0.5) * sy - 0.5;
    for (int x = 0; x < out_width; ++x) {
      const double src_x = (x + 0.5) * sx - 0.5;
      bilinear_sample_pixel(image, src_x, src_y, out.pixel(y, x));
    }
  }
  return out;
}

ScalarField resize_bilinear(const ScalarField& field, int out_height,
                            int out_width) {
  if (out_height < 1 || out_width < 1) {
    throw InvalidParameter("resize_bilinear: output shape must be positive");
  }
  ScalarField out(out_height, out_width);
  const double sy = static_cast<double>(field.height()) / out_height;
  const double sx = static_cast<double>(field.width()) / out_width;
  for (int y = 0; y < out_height; ++y) {
    const double src_y = (y + 0.5) * sy - 0.5;
    for (int x = 0; x < out_width; ++x) {
      out.at(y, x) = bilinear_sample(field, (x + 0.5) * sx - 0.5, src_y);
    }
  }
  return out;
}

}  // namespace fovaug
