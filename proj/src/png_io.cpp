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

#include "fovaug/png_io.hpp"

#include <png.h>

#include <csetjmp>
#include <cmath>
#include <cstdio>
#include <memory>
#include <vector>

#include "fovaug/csv.hpp"

namespace fovaug {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

// libpng is plain C, so errors must longjmp back to our frame; the message is
// stashed through the error pointer and rethrown as IoError from there.
void png_error_fn(png_structp png, png_const_charp msg) {
  auto* err = static_cast<std::string*>(png_get_error_ptr(png));
  if (err) *err = msg;
  longjmp(png_jmpbuf(png), 1);
}

void png_warning_fn(png_structp, png_const_charp msg) {
  std::fprintf(stderr, "fovaug: png warning: %s\n", msg);
}

struct PngReader {
  png_structp png = nullptr;
  png_infop info = nullptr;
  std::string errmsg;
  PngReader() {
    png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &errmsg, png_error_fn,
                                 png_warning_fn);
    if (png) info = png_create_info_struct(png);
    if (!png || !info) throw IoError("png: failed to allocate read structs");
  }
  ~PngReader() { png_destroy_read_struct(&png, &info, nullptr); }
};

struct PngWriter {
  png_structp png = nullptr;
  png_infop info = nullptr;
  std::string errmsg;
  PngWriter() {
    png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &errmsg, png_error_fn,
                                  png_warning_fn);
    if (png) info = png_create_info_struct(png);
    if (!png || !info) throw IoError("png: failed to allocate write structs");
  }
  ~PngWriter() { png_destroy_write_struct(&png, &info); }
};

}  // namespace

ImageBuffer load_png(const std::string& path) {
  FilePtr file(std::fopen(path.c_str(), "rb"));
  if (!file) throw IoError("cannot open " + path);

  unsigned char header[8];
  if (std::fread(header, 1, 8, file.get()) != 8 ||
      png_sig_cmp(header, 0, 8) != 0) {
    throw IoError(path + " is not a PNG file");
  }

  PngReader reader;
  if (setjmp(png_jmpbuf(reader.png))) {
    throw IoError(path + ": " + reader.errmsg);
  }
  png_init_io(reader.png, file.get());
  png_set_sig_bytes(reader.png, 8);
  png_read_info(reader.png, reader.info);

  const png_uint_32 width = png_get_image_width(reader.png, reader.info);
  const png_uint_32 height = png_get_image_height(reader.png, reader.info);
  const int bit_depth = png_get_bit_depth(reader.png, reader.info);
  const int color_type = png_get_color_type(reader.png, reader.info);

  if (color_type == PNG_COLOR_TYPE_PALETTE) {
    throw UnsupportedFormat(path + ": palette PNGs are not supported");
  }
  if (color_type & PNG_COLOR_MASK_ALPHA) {
    std::fprintf(stderr, "fovaug: %s: dropping alpha channel\n", path.c_str());
    png_set_strip_alpha(reader.png);
  }
  if (bit_depth < 8) png_set_expand_gray_1_2_4_to_8(reader.png);
  if (bit_depth == 16) png_set_swap(reader.png);  // stored big-endian
  png_set_interlace_handling(reader.png);
  png_read_update_info(reader.png, reader.info);

  const int out_depth = png_get_bit_depth(reader.png, reader.info);
  const int out_channels = png_get_channels(reader.png, reader.info);
  if (out_channels != 1 && out_channels != 3) {
    throw UnsupportedFormat(path + ": expected 1 or 3 channels after decode");
  }

  const std::size_t rowbytes = png_get_rowbytes(reader.png, reader.info);
  std::vector<unsigned char> raw(rowbytes * height);
  std::vector<png_bytep> rows(height);
  for (png_uint_32 y = 0; y < height; ++y) rows[y] = raw.data() + y * rowbytes;
  png_read_image(reader.png, rows.data());
  png_read_end(reader.png, nullptr);

  ImageBuffer image(static_cast<int>(height), static_cast<int>(width),
                    out_channels);
  const std::size_t n = image.data().size();
  if (out_depth == 16) {
    const auto* src = reinterpret_cast<const std::uint16_t*>(raw.data());
    for (std::size_t i = 0; i < n; ++i) {
      image.data()[i] = static_cast<float>(src[i] / 65535.0);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      image.data()[i] = static_cast<float>(raw[i] / 255.0);
    }
  }
  return image;
}

void save_png(const ImageBuffer& image, const std::string& path) {
  if (image.empty()) throw InvalidParameter("save_png: empty image");
  FilePtr file(std::fopen(path.c_str(), "wb"));
  if (!file) throw IoError("cannot open " + path + " for writing");

  PngWriter writer;
  std::vector<unsigned char> row(
      static_cast<std::size_t>(image.width()) * image.channels());
  if (setjmp(png_jmpbuf(writer.png))) {
    throw IoError(path + ": " + writer.errmsg);
  }
  png_init_io(writer.png, file.get());
  const int color_type =
      image.channels() == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB;
  png_set_IHDR(writer.png, writer.info, image.width(), image.height(), 8,
               color_type, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(writer.png, writer.info);

  for (int y = 0; y < image.height(); ++y) {
    const float* src = image.pixel(y, 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      const double v = src[i] < 0.0f ? 0.0 : (src[i] > 1.0f ? 1.0 : src[i]);
      row[i] = static_cast<unsigned char>(std::lround(v * 255.0));
    }
    png_write_row(writer.png, row.data());
  }
  png_write_end(writer.png, nullptr);
}

ScalarField load_saliency(const std::string& path) {
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
    return load_scalar_field_csv(path);
  }
  const ImageBuffer img = load_png(path);
  ScalarField field(img.height(), img.width());
  if (img.channels() == 1) {
    for (std::size_t i = 0; i < field.data().size(); ++i) {
      field.data()[i] = img.data()[i];
    }
  } else {
    // tolerate RGB saliency exports: use the mean of the channels
    for (int y = 0; y < img.height(); ++y) {
      for (int x = 0; x < img.width(); ++x) {
        const float* px = img.pixel(y, x);
        field.at(y, x) = (px[0] + px[1] + px[2]) / 3.0;
      }
    }
  }
  return field;
}

}  // namespace fovaug
