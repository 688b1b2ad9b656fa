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

#ifndef FOVAUG_PNG_IO_HPP_
#define FOVAUG_PNG_IO_HPP_

#include <string>

#include "fovaug/image.hpp"

namespace fovaug {

/// Reads an 8- or 16-bit grayscale or RGB PNG; integer samples are scaled
/// linearly to [0, 1]. An alpha channel is dropped with a warning on stderr;
/// palette images raise UnsupportedFormat. Missing or corrupt files raise
/// IoError.
ImageBuffer load_png(const std::string& path);

/// Writes an 8-bit PNG (gray for 1 channel, RGB for 3). Value v is written
/// as round(v * 255), half away from zero; a load/save round trip moves every
/// element by at most 1/510.
void save_png(const ImageBuffer& image, const std::string& path);

/// Loads a saliency map: .png (8-bit grayscale, S = pixel / 255) or .csv
/// (ScalarField serialization, arbitrary scale).
ScalarField load_saliency(const std::string& path);

}  // namespace fovaug

#endif  // FOVAUG_PNG_IO_HPP_
