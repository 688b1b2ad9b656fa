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

#ifndef FOVAUG_CSV_HPP_
#define FOVAUG_CSV_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "fovaug/errors.hpp"
#include "fovaug/image.hpp"

namespace fovaug {

// ScalarField text format: a "height,width" header row, one row with the two
// dimensions, then height rows of width comma-separated values (row-major).
// Values are written with enough digits to round-trip doubles.
ScalarField load_scalar_field_csv(const std::string& path);
void save_scalar_field_csv(const ScalarField& field, const std::string& path);

struct FixationRow {
  std::string image_id;
  double x = 0.0;
  double y = 0.0;
  std::uint64_t seed = 0;
};

// Columns: image_id,x,y,seed.
void save_fixations_csv(const std::vector<FixationRow>& rows,
                        const std::string& path);

// Columns: out_i,out_j,src_x,src_y, one row per output pixel in row-major
// order.
void save_grid_csv(const GridMap& grid, const std::string& path);

// RFC 4180 quoting for a single field (used for the JSON column of the
// records file).
std::string csv_escape(const std::string& field);

}  // namespace fovaug

#endif  // FOVAUG_CSV_HPP_
