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

#include "fovaug/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace fovaug {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

long parse_dim(const std::string& s, const std::string& path) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size() || v <= 0) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw IoError(path + ": bad dimension value '" + s + "'");
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

ScalarField load_scalar_field_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);

  std::string line;
  if (!std::getline(in, line)) throw IoError(path + ": empty file");
  if (strip_cr(line) != "height,width") {
    throw IoError(path + ": expected 'height,width' header");
  }
  if (!std::getline(in, line)) throw IoError(path + ": missing dimensions");
  const auto dims = split_fields(strip_cr(line));
  if (dims.size() != 2) throw IoError(path + ": malformed dimension row");
  const long height = parse_dim(dims[0], path);
  const long width = parse_dim(dims[1], path);

  ScalarField field(static_cast<int>(height), static_cast<int>(width));
  for (long y = 0; y < height; ++y) {
    if (!std::getline(in, line)) {
      throw IoError(path + ": truncated after " + std::to_string(y) +
                    " data rows");
    }
    const auto values = split_fields(strip_cr(line));
    if (static_cast<long>(values.size()) != width) {
      throw IoError(path + ": row " + std::to_string(y) + " has " +
                    std::to_string(values.size()) + " values, expected " +
                    std::to_string(width));
    }
    for (long x = 0; x < width; ++x) {
      try {
        std::size_t pos = 0;
        field.at(static_cast<int>(y), static_cast<int>(x)) =
            std::stod(values[x], &pos);
        if (pos != values[x].size()) throw std::invalid_argument(values[x]);
      } catch (const std::exception&) {
        throw IoError(path + ": bad value '" + values[x] + "' at row " +
                      std::to_string(y));
      }
    }
  }
  return field;
}

void save_scalar_field_csv(const ScalarField& field, const std::string& path) {
  if (field.empty()) {
    throw InvalidParameter("save_scalar_field_csv: empty field");
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << "height,width\n" << field.height() << ',' << field.width() << '\n';
  for (int y = 0; y < field.height(); ++y) {
    for (int x = 0; x < field.width(); ++x) {
      if (x) out << ',';
      out << format_double(field.at(y, x));
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed for " + path);
}

void save_fixations_csv(const std::vector<FixationRow>& rows,
                        const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << "image_id,x,y,seed\n";
  for (const auto& row : rows) {
    out << csv_escape(row.image_id) << ',' << format_double(row.x) << ','
        << format_double(row.y) << ',' << row.seed << '\n';
  }
  if (!out) throw IoError("write failed for " + path);
}

void save_grid_csv(const GridMap& grid, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << "out_i,out_j,src_x,src_y\n";
  for (int i = 0; i < grid.out_height; ++i) {
    for (int j = 0; j < grid.out_width; ++j) {
      const std::size_t k = grid.index(i, j);
      out << i << ',' << j << ',' << format_double(grid.src_x[k]) << ','
          << format_double(grid.src_y[k]) << '\n';
    }
  }
  if (!out) throw IoError("write failed for " + path);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace fovaug
