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

#ifndef FOVAUG_BENCH_HPP_
#define FOVAUG_BENCH_HPP_

#include <string>
#include <vector>

#include "fovaug/pipeline.hpp"

namespace fovaug {

/// One benchmark image, optionally with its saliency map.
struct BenchInput {
  std::string id;
  ImageBuffer image;
  ScalarField saliency;
  bool has_saliency = false;
};

struct ThroughputReport {
  double seconds = 0.0;
  long long views = 0;
  double views_per_second = 0.0;
  double stage_mean_ms[kStageKindCount] = {};
  long long stage_count[kStageKindCount] = {};
  long long peak_rss_kib = 0;

  /// metric,value rows. An unmeasured report (duration 0) is header only.
  std::string to_csv() const;
};

/// Runs the pipeline round-robin over the inputs for roughly
/// duration_seconds, after one untimed warm-up pass. Per-stage means cover
/// fired applications only. duration_seconds <= 0 measures nothing.
ThroughputReport run_bench(const std::vector<BenchInput>& inputs,
                           const PipelineConfig& config,
                           double duration_seconds);

}  // namespace fovaug

#endif  // FOVAUG_BENCH_HPP_
