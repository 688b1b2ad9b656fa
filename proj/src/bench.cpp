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

#include "fovaug/bench.hpp"

#include <sys/resource.h>

#include <chrono>
#include <sstream>

namespace fovaug {

namespace {

long long peak_rss_kib() {
  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) != 0) return 0;
  return usage.ru_maxrss;
}

}  // namespace

std::string ThroughputReport::to_csv() const {
  std::ostringstream out;
  out << "metric,value\n";
  if (views == 0) return out.str();
  out << "views," << views << "\n";
  out << "seconds," << seconds << "\n";
  out << "views_per_second," << views_per_second << "\n";
  out << "peak_rss_kib," << peak_rss_kib << "\n";
  for (int k = 0; k < kStageKindCount; ++k) {
    if (stage_count[k] == 0) continue;
    const char* name = stage_kind_name(static_cast<StageKind>(k));
    out << "stage_" << name << "_mean_ms," << stage_mean_ms[k] << "\n";
    out << "stage_" << name << "_count," << stage_count[k] << "\n";
  }
  return out.str();
}

ThroughputReport run_bench(const std::vector<BenchInput>& inputs,
                           const PipelineConfig& config,
                           double duration_seconds) {
  if (inputs.empty()) throw IoError("run_bench: empty image set");
  validate(config);

  ThroughputReport report;
  if (duration_seconds <= 0.0) return report;

  const auto run_one = [&](const BenchInput& input, StageTimer* timer) {
    const ScalarField* saliency =
        input.has_saliency ? &input.saliency : nullptr;
    return generate_views(input.image, saliency, input.id, config, timer);
  };

  for (const auto& input : inputs) run_one(input, nullptr);

  StageTimer timer;
  const auto start = std::chrono::steady_clock::now();
  const auto deadline =
      start + std::chrono::duration<double>(duration_seconds);
  std::size_t next = 0;
  long long views = 0;
  while (std::chrono::steady_clock::now() < deadline) {
    views += static_cast<long long>(run_one(inputs[next], &timer).size());
    next = (next + 1) % inputs.size();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  report.seconds = elapsed;
  report.views = views;
  report.views_per_second = elapsed > 0.0 ? views / elapsed : 0.0;
  for (int k = 0; k < kStageKindCount; ++k) {
    report.stage_count[k] = timer.count[k];
    if (timer.count[k] > 0) {
      report.stage_mean_ms[k] = timer.total_ms[k] / timer.count[k];
    }
  }
  report.peak_rss_kib = fovaug::peak_rss_kib();
  return report;
}

}  // namespace fovaug
