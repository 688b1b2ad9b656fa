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

#ifndef FOVAUG_PRESETS_HPP_
#define FOVAUG_PRESETS_HPP_

#include <string>
#include <vector>

#include "fovaug/pipeline.hpp"

namespace fovaug {

/// Every registered preset name, in registry order. Includes the degenerate
/// sweep entries; those names are listed but their construction throws.
std::vector<std::string> preset_names();

/// Builds the named pipeline. The registry covers four experiment families:
///
///   exp1_*   foveation-as-blur rows: crop/blur baselines, crop + fovblur
///            with fov-area ranges [0.01,0.1] / [0.01,0.5] / [0.1,0.5],
///            fovblur alone, and uniform blur alone.
///   exp2_*   magnification rows: crop + blur baseline and magnify with
///            cover ranges [0.01,0.35] / [0.05,0.35] / [0.05,0.7] /
///            [0.01,1.5] at r_fov = 30, K = 20.
///   exp3_*   saliency-guided crops over the temperature grid
///            {0.01, 0.1, 0.3, 1, 1.5, 4.5}.
///   exp4_*   saliency-guided magnification over the same grid.
///   sweep_*  magnification shape sweep, fov in {15, 30, 45} x
///            K in {-15, -7.5, 5, 20, 35, 50}, each at the four cover
///            ranges plus a default alias at [0.05, 0.35].
///
/// Throws UnknownPreset for names outside the registry and DegenerateWarp
/// for sweep entries whose (fov, K) violate K > -r_fov.
PipelineConfig preset(const std::string& name);

}  // namespace fovaug

#endif  // FOVAUG_PRESETS_HPP_
