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

#ifndef FOVAUG_ERRORS_HPP_
#define FOVAUG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fovaug {

/// Base class of all fovaug errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// File missing, unreadable, corrupt, or unwritable.
struct IoError : Error {
  using Error::Error;
};

/// Input file decodes but is a format we do not handle (e.g. palette PNG).
struct UnsupportedFormat : Error {
  using Error::Error;
};

/// A numeric or structural argument violates an operation's precondition.
struct InvalidParameter : Error {
  using Error::Error;
};

/// Radial transform with K <= -r_fov: e(r) loses strict monotonicity.
struct DegenerateWarp : Error {
  using Error::Error;
};

/// Too few data points for a fit.
struct InsufficientData : Error {
  using Error::Error;
};

/// Pipeline stage needs a saliency map that was not provided.
struct MissingSaliency : Error {
  using Error::Error;
};

/// Preset name not in the registry.
struct UnknownPreset : Error {
  using Error::Error;
};

/// Config file malformed: bad JSON, unknown keys, wrong schema version.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace fovaug

#endif  // FOVAUG_ERRORS_HPP_
