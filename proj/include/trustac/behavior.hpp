// Copyright 2026 The trustac Authors
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


#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trustac {

enum class ProfileKind {
  kUniform,      // mean +/- spread
  kOscillating,  // sign of the mean flips every `period` events
};

/// How counterparties experience an entity. Samples are a pure function of
/// (seed, event index, stream) and always lie strictly inside (-1, 1).
struct BehaviorProfile {
  std::string name;
  ProfileKind kind = ProfileKind::kUniform;
  double mean = 0.0;
  double spread = 0.0;
  std::uint64_t period = 1;

  double sample(std::uint64_t seed, std::uint64_t event_index, std::uint32_t stream) const;
  std::vector<std::string> violations() const;
};

/// Largest magnitude a sampled rating may take.
inline constexpr double kRatingLimit = 0.999;

/// Uniform double in [0, 1) derived from (seed, event index, stream) only.
double unit_sample(std::uint64_t seed, std::uint64_t event_index, std::uint32_t stream);

}  // namespace trustac
