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


#include "trustac/behavior.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace trustac {

double unit_sample(std::uint64_t seed, std::uint64_t event_index, std::uint32_t stream) {
  // seed_seq and mt19937_64 are fully specified by the standard, so the
  // stream is identical on every conforming implementation. The real-valued
  // distributions are not, hence the manual 53-bit conversion.
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(event_index),
                    static_cast<std::uint32_t>(event_index >> 32), stream};
  std::mt19937_64 engine(seq);
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

double BehaviorProfile::sample(std::uint64_t seed, std::uint64_t event_index,
                               std::uint32_t stream) const {
  double center = mean;
  if (kind == ProfileKind::kOscillating) {
    const bool flipped = (event_index / std::max<std::uint64_t>(period, 1)) % 2 == 1;
    center = flipped ? -mean : mean;
  }
  const double u = unit_sample(seed, event_index, stream);
  const double v = center + spread * (2.0 * u - 1.0);
  return std::clamp(v, -kRatingLimit, kRatingLimit);
}

std::vector<std::string> BehaviorProfile::violations() const {
  std::vector<std::string> out;
  if (name.empty()) out.push_back("profile name must be non-empty");
  if (!(std::isfinite(mean) && mean > -1.0 && mean < 1.0)) {
    out.push_back("profile " + name + ": mean must lie in (-1, 1)");
  }
  if (!(std::isfinite(spread) && spread >= 0.0 && spread <= 1.0)) {
    out.push_back("profile " + name + ": spread must lie in [0, 1]");
  }
  if (kind == ProfileKind::kOscillating && period == 0) {
    out.push_back("profile " + name + ": period must be positive");
  }
  return out;
}

}  // namespace trustac
