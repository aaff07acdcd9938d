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

#include <string>
#include <vector>

#include "json.hpp"
#include "trustac/federation.hpp"
#include "trustac/policy_engine.hpp"
#include "trustac/role_conversion.hpp"
#include "trustac/simulator.hpp"

namespace trustac {

nlohmann::json to_json(const Decision& d);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const PipelineTrace& t);
nlohmann::json to_json(const ProtocolTrace& t);
nlohmann::json to_json(const ConversionResult& r);
nlohmann::json to_json(const PairwiseTrust& p);
nlohmann::json to_json(const DomainTrustView& v);
nlohmann::json to_json(const DomainPairTrust& p);
nlohmann::json to_json(const TraceEvent& ev);

/// One JSON object per line, keys sorted, newline-terminated.
std::string trace_to_jsonl(const std::vector<TraceEvent>& trace);

/// Header `sample,series,domain,subject,value`; values printed with 17
/// significant digits.
std::string trajectories_to_csv(const std::vector<TrajectoryPoint>& points);

}  // namespace trustac
