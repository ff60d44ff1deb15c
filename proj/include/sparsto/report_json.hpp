// Copyright 2026 The sparsto Authors
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

// JSON views of the result types, as written by the command-line tool.

#include <json.hpp>

#include "sparsto/ansatz.hpp"
#include "sparsto/bounds.hpp"
#include "sparsto/channel.hpp"

namespace sparsto {

nlohmann::ordered_json to_json(const BoundBreakdown& bound);
nlohmann::ordered_json to_json(const ChannelErrorReport& report);
/// Best configuration, its bound and probabilities (sorted term order), and
/// the number of feasible grid points.
nlohmann::ordered_json to_json(const OptimizationReport& report);

}  // namespace sparsto
