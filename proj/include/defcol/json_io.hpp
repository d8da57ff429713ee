// Copyright 2026 The defcol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON documents for colouring results.
//
//   success: {"t": int, "s": int, "r": float, "parts": [[ids]...], "trace_len": int}
//   stuck:   {"stuck": true, "remaining_vertices": [ids], "hint": "..."}

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "defcol/engine.hpp"

namespace defcol {

using ordered_json = nlohmann::ordered_json;

inline ordered_json partition_to_json(const Colored& result) {
  ordered_json j;
  j["t"] = result.params.t;
  j["s"] = result.params.s;
  j["r"] = result.params.r;
  j["parts"] = result.partition.parts;
  j["trace_len"] = result.trace_len;
  return j;
}

inline ordered_json stuck_to_json(const StuckOutcome& result) {
  ordered_json j;
  j["stuck"] = true;
  j["remaining_vertices"] = result.stuck.remaining.vertices();
  j["hint"] = "K_{" + std::to_string(result.params.t + 1) + "} minor present if parameters valid";
  return j;
}

inline ordered_json outcome_to_json(const ColoringOutcome& outcome) {
  return std::visit(
      [](const auto& r) -> ordered_json {
        if constexpr (std::is_same_v<std::decay_t<decltype(r)>, Colored>) {
          return partition_to_json(r);
        } else {
          return stuck_to_json(r);
        }
      },
      outcome);
}

// Reads the "parts" (and "s", when present) of a success document.
inline Partition partition_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("parts") || !j["parts"].is_array()) {
    throw std::invalid_argument("partition JSON needs an array field \"parts\"");
  }
  Partition p;
  for (const auto& part : j["parts"]) {
    if (!part.is_array()) throw std::invalid_argument("each part must be an array of ids");
    std::vector<VertexId> ids;
    for (const auto& id : part) {
      if (!id.is_number_unsigned()) {
        throw std::invalid_argument("vertex ids must be non-negative integers");
      }
      ids.push_back(id.get<VertexId>());
    }
    p.parts.push_back(std::move(ids));
  }
  if (j.contains("s") && j["s"].is_number_unsigned()) p.defect_bound = j["s"].get<std::uint64_t>();
  return p;
}

}  // namespace defcol
