// Copyright 2026 The stabgraph developers
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

#include <optional>

#include "stabgraph/attach.hpp"
#include "stabgraph/stabcode.hpp"

namespace stabgraph::catalog {

struct UnknownCode : std::runtime_error {
  explicit UnknownCode(const std::string& name) : std::runtime_error("unknown code: " + name) {}
};

struct ExpectedCounts {
  int config_size = 0;  // |E| of the counted configurations
  int strong = 0, weak = 0, degenerate = 0, fail = 0;
};

struct CatalogEntry {
  std::string name;
  stabcode::StabilizerCode code;
  /// Per-qubit extraction layer tags reproducing the published graph.
  std::vector<std::string> extraction_layer;
  /// Local complementations applied after extraction (0-based vertices).
  std::vector<int> post_lc;
  std::optional<graphx::Graph> expected_graph;
  std::optional<attach::CoincidenceMatrix> expected_xi;
  /// Coincidence matrix verification runs on, when it differs from the
  /// faithful pipeline attachment.
  std::optional<attach::CoincidenceMatrix> verify_xi;
  /// Graph-frame stabilizer generators matching verify_xi, when the frame
  /// differs from the pipeline's.
  std::optional<std::vector<std::string>> xi_frame_stabilizer;
  /// Layer taking the original code frame to the verify_xi frame (used to
  /// transport Pauli witnesses back for reporting).
  std::optional<std::vector<std::string>> xi_frame_layer;
  std::optional<int> declared_distance;
  std::optional<ExpectedCounts> expected_counts;
};

/// All 12 entry names, sorted.
std::vector<std::string> list();
const CatalogEntry& get(const std::string& name);

}  // namespace stabgraph::catalog
