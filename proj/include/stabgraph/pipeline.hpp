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
#include "stabgraph/catalog.hpp"
#include "stabgraph/cws.hpp"
#include "stabgraph/swverify.hpp"

namespace stabgraph::pipeline {

struct Options {
  /// Extraction layer to use instead of the Hadamard-subset search.
  std::optional<pauli::CliffordLayer> layer;
  /// Local complementations applied after extraction (0-based).
  std::vector<int> post_lc;
};

struct Result {
  cws::CwsCode cws_code;
  cws::CwsStandardForm standard_form;                 // graph, codewords, witness
  pauli::CliffordLayer witness;                       // original frame -> graph frame
  pauli::StabilizerGroupSpec frame_stabilizer;        // transformed stabilizer generators
  std::vector<gf2::BitVector> kappas;                 // their X parts
  attach::CoincidenceMatrix xi;                       // faithful attachment
  attach::XiReport xi_report;
};

/// Full convert pipeline: CWS realization, graph extraction, optional local
/// complementations, faithful input attachment.
Result run(const stabcode::StabilizerCode& code, const Options& options = {});

/// Pipeline with the catalog entry's recorded layer and post-LC sequence
/// ("paper-exact" route) or the plain search when paper_exact is false.
Result run_catalog(const catalog::CatalogEntry& entry, bool paper_exact = true);

struct VerifyBundle {
  Result pipeline;
  attach::CoincidenceMatrix xi;                 // matrix the verdicts run on
  pauli::StabilizerGroupSpec frame_stabilizer;  // matching graph-frame stabilizer
  pauli::CliffordLayer frame_to_original;       // for witness back-transport
};

/// Assemble the verification inputs for a catalog entry, honoring per-entry
/// coincidence-matrix and frame overrides.
VerifyBundle verify_inputs(const catalog::CatalogEntry& entry, bool paper_exact = true);

/// Shortest sequence of local complementations (searched breadth-first over
/// single vertices, then pairs) that makes det Gamma = 0; empty when the
/// graph already satisfies it, nullopt when none exists up to length 2.
std::optional<std::vector<int>> find_det_zero_lc(const graphx::Graph& g);

}  // namespace stabgraph::pipeline
