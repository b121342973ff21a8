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

#include <array>
#include <string>
#include <vector>

#include "stabgraph/attach.hpp"
#include "stabgraph/stabcode.hpp"

namespace stabgraph::swverify {

/// Error configuration: a set of output vertices (1-based labels). The input
/// vertices are always implicitly included.
struct ErrorConfiguration {
  std::vector<int> outputs;  // sorted, 1-based
  std::string str(int k_inputs) const;
};

enum class Verdict { Strong, WeakOnly, DegenerateHarmless, Fail };
std::string verdict_name(Verdict v);

struct DetectionVerdict {
  Verdict tag = Verdict::Fail;
  /// Nonzero kernel solutions of the strong system (for non-Strong tags).
  std::vector<gf2::BitVector> kernel_witnesses;
  /// Zero-syndrome operators found by the Pauli oracle, split by membership
  /// in the stabilizer span.
  std::vector<pauli::PauliOperator> offending;  // logical => Fail
  std::vector<pauli::PauliOperator> absolved;   // stabilizer elements
};

/// Strong condition: the submatrix Xi[I, X u E] has trivial kernel.
bool check_strong(const attach::CoincidenceMatrix& xi, const ErrorConfiguration& e);

/// Weak condition (necessary and sufficient detection criterion): every
/// solution d of Xi[I, X u E] d = 0 satisfies d^X = 0 and Xi[X, E] d^E = 0.
bool check_weak(const attach::CoincidenceMatrix& xi, const ErrorConfiguration& e);

/// Strong, else WeakOnly, else the Pauli oracle over all nonidentity
/// operators supported inside E against the graph-frame stabilizer.
DetectionVerdict classify(const attach::CoincidenceMatrix& xi, const ErrorConfiguration& e,
                          const pauli::StabilizerGroupSpec& frame_stabilizer);

struct ConfigResult {
  ErrorConfiguration config;
  DetectionVerdict verdict;
};

struct VerifyReport {
  int detect_target = 0;  // t: all |E| <= t classified
  int e_target = 0;       // correction target (t = 2e when driven by e)
  int n_outputs = 0;
  int k_inputs = 0;
  std::vector<ConfigResult> top_level;       // configurations of size exactly t
  std::vector<std::array<int, 4>> size_counts;  // per size 0..t: S/W/D/F counts
  bool pass = false;

  std::array<int, 4> counts() const;  // at the maximal size
  std::string summary_line() const;
};

using stabcode::Parallel;

/// Classifies all configurations with |E| <= detect_target. Only maximal-size
/// sets run the full strong check; smaller sets inherit Strong from a Strong
/// superset (subset monotonicity) and are classified directly otherwise.
VerifyReport verify_code(const attach::CoincidenceMatrix& xi,
                         const pauli::StabilizerGroupSpec& frame_stabilizer, int detect_target,
                         Parallel par = Parallel::yes);
VerifyReport verify_code_serial(const attach::CoincidenceMatrix& xi,
                                const pauli::StabilizerGroupSpec& frame_stabilizer,
                                int detect_target);

/// One line per maximal-size configuration plus the summary line. When a
/// back-transport layer is given, Pauli witnesses are also reported in the
/// original code frame.
std::string render(const VerifyReport& report,
                   const pauli::CliffordLayer* frame_to_original = nullptr);

}  // namespace stabgraph::swverify
