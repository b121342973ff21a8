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
#include <string>
#include <vector>

#include "stabgraph/pauli.hpp"

namespace stabgraph::stabcode {

struct InconsistentCode : std::runtime_error {
  explicit InconsistentCode(const std::string& what) : std::runtime_error(what) {}
};

/// [[n,k]] stabilizer code: n-k stabilizer generators, k logical Z operators,
/// optionally k logical X operators.
struct StabilizerCode {
  int n = 0;
  int k = 0;
  std::vector<pauli::PauliOperator> stabilizers;
  std::vector<pauli::PauliOperator> logical_z;
  std::optional<std::vector<pauli::PauliOperator>> logical_x;
  std::string name;

  static StabilizerCode from_strings(std::string name, int n,
                                     const std::vector<std::string>& stabilizers,
                                     const std::vector<std::string>& logical_z,
                                     const std::vector<std::string>& logical_x = {});
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const StabilizerCode& code);

/// (n-k) x 2n matrix with row i = (z_i | x_i) of stabilizer generator i.
gf2::BitMatrix stabilizer_matrix(const StabilizerCode& code);

/// Deterministic logical X synthesis by GF(2) solve (lexicographically least
/// solution vector per logical); returns the code's own X's when present.
std::vector<pauli::PauliOperator> synthesize_logical_x(const StabilizerCode& code);

enum class Parallel { no, yes };

struct DistanceResult {
  bool exact = false;  // false means distance > max_weight
  int distance = 0;    // valid when exact
  std::optional<pauli::PauliOperator> witness;
  std::string str() const;
};

/// Exhaustive search for the smallest-weight Pauli with zero syndrome that
/// lies outside the stabilizer span (mod phase). The witness is the
/// lexicographically least such operator at the found weight, so serial and
/// parallel runs agree bit for bit.
DistanceResult distance_oracle(const StabilizerCode& code, int max_weight,
                               Parallel par = Parallel::yes);
DistanceResult distance_oracle_serial(const StabilizerCode& code, int max_weight);

/// True iff some nonidentity stabilizer element has weight < d.
bool is_degenerate(const StabilizerCode& code, int d);

/// Code file format (JSON): fields name, n, k, stabilizers, logical_z,
/// optional logical_x — all Pauli strings.
StabilizerCode parse_code_json(const std::string& text);
std::string to_code_json(const StabilizerCode& code);

}  // namespace stabgraph::stabcode
