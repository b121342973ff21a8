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

#include <string>
#include <vector>

#include "stabgraph/gf2.hpp"

namespace stabgraph::pauli {

/// n-qubit Pauli operator in normal form i^phase * Z^z X^x.
/// Qubit 1 is coordinate 0 of z/x (1-based externally, 0-based internally).
struct PauliOperator {
  int n = 0;
  gf2::BitVector z, x;
  int phase = 0;  // exponent of i, in {0,1,2,3}

  static PauliOperator identity(int n) { return {n, gf2::BitVector(n), gf2::BitVector(n), 0}; }
  bool is_identity_mod_phase() const { return z.is_zero() && x.is_zero(); }
  gf2::BitVector symplectic() const;  // (z|x), length 2n
  bool operator==(const PauliOperator& o) const = default;
  bool equal_mod_phase(const PauliOperator& o) const { return n == o.n && z == o.z && x == o.x; }
};

/// Parse "XZZXI" with optional leading '+'/'-'; qubit 1 is the leftmost letter.
PauliOperator parse_pauli(const std::string& s);
/// Dense string form, leading '-' when phase = 2 (throws if phase is odd).
std::string to_string(const PauliOperator& p);
/// Compact indexed form used in reports: "X4Z6"; "I" for the identity.
std::string to_compact(const PauliOperator& p);

bool commutes(const PauliOperator& a, const PauliOperator& b);
PauliOperator multiply_pauli(const PauliOperator& a, const PauliOperator& b);
int weight(const PauliOperator& p);

/// Single-qubit Clifford given as a word over the generators {H, P}; the empty
/// word is the identity. "HP" denotes the unitary H*P, so under conjugation P
/// acts first. Signs are tracked exactly through each generator:
///   H: X->Z, Z->X, Y->-Y        P: X->Y, Y->-X, Z->Z
class SingleQubitClifford {
 public:
  SingleQubitClifford() = default;
  explicit SingleQubitClifford(std::string gates);
  static SingleQubitClifford I() { return SingleQubitClifford(""); }
  static SingleQubitClifford H() { return SingleQubitClifford("H"); }
  static SingleQubitClifford P() { return SingleQubitClifford("P"); }
  static SingleQubitClifford Q() { return SingleQubitClifford("HPH"); }

  const std::string& gates() const { return gates_; }
  bool is_identity_tag() const;
  /// Canonical tag of the induced permutation of {X,Y,Z} (one of I,H,P,HP,PH,HPH).
  std::string tag() const;
  /// this   applied after   other (matrix product this*other).
  SingleQubitClifford then_after(const SingleQubitClifford& other) const {
    return SingleQubitClifford(gates_ + other.gates_);
  }
  SingleQubitClifford inverse() const;
  bool operator==(const SingleQubitClifford& o) const = default;

 private:
  std::string gates_;
};

/// Per-qubit layer of single-qubit Cliffords.
using CliffordLayer = std::vector<SingleQubitClifford>;

CliffordLayer identity_layer(int n);
/// Layer from per-qubit tags like {"I","H","HPH"}.
CliffordLayer layer_from_tags(const std::vector<std::string>& tags);
CliffordLayer compose(const CliffordLayer& second, const CliffordLayer& first);
CliffordLayer inverse(const CliffordLayer& layer);

/// U op U^dagger for a single-qubit gate on `qubit` (0-based), exact phase.
PauliOperator conjugate(const PauliOperator& op, const SingleQubitClifford& gate, int qubit);
PauliOperator conjugate(const PauliOperator& op, const CliffordLayer& layer);
/// CNOT with given control/target (0-based).
PauliOperator conjugate_cnot(const PauliOperator& op, int control, int target);
/// Controlled-phase on a qubit pair (symmetric).
PauliOperator conjugate_cp(const PauliOperator& op, int a, int b);

struct StabilizerGroupSpec {
  int n = 0;
  std::vector<PauliOperator> generators;
};

/// Generators pairwise commute and are GF(2)-independent.
bool group_is_valid(const StabilizerGroupSpec& g);
StabilizerGroupSpec apply_local_clifford(const StabilizerGroupSpec& group,
                                         const CliffordLayer& layer);
/// Bit i = 1 iff err anticommutes with generator i.
gf2::BitVector syndrome(const PauliOperator& err, const StabilizerGroupSpec& group);
/// True iff (z|x) of op lies in the GF(2) span of the generators (phase ignored).
bool in_group_mod_phase(const PauliOperator& op, const StabilizerGroupSpec& group);
/// Rows (z_i|x_i) of the generators.
gf2::BitMatrix binary_matrix(const StabilizerGroupSpec& group);
/// Same GF(2) row space (groups equal mod phase).
bool same_group_mod_phase(const StabilizerGroupSpec& a, const StabilizerGroupSpec& b);

}  // namespace stabgraph::pauli
