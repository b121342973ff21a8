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

#include "stabgraph/graphx.hpp"

namespace stabgraph::attach {

struct AttachmentFailure : std::runtime_error {
  explicit AttachmentFailure(const std::string& what) : std::runtime_error(what) {}
};

/// (n+k)x(n+k) symmetric coincidence matrix; k input vertices are indexed
/// first, block form [[0, B^T], [B, Gamma]].
struct CoincidenceMatrix {
  int n_outputs = 0;
  int k_inputs = 0;
  gf2::BitMatrix mat;

  static CoincidenceMatrix from_blocks(const graphx::Graph& gamma, const gf2::BitMatrix& b);
  static CoincidenceMatrix from_matrix(int k, gf2::BitMatrix full);
  graphx::Graph gamma() const;
  gf2::BitMatrix b_block() const;  // n x k
  bool operator==(const CoincidenceMatrix& o) const = default;
};

/// B columns = reduced-echelon basis of the orthogonal complement of the
/// stabilizer kernel K = span(stab_kernel), so that ker B^T = K and the
/// round trip through stabilizer_from_xi reproduces the group.
CoincidenceMatrix attach_inputs(const graphx::Graph& g,
                                const std::vector<gf2::BitVector>& stab_kernel);

/// Generators X^kappa Z^{Gamma kappa} for the reduced-echelon basis of ker B^T.
pauli::StabilizerGroupSpec stabilizer_from_xi(const CoincidenceMatrix& xi);

struct XiReport {
  bool structural_ok = false;   // symmetry, zero diagonal, zero input block
  bool isometry_ok = false;     // rank of Xi[Y,X] = k
  bool isotropy_ok = false;     // pairwise symplectic products vanish
  bool condition_i_ok = false;  // det Gamma = 0 mod 2 (warning only)
  bool condition_ii_ok = false; // B columns outside rowspace(Gamma) (warning only)
  bool condition_iii_ok = false;// colspan(B) meets ker Gamma nontrivially (warning only)
  std::vector<std::string> messages;
  /// Hard requirements; the published side conditions i-iii are warnings
  /// (several published coincidence matrices violate them).
  bool ok() const { return structural_ok && isometry_ok && isotropy_ok; }
};

XiReport validate_xi(const CoincidenceMatrix& xi);

/// JSON object {n, k, xi: row-major 0/1 list}.
std::string to_json(const CoincidenceMatrix& xi);
CoincidenceMatrix parse_json(const std::string& text);
/// Plain text: header "n k", then the (n+k)x(n+k) matrix rows.
std::string to_text(const CoincidenceMatrix& xi);
CoincidenceMatrix parse_text(const std::string& text);

}  // namespace stabgraph::attach
