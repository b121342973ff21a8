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

#include <stdexcept>
#include <vector>

#include "stabgraph/gf2.hpp"
#include "stabgraph/pauli.hpp"

namespace stabgraph::graphx {

struct ExtractionFailure : std::runtime_error {
  explicit ExtractionFailure(const std::string& what) : std::runtime_error(what) {}
};
struct OrderTooLarge : std::runtime_error {
  explicit OrderTooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// Simple undirected graph as a symmetric, zero-diagonal GF(2) adjacency matrix.
struct Graph {
  int n = 0;
  gf2::BitMatrix adjacency;

  Graph() = default;
  explicit Graph(gf2::BitMatrix adj);
  static Graph empty(int n) { return Graph(gf2::BitMatrix(n, n)); }
  static Graph from_rows(const std::vector<std::vector<int>>& rows) {
    return Graph(gf2::BitMatrix::from_rows(rows));
  }
  std::vector<int> neighbors(int v) const;
  int degree(int v) const;
  bool operator==(const Graph& o) const = default;
};

/// n x 2n binary matrix (Z|X) whose rows are the codeword stabilizer generators.
struct CodewordStabilizerMatrix {
  int n = 0;
  gf2::BitMatrix mat;  // n x 2n

  static CodewordStabilizerMatrix from_group(const pauli::StabilizerGroupSpec& group);
  gf2::BitMatrix z_block() const;
  gf2::BitMatrix x_block() const;
};

struct ExtractionResult {
  Graph graph;
  /// Local Clifford layer U with U S U^dag = graph-state stabilizer (mod phase):
  /// the Hadamard sublayer followed by the diagonal-cleanup phase gates.
  pauli::CliffordLayer witness;
  std::vector<int> hadamard_qubits;  // 0-based
  std::vector<int> phase_qubits;     // 0-based, diagonal cleanup
};

/// Van-den-Nest extraction: T = (Z^T; X^T); if X^T is invertible the adjacency
/// is Z^T (X^T)^{-1} with the diagonal zeroed (recorded as phase gates).
/// Otherwise Hadamard sublayers are searched by increasing subset size, then
/// lexicographically, until the X block transpose becomes invertible.
ExtractionResult extract_graph(const CodewordStabilizerMatrix& h);
/// Same, but force the given per-qubit layer instead of searching (layer must
/// make the X block transpose invertible).
ExtractionResult extract_graph_with_layer(const CodewordStabilizerMatrix& h,
                                          const pauli::CliffordLayer& layer);

Graph local_complement(const Graph& g, int v);

/// Diagonal-block symplectic matrix Q = [[A,B],[C,D]].
struct SymplecticLocal {
  gf2::BitMatrix a, b, c, d;
  gf2::BitMatrix full() const;  // 2n x 2n
  bool preserves_symplectic_form() const;
};

/// Q_v = [[I, diag(Gamma_v)], [Lambda_v, I]] whose fractional action reproduces
/// local complementation at v.
SymplecticLocal lc_symplectic(const Graph& g, int v);
/// Gamma' = (A Gamma + B)(C Gamma + D)^{-1}; throws if C Gamma + D is singular.
Graph fractional_transform(const SymplecticLocal& q, const Graph& g);

/// Exhaustive with degree-sequence pruning; order capped at 10.
bool graphs_isomorphic(const Graph& g1, const Graph& g2);

/// Lexicographically minimal adjacency over all vertex permutations.
gf2::BitMatrix canonical_form(const Graph& g);

/// BFS closure under local complementation, deduplicated up to isomorphism.
/// Members are returned as canonical representatives in sorted order.
std::vector<Graph> lc_orbit(const Graph& g);

/// Vertex stabilizers X_i Z^{N_i}.
pauli::StabilizerGroupSpec graph_code_stabilizer(const Graph& g);

}  // namespace stabgraph::graphx
