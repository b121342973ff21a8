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
#include "stabgraph/stabcode.hpp"

namespace stabgraph::cws {

/// Codeword-stabilized code: maximal Abelian group (n generators) plus word
/// operators; the identity is always word operator 0.
struct CwsCode {
  int n = 0;
  pauli::StabilizerGroupSpec codeword_stabilizer;
  std::vector<pauli::PauliOperator> word_operators;
};

struct CwsStandardForm {
  graphx::Graph graph;
  std::vector<gf2::BitVector> classical_codewords;  // c_l, c_0 = 0
  pauli::CliffordLayer clifford_witness;
};

/// Codeword stabilizer = stabilizers plus logical Zs; word operators are all
/// products of logical Xs over F_2^k (X synthesized when absent).
CwsCode cws_from_stabilizer(const stabcode::StabilizerCode& code);

/// Graph extraction (delegated to graphx) plus reduction of the conjugated
/// word operators to pure Z strings modulo the graph-state generators.
CwsStandardForm standard_form(const CwsCode& code);
/// Same, but extraction uses the given local Clifford layer.
CwsStandardForm standard_form_with_layer(const CwsCode& code, const pauli::CliffordLayer& layer);

/// Cl(+-Z^v X^u) = v xor (xor_l u_l r_l); the sign is discarded.
gf2::BitVector classical_error_map(const graphx::Graph& graph, const pauli::PauliOperator& err);

}  // namespace stabgraph::cws
