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

#include "stabgraph/cws.hpp"

namespace stabgraph::cws {

using pauli::PauliOperator;

CwsCode cws_from_stabilizer(const stabcode::StabilizerCode& code) {
  auto report = stabcode::validate(code);
  if (!report.ok()) throw stabcode::InconsistentCode("invalid code: " + report.violations.front());

  CwsCode out;
  out.n = code.n;
  out.codeword_stabilizer.n = code.n;
  out.codeword_stabilizer.generators = code.stabilizers;
  for (const auto& z : code.logical_z) out.codeword_stabilizer.generators.push_back(z);

  auto xs = stabcode::synthesize_logical_x(code);
  for (long v = 0; v < (1L << code.k); ++v) {
    PauliOperator w = PauliOperator::identity(code.n);
    for (int i = 0; i < code.k; ++i)
      if ((v >> i) & 1) w = pauli::multiply_pauli(w, xs[static_cast<size_t>(i)]);
    out.word_operators.push_back(w);
  }
  return out;
}

namespace {

CwsStandardForm build_standard_form(const CwsCode& code, const graphx::ExtractionResult& ext) {
  CwsStandardForm sf;
  sf.graph = ext.graph;
  sf.clifford_witness = ext.witness;
  for (const auto& w : code.word_operators) {
    PauliOperator t = pauli::conjugate(w, ext.witness);
    // Clear residual X components: multiplying by X_l Z^{r_l} toggles x_l and
    // adds the adjacency row, leaving a pure Z string mod phase.
    for (int l = 0; l < code.n; ++l) {
      if (!t.x.get(l)) continue;
      t.x.set(l, 0);
      t.z ^= sf.graph.adjacency.row(l);
    }
    sf.classical_codewords.push_back(t.z);
  }
  return sf;
}

}  // namespace

CwsStandardForm standard_form(const CwsCode& code) {
  auto h = graphx::CodewordStabilizerMatrix::from_group(code.codeword_stabilizer);
  return build_standard_form(code, graphx::extract_graph(h));
}

CwsStandardForm standard_form_with_layer(const CwsCode& code, const pauli::CliffordLayer& layer) {
  auto h = graphx::CodewordStabilizerMatrix::from_group(code.codeword_stabilizer);
  return build_standard_form(code, graphx::extract_graph_with_layer(h, layer));
}

gf2::BitVector classical_error_map(const graphx::Graph& graph, const PauliOperator& err) {
  if (err.n != graph.n) throw gf2::DimensionMismatch("error size != graph order");
  gf2::BitVector out = err.z;
  for (int l = 0; l < graph.n; ++l)
    if (err.x.get(l)) out ^= graph.adjacency.row(l);
  return out;
}

}  // namespace stabgraph::cws
