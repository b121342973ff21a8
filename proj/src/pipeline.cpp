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

#include "stabgraph/pipeline.hpp"

namespace stabgraph::pipeline {

namespace {

/// Per-qubit layer realizing local complementation at v at the group level:
/// x += z on v (HPH), z += x on each neighbor (P).
pauli::CliffordLayer lc_layer(const graphx::Graph& g, int v) {
  pauli::CliffordLayer layer = pauli::identity_layer(g.n);
  layer[static_cast<size_t>(v)] = pauli::SingleQubitClifford::Q();
  for (int u : g.neighbors(v)) layer[static_cast<size_t>(u)] = pauli::SingleQubitClifford::P();
  return layer;
}

}  // namespace

Result run(const stabcode::StabilizerCode& code, const Options& options) {
  Result res;
  res.cws_code = cws::cws_from_stabilizer(code);
  if (options.layer)
    res.standard_form = cws::standard_form_with_layer(res.cws_code, *options.layer);
  else
    res.standard_form = cws::standard_form(res.cws_code);

  res.witness = res.standard_form.clifford_witness;
  pauli::StabilizerGroupSpec frame{code.n, {}};
  for (const auto& s : code.stabilizers)
    frame.generators.push_back(pauli::conjugate(s, res.witness));

  graphx::Graph graph = res.standard_form.graph;
  for (int v : options.post_lc) {
    auto layer = lc_layer(graph, v);
    frame = pauli::apply_local_clifford(frame, layer);
    res.witness = pauli::compose(layer, res.witness);
    graph = graphx::local_complement(graph, v);
  }
  if (!options.post_lc.empty()) {
    // Recompute the standard form data in the post-LC frame.
    res.standard_form.graph = graph;
    res.standard_form.clifford_witness = res.witness;
    res.standard_form.classical_codewords.clear();
    for (const auto& w : res.cws_code.word_operators) {
      pauli::PauliOperator t = pauli::conjugate(w, res.witness);
      for (int l = 0; l < code.n; ++l) {
        if (!t.x.get(l)) continue;
        t.x.set(l, 0);
        t.z ^= graph.adjacency.row(l);
      }
      res.standard_form.classical_codewords.push_back(t.z);
    }
  }

  // Every transformed stabilizer generator must be a graph element (Gamma x | x).
  for (const auto& g : frame.generators) {
    if (gf2::multiply(graph.adjacency, g.x) != g.z)
      throw graphx::ExtractionFailure("transformed stabilizer is not a graph element");
    res.kappas.push_back(g.x);
  }
  res.frame_stabilizer = frame;
  res.xi = attach::attach_inputs(graph, res.kappas);
  res.xi_report = attach::validate_xi(res.xi);
  return res;
}

Result run_catalog(const catalog::CatalogEntry& entry, bool paper_exact) {
  Options opt;
  if (paper_exact) {
    opt.layer = pauli::layer_from_tags(entry.extraction_layer);
    opt.post_lc = entry.post_lc;
  }
  return run(entry.code, opt);
}

VerifyBundle verify_inputs(const catalog::CatalogEntry& entry, bool paper_exact) {
  VerifyBundle b;
  b.pipeline = run_catalog(entry, paper_exact);
  if (paper_exact && entry.verify_xi)
    b.xi = *entry.verify_xi;
  else
    b.xi = b.pipeline.xi;
  if (paper_exact && entry.xi_frame_stabilizer) {
    pauli::StabilizerGroupSpec frame{entry.code.n, {}};
    for (const auto& s : *entry.xi_frame_stabilizer)
      frame.generators.push_back(pauli::parse_pauli(s));
    b.frame_stabilizer = frame;
    if (entry.xi_frame_layer)
      b.frame_to_original = pauli::inverse(pauli::layer_from_tags(*entry.xi_frame_layer));
    else
      b.frame_to_original = pauli::identity_layer(entry.code.n);
  } else {
    b.frame_stabilizer = b.pipeline.frame_stabilizer;
    b.frame_to_original = pauli::inverse(b.pipeline.witness);
  }
  return b;
}

std::optional<std::vector<int>> find_det_zero_lc(const graphx::Graph& g) {
  if (gf2::determinant_mod2(g.adjacency) == 0) return std::vector<int>{};
  for (int v = 0; v < g.n; ++v)
    if (gf2::determinant_mod2(graphx::local_complement(g, v).adjacency) == 0)
      return std::vector<int>{v};
  for (int v = 0; v < g.n; ++v) {
    auto gv = graphx::local_complement(g, v);
    for (int u = 0; u < g.n; ++u)
      if (gf2::determinant_mod2(graphx::local_complement(gv, u).adjacency) == 0)
        return std::vector<int>{v, u};
  }
  return std::nullopt;
}

}  // namespace stabgraph::pipeline
