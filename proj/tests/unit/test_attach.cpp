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

#include <doctest.h>

#include "stabgraph/attach.hpp"
#include "stabgraph/catalog.hpp"
#include "stabgraph/pipeline.hpp"

using namespace stabgraph;
using attach::CoincidenceMatrix;

namespace {

graphx::Graph star4() {
  return graphx::Graph::from_rows({{0, 1, 1, 1}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}});
}

std::vector<gf2::BitVector> leung_kernel() {
  return {gf2::BitVector::from_bits({1, 0, 0, 0}), gf2::BitVector::from_bits({0, 1, 0, 0}),
          gf2::BitVector::from_bits({0, 0, 1, 1})};
}

}  // namespace

TEST_CASE("attach_inputs: Leung B and Xi, pentagon all-ones input row, k=0") {
  auto xi = attach::attach_inputs(star4(), leung_kernel());
  CHECK(xi.k_inputs == 1);
  CHECK(xi.mat == catalog::get("leung-4-1").expected_xi->mat);

  auto pent = catalog::get("five-1-3");
  auto res = pipeline::run_catalog(pent, true);
  for (int v = 1; v <= 5; ++v) CHECK(res.xi.mat.get(0, v) == 1);  // input adjacent to all five

  // k = 0: the coincidence matrix is the plain adjacency matrix.
  auto gstab = graphx::graph_code_stabilizer(star4());
  std::vector<gf2::BitVector> full_kernel;
  for (const auto& g : gstab.generators) full_kernel.push_back(g.x);
  auto xi0 = attach::attach_inputs(star4(), full_kernel);
  CHECK(xi0.k_inputs == 0);
  CHECK(xi0.mat == star4().adjacency);
}

TEST_CASE("stabilizer_from_xi: Leung group, k=0 graph group, the (Gamma kappa | kappa) form") {
  auto xi = attach::attach_inputs(star4(), leung_kernel());
  auto group = attach::stabilizer_from_xi(xi);
  pauli::StabilizerGroupSpec want{4,
                                  {pauli::parse_pauli("XZZZ"), pauli::parse_pauli("ZXII"),
                                   pauli::parse_pauli("IIXX")}};
  CHECK(pauli::same_group_mod_phase(group, want));

  auto gstab = graphx::graph_code_stabilizer(star4());
  std::vector<gf2::BitVector> full_kernel;
  for (const auto& g : gstab.generators) full_kernel.push_back(g.x);
  auto xi0 = attach::attach_inputs(star4(), full_kernel);
  auto g0 = attach::stabilizer_from_xi(xi0);
  CHECK(g0.generators.size() == 4);
  CHECK(pauli::same_group_mod_phase(g0, gstab));

  // every generator has the form (Gamma kappa | kappa) with B^T kappa = 0
  auto bt = xi.b_block().transpose();
  for (const auto& g : group.generators) {
    CHECK(gf2::multiply(star4().adjacency, g.x) == g.z);
    CHECK(gf2::multiply(bt, g.x).is_zero());
  }
}

TEST_CASE("round trip: kernel -> Xi -> group across the catalog") {
  for (const auto& name : catalog::list()) {
    const auto& entry = catalog::get(name);
    auto res = pipeline::run_catalog(entry, true);
    auto group = attach::stabilizer_from_xi(res.xi);
    CHECK(static_cast<int>(group.generators.size()) == entry.code.n - entry.code.k);
    CHECK(pauli::same_group_mod_phase(group, res.frame_stabilizer));
  }
}

TEST_CASE("validate_xi: Leung and CSS pass; bad diagonal fails; isotropy holds") {
  auto leung_rep = attach::validate_xi(*catalog::get("leung-4-1").expected_xi);
  CHECK(leung_rep.ok());
  CHECK(leung_rep.condition_i_ok);
  CHECK(leung_rep.condition_ii_ok);
  CHECK(leung_rep.condition_iii_ok);

  auto css_rep = attach::validate_xi(*catalog::get("css-7-1-3").expected_xi);
  CHECK(css_rep.ok());
  CHECK(css_rep.condition_i_ok);
  CHECK(css_rep.condition_ii_ok);
  CHECK(css_rep.condition_iii_ok);

  auto bad = *catalog::get("leung-4-1").expected_xi;
  bad.mat.set(2, 2, 1);
  CHECK_FALSE(attach::validate_xi(bad).structural_ok);

  for (const auto& name : catalog::list()) {
    auto res = pipeline::run_catalog(catalog::get(name), true);
    CHECK(attach::validate_xi(res.xi).isotropy_ok);
    auto kernel = gf2::kernel_basis(res.xi.b_block().transpose());
    CHECK(static_cast<int>(kernel.size()) == res.xi.n_outputs - res.xi.k_inputs);
  }
}

TEST_CASE("serialization round trips") {
  auto xi = *catalog::get("five-1-3").expected_xi;
  CHECK(attach::parse_json(attach::to_json(xi)).mat == xi.mat);
  auto txt = attach::to_text(xi);
  auto back = attach::parse_text(txt);
  CHECK(back.mat == xi.mat);
  CHECK(back.k_inputs == xi.k_inputs);
}
