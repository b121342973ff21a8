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

#include <random>
#include <set>

#include "stabgraph/catalog.hpp"
#include "stabgraph/graphx.hpp"

using namespace stabgraph;
using graphx::Graph;

namespace {

Graph star4() {
  return Graph::from_rows({{0, 1, 1, 1}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}});
}
Graph k4() {
  return Graph::from_rows({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});
}
Graph pentagon() {
  return Graph::from_rows(
      {{0, 1, 0, 0, 1}, {1, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}, {1, 0, 0, 1, 0}});
}

Graph random_graph(std::mt19937& rng, int n) {
  gf2::BitMatrix adj(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int b = static_cast<int>(rng() % 2);
      adj.set(i, j, b);
      adj.set(j, i, b);
    }
  return Graph(adj);
}

pauli::StabilizerGroupSpec group_of(int n, const std::vector<std::string>& strs) {
  pauli::StabilizerGroupSpec g{n, {}};
  for (const auto& s : strs) g.generators.push_back(pauli::parse_pauli(s));
  return g;
}

}  // namespace

TEST_CASE("extract_graph: Leung layer, pentagon, graph-state input") {
  // Leung codeword stabilizer conjugated by I,H,H,H.
  auto leung = group_of(4, {"XXXX", "ZZII", "IIZZ", "ZIZI"});
  auto h = graphx::CodewordStabilizerMatrix::from_group(leung);
  auto res = graphx::extract_graph_with_layer(h, pauli::layer_from_tags({"I", "H", "H", "H"}));
  CHECK(res.graph == star4());
  CHECK(res.phase_qubits.empty());

  // Five-qubit CWS matrix has an invertible X block directly.
  auto five = group_of(5, {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ", "XXXXX"});
  auto res5 = graphx::extract_graph(graphx::CodewordStabilizerMatrix::from_group(five));
  CHECK(res5.graph == pentagon());
  CHECK(res5.hadamard_qubits.empty());

  // Input already in graph form (Gamma | I): unchanged, identity witness.
  auto gstab = graphx::graph_code_stabilizer(pentagon());
  auto res6 = graphx::extract_graph(graphx::CodewordStabilizerMatrix::from_group(gstab));
  CHECK(res6.graph == pentagon());
  for (const auto& g : res6.witness) CHECK(g.is_identity_tag());
}

TEST_CASE("extract_graph: Shor needs Hadamards on the leaf qubits") {
  auto shor = group_of(9, {"ZZIIIIIII", "ZIZIIIIII", "IIIZZIIII", "IIIZIZIII", "IIIIIIZZI",
                           "IIIIIIZIZ", "XXXXXXIII", "XXXIIIXXX", "XXXXXXXXX"});
  auto h = graphx::CodewordStabilizerMatrix::from_group(shor);
  auto res = graphx::extract_graph_with_layer(
      h, pauli::layer_from_tags({"I", "H", "H", "I", "H", "H", "I", "H", "H"}));
  Graph three_stars = Graph::from_rows({{0, 1, 1, 0, 0, 0, 0, 0, 0},
                                        {1, 0, 0, 0, 0, 0, 0, 0, 0},
                                        {1, 0, 0, 0, 0, 0, 0, 0, 0},
                                        {0, 0, 0, 0, 1, 1, 0, 0, 0},
                                        {0, 0, 0, 1, 0, 0, 0, 0, 0},
                                        {0, 0, 0, 1, 0, 0, 0, 0, 0},
                                        {0, 0, 0, 0, 0, 0, 0, 1, 1},
                                        {0, 0, 0, 0, 0, 0, 1, 0, 0},
                                        {0, 0, 0, 0, 0, 0, 1, 0, 0}});
  CHECK(res.graph == three_stars);

  // The plain search finds some valid sublayer too.
  auto res2 = graphx::extract_graph(h);
  CHECK(res2.graph.adjacency.is_symmetric());
}

TEST_CASE("extraction preserves the group: row space check") {
  // For catalog codes: conjugating the CWS matrix by the witness must give a
  // group whose row space equals that of (Gamma | I).
  std::mt19937 rng(47);
  for (const auto& name : catalog::list()) {
    const auto& entry = catalog::get(name);
    pauli::StabilizerGroupSpec cws{entry.code.n, entry.code.stabilizers};
    for (const auto& z : entry.code.logical_z) cws.generators.push_back(z);
    auto h = graphx::CodewordStabilizerMatrix::from_group(cws);
    auto res = graphx::extract_graph(h);
    auto conj = pauli::apply_local_clifford(cws, res.witness);
    auto want = graphx::graph_code_stabilizer(res.graph);
    CHECK(pauli::same_group_mod_phase(conj, want));
  }
  // Random stabilizer states: random graph + random local layer.
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    Graph g = random_graph(rng, n);
    auto group = graphx::graph_code_stabilizer(g);
    pauli::CliffordLayer scramble;
    const char* tags[] = {"", "H", "P", "HP", "PH", "HPH"};
    for (int q = 0; q < n; ++q) scramble.emplace_back(tags[rng() % 6]);
    auto scrambled = pauli::apply_local_clifford(group, scramble);
    auto h = graphx::CodewordStabilizerMatrix::from_group(scrambled);
    auto res = graphx::extract_graph(h);
    auto conj = pauli::apply_local_clifford(scrambled, res.witness);
    CHECK(pauli::same_group_mod_phase(conj, graphx::graph_code_stabilizer(res.graph)));
  }
}

TEST_CASE("local_complement: star to K4, involution") {
  CHECK(graphx::local_complement(star4(), 0) == k4());
  std::mt19937 rng(53);
  // exhaustive for n <= 5
  for (int n = 2; n <= 5; ++n) {
    long edges = static_cast<long>(n) * (n - 1) / 2;
    for (long mask = 0; mask < (1L << edges); ++mask) {
      gf2::BitMatrix adj(n, n);
      int bit = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
          if ((mask >> bit) & 1) {
            adj.set(i, j, 1);
            adj.set(j, i, 1);
          }
      Graph g(adj);
      for (int v = 0; v < n; ++v)
        CHECK(graphx::local_complement(graphx::local_complement(g, v), v) == g);
    }
  }
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_graph(rng, 8);
    int v = static_cast<int>(rng() % 8);
    CHECK(graphx::local_complement(graphx::local_complement(g, v), v) == g);
  }
}

TEST_CASE("lc_symplectic matches direct local complementation") {
  auto q = graphx::lc_symplectic(star4(), 0);
  CHECK(q.preserves_symplectic_form());
  CHECK(graphx::fractional_transform(q, star4()) == graphx::local_complement(star4(), 0));

  Graph edgeless = Graph::empty(4);
  auto q2 = graphx::lc_symplectic(edgeless, 2);
  CHECK(graphx::fractional_transform(q2, edgeless) == edgeless);

  std::mt19937 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = random_graph(rng, n);
    for (int v = 0; v < n; ++v) {
      auto qv = graphx::lc_symplectic(g, v);
      CHECK(qv.preserves_symplectic_form());
      CHECK(graphx::fractional_transform(qv, g) == graphx::local_complement(g, v));
    }
  }
}

TEST_CASE("graphs_isomorphic: reflexive, relabeled stars, star vs K4") {
  Graph g = pentagon();
  CHECK(graphx::graphs_isomorphic(g, g));
  Graph star_at_2 =
      Graph::from_rows({{0, 1, 0, 0}, {1, 0, 1, 1}, {0, 1, 0, 0}, {0, 1, 0, 0}});
  CHECK(graphx::graphs_isomorphic(star4(), star_at_2));
  CHECK_FALSE(graphx::graphs_isomorphic(star4(), k4()));
}

TEST_CASE("lc_orbit: star orbit, singleton, closure") {
  auto orbit = graphx::lc_orbit(star4());
  REQUIRE(orbit.size() == 2);
  CHECK(graphx::canonical_form(orbit[0]) == graphx::canonical_form(star4()) );
  bool has_k4 = false;
  for (const auto& m : orbit)
    if (graphx::graphs_isomorphic(m, k4())) has_k4 = true;
  CHECK(has_k4);

  CHECK(graphx::lc_orbit(Graph::empty(1)).size() == 1);

  // closure: any local complement of a member is a member (up to isomorphism)
  for (const auto& m : orbit)
    for (int v = 0; v < m.n; ++v) {
      auto key = graphx::canonical_form(graphx::local_complement(m, v)).str();
      bool found = false;
      for (const auto& o : orbit)
        if (graphx::canonical_form(o).str() == key) found = true;
      CHECK(found);
    }
}

TEST_CASE("connected 4-vertex graphs: 6 classes in 2 orbits of sizes 4 and 2") {
  std::set<std::string> classes;
  std::vector<Graph> reps;
  for (long mask = 0; mask < 64; ++mask) {
    gf2::BitMatrix adj(4, 4);
    int bit = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j, ++bit)
        if ((mask >> bit) & 1) {
          adj.set(i, j, 1);
          adj.set(j, i, 1);
        }
    Graph g(adj);
    // connectivity
    std::vector<bool> seen(4, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(v))
        if (!seen[static_cast<size_t>(u)]) {
          seen[static_cast<size_t>(u)] = true;
          stack.push_back(u);
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) continue;
    auto key = graphx::canonical_form(g).str();
    if (classes.insert(key).second) reps.push_back(g);
  }
  CHECK(classes.size() == 6);

  std::set<std::string> orbit_keys;
  std::vector<size_t> orbit_sizes;
  for (const auto& rep : reps) {
    auto orbit = graphx::lc_orbit(rep);
    std::string okey;
    for (const auto& m : orbit) okey += graphx::canonical_form(m).str() + ";";
    if (orbit_keys.insert(okey).second) orbit_sizes.push_back(orbit.size());
  }
  std::sort(orbit_sizes.begin(), orbit_sizes.end());
  CHECK(orbit_sizes == std::vector<size_t>{2, 4});
}

TEST_CASE("graph_code_stabilizer: star, edgeless, triangle") {
  auto star = graphx::graph_code_stabilizer(star4());
  std::vector<std::string> want{"XZZZ", "ZXII", "ZIXI", "ZIIX"};
  REQUIRE(star.generators.size() == 4);
  for (size_t i = 0; i < want.size(); ++i)
    CHECK(star.generators[i] == pauli::parse_pauli(want[i]));

  auto free3 = graphx::graph_code_stabilizer(Graph::empty(3));
  CHECK(free3.generators[0] == pauli::parse_pauli("XII"));
  CHECK(free3.generators[1] == pauli::parse_pauli("IXI"));
  CHECK(free3.generators[2] == pauli::parse_pauli("IIX"));

  Graph triangle = Graph::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  auto k3 = graphx::graph_code_stabilizer(triangle);
  CHECK(k3.generators[0] == pauli::parse_pauli("XZZ"));
  CHECK(k3.generators[1] == pauli::parse_pauli("ZXZ"));
  CHECK(k3.generators[2] == pauli::parse_pauli("ZZX"));
}
