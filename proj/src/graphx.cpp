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

#include "stabgraph/graphx.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace stabgraph::graphx {

Graph::Graph(gf2::BitMatrix adj) : n(adj.rows()), adjacency(std::move(adj)) {
  if (!adjacency.is_symmetric() || !adjacency.has_zero_diagonal())
    throw gf2::DimensionMismatch("adjacency must be symmetric with zero diagonal");
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n; ++u)
    if (adjacency.get(v, u)) out.push_back(u);
  return out;
}

int Graph::degree(int v) const { return adjacency.row(v).weight(); }

CodewordStabilizerMatrix CodewordStabilizerMatrix::from_group(
    const pauli::StabilizerGroupSpec& group) {
  CodewordStabilizerMatrix h;
  h.n = group.n;
  h.mat = gf2::BitMatrix(static_cast<int>(group.generators.size()), 2 * group.n);
  for (size_t r = 0; r < group.generators.size(); ++r) {
    const auto& g = group.generators[r];
    for (int q = 0; q < group.n; ++q) {
      h.mat.set(static_cast<int>(r), q, g.z.get(q));
      h.mat.set(static_cast<int>(r), group.n + q, g.x.get(q));
    }
  }
  return h;
}

gf2::BitMatrix CodewordStabilizerMatrix::z_block() const {
  std::vector<int> rs, cs;
  for (int r = 0; r < mat.rows(); ++r) rs.push_back(r);
  for (int c = 0; c < n; ++c) cs.push_back(c);
  return mat.submatrix(rs, cs);
}

gf2::BitMatrix CodewordStabilizerMatrix::x_block() const {
  std::vector<int> rs, cs;
  for (int r = 0; r < mat.rows(); ++r) rs.push_back(r);
  for (int c = 0; c < n; ++c) cs.push_back(n + c);
  return mat.submatrix(rs, cs);
}

namespace {

// Swap the Z and X columns for each qubit in `subset` (conjugation by Hadamards).
CodewordStabilizerMatrix apply_hadamards(const CodewordStabilizerMatrix& h,
                                         const std::vector<int>& subset) {
  CodewordStabilizerMatrix out = h;
  for (int q : subset)
    for (int r = 0; r < out.mat.rows(); ++r) {
      int z = out.mat.get(r, q);
      int x = out.mat.get(r, h.n + q);
      out.mat.set(r, q, x);
      out.mat.set(r, h.n + q, z);
    }
  return out;
}

bool next_combination(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[static_cast<size_t>(i)] < n - (k - i)) {
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

ExtractionResult finish_extraction(const CodewordStabilizerMatrix& hh,
                                   const std::vector<int>& hadamards) {
  int n = hh.n;
  gf2::BitMatrix xt = hh.x_block().transpose();
  gf2::BitMatrix raw = gf2::multiply(hh.z_block().transpose(), gf2::inverse(xt));
  ExtractionResult res;
  res.hadamard_qubits = hadamards;
  for (int i = 0; i < n; ++i)
    if (raw.get(i, i)) {
      res.phase_qubits.push_back(i);
      raw.set(i, i, 0);
    }
  if (!raw.is_symmetric()) throw ExtractionFailure("extracted adjacency not symmetric");
  res.graph = Graph(raw);
  res.witness = pauli::identity_layer(n);
  for (int q : hadamards) res.witness[static_cast<size_t>(q)] = pauli::SingleQubitClifford::H();
  for (int q : res.phase_qubits)
    res.witness[static_cast<size_t>(q)] =
        pauli::SingleQubitClifford::P().then_after(res.witness[static_cast<size_t>(q)]);
  return res;
}

}  // namespace

ExtractionResult extract_graph(const CodewordStabilizerMatrix& h) {
  int n = h.n;
  if (h.mat.rows() != n) throw ExtractionFailure("codeword stabilizer matrix must have n rows");
  for (int size = 0; size <= n; ++size) {
    std::vector<int> subset(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) subset[static_cast<size_t>(i)] = i;
    bool more = true;
    while (more) {
      CodewordStabilizerMatrix hh = apply_hadamards(h, subset);
      if (gf2::rank(hh.x_block()) == n) return finish_extraction(hh, subset);
      more = size > 0 && next_combination(subset, n);
      if (size == 0) break;
    }
  }
  throw ExtractionFailure("no Hadamard sublayer renders the X block invertible");
}

ExtractionResult extract_graph_with_layer(const CodewordStabilizerMatrix& h,
                                          const pauli::CliffordLayer& layer) {
  if (static_cast<int>(layer.size()) != h.n)
    throw ExtractionFailure("layer size must equal qubit count");
  // Re-express the rows as operators, conjugate, and rebuild the matrix.
  pauli::StabilizerGroupSpec group{h.n, {}};
  for (int r = 0; r < h.mat.rows(); ++r) {
    pauli::PauliOperator p = pauli::PauliOperator::identity(h.n);
    for (int q = 0; q < h.n; ++q) {
      p.z.set(q, h.mat.get(r, q));
      p.x.set(q, h.mat.get(r, h.n + q));
    }
    group.generators.push_back(p);
  }
  auto conj = pauli::apply_local_clifford(group, layer);
  auto hh = CodewordStabilizerMatrix::from_group(conj);
  if (gf2::rank(hh.x_block()) != h.n)
    throw ExtractionFailure("given layer leaves the X block singular");
  ExtractionResult res = finish_extraction(hh, {});
  pauli::CliffordLayer witness = layer;
  for (int q : res.phase_qubits)
    witness[static_cast<size_t>(q)] =
        pauli::SingleQubitClifford::P().then_after(witness[static_cast<size_t>(q)]);
  res.witness = witness;
  res.hadamard_qubits.clear();
  return res;
}

Graph local_complement(const Graph& g, int v) {
  if (v < 0 || v >= g.n) throw gf2::DimensionMismatch("vertex out of range");
  gf2::BitMatrix adj = g.adjacency;
  auto nb = g.neighbors(v);
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j) {
      int a = nb[i], b = nb[j];
      adj.set(a, b, adj.get(a, b) ^ 1);
      adj.set(b, a, adj.get(b, a) ^ 1);
    }
  return Graph(adj);
}

gf2::BitMatrix SymplecticLocal::full() const {
  int n = a.rows();
  gf2::BitMatrix q(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      q.set(i, j, a.get(i, j));
      q.set(i, n + j, b.get(i, j));
      q.set(n + i, j, c.get(i, j));
      q.set(n + i, n + j, d.get(i, j));
    }
  return q;
}

bool SymplecticLocal::preserves_symplectic_form() const {
  int n = a.rows();
  gf2::BitMatrix p(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    p.set(i, n + i, 1);
    p.set(n + i, i, 1);
  }
  gf2::BitMatrix q = full();
  return gf2::multiply(gf2::multiply(q.transpose(), p), q) == p;
}

SymplecticLocal lc_symplectic(const Graph& g, int v) {
  if (v < 0 || v >= g.n) throw gf2::DimensionMismatch("vertex out of range");
  int n = g.n;
  SymplecticLocal q{gf2::BitMatrix::identity(n), gf2::BitMatrix(n, n), gf2::BitMatrix(n, n),
                    gf2::BitMatrix::identity(n)};
  for (int j = 0; j < n; ++j) q.b.set(j, j, g.adjacency.get(v, j));  // diag(Gamma_v)
  q.c.set(v, v, 1);                                                  // Lambda_v
  return q;
}

Graph fractional_transform(const SymplecticLocal& q, const Graph& g) {
  gf2::BitMatrix num = gf2::multiply(q.a, g.adjacency) ^ q.b;
  gf2::BitMatrix den = gf2::multiply(q.c, g.adjacency) ^ q.d;
  gf2::BitMatrix raw = gf2::multiply(num, gf2::inverse(den));
  for (int i = 0; i < raw.rows(); ++i) raw.set(i, i, 0);
  return Graph(raw);
}

namespace {

constexpr int kIsoCap = 10;

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.n; ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

// Backtracking vertex-map search with degree pruning.
bool extend(const Graph& a, const Graph& b, std::vector<int>& map, std::vector<bool>& used,
            int v) {
  if (v == a.n) return true;
  for (int u = 0; u < b.n; ++u) {
    if (used[static_cast<size_t>(u)]) continue;
    if (a.degree(v) != b.degree(u)) continue;
    bool ok = true;
    for (int w = 0; w < v && ok; ++w)
      if (a.adjacency.get(v, w) != b.adjacency.get(u, map[static_cast<size_t>(w)])) ok = false;
    if (!ok) continue;
    map[static_cast<size_t>(v)] = u;
    used[static_cast<size_t>(u)] = true;
    if (extend(a, b, map, used, v + 1)) return true;
    used[static_cast<size_t>(u)] = false;
  }
  return false;
}

}  // namespace

bool graphs_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.n != g2.n) return false;
  if (g1.n > kIsoCap) throw OrderTooLarge("graphs_isomorphic capped at order 10");
  if (degree_sequence(g1) != degree_sequence(g2)) return false;
  std::vector<int> map(static_cast<size_t>(g1.n), -1);
  std::vector<bool> used(static_cast<size_t>(g1.n), false);
  return extend(g1, g2, map, used, 0);
}

namespace {

// The canonical key lists the upper triangle column by column: placing vertex
// v determines exactly the bits adj(perm(w), perm(v)) for w < v, so the key
// grows by a fixed block per level and prefix pruning is sound.
struct CanonState {
  const Graph* g;
  std::vector<int> perm;
  std::vector<bool> used;
  std::vector<int> key;       // current prefix, one entry per determined cell
  std::vector<int> best_key;  // best complete key so far
  std::vector<int> best_perm;
  bool have = false;
};

void canon_search(CanonState& st, int v, bool tied) {
  int n = st.g->n;
  if (v == n) {
    if (!st.have || st.key < st.best_key) {
      st.best_key = st.key;
      st.best_perm = st.perm;
      st.have = true;
    }
    return;
  }
  size_t offset = st.key.size();
  for (int u = 0; u < n; ++u) {
    if (st.used[static_cast<size_t>(u)]) continue;
    bool next_tied = tied;
    bool prune = false;
    for (int w = 0; w < v; ++w) {
      int bit = st.g->adjacency.get(st.perm[static_cast<size_t>(w)], u);
      st.key.push_back(bit);
      if (st.have && next_tied) {
        int best_bit = st.best_key[offset + static_cast<size_t>(w)];
        if (bit > best_bit) {
          prune = true;
          for (int t = 0; t <= w; ++t) st.key.pop_back();
          break;
        }
        if (bit < best_bit) next_tied = false;
      }
    }
    if (prune) continue;
    st.perm[static_cast<size_t>(v)] = u;
    st.used[static_cast<size_t>(u)] = true;
    canon_search(st, v + 1, next_tied);
    st.used[static_cast<size_t>(u)] = false;
    st.key.resize(offset);
  }
}

}  // namespace

gf2::BitMatrix canonical_form(const Graph& g) {
  if (g.n > kIsoCap) throw OrderTooLarge("canonical_form capped at order 10");
  CanonState st;
  st.g = &g;
  st.perm.assign(static_cast<size_t>(g.n), 0);
  st.used.assign(static_cast<size_t>(g.n), false);
  canon_search(st, 0, true);
  gf2::BitMatrix out(g.n, g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      out.set(i, j,
              g.adjacency.get(st.best_perm[static_cast<size_t>(i)],
                              st.best_perm[static_cast<size_t>(j)]));
  return out;
}

std::vector<Graph> lc_orbit(const Graph& g) {
  if (g.n > kIsoCap) throw OrderTooLarge("lc_orbit capped at order 10");
  std::map<std::string, Graph> seen;
  std::vector<Graph> frontier{g};
  auto canon0 = canonical_form(g);
  seen.emplace(canon0.str(), Graph(canon0));
  while (!frontier.empty()) {
    Graph cur = frontier.back();
    frontier.pop_back();
    for (int v = 0; v < g.n; ++v) {
      Graph next = local_complement(cur, v);
      auto canon = canonical_form(next);
      auto key = canon.str();
      if (!seen.count(key)) {
        seen.emplace(key, Graph(canon));
        frontier.push_back(next);
      }
    }
  }
  std::vector<Graph> out;
  for (auto& [key, graph] : seen) out.push_back(graph);
  return out;
}

pauli::StabilizerGroupSpec graph_code_stabilizer(const Graph& g) {
  pauli::StabilizerGroupSpec out{g.n, {}};
  for (int v = 0; v < g.n; ++v) {
    pauli::PauliOperator p = pauli::PauliOperator::identity(g.n);
    p.x.set(v, 1);
    for (int u = 0; u < g.n; ++u)
      if (g.adjacency.get(v, u)) p.z.set(u, 1);
    out.generators.push_back(p);
  }
  return out;
}

}  // namespace stabgraph::graphx
