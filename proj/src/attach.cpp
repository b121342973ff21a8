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

#include "stabgraph/attach.hpp"

#include <sstream>

#include <json.hpp>

namespace stabgraph::attach {

CoincidenceMatrix CoincidenceMatrix::from_blocks(const graphx::Graph& gamma,
                                                 const gf2::BitMatrix& b) {
  int n = gamma.n;
  int k = b.cols();
  if (b.rows() != n) throw AttachmentFailure("B must be n x k");
  CoincidenceMatrix xi;
  xi.n_outputs = n;
  xi.k_inputs = k;
  xi.mat = gf2::BitMatrix(n + k, n + k);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < k; ++c) {
      xi.mat.set(k + r, c, b.get(r, c));
      xi.mat.set(c, k + r, b.get(r, c));
    }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) xi.mat.set(k + r, k + c, gamma.adjacency.get(r, c));
  return xi;
}

CoincidenceMatrix CoincidenceMatrix::from_matrix(int k, gf2::BitMatrix full) {
  CoincidenceMatrix xi;
  xi.k_inputs = k;
  xi.n_outputs = full.rows() - k;
  xi.mat = std::move(full);
  if (xi.n_outputs < 0 || xi.mat.rows() != xi.mat.cols())
    throw AttachmentFailure("coincidence matrix must be square with k <= order");
  return xi;
}

graphx::Graph CoincidenceMatrix::gamma() const {
  std::vector<int> idx;
  for (int i = 0; i < n_outputs; ++i) idx.push_back(k_inputs + i);
  return graphx::Graph(mat.submatrix(idx, idx));
}

gf2::BitMatrix CoincidenceMatrix::b_block() const {
  std::vector<int> rs, cs;
  for (int i = 0; i < n_outputs; ++i) rs.push_back(k_inputs + i);
  for (int j = 0; j < k_inputs; ++j) cs.push_back(j);
  return mat.submatrix(rs, cs);
}

CoincidenceMatrix attach_inputs(const graphx::Graph& g,
                                const std::vector<gf2::BitVector>& stab_kernel) {
  int n = g.n;
  int k = n - static_cast<int>(stab_kernel.size());
  if (k < 0) throw AttachmentFailure("kernel larger than the vertex count");
  gf2::BitMatrix kmat = gf2::BitMatrix::from_row_vectors(stab_kernel, n);
  if (gf2::rank(kmat) != static_cast<int>(stab_kernel.size()))
    throw AttachmentFailure("kernel vectors are dependent");
  auto perp = gf2::kernel_basis(kmat);  // basis of K-perp, reduced echelon
  if (static_cast<int>(perp.size()) != k)
    throw AttachmentFailure("orthogonal complement has wrong dimension");
  gf2::BitMatrix b(n, k);
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < n; ++r) b.set(r, c, perp[static_cast<size_t>(c)].get(r));
  auto xi = CoincidenceMatrix::from_blocks(g, b);
  auto rep = validate_xi(xi);
  if (!rep.ok())
    throw AttachmentFailure("attached coincidence matrix fails validation: " +
                            (rep.messages.empty() ? std::string("?") : rep.messages.front()));
  return xi;
}

pauli::StabilizerGroupSpec stabilizer_from_xi(const CoincidenceMatrix& xi) {
  auto gamma = xi.gamma();
  auto bt = xi.b_block().transpose();  // k x n
  auto kernel = gf2::kernel_basis(bt);
  pauli::StabilizerGroupSpec out{xi.n_outputs, {}};
  for (const auto& kap : kernel) {
    pauli::PauliOperator p = pauli::PauliOperator::identity(xi.n_outputs);
    p.x = kap;
    p.z = gf2::multiply(gamma.adjacency, kap);
    out.generators.push_back(p);
  }
  return out;
}

XiReport validate_xi(const CoincidenceMatrix& xi) {
  XiReport rep;
  int n = xi.n_outputs, k = xi.k_inputs;
  const auto& m = xi.mat;

  rep.structural_ok = m.is_symmetric() && m.has_zero_diagonal();
  for (int i = 0; i < k && rep.structural_ok; ++i)
    for (int j = 0; j < k; ++j)
      if (m.get(i, j)) {
        rep.structural_ok = false;
        rep.messages.push_back("input-input block is nonzero");
        break;
      }
  if (!m.is_symmetric()) rep.messages.push_back("matrix is not symmetric");
  if (!m.has_zero_diagonal()) rep.messages.push_back("diagonal is nonzero");

  auto gamma = xi.gamma();
  auto b = xi.b_block();

  rep.condition_i_ok = gf2::determinant_mod2(gamma.adjacency) == 0;
  if (!rep.condition_i_ok)
    rep.messages.push_back("warning: det Gamma = 1 mod 2 (condition i)");

  // condition ii: columns of B independent and outside the row space of Gamma
  rep.condition_ii_ok = gf2::rank(b) == k;
  if (rep.condition_ii_ok && k > 0) {
    std::vector<gf2::BitVector> stacked;
    for (int r = 0; r < n; ++r) stacked.push_back(gamma.adjacency.row(r));
    for (int c = 0; c < k; ++c) {
      gf2::BitVector col(n);
      for (int r = 0; r < n; ++r) col.set(r, b.get(r, c));
      stacked.push_back(col);
    }
    int combined = gf2::rank(gf2::BitMatrix::from_row_vectors(stacked, n));
    rep.condition_ii_ok = combined == gf2::rank(gamma.adjacency) + k;
  }
  if (!rep.condition_ii_ok)
    rep.messages.push_back("warning: B columns meet rowspace(Gamma) (condition ii)");

  // isometry: rank of Xi[Y, X] = k (same matrix as B)
  rep.isometry_ok = gf2::rank(b) == k;
  if (!rep.isometry_ok) rep.messages.push_back("isometry rank condition fails");

  // condition iii: some nonzero v in colspan(B) with Gamma v = 0
  if (k == 0) {
    rep.condition_iii_ok = true;
  } else {
    rep.condition_iii_ok = false;
    for (long mask = 1; mask < (1L << k); ++mask) {
      gf2::BitVector v(n);
      for (int c = 0; c < k; ++c)
        if ((mask >> c) & 1)
          for (int r = 0; r < n; ++r) v.set(r, v.get(r) ^ b.get(r, c));
      if (gf2::multiply(gamma.adjacency, v).is_zero()) {
        rep.condition_iii_ok = true;
        break;
      }
    }
    if (!rep.condition_iii_ok)
      rep.messages.push_back("warning: colspan(B) misses ker Gamma (condition iii)");
  }

  // isotropy: symplectic products of (Gamma kappa | kappa) pairs vanish
  rep.isotropy_ok = true;
  auto group = stabilizer_from_xi(xi);
  for (size_t i = 0; i < group.generators.size() && rep.isotropy_ok; ++i)
    for (size_t j = i + 1; j < group.generators.size(); ++j)
      if (!pauli::commutes(group.generators[i], group.generators[j])) {
        rep.isotropy_ok = false;
        rep.messages.push_back("isotropy fails");
        break;
      }
  return rep;
}

std::string to_json(const CoincidenceMatrix& xi) {
  nlohmann::json j;
  j["n"] = xi.n_outputs;
  j["k"] = xi.k_inputs;
  std::vector<int> flat;
  for (int r = 0; r < xi.mat.rows(); ++r)
    for (int c = 0; c < xi.mat.cols(); ++c) flat.push_back(xi.mat.get(r, c));
  j["xi"] = flat;
  return j.dump(2);
}

CoincidenceMatrix parse_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int n = j.at("n").get<int>();
  int k = j.at("k").get<int>();
  auto flat = j.at("xi").get<std::vector<int>>();
  int d = n + k;
  if (static_cast<int>(flat.size()) != d * d) throw AttachmentFailure("xi length mismatch");
  gf2::BitMatrix m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m.set(r, c, flat[static_cast<size_t>(r * d + c)]);
  return CoincidenceMatrix::from_matrix(k, m);
}

std::string to_text(const CoincidenceMatrix& xi) {
  std::ostringstream os;
  os << xi.n_outputs << ' ' << xi.k_inputs << '\n' << xi.mat.str() << '\n';
  return os.str();
}

CoincidenceMatrix parse_text(const std::string& text) {
  std::istringstream is(text);
  int n = 0, k = 0;
  if (!(is >> n >> k)) throw AttachmentFailure("xi text header parse error");
  int d = n + k;
  gf2::BitMatrix m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      int v;
      if (!(is >> v)) throw AttachmentFailure("xi text entry parse error");
      m.set(r, c, v);
    }
  return CoincidenceMatrix::from_matrix(k, m);
}

}  // namespace stabgraph::attach
