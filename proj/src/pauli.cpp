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

#include "stabgraph/pauli.hpp"

#include <array>
#include <stdexcept>

namespace stabgraph::pauli {

namespace {

// Letters 0=I, 1=X, 2=Z, 3=Y with sign, for gate tables.
struct SignedLetter {
  int letter;
  int sign;  // +1 or -1
};

SignedLetter conj_prim(char gate, int letter) {
  switch (gate) {
    case 'H':
      switch (letter) {
        case 0: return {0, +1};
        case 1: return {2, +1};  // X -> Z
        case 2: return {1, +1};  // Z -> X
        case 3: return {3, -1};  // Y -> -Y
      }
      break;
    case 'P':
      switch (letter) {
        case 0: return {0, +1};
        case 1: return {3, +1};  // X -> Y
        case 2: return {2, +1};  // Z -> Z
        case 3: return {1, -1};  // Y -> -X
      }
      break;
  }
  throw std::invalid_argument("unknown single-qubit gate");
}

// Conjugate a signed letter through the whole gate word (rightmost gate first).
SignedLetter conj_word(const std::string& gates, int letter) {
  SignedLetter cur{letter, +1};
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    SignedLetter next = conj_prim(*it, cur.letter);
    cur = {next.letter, cur.sign * next.sign};
  }
  return cur;
}

// Single-qubit Pauli (as an n-qubit operator) from a signed letter.
PauliOperator letter_op(int n, int qubit, SignedLetter sl) {
  PauliOperator p = PauliOperator::identity(n);
  switch (sl.letter) {
    case 0: break;
    case 1: p.x.set(qubit, 1); break;
    case 2: p.z.set(qubit, 1); break;
    case 3:
      p.z.set(qubit, 1);
      p.x.set(qubit, 1);
      p.phase = 3;  // Y = i^3 Z X
      break;
  }
  if (sl.sign < 0) p.phase = (p.phase + 2) & 3;
  return p;
}

void check_same_n(const PauliOperator& a, const PauliOperator& b) {
  if (a.n != b.n) throw gf2::DimensionMismatch("Pauli length mismatch");
}

// U op U^dagger given the images of the Z_i and X_i generators.
// op = i^p * prod_i Z_i^{z_i} * prod_j X_j^{x_j}; conjugation is a homomorphism.
template <typename ZImage, typename XImage>
PauliOperator conjugate_by_images(const PauliOperator& op, ZImage z_image, XImage x_image) {
  PauliOperator out = PauliOperator::identity(op.n);
  out.phase = op.phase;
  for (int i = 0; i < op.n; ++i)
    if (op.z.get(i)) out = multiply_pauli(out, z_image(i));
  for (int i = 0; i < op.n; ++i)
    if (op.x.get(i)) out = multiply_pauli(out, x_image(i));
  return out;
}

}  // namespace

gf2::BitVector PauliOperator::symplectic() const {
  gf2::BitVector v(2 * n);
  for (int i = 0; i < n; ++i) {
    v.set(i, z.get(i));
    v.set(n + i, x.get(i));
  }
  return v;
}

PauliOperator parse_pauli(const std::string& s) {
  size_t start = 0;
  int phase = 0;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    if (s[0] == '-') phase = 2;
    start = 1;
  }
  int n = static_cast<int>(s.size() - start);
  PauliOperator p = PauliOperator::identity(n);
  p.phase = phase;
  for (int q = 0; q < n; ++q) {
    switch (s[start + static_cast<size_t>(q)]) {
      case 'I': break;
      case 'X': p.x.set(q, 1); break;
      case 'Z': p.z.set(q, 1); break;
      case 'Y':
        p.z.set(q, 1);
        p.x.set(q, 1);
        p.phase = (p.phase + 3) & 3;  // per-qubit Y carries i^3 in normal form
        break;
      default:
        throw std::invalid_argument("bad Pauli letter in \"" + s + "\"");
    }
  }
  return p;
}

namespace {
char letter_of(int z, int x) { return z ? (x ? 'Y' : 'Z') : (x ? 'X' : 'I'); }
}  // namespace

std::string to_string(const PauliOperator& p) {
  // Undo the normal-form Y phases to recover the sign of the letter product.
  int ph = p.phase;
  std::string body;
  for (int q = 0; q < p.n; ++q) {
    char c = letter_of(p.z.get(q), p.x.get(q));
    if (c == 'Y') ph = (ph + 1) & 3;  // letter Y contributed i^3
    body += c;
  }
  if (ph == 0) return body;
  if (ph == 2) return "-" + body;
  throw std::invalid_argument("Pauli with odd i-power has no letter-string form");
}

std::string to_compact(const PauliOperator& p) {
  std::string out;
  for (int q = 0; q < p.n; ++q) {
    char c = letter_of(p.z.get(q), p.x.get(q));
    if (c != 'I') out += c + std::to_string(q + 1);
  }
  return out.empty() ? "I" : out;
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
  check_same_n(a, b);
  return ((a.z.dot(b.x) + a.x.dot(b.z)) & 1) == 0;
}

PauliOperator multiply_pauli(const PauliOperator& a, const PauliOperator& b) {
  check_same_n(a, b);
  PauliOperator out;
  out.n = a.n;
  out.z = a.z ^ b.z;
  out.x = a.x ^ b.x;
  // Reorder X^{a.x} past Z^{b.z}: each overlap contributes a factor -1.
  out.phase = (a.phase + b.phase + 2 * a.x.dot(b.z)) & 3;
  return out;
}

int weight(const PauliOperator& p) {
  int w = 0;
  for (int q = 0; q < p.n; ++q)
    if (p.z.get(q) || p.x.get(q)) ++w;
  return w;
}

SingleQubitClifford::SingleQubitClifford(std::string gates) : gates_(std::move(gates)) {
  for (char c : gates_)
    if (c != 'H' && c != 'P') throw std::invalid_argument("gate word may only contain H and P");
}

bool SingleQubitClifford::is_identity_tag() const { return tag() == "I"; }

std::string SingleQubitClifford::tag() const {
  static const std::array<std::string, 6> tags{"I", "H", "P", "HP", "PH", "HPH"};
  // Identify the induced permutation of {X,Z} (mod signs), which pins one of six tags.
  for (const auto& t : tags) {
    std::string word = (t == "I") ? "" : t;
    bool match = true;
    for (int letter : {1, 2, 3}) {
      if (conj_word(gates_, letter).letter != conj_word(word, letter).letter) {
        match = false;
        break;
      }
    }
    if (match) return t;
  }
  throw std::logic_error("unreachable: letter permutation not matched");
}

SingleQubitClifford SingleQubitClifford::inverse() const {
  std::string out;
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it)
    out += (*it == 'H') ? std::string("H") : std::string("PPP");
  return SingleQubitClifford(out);
}

CliffordLayer identity_layer(int n) { return CliffordLayer(static_cast<size_t>(n)); }

CliffordLayer layer_from_tags(const std::vector<std::string>& tags) {
  CliffordLayer layer;
  for (const auto& t : tags) layer.emplace_back(t == "I" ? "" : t);
  return layer;
}

CliffordLayer compose(const CliffordLayer& second, const CliffordLayer& first) {
  if (second.size() != first.size()) throw gf2::DimensionMismatch("layer size mismatch");
  CliffordLayer out;
  for (size_t i = 0; i < first.size(); ++i) out.push_back(second[i].then_after(first[i]));
  return out;
}

CliffordLayer inverse(const CliffordLayer& layer) {
  CliffordLayer out;
  for (const auto& g : layer) out.push_back(g.inverse());
  return out;
}

PauliOperator conjugate(const PauliOperator& op, const SingleQubitClifford& gate, int qubit) {
  if (qubit < 0 || qubit >= op.n) throw gf2::DimensionMismatch("qubit index out of range");
  auto z_image = [&](int i) {
    if (i != qubit) return letter_op(op.n, i, {2, +1});
    return letter_op(op.n, i, conj_word(gate.gates(), 2));
  };
  auto x_image = [&](int i) {
    if (i != qubit) return letter_op(op.n, i, {1, +1});
    return letter_op(op.n, i, conj_word(gate.gates(), 1));
  };
  return conjugate_by_images(op, z_image, x_image);
}

PauliOperator conjugate(const PauliOperator& op, const CliffordLayer& layer) {
  if (static_cast<int>(layer.size()) != op.n)
    throw gf2::DimensionMismatch("layer size != qubit count");
  auto z_image = [&](int i) { return letter_op(op.n, i, conj_word(layer[static_cast<size_t>(i)].gates(), 2)); };
  auto x_image = [&](int i) { return letter_op(op.n, i, conj_word(layer[static_cast<size_t>(i)].gates(), 1)); };
  return conjugate_by_images(op, z_image, x_image);
}

PauliOperator conjugate_cnot(const PauliOperator& op, int control, int target) {
  if (control < 0 || control >= op.n || target < 0 || target >= op.n || control == target)
    throw gf2::DimensionMismatch("bad CNOT qubits");
  auto two = [&](int qa, int la, int qb, int lb) {
    return multiply_pauli(letter_op(op.n, qa, {la, +1}), letter_op(op.n, qb, {lb, +1}));
  };
  auto z_image = [&](int i) {
    if (i == target) return two(control, 2, target, 2);  // Z_t -> Z_c Z_t
    return letter_op(op.n, i, {2, +1});
  };
  auto x_image = [&](int i) {
    if (i == control) return two(control, 1, target, 1);  // X_c -> X_c X_t
    return letter_op(op.n, i, {1, +1});
  };
  return conjugate_by_images(op, z_image, x_image);
}

PauliOperator conjugate_cp(const PauliOperator& op, int a, int b) {
  if (a < 0 || a >= op.n || b < 0 || b >= op.n || a == b)
    throw gf2::DimensionMismatch("bad CP qubits");
  auto two = [&](int qa, int la, int qb, int lb) {
    return multiply_pauli(letter_op(op.n, qa, {la, +1}), letter_op(op.n, qb, {lb, +1}));
  };
  auto z_image = [&](int i) { return letter_op(op.n, i, {2, +1}); };
  auto x_image = [&](int i) {
    if (i == a) return two(a, 1, b, 2);  // X_a -> X_a Z_b
    if (i == b) return two(a, 2, b, 1);  // X_b -> Z_a X_b
    return letter_op(op.n, i, {1, +1});
  };
  return conjugate_by_images(op, z_image, x_image);
}

bool group_is_valid(const StabilizerGroupSpec& g) {
  for (size_t i = 0; i < g.generators.size(); ++i) {
    if (g.generators[i].n != g.n) return false;
    for (size_t j = i + 1; j < g.generators.size(); ++j)
      if (!commutes(g.generators[i], g.generators[j])) return false;
  }
  return gf2::rank(binary_matrix(g)) == static_cast<int>(g.generators.size());
}

StabilizerGroupSpec apply_local_clifford(const StabilizerGroupSpec& group,
                                         const CliffordLayer& layer) {
  StabilizerGroupSpec out{group.n, {}};
  for (const auto& g : group.generators) out.generators.push_back(conjugate(g, layer));
  return out;
}

gf2::BitVector syndrome(const PauliOperator& err, const StabilizerGroupSpec& group) {
  if (err.n != group.n) throw gf2::DimensionMismatch("syndrome length mismatch");
  gf2::BitVector s(static_cast<int>(group.generators.size()));
  for (size_t i = 0; i < group.generators.size(); ++i)
    s.set(static_cast<int>(i), commutes(err, group.generators[i]) ? 0 : 1);
  return s;
}

gf2::BitMatrix binary_matrix(const StabilizerGroupSpec& group) {
  std::vector<gf2::BitVector> rows;
  for (const auto& g : group.generators) rows.push_back(g.symplectic());
  return gf2::BitMatrix::from_row_vectors(rows, 2 * group.n);
}

bool in_group_mod_phase(const PauliOperator& op, const StabilizerGroupSpec& group) {
  if (op.n != group.n) throw gf2::DimensionMismatch("in_group length mismatch");
  return gf2::in_row_space(binary_matrix(group), op.symplectic());
}

bool same_group_mod_phase(const StabilizerGroupSpec& a, const StabilizerGroupSpec& b) {
  if (a.n != b.n) return false;
  auto ma = binary_matrix(a);
  auto mb = binary_matrix(b);
  for (const auto& g : b.generators)
    if (!gf2::in_row_space(ma, g.symplectic())) return false;
  for (const auto& g : a.generators)
    if (!gf2::in_row_space(mb, g.symplectic())) return false;
  return true;
}

}  // namespace stabgraph::pauli
