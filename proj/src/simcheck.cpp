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

#include "stabgraph/simcheck.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stabgraph::simcheck {

using pauli::PauliOperator;

namespace {
constexpr double kPi = 3.14159265358979323846;

long bit_of(int n, int qubit) { return 1L << (n - 1 - qubit); }  // qubit 1 = MSB
}  // namespace

StateVector StateVector::zeros(int n) {
  if (n < 0 || n > kMaxQubits + 1) throw TooManyQubits("state too large");
  StateVector s;
  s.n = n;
  s.amplitudes.assign(1uL << n, cplx(0, 0));
  return s;
}

StateVector StateVector::basis(int n, long index) {
  StateVector s = zeros(n);
  s.amplitudes[static_cast<size_t>(index)] = 1.0;
  return s;
}

double StateVector::norm() const {
  double acc = 0;
  for (const auto& a : amplitudes) acc += std::norm(a);
  return std::sqrt(acc);
}

void StateVector::normalize() {
  double nr = norm();
  if (nr == 0) throw std::runtime_error("cannot normalize the zero vector");
  for (auto& a : amplitudes) a /= nr;
}

StateVector graph_state(const graphx::Graph& g) {
  if (g.n > kMaxQubits) throw TooManyQubits("graph_state capped at 12 qubits");
  StateVector s = StateVector::zeros(g.n);
  double scale = 1.0 / std::sqrt(static_cast<double>(1uL << g.n));
  for (long mu = 0; mu < (1L << g.n); ++mu) {
    int sgn = 0;
    for (int i = 0; i < g.n; ++i) {
      if (!((mu >> (g.n - 1 - i)) & 1)) continue;
      for (int j = i + 1; j < g.n; ++j)
        if (((mu >> (g.n - 1 - j)) & 1) && g.adjacency.get(i, j)) sgn ^= 1;
    }
    s.amplitudes[static_cast<size_t>(mu)] = sgn ? -scale : scale;
  }
  return s;
}

StateVector apply_pauli(const StateVector& s, const PauliOperator& p) {
  if (p.n != s.n) throw gf2::DimensionMismatch("apply_pauli size mismatch");
  StateVector out = StateVector::zeros(s.n);
  long xmask = 0, zmask = 0;
  for (int q = 0; q < s.n; ++q) {
    if (p.x.get(q)) xmask |= bit_of(s.n, q);
    if (p.z.get(q)) zmask |= bit_of(s.n, q);
  }
  cplx global = std::pow(cplx(0, 1), p.phase);
  for (long idx = 0; idx < static_cast<long>(s.amplitudes.size()); ++idx) {
    // Z^z X^x |idx> = (-1)^{z.(idx^x)} |idx^x>
    long j = idx ^ xmask;
    int sgn = __builtin_popcountll(static_cast<unsigned long long>(zmask & j)) & 1;
    out.amplitudes[static_cast<size_t>(j)] +=
        (sgn ? -1.0 : 1.0) * global * s.amplitudes[static_cast<size_t>(idx)];
  }
  return out;
}

StateVector apply_single_qubit(const StateVector& s, const std::array<cplx, 4>& u, int qubit) {
  if (qubit < 0 || qubit >= s.n) throw gf2::DimensionMismatch("qubit out of range");
  StateVector out = StateVector::zeros(s.n);
  long bit = bit_of(s.n, qubit);
  for (long idx = 0; idx < static_cast<long>(s.amplitudes.size()); ++idx) {
    int b = (idx & bit) ? 1 : 0;
    long base = idx & ~bit;
    out.amplitudes[static_cast<size_t>(idx)] =
        u[static_cast<size_t>(2 * b)] * s.amplitudes[static_cast<size_t>(base)] +
        u[static_cast<size_t>(2 * b + 1)] * s.amplitudes[static_cast<size_t>(base | bit)];
  }
  return out;
}

StateVector apply_clifford_gate(const StateVector& s, const pauli::SingleQubitClifford& g,
                                int qubit) {
  static const std::array<cplx, 4> h{M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2};
  static const std::array<cplx, 4> p{1.0, 0.0, 0.0, cplx(0, 1)};
  StateVector cur = s;
  const std::string& word = g.gates();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    cur = apply_single_qubit(cur, *it == 'H' ? h : p, qubit);
  return cur;
}

StateVector apply_layer(const StateVector& s, const pauli::CliffordLayer& layer) {
  if (static_cast<int>(layer.size()) != s.n) throw gf2::DimensionMismatch("layer size mismatch");
  StateVector cur = s;
  for (int q = 0; q < s.n; ++q) cur = apply_clifford_gate(cur, layer[static_cast<size_t>(q)], q);
  return cur;
}

StateVector apply_cz(const StateVector& s, int a, int b) {
  StateVector out = s;
  long ba = bit_of(s.n, a), bb = bit_of(s.n, b);
  for (long idx = 0; idx < static_cast<long>(s.amplitudes.size()); ++idx)
    if ((idx & ba) && (idx & bb)) out.amplitudes[static_cast<size_t>(idx)] *= -1.0;
  return out;
}

StateVector apply_cnot(const StateVector& s, int control, int target) {
  StateVector out = StateVector::zeros(s.n);
  long bc = bit_of(s.n, control), bt = bit_of(s.n, target);
  for (long idx = 0; idx < static_cast<long>(s.amplitudes.size()); ++idx) {
    long j = (idx & bc) ? (idx ^ bt) : idx;
    out.amplitudes[static_cast<size_t>(j)] = s.amplitudes[static_cast<size_t>(idx)];
  }
  return out;
}

StateVector apply_cp(const StateVector& s, int a, int b) { return apply_cz(s, a, b); }

StateVector apply_tau_x(const StateVector& s, int qubit) {
  // sqrt(-i X) = (1/sqrt2) [[-1, i], [i, -1]]
  static const std::array<cplx, 4> u{cplx(-M_SQRT1_2, 0), cplx(0, M_SQRT1_2),
                                     cplx(0, M_SQRT1_2), cplx(-M_SQRT1_2, 0)};
  return apply_single_qubit(s, u, qubit);
}

StateVector apply_tau_z(const StateVector& s, int qubit) {
  // sqrt(i Z) = diag(w, w^3), w = exp(i pi/4)
  const cplx w = std::exp(cplx(0, kPi / 4));
  const std::array<cplx, 4> u{w, 0.0, 0.0, w * w * w};
  return apply_single_qubit(s, u, qubit);
}

StateVector lc_unitary(const StateVector& s, const graphx::Graph& g, int a) {
  // exp(-i pi X/4) on a, exp(+i pi Z/4) on the neighborhood.
  static const std::array<cplx, 4> ux{cplx(M_SQRT1_2, 0), cplx(0, -M_SQRT1_2),
                                      cplx(0, -M_SQRT1_2), cplx(M_SQRT1_2, 0)};
  const cplx w = std::exp(cplx(0, kPi / 4));
  const std::array<cplx, 4> uz{w, 0.0, 0.0, std::conj(w)};
  StateVector cur = apply_single_qubit(s, ux, a);
  for (int b : g.neighbors(a)) cur = apply_single_qubit(cur, uz, b);
  return cur;
}

cplx inner(const StateVector& a, const StateVector& b) {
  if (a.n != b.n) throw gf2::DimensionMismatch("inner product size mismatch");
  cplx acc = 0;
  for (size_t i = 0; i < a.amplitudes.size(); ++i)
    acc += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return acc;
}

bool check_stabilized(const StateVector& state, const PauliOperator& op, double lambda) {
  StateVector t = apply_pauli(state, op);
  double acc = 0;
  for (size_t i = 0; i < t.amplitudes.size(); ++i)
    acc += std::norm(t.amplitudes[i] - lambda * state.amplitudes[i]);
  return std::sqrt(acc) < kStabTol;
}

bool equal_mod_phase(const StateVector& a, const StateVector& b, double tol) {
  if (a.n != b.n) return false;
  size_t imax = 0;
  double best = 0;
  for (size_t i = 0; i < a.amplitudes.size(); ++i)
    if (std::abs(a.amplitudes[i]) > best) {
      best = std::abs(a.amplitudes[i]);
      imax = i;
    }
  if (best < tol) return b.norm() < tol;
  cplx phase = b.amplitudes[imax] / a.amplitudes[imax];
  if (std::abs(std::abs(phase) - 1.0) > 1e-6) return false;
  double acc = 0;
  for (size_t i = 0; i < a.amplitudes.size(); ++i)
    acc += std::norm(phase * a.amplitudes[i] - b.amplitudes[i]);
  return std::sqrt(acc) < tol;
}

StateVector encode(const attach::CoincidenceMatrix& xi, const StateVector& input) {
  int n = xi.n_outputs, k = xi.k_inputs;
  if (input.n != k) throw gf2::DimensionMismatch("encode: input has wrong qubit count");
  if (n + k > kMaxQubits + 1) throw TooManyQubits("encode capped at k + n <= 13");
  StateVector out = StateVector::zeros(n);
  int d = n + k;
  for (long y = 0; y < (1L << n); ++y) {
    cplx acc = 0;
    for (long x = 0; x < (1L << k); ++x) {
      // assignment d over inputs-then-outputs, MSB-first within each register
      int sgn = 0;
      auto bit_at = [&](int v) {  // v: matrix index
        if (v < k) return static_cast<int>((x >> (k - 1 - v)) & 1);
        return static_cast<int>((y >> (n - 1 - (v - k))) & 1);
      };
      for (int i = 0; i < d; ++i) {
        if (!bit_at(i)) continue;
        for (int j = i + 1; j < d; ++j)
          if (bit_at(j) && xi.mat.get(i, j)) sgn ^= 1;
      }
      acc += (sgn ? -1.0 : 1.0) * input.amplitudes[static_cast<size_t>(x)];
    }
    out.amplitudes[static_cast<size_t>(y)] = acc;
  }
  out.normalize();
  return out;
}

namespace {

struct ProductKey {
  uint64_t z, x;
  bool operator<(const ProductKey& o) const { return z != o.z ? z < o.z : x < o.x; }
};

KlReport run_kl(const std::vector<StateVector>& codewords,
                const std::vector<PauliOperator>& errors, Parallel par) {
  KlReport rep;
  rep.pass = true;
  if (codewords.empty()) return rep;
  int n = codewords[0].n;
  size_t m = codewords.size();

  // Distinct products Ea^dag Eb (phase-free key): the KL matrix depends on the
  // product only, and omega absorbs the phase.
  std::map<ProductKey, std::pair<size_t, size_t>> products;
  for (size_t a = 0; a < errors.size(); ++a)
    for (size_t b = 0; b < errors.size(); ++b) {
      PauliOperator prod = pauli::multiply_pauli(errors[a], errors[b]);
      products.insert({{prod.z.word(), prod.x.word()}, {a, b}});
    }
  std::vector<std::pair<ProductKey, std::pair<size_t, size_t>>> plist(products.begin(),
                                                                      products.end());

  std::vector<double> residuals(plist.size(), 0.0);
  std::vector<char> failed(plist.size(), 0);

  auto eval = [&](long pi) {
    const auto& [key, pair] = plist[static_cast<size_t>(pi)];
    PauliOperator prod = PauliOperator::identity(n);
    prod.z = gf2::BitVector(n, key.z);
    prod.x = gf2::BitVector(n, key.x);
    std::vector<std::vector<cplx>> mat(m, std::vector<cplx>(m));
    for (size_t j = 0; j < m; ++j) {
      StateVector pj = apply_pauli(codewords[j], prod);
      for (size_t i = 0; i < m; ++i) mat[i][j] = inner(codewords[i], pj);
    }
    cplx omega = mat[0][0];
    double worst = 0;
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) {
        cplx want = (i == j) ? omega : cplx(0, 0);
        worst = std::max(worst, std::abs(mat[i][j] - want));
      }
    residuals[static_cast<size_t>(pi)] = worst;
    if (worst > kKlTol) failed[static_cast<size_t>(pi)] = 1;
  };

  if (par == Parallel::yes) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (long pi = 0; pi < static_cast<long>(plist.size()); ++pi) eval(pi);
#else
    for (long pi = 0; pi < static_cast<long>(plist.size()); ++pi) eval(pi);
#endif
  } else {
    for (long pi = 0; pi < static_cast<long>(plist.size()); ++pi) eval(pi);
  }

  for (size_t pi = 0; pi < plist.size(); ++pi) {
    rep.max_residual = std::max(rep.max_residual, residuals[pi]);
    if (failed[pi]) {
      rep.pass = false;
      const auto& [a, b] = plist[pi].second;
      std::ostringstream os;
      os << "pair (" << pauli::to_compact(errors[a]) << ", " << pauli::to_compact(errors[b])
         << ") violates KL";
      rep.violations.push_back(os.str());
    }
  }
  return rep;
}

}  // namespace

KlReport kl_check(const std::vector<StateVector>& codewords,
                  const std::vector<PauliOperator>& errors, Parallel par) {
  return run_kl(codewords, errors, par);
}

KlReport kl_check_serial(const std::vector<StateVector>& codewords,
                         const std::vector<PauliOperator>& errors) {
  return run_kl(codewords, errors, Parallel::no);
}

}  // namespace stabgraph::simcheck
