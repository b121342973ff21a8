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

#include <array>
#include <complex>
#include <vector>

#include "stabgraph/attach.hpp"
#include "stabgraph/stabcode.hpp"

namespace stabgraph::simcheck {

using cplx = std::complex<double>;

struct TooManyQubits : std::runtime_error {
  explicit TooManyQubits(const std::string& what) : std::runtime_error(what) {}
};

/// Dense statevector; qubit 1 is the most significant bit of the index.
struct StateVector {
  int n = 0;
  std::vector<cplx> amplitudes;

  static StateVector zeros(int n);
  static StateVector basis(int n, long index);
  double norm() const;
  void normalize();
};

inline constexpr int kMaxQubits = 12;
inline constexpr double kStabTol = 1e-9;
inline constexpr double kKlTol = 1e-8;

/// Amplitude of |mu> is 2^{-n/2} (-1)^{sum over edges of mu_i mu_j}.
StateVector graph_state(const graphx::Graph& g);

StateVector apply_pauli(const StateVector& s, const pauli::PauliOperator& p);
StateVector apply_single_qubit(const StateVector& s, const std::array<cplx, 4>& u, int qubit);
StateVector apply_clifford_gate(const StateVector& s, const pauli::SingleQubitClifford& g,
                                int qubit);
StateVector apply_layer(const StateVector& s, const pauli::CliffordLayer& layer);
StateVector apply_cz(const StateVector& s, int a, int b);
StateVector apply_cnot(const StateVector& s, int control, int target);
StateVector apply_cp(const StateVector& s, int a, int b);
/// tau_x = sqrt(-i X), tau_z = sqrt(i Z) as 2x2 gates.
StateVector apply_tau_x(const StateVector& s, int qubit);
StateVector apply_tau_z(const StateVector& s, int qubit);
/// Local-complementation unitary exp(-i pi X_a / 4) prod_{b in N(a)} exp(i pi Z_b / 4).
StateVector lc_unitary(const StateVector& s, const graphx::Graph& g, int a);

cplx inner(const StateVector& a, const StateVector& b);
/// || op state - lambda state || < 1e-9 ?
bool check_stabilized(const StateVector& state, const pauli::PauliOperator& op, double lambda);
/// Equality up to one global unit phase, fixed from the largest amplitude.
bool equal_mod_phase(const StateVector& a, const StateVector& b, double tol = kStabTol);

/// SW encoding isometry: (v psi)(y) = sum_x (-1)^{Xi quadratic form on (x,y)} psi(x),
/// then normalized.
StateVector encode(const attach::CoincidenceMatrix& xi, const StateVector& input);

using stabcode::Parallel;

struct KlReport {
  bool pass = false;
  double max_residual = 0.0;
  std::vector<std::string> violations;  // "E1=..., E2=..." per failing pair
};

/// Knill-Laflamme: for every ordered error pair, <c_i| Ea^dag Eb |c_j> must be
/// omega * delta_ij within 1e-8 (omega estimated from the (1,1) entry).
/// Products Ea^dag Eb are deduplicated before evaluation.
KlReport kl_check(const std::vector<StateVector>& codewords,
                  const std::vector<pauli::PauliOperator>& errors, Parallel par = Parallel::yes);
KlReport kl_check_serial(const std::vector<StateVector>& codewords,
                         const std::vector<pauli::PauliOperator>& errors);

}  // namespace stabgraph::simcheck
