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

#include "stabgraph/stabcode.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stabgraph::stabcode {

using pauli::PauliOperator;

StabilizerCode StabilizerCode::from_strings(std::string name, int n,
                                            const std::vector<std::string>& stabilizers,
                                            const std::vector<std::string>& logical_z,
                                            const std::vector<std::string>& logical_x) {
  StabilizerCode code;
  code.name = std::move(name);
  code.n = n;
  code.k = static_cast<int>(logical_z.size());
  for (const auto& s : stabilizers) code.stabilizers.push_back(pauli::parse_pauli(s));
  for (const auto& s : logical_z) code.logical_z.push_back(pauli::parse_pauli(s));
  if (!logical_x.empty()) {
    std::vector<PauliOperator> lx;
    for (const auto& s : logical_x) lx.push_back(pauli::parse_pauli(s));
    code.logical_x = std::move(lx);
  }
  for (const auto& p : code.stabilizers)
    if (p.n != n) throw InconsistentCode("stabilizer length != n");
  return code;
}

ValidationReport validate(const StabilizerCode& code) {
  ValidationReport rep;
  auto add = [&](const std::string& msg) { rep.violations.push_back(msg); };
  if (static_cast<int>(code.stabilizers.size()) != code.n - code.k)
    add("expected n-k stabilizer generators");
  if (static_cast<int>(code.logical_z.size()) != code.k) add("expected k logical Z operators");

  const auto& st = code.stabilizers;
  for (size_t i = 0; i < st.size(); ++i)
    for (size_t j = i + 1; j < st.size(); ++j)
      if (!pauli::commutes(st[i], st[j]))
        add("stabilizers " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
            " anticommute");
  pauli::StabilizerGroupSpec group{code.n, st};
  if (!st.empty() && gf2::rank(pauli::binary_matrix(group)) != static_cast<int>(st.size()))
    add("stabilizer generators are dependent");

  auto check_commutes_with_stabs = [&](const PauliOperator& op, const std::string& label) {
    for (size_t j = 0; j < st.size(); ++j)
      if (!pauli::commutes(op, st[j]))
        add(label + " anticommutes with stabilizer " + std::to_string(j + 1));
    if (!st.empty() && pauli::in_group_mod_phase(op, group)) add(label + " lies in stabilizer span");
  };
  for (size_t i = 0; i < code.logical_z.size(); ++i)
    check_commutes_with_stabs(code.logical_z[i], "logical Z" + std::to_string(i + 1));
  if (code.logical_x) {
    const auto& lx = *code.logical_x;
    if (static_cast<int>(lx.size()) != code.k) add("expected k logical X operators");
    for (size_t i = 0; i < lx.size(); ++i) {
      check_commutes_with_stabs(lx[i], "logical X" + std::to_string(i + 1));
      for (size_t j = 0; j < code.logical_z.size(); ++j) {
        bool anti = !pauli::commutes(lx[i], code.logical_z[j]);
        if (i == j && !anti)
          add("logical X" + std::to_string(i + 1) + " must anticommute with its Z");
        if (i != j && anti)
          add("logical X" + std::to_string(i + 1) + " anticommutes with Z" + std::to_string(j + 1));
      }
    }
  }
  return rep;
}

gf2::BitMatrix stabilizer_matrix(const StabilizerCode& code) {
  pauli::StabilizerGroupSpec group{code.n, code.stabilizers};
  return pauli::binary_matrix(group);
}

std::vector<PauliOperator> synthesize_logical_x(const StabilizerCode& code) {
  if (code.logical_x) return *code.logical_x;
  // Solve, per logical i, for v = (z|x) with:
  //   symplectic(v, S_j) = 0, symplectic(v, Zbar_j) = delta_ij, symplectic(v, Xbar_j<i) = 0.
  // The constraint row for symplectic(v, g) is (x_g | z_g) acting on (z|x).
  int n = code.n;
  std::vector<PauliOperator> found;
  for (int i = 0; i < code.k; ++i) {
    std::vector<gf2::BitVector> rows;
    std::vector<int> rhs;
    auto add_row = [&](const PauliOperator& g, int want) {
      gf2::BitVector row(2 * n);
      for (int q = 0; q < n; ++q) {
        row.set(q, g.x.get(q));
        row.set(n + q, g.z.get(q));
      }
      rows.push_back(row);
      rhs.push_back(want);
    };
    for (const auto& s : code.stabilizers) add_row(s, 0);
    for (int j = 0; j < code.k; ++j) add_row(code.logical_z[static_cast<size_t>(j)], j == i);
    for (const auto& fx : found) add_row(fx, 0);
    gf2::BitMatrix m = gf2::BitMatrix::from_row_vectors(rows, 2 * n);
    auto x0 = gf2::solve(m, gf2::BitVector::from_bits(rhs));
    if (!x0) throw InconsistentCode("no logical X exists for logical " + std::to_string(i + 1));
    // Lexicographically least solution: start from the particular solution and
    // greedily clear high bits using the kernel.
    auto kern = gf2::kernel_basis(m);
    gf2::BitVector best = *x0;
    for (int bit = 2 * n - 1; bit >= 0; --bit) {
      if (!best.get(bit)) continue;
      for (const auto& kv : kern) {
        // use a kernel vector whose highest set bit is exactly `bit`
        int hb = -1;
        for (int t = 2 * n - 1; t >= 0; --t)
          if (kv.get(t)) {
            hb = t;
            break;
          }
        if (hb == bit) {
          best ^= kv;
          break;
        }
      }
    }
    PauliOperator p = PauliOperator::identity(n);
    for (int q = 0; q < n; ++q) {
      p.z.set(q, best.get(q));
      p.x.set(q, best.get(n + q));
    }
    found.push_back(p);
  }
  return found;
}

std::string DistanceResult::str() const {
  if (!exact) return "distance > " + std::to_string(distance);
  return "distance = " + std::to_string(distance);
}

namespace {

// Iterate all weight-w supports and 3^w letter assignments; report the
// lexicographically least logical operator found, or none.
struct WeightScan {
  const StabilizerCode* code;
  gf2::BitMatrix stab_rows;
  std::vector<gf2::BitVector> stab_sym;

  bool is_logical(const PauliOperator& e) const {
    for (const auto& s : stab_sym) {
      // symplectic product of e with stabilizer row
      int acc = 0;
      for (int q = 0; q < code->n; ++q) {
        acc ^= e.z.get(q) & s.get(code->n + q);
        acc ^= e.x.get(q) & s.get(q);
      }
      if (acc) return false;  // detected
    }
    return !gf2::in_row_space(stab_rows, e.symplectic());
  }
};

std::vector<std::vector<int>> all_supports(int n, int w) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(static_cast<size_t>(w));
  for (int i = 0; i < w; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    out.push_back(idx);
    int i = w - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - (w - i)) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < w; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

PauliOperator op_from_support(int n, const std::vector<int>& sup, long letters) {
  PauliOperator e = PauliOperator::identity(n);
  long t = letters;
  for (int q : sup) {
    int l = static_cast<int>(t % 3);  // 0=X, 1=Y, 2=Z
    t /= 3;
    if (l != 0) e.z.set(q, 1);
    if (l != 2) e.x.set(q, 1);
  }
  return e;
}

std::optional<PauliOperator> scan_weight(const WeightScan& scan, int w, Parallel par) {
  int n = scan.code->n;
  auto sups = all_supports(n, w);
  long letters_total = 1;
  for (int i = 0; i < w; ++i) letters_total *= 3;

  std::optional<PauliOperator> best;
  auto consider = [&](const PauliOperator& e, std::optional<PauliOperator>& slot) {
    if (!slot || e.symplectic() < slot->symplectic()) slot = e;
  };

  if (par == Parallel::no) {
    for (const auto& sup : sups)
      for (long t = 0; t < letters_total; ++t) {
        PauliOperator e = op_from_support(n, sup, t);
        if (scan.is_logical(e)) consider(e, best);
      }
    return best;
  }
#ifdef _OPENMP
#pragma omp parallel
  {
    std::optional<PauliOperator> local;
#pragma omp for schedule(dynamic)
    for (long si = 0; si < static_cast<long>(sups.size()); ++si)
      for (long t = 0; t < letters_total; ++t) {
        PauliOperator e = op_from_support(n, sups[static_cast<size_t>(si)], t);
        if (scan.is_logical(e)) consider(e, local);
      }
#pragma omp critical
    if (local) consider(*local, best);
  }
  return best;
#else
  return scan_weight(scan, w, Parallel::no);
#endif
}

DistanceResult run_distance(const StabilizerCode& code, int max_weight, Parallel par) {
  WeightScan scan;
  scan.code = &code;
  scan.stab_rows = stabilizer_matrix(code);
  for (const auto& s : code.stabilizers) scan.stab_sym.push_back(s.symplectic());
  for (int w = 1; w <= max_weight; ++w) {
    auto hit = scan_weight(scan, w, par);
    if (hit) return {true, w, hit, };
  }
  return {false, max_weight, std::nullopt};
}

}  // namespace

DistanceResult distance_oracle(const StabilizerCode& code, int max_weight, Parallel par) {
  return run_distance(code, max_weight, par);
}

DistanceResult distance_oracle_serial(const StabilizerCode& code, int max_weight) {
  return run_distance(code, max_weight, Parallel::no);
}

bool is_degenerate(const StabilizerCode& code, int d) {
  int m = code.n - code.k;
  if (m <= 12) {
    // enumerate the group
    for (long mask = 1; mask < (1L << m); ++mask) {
      PauliOperator acc = PauliOperator::identity(code.n);
      for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1) acc = pauli::multiply_pauli(acc, code.stabilizers[static_cast<size_t>(i)]);
      if (!acc.is_identity_mod_phase() && pauli::weight(acc) < d) return true;
    }
    return false;
  }
  // enumerate low-weight Paulis and test membership instead
  pauli::StabilizerGroupSpec group{code.n, code.stabilizers};
  for (int w = 1; w < d; ++w) {
    for (const auto& sup : all_supports(code.n, w)) {
      long letters_total = 1;
      for (int i = 0; i < w; ++i) letters_total *= 3;
      for (long t = 0; t < letters_total; ++t) {
        PauliOperator e = op_from_support(code.n, sup, t);
        if (pauli::in_group_mod_phase(e, group)) return true;
      }
    }
  }
  return false;
}

StabilizerCode parse_code_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<std::string> lx;
  if (j.contains("logical_x")) lx = j["logical_x"].get<std::vector<std::string>>();
  auto code = StabilizerCode::from_strings(
      j.value("name", std::string("unnamed")), j.at("n").get<int>(),
      j.at("stabilizers").get<std::vector<std::string>>(),
      j.at("logical_z").get<std::vector<std::string>>(), lx);
  if (j.contains("k") && j["k"].get<int>() != code.k)
    throw InconsistentCode("k field disagrees with logical_z count");
  return code;
}

std::string to_code_json(const StabilizerCode& code) {
  nlohmann::json j;
  j["name"] = code.name;
  j["n"] = code.n;
  j["k"] = code.k;
  std::vector<std::string> st, lz;
  for (const auto& p : code.stabilizers) st.push_back(pauli::to_string(p));
  for (const auto& p : code.logical_z) lz.push_back(pauli::to_string(p));
  j["stabilizers"] = st;
  j["logical_z"] = lz;
  if (code.logical_x) {
    std::vector<std::string> lx;
    for (const auto& p : *code.logical_x) lx.push_back(pauli::to_string(p));
    j["logical_x"] = lx;
  }
  return j.dump(2);
}

}  // namespace stabgraph::stabcode
