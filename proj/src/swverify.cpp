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

#include "stabgraph/swverify.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stabgraph::swverify {

using attach::CoincidenceMatrix;
using pauli::PauliOperator;

std::string ErrorConfiguration::str(int k_inputs) const {
  // Paper labeling: inputs 0, 0', 0'' ... precede the output labels.
  std::ostringstream os;
  os << "{";
  for (int i = 0; i < k_inputs; ++i) {
    if (i) os << ",";
    os << "0";
    for (int p = 0; p < i; ++p) os << "'";
  }
  for (int v : outputs) os << "," << v;
  os << "}";
  return os.str();
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Strong: return "STRONG";
    case Verdict::WeakOnly: return "WEAK_ONLY";
    case Verdict::DegenerateHarmless: return "DEGENERATE_HARMLESS";
    case Verdict::Fail: return "FAIL";
  }
  return "?";
}

namespace {

struct Slices {
  std::vector<int> i_rows;  // rows of Y \ E (matrix indices)
  std::vector<int> cols;    // columns of X u E (matrix indices)
};

Slices slices_for(const CoincidenceMatrix& xi, const ErrorConfiguration& e) {
  Slices s;
  std::set<int> in_e(e.outputs.begin(), e.outputs.end());
  for (int i = 1; i <= xi.n_outputs; ++i)
    if (!in_e.count(i)) s.i_rows.push_back(xi.k_inputs + i - 1);
  for (int j = 0; j < xi.k_inputs; ++j) s.cols.push_back(j);
  for (int v : e.outputs) s.cols.push_back(xi.k_inputs + v - 1);
  return s;
}

}  // namespace

bool check_strong(const CoincidenceMatrix& xi, const ErrorConfiguration& e) {
  Slices s = slices_for(xi, e);
  auto m = xi.mat.submatrix(s.i_rows, s.cols);
  return gf2::rank(m) == static_cast<int>(s.cols.size());
}

bool check_weak(const CoincidenceMatrix& xi, const ErrorConfiguration& e) {
  Slices s = slices_for(xi, e);
  int k = xi.k_inputs;
  auto m = xi.mat.submatrix(s.i_rows, s.cols);
  for (const auto& d : gf2::kernel_basis(m)) {
    for (int j = 0; j < k; ++j)
      if (d.get(j)) return false;  // d^X != 0
    for (int xr = 0; xr < k; ++xr) {
      int acc = 0;
      for (size_t t = 0; t < e.outputs.size(); ++t)
        acc ^= xi.mat.get(xr, k + e.outputs[t] - 1) & d.get(k + static_cast<int>(t));
      if (acc) return false;  // Xi[X,E] d^E != 0
    }
  }
  return true;
}

DetectionVerdict classify(const CoincidenceMatrix& xi, const ErrorConfiguration& e,
                          const pauli::StabilizerGroupSpec& frame_stabilizer) {
  DetectionVerdict out;
  if (check_strong(xi, e)) {
    out.tag = Verdict::Strong;
    return out;
  }
  {
    Slices s = slices_for(xi, e);
    auto m = xi.mat.submatrix(s.i_rows, s.cols);
    out.kernel_witnesses = gf2::kernel_basis(m);
  }
  if (check_weak(xi, e)) {
    out.tag = Verdict::WeakOnly;
    return out;
  }
  // Pauli oracle: every nonidentity operator supported inside E (4^|E|-1 of
  // them) with zero syndrome must lie in the stabilizer span.
  int n = xi.n_outputs;
  int w = static_cast<int>(e.outputs.size());
  long total = 1;
  for (int i = 0; i < w; ++i) total *= 4;
  for (long t = 1; t < total; ++t) {
    PauliOperator op = PauliOperator::identity(n);
    long rest = t;
    for (int i = 0; i < w; ++i) {
      int l = static_cast<int>(rest % 4);  // 0=I 1=X 2=Z 3=Y
      rest /= 4;
      int q = e.outputs[static_cast<size_t>(i)] - 1;
      if (l == 1 || l == 3) op.x.set(q, 1);
      if (l == 2 || l == 3) op.z.set(q, 1);
    }
    if (!pauli::syndrome(op, frame_stabilizer).is_zero()) continue;
    if (pauli::in_group_mod_phase(op, frame_stabilizer))
      out.absolved.push_back(op);
    else
      out.offending.push_back(op);
  }
  out.tag = out.offending.empty() ? Verdict::DegenerateHarmless : Verdict::Fail;
  return out;
}

namespace {

std::vector<ErrorConfiguration> configurations(int n, int size) {
  std::vector<ErrorConfiguration> out;
  if (size == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> idx(static_cast<size_t>(size));
  for (int i = 0; i < size; ++i) idx[static_cast<size_t>(i)] = i + 1;
  while (true) {
    out.push_back({idx});
    int i = size - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - (size - 1 - i)) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < size; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

VerifyReport run_verify(const CoincidenceMatrix& xi,
                        const pauli::StabilizerGroupSpec& frame_stabilizer, int detect_target,
                        Parallel par) {
  VerifyReport rep;
  rep.detect_target = detect_target;
  rep.e_target = detect_target / 2;
  rep.n_outputs = xi.n_outputs;
  rep.k_inputs = xi.k_inputs;
  rep.size_counts.assign(static_cast<size_t>(detect_target) + 1, {0, 0, 0, 0});

  // Maximal size first; results are merged in configuration order.
  auto maximal = configurations(xi.n_outputs, detect_target);
  std::vector<DetectionVerdict> verdicts(maximal.size());
  auto worker = [&](long i) {
    verdicts[static_cast<size_t>(i)] =
        classify(xi, maximal[static_cast<size_t>(i)], frame_stabilizer);
  };
  if (par == Parallel::yes) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(maximal.size()); ++i) worker(i);
#else
    for (long i = 0; i < static_cast<long>(maximal.size()); ++i) worker(i);
#endif
  } else {
    for (long i = 0; i < static_cast<long>(maximal.size()); ++i) worker(i);
  }

  std::vector<std::set<std::vector<int>>> strong_at(static_cast<size_t>(detect_target) + 1);
  for (size_t i = 0; i < maximal.size(); ++i) {
    rep.top_level.push_back({maximal[i], verdicts[i]});
    auto& c = rep.size_counts[static_cast<size_t>(detect_target)];
    c[static_cast<size_t>(verdicts[i].tag)] += 1;
    if (verdicts[i].tag == Verdict::Strong)
      strong_at[static_cast<size_t>(detect_target)].insert(maximal[i].outputs);
  }

  // Strong is subset-monotone: a set with a Strong superset is Strong.
  for (int size = detect_target - 1; size >= 0; --size) {
    for (const auto& cfg : configurations(xi.n_outputs, size)) {
      bool covered = false;
      for (const auto& sup : strong_at[static_cast<size_t>(size) + 1]) {
        if (std::includes(sup.begin(), sup.end(), cfg.outputs.begin(), cfg.outputs.end())) {
          covered = true;
          break;
        }
      }
      Verdict tag;
      if (covered) {
        tag = Verdict::Strong;
      } else {
        tag = classify(xi, cfg, frame_stabilizer).tag;
      }
      rep.size_counts[static_cast<size_t>(size)][static_cast<size_t>(tag)] += 1;
      if (tag == Verdict::Strong) strong_at[static_cast<size_t>(size)].insert(cfg.outputs);
    }
  }

  rep.pass = true;
  for (const auto& c : rep.size_counts)
    if (c[static_cast<size_t>(Verdict::Fail)] > 0) rep.pass = false;
  return rep;
}

}  // namespace

std::array<int, 4> VerifyReport::counts() const {
  return size_counts.empty() ? std::array<int, 4>{0, 0, 0, 0} : size_counts.back();
}

std::string VerifyReport::summary_line() const {
  auto c = counts();
  std::ostringstream os;
  os << "strong=" << c[0] << " weak=" << c[1] << " degenerate=" << c[2] << " fail=" << c[3]
     << " verdict=" << (pass ? "PASS" : "FAIL") << "(e=" << e_target << ")";
  return os.str();
}

VerifyReport verify_code(const CoincidenceMatrix& xi,
                         const pauli::StabilizerGroupSpec& frame_stabilizer, int detect_target,
                         Parallel par) {
  return run_verify(xi, frame_stabilizer, detect_target, par);
}

VerifyReport verify_code_serial(const CoincidenceMatrix& xi,
                                const pauli::StabilizerGroupSpec& frame_stabilizer,
                                int detect_target) {
  return run_verify(xi, frame_stabilizer, detect_target, Parallel::no);
}

std::string render(const VerifyReport& report, const pauli::CliffordLayer* frame_to_original) {
  std::ostringstream os;
  for (const auto& [cfg, verdict] : report.top_level) {
    os << "E=" << cfg.str(report.k_inputs) << ": " << verdict_name(verdict.tag);
    if (verdict.tag == Verdict::DegenerateHarmless && !verdict.absolved.empty()) {
      os << " (";
      for (size_t i = 0; i < verdict.absolved.size(); ++i) {
        if (i) os << ", ";
        os << pauli::to_compact(verdict.absolved[i]);
        if (frame_to_original) {
          auto back = pauli::conjugate(verdict.absolved[i], *frame_to_original);
          os << " = " << pauli::to_compact(back) << " in code frame";
        }
      }
      os << " in stabilizer)";
    }
    if (verdict.tag == Verdict::Fail && !verdict.offending.empty()) {
      os << " (logical " << pauli::to_compact(verdict.offending.front()) << ")";
    }
    os << "\n";
  }
  os << report.summary_line() << "\n";
  return os.str();
}

}  // namespace stabgraph::swverify
