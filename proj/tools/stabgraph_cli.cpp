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

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stabgraph/catalog.hpp"
#include "stabgraph/pipeline.hpp"
#include "stabgraph/simcheck.hpp"
#include "stabgraph/swverify.hpp"

namespace sg = stabgraph;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Source {
  std::string catalog_name;
  std::string file_path;
  std::string xi_path;
};

sg::stabcode::StabilizerCode load_code(const Source& src) {
  if (!src.catalog_name.empty()) return sg::catalog::get(src.catalog_name).code;
  return sg::stabcode::parse_code_json(read_file(src.file_path));
}

std::string witness_tags_json(const sg::pauli::CliffordLayer& layer) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& g : layer) arr.push_back(g.tag());
  return arr.dump();
}

std::string dot_of_xi(const sg::attach::CoincidenceMatrix& xi) {
  std::ostringstream os;
  os << "graph code {\n";
  for (int i = 0; i < xi.k_inputs; ++i)
    os << "  i" << i << " [shape=box];\n";
  for (int v = 1; v <= xi.n_outputs; ++v)
    os << "  o" << v << " [shape=circle];\n";
  auto label = [&](int idx) {
    return idx < xi.k_inputs ? "i" + std::to_string(idx)
                             : "o" + std::to_string(idx - xi.k_inputs + 1);
  };
  int d = xi.k_inputs + xi.n_outputs;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (xi.mat.get(i, j)) os << "  " << label(i) << " -- " << label(j) << ";\n";
  os << "}\n";
  return os.str();
}

int cmd_convert(const Source& src, const std::string& format, bool paper_exact) {
  sg::pipeline::Result res;
  if (!src.catalog_name.empty())
    res = sg::pipeline::run_catalog(sg::catalog::get(src.catalog_name), paper_exact);
  else
    res = sg::pipeline::run(load_code(src));

  if (format == "matrix") {
    std::cout << "# graph\n" << sg::gf2::format_matrix(res.standard_form.graph.adjacency);
    std::cout << "# xi k=" << res.xi.k_inputs << "\n" << sg::gf2::format_matrix(res.xi.mat);
    std::cout << "# witness\n";
    for (size_t q = 0; q < res.witness.size(); ++q) {
      if (q) std::cout << ' ';
      std::cout << res.witness[q].tag();
    }
    std::cout << "\n# codewords\n";
    for (const auto& c : res.standard_form.classical_codewords) std::cout << c.str() << "\n";
  } else if (format == "dot") {
    std::cout << dot_of_xi(res.xi);
  } else {  // json
    nlohmann::json j;
    j["n"] = res.xi.n_outputs;
    j["k"] = res.xi.k_inputs;
    std::vector<std::string> graph_rows;
    for (int r = 0; r < res.standard_form.graph.n; ++r)
      graph_rows.push_back(res.standard_form.graph.adjacency.row(r).str());
    j["graph"] = graph_rows;
    j["xi"] = nlohmann::json::parse(sg::attach::to_json(res.xi));
    std::vector<std::string> tags;
    for (const auto& g : res.witness) tags.push_back(g.tag());
    j["witness"] = tags;
    std::vector<std::string> words;
    for (const auto& c : res.standard_form.classical_codewords) words.push_back(c.str());
    j["classical_codewords"] = words;
    j["xi_warnings"] = res.xi_report.messages;
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Source& src, int e_target, int detect_override, bool parallel,
               bool paper_exact) {
  sg::attach::CoincidenceMatrix xi;
  sg::pauli::StabilizerGroupSpec frame;
  sg::pauli::CliffordLayer back;
  bool have_back = false;

  if (!src.xi_path.empty()) {
    std::string text = read_file(src.xi_path);
    xi = text.find('{') != std::string::npos ? sg::attach::parse_json(text)
                                             : sg::attach::parse_text(text);
    frame = sg::attach::stabilizer_from_xi(xi);
  } else if (!src.catalog_name.empty()) {
    auto bundle = sg::pipeline::verify_inputs(sg::catalog::get(src.catalog_name), paper_exact);
    xi = bundle.xi;
    frame = bundle.frame_stabilizer;
    back = bundle.frame_to_original;
    have_back = true;
  } else {
    auto res = sg::pipeline::run(load_code(src));
    xi = res.xi;
    frame = res.frame_stabilizer;
    back = sg::pauli::inverse(res.witness);
    have_back = true;
  }

  int detect = detect_override > 0 ? detect_override : 2 * e_target;
  auto report = sg::swverify::verify_code(xi, frame, detect,
                                          parallel ? sg::swverify::Parallel::yes
                                                   : sg::swverify::Parallel::no);
  report.e_target = detect_override > 0 ? detect_override / 2 : e_target;
  std::cout << sg::swverify::render(report, have_back ? &back : nullptr);
  return report.pass ? kExitOk : kExitFail;
}

int cmd_orbit(const Source& src) {
  sg::graphx::Graph g;
  if (!src.catalog_name.empty()) {
    auto res = sg::pipeline::run_catalog(sg::catalog::get(src.catalog_name), true);
    g = res.standard_form.graph;
  } else {
    g = sg::graphx::Graph(sg::gf2::parse_matrix(read_file(src.file_path)));
  }
  auto orbit = sg::graphx::lc_orbit(g);
  std::cout << "orbit size " << orbit.size() << "\n";
  for (size_t i = 0; i < orbit.size(); ++i) {
    std::cout << "# member " << i + 1 << "\n"
              << sg::gf2::format_matrix(orbit[i].adjacency);
  }
  return kExitOk;
}

std::string sci3(double v) {
  std::ostringstream os;
  os.setf(std::ios::scientific);
  os.precision(2);
  os << v;
  return os.str();
}

int cmd_simcheck(const Source& src, bool parallel) {
  const auto& entry = sg::catalog::get(src.catalog_name);
  auto res = sg::pipeline::run_catalog(entry, true);
  auto par = parallel ? sg::simcheck::Parallel::yes : sg::simcheck::Parallel::no;
  bool all_ok = true;
  auto line = [&](const std::string& name, bool ok, const std::string& extra = "") {
    std::cout << name << ": " << (ok ? "pass" : "FAIL");
    if (!extra.empty()) std::cout << " (" << extra << ")";
    std::cout << "\n";
    all_ok = all_ok && ok;
  };

  const auto& graph = res.standard_form.graph;
  auto gs = sg::simcheck::graph_state(graph);
  bool stab_ok = true;
  for (const auto& gen : sg::graphx::graph_code_stabilizer(graph).generators)
    stab_ok = stab_ok && sg::simcheck::check_stabilized(gs, gen, +1.0);
  line("graph-state stabilization", stab_ok);

  // Encoded basis states: orthonormal and +-1 eigenstates of the frame group.
  int k = res.xi.k_inputs;
  std::vector<sg::simcheck::StateVector> codewords;
  for (long b = 0; b < (1L << k); ++b)
    codewords.push_back(sg::simcheck::encode(res.xi, sg::simcheck::StateVector::basis(k, b)));
  bool ortho_ok = true;
  double drift = 0;
  for (size_t i = 0; i < codewords.size(); ++i)
    for (size_t j = 0; j < codewords.size(); ++j) {
      double want = i == j ? 1.0 : 0.0;
      drift = std::max(drift, std::abs(std::abs(sg::simcheck::inner(codewords[i], codewords[j])) - want));
    }
  ortho_ok = drift < 1e-9;
  line("codeword orthonormality", ortho_ok, "drift " + sci3(drift));

  bool eig_ok = true;
  for (const auto& gen : res.frame_stabilizer.generators)
    for (const auto& cw : codewords)
      eig_ok = eig_ok && (sg::simcheck::check_stabilized(cw, gen, +1.0) ||
                          sg::simcheck::check_stabilized(cw, gen, -1.0));
  line("codeword stabilization (mod sign)", eig_ok);

  // Isometry on pseudo-random inputs (fixed seed keeps output reproducible).
  std::mt19937 rng(20260331);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  double iso_drift = 0;
  for (int trial = 0; trial < 4; ++trial) {
    sg::simcheck::StateVector psi1 = sg::simcheck::StateVector::zeros(k);
    sg::simcheck::StateVector psi2 = sg::simcheck::StateVector::zeros(k);
    for (auto& a : psi1.amplitudes) a = {unif(rng), unif(rng)};
    for (auto& a : psi2.amplitudes) a = {unif(rng), unif(rng)};
    psi1.normalize();
    psi2.normalize();
    sg::simcheck::StateVector e1 = sg::simcheck::StateVector::zeros(res.xi.n_outputs);
    sg::simcheck::StateVector e2 = e1;
    for (long b = 0; b < (1L << k); ++b) {
      for (size_t i = 0; i < e1.amplitudes.size(); ++i) {
        e1.amplitudes[i] += psi1.amplitudes[static_cast<size_t>(b)] * codewords[static_cast<size_t>(b)].amplitudes[i];
        e2.amplitudes[i] += psi2.amplitudes[static_cast<size_t>(b)] * codewords[static_cast<size_t>(b)].amplitudes[i];
      }
    }
    iso_drift = std::max(iso_drift, std::abs(sg::simcheck::inner(e1, e2) -
                                             sg::simcheck::inner(psi1, psi2)));
  }
  line("encode isometry", iso_drift < 1e-9, "drift " + sci3(iso_drift));

  // Knill-Laflamme detection checks in the graph frame.
  auto weight_le = [&](int maxw) {
    std::vector<sg::pauli::PauliOperator> errs;
    errs.push_back(sg::pauli::PauliOperator::identity(entry.code.n));
    std::vector<int> stack;
    // all operators of weight 1..maxw
    std::function<void(int, int, sg::pauli::PauliOperator)> rec =
        [&](int start, int left, sg::pauli::PauliOperator cur) {
          if (left == 0) return;
          for (int q = start; q < entry.code.n; ++q)
            for (int l = 0; l < 3; ++l) {
              sg::pauli::PauliOperator next = cur;
              if (l != 0) next.z.set(q, 1);
              if (l != 2) next.x.set(q, 1);
              errs.push_back(next);
              rec(q + 1, left - 1, next);
            }
        };
    rec(0, maxw, sg::pauli::PauliOperator::identity(entry.code.n));
    return errs;
  };

  {
    auto errs = weight_le(1);
    auto rep = sg::simcheck::kl_check(codewords, errs, par);
    line("kl detect weight-1", rep.pass, "max residual " + sci3(rep.max_residual));
  }
  if (entry.declared_distance && *entry.declared_distance >= 3) {
    auto errs = weight_le(*entry.declared_distance - 1);
    // detection form: pairs (I, P) only
    std::vector<sg::simcheck::StateVector> cw = codewords;
    bool ok = true;
    double worst = 0;
    for (const auto& p : errs) {
      std::vector<sg::pauli::PauliOperator> two{sg::pauli::PauliOperator::identity(entry.code.n), p};
      auto rep = sg::simcheck::kl_check(cw, two, par);
      worst = std::max(worst, rep.max_residual);
      ok = ok && rep.pass;
    }
    line("kl detect weight<=" + std::to_string(*entry.declared_distance - 1), ok,
         "max residual " + sci3(worst));
  }
  return all_ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabilizer-code to graph conversion and verification"};
  app.require_subcommand(1);

  auto* cat = app.add_subcommand("catalog", "built-in code catalog");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "list catalog entries");

  Source src;
  std::string format = "json";
  int e_target = 1;
  int detect_override = 0;
  bool no_parallel = false;
  bool no_paper_exact = false;

  auto add_source = [&](CLI::App* cmd, bool with_xi) {
    cmd->add_option("--catalog", src.catalog_name, "catalog entry name");
    cmd->add_option("--file", src.file_path, "code file (JSON)");
    if (with_xi) cmd->add_option("--xi", src.xi_path, "coincidence matrix file");
  };

  auto* conv = app.add_subcommand("convert", "convert a code to its graph and coincidence matrix");
  add_source(conv, false);
  conv->add_option("--format", format, "json|matrix|dot")->default_val("json");
  conv->add_flag("--no-paper-exact", no_paper_exact,
                 "use the plain extraction search instead of recorded layers");

  auto* ver = app.add_subcommand("verify", "run the graph-theoretic detection conditions");
  add_source(ver, true);
  ver->add_option("-e", e_target, "correction target (detects 2e errors)")->default_val(1);
  ver->add_option("--detect", detect_override, "detection target t (overrides -e)");
  ver->add_flag("--no-parallel", no_parallel, "force the serial classification path");
  ver->add_flag("--no-paper-exact", no_paper_exact,
                "use the plain extraction search instead of recorded layers");

  auto* orb = app.add_subcommand("orbit", "enumerate the local-complementation orbit");
  add_source(orb, false);

  auto* sim = app.add_subcommand("simcheck", "dense statevector oracle checks");
  sim->add_option("--catalog", src.catalog_name, "catalog entry name")->required();
  sim->add_flag("--no-parallel", no_parallel, "force the serial oracle path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cat->parsed()) {
      for (const auto& name : sg::catalog::list()) std::cout << name << "\n";
      return kExitOk;
    }
    if (conv->parsed()) {
      if (src.catalog_name.empty() && src.file_path.empty()) {
        std::cerr << "convert: need --catalog or --file\n";
        return kExitUsage;
      }
      return cmd_convert(src, format, !no_paper_exact);
    }
    if (ver->parsed()) {
      if (src.catalog_name.empty() && src.file_path.empty() && src.xi_path.empty()) {
        std::cerr << "verify: need --catalog, --file or --xi\n";
        return kExitUsage;
      }
      return cmd_verify(src, e_target, detect_override, !no_parallel, !no_paper_exact);
    }
    if (orb->parsed()) {
      if (src.catalog_name.empty() && src.file_path.empty()) {
        std::cerr << "orbit: need --catalog or --file\n";
        return kExitUsage;
      }
      return cmd_orbit(src);
    }
    if (sim->parsed()) return cmd_simcheck(src, !no_parallel);
  } catch (const sg::catalog::UnknownCode& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
