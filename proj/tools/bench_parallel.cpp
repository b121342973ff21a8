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

// Times the serial reference kernels against the OpenMP ones on the largest
// catalog workloads. Usage: bench_parallel [repeats]

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stabgraph/catalog.hpp"
#include "stabgraph/pipeline.hpp"
#include "stabgraph/simcheck.hpp"
#include "stabgraph/swverify.hpp"

namespace sg = stabgraph;

namespace {

double time_ms(const std::function<void()>& fn, int repeats) {
  using clock = std::chrono::steady_clock;
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    auto t0 = clock::now();
    fn();
    auto t1 = clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-34s serial %9.2f ms   openmp %9.2f ms   speedup %.2fx\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
  int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without openmp; both columns run the serial path\n");
#endif

  const auto& eleven = sg::catalog::get("gottesman-11-1-5");
  auto bundle = sg::pipeline::verify_inputs(eleven, true);

  report("distance_oracle [[11,1,5]] w<=4",
         time_ms([&] { sg::stabcode::distance_oracle_serial(eleven.code, 4); }, repeats),
         time_ms([&] { sg::stabcode::distance_oracle(eleven.code, 4); }, repeats));

  report("verify_code [[11,1,5]] |E|=4",
         time_ms([&] { sg::swverify::verify_code_serial(bundle.xi, bundle.frame_stabilizer, 4); },
                 repeats),
         time_ms([&] { sg::swverify::verify_code(bundle.xi, bundle.frame_stabilizer, 4); },
                 repeats));

  {
    // KL with all weight<=1 errors on the [[11,1,5]] codewords.
    std::vector<sg::simcheck::StateVector> cw;
    for (long b = 0; b < 2; ++b)
      cw.push_back(sg::simcheck::encode(bundle.xi, sg::simcheck::StateVector::basis(1, b)));
    std::vector<sg::pauli::PauliOperator> errs{sg::pauli::PauliOperator::identity(11)};
    for (int q = 0; q < 11; ++q)
      for (int l = 0; l < 3; ++l) {
        sg::pauli::PauliOperator p = sg::pauli::PauliOperator::identity(11);
        if (l != 0) p.z.set(q, 1);
        if (l != 2) p.x.set(q, 1);
        errs.push_back(p);
      }
    report("kl_check [[11,1,5]] weight<=1",
           time_ms([&] { sg::simcheck::kl_check_serial(cw, errs); }, repeats),
           time_ms([&] { sg::simcheck::kl_check(cw, errs); }, repeats));
  }
  return 0;
}
