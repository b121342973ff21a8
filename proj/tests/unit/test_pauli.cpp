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

#include "stabgraph/pauli.hpp"

using namespace stabgraph;
using pauli::CliffordLayer;
using pauli::PauliOperator;
using pauli::SingleQubitClifford;
using pauli::StabilizerGroupSpec;

namespace {

PauliOperator random_pauli(std::mt19937& rng, int n) {
  PauliOperator p = PauliOperator::identity(n);
  for (int q = 0; q < n; ++q) {
    p.z.set(q, static_cast<int>(rng() % 2));
    p.x.set(q, static_cast<int>(rng() % 2));
  }
  p.phase = static_cast<int>(rng() % 4);
  return p;
}

}  // namespace

TEST_CASE("string parsing and formats") {
  PauliOperator p = pauli::parse_pauli("XZZXI");
  CHECK(p.n == 5);
  CHECK(pauli::to_string(p) == "XZZXI");
  CHECK(pauli::to_compact(p) == "X1Z2Z3X4");
  CHECK(pauli::to_string(pauli::parse_pauli("-YIZ")) == "-YIZ");
  CHECK(pauli::to_compact(PauliOperator::identity(3)) == "I");
}

TEST_CASE("commutes: canonical pair, five-qubit generators, Leung CWS") {
  CHECK_FALSE(pauli::commutes(pauli::parse_pauli("X"), pauli::parse_pauli("Z")));
  CHECK(pauli::commutes(pauli::parse_pauli("XZZXI"), pauli::parse_pauli("IXZZX")));
  std::vector<std::string> scws{"XXXX", "ZZII", "IIZZ", "ZIZI"};
  for (size_t i = 0; i < scws.size(); ++i)
    for (size_t j = i + 1; j < scws.size(); ++j)
      CHECK(pauli::commutes(pauli::parse_pauli(scws[i]), pauli::parse_pauli(scws[j])));
}

TEST_CASE("multiply_pauli: involution, normal form, Leung g1 g2") {
  auto x = pauli::parse_pauli("X");
  auto res = pauli::multiply_pauli(x, x);
  CHECK(res.is_identity_mod_phase());
  CHECK(res.phase == 0);

  // Z X = Z^1 X^1 with no reordering phase in the chosen normal form; Y picks
  // up the i^3 bookkeeping instead.
  auto zx = pauli::multiply_pauli(pauli::parse_pauli("Z"), pauli::parse_pauli("X"));
  CHECK(zx.z.get(0) == 1);
  CHECK(zx.x.get(0) == 1);
  CHECK(zx.phase == 0);
  auto y = pauli::parse_pauli("Y");
  CHECK(y.z == zx.z);
  CHECK(y.x == zx.x);
  CHECK(y.phase == 3);  // Y = i^3 Z X

  auto g1 = pauli::parse_pauli("XZZZ");
  auto g2 = pauli::parse_pauli("ZXII");
  auto prod = pauli::multiply_pauli(g1, g2);
  CHECK(prod.symplectic() ==
        gf2::BitVector::from_bits({1, 1, 1, 1, 1, 1, 0, 0}));  // (1111|1100)
}

TEST_CASE("conjugation tables: H, P, CNOT, CP") {
  auto H = SingleQubitClifford::H();
  CHECK(pauli::conjugate(pauli::parse_pauli("X"), H, 0) == pauli::parse_pauli("Z"));
  CHECK(pauli::conjugate(pauli::parse_pauli("Z"), H, 0) == pauli::parse_pauli("X"));
  CHECK(pauli::conjugate(pauli::parse_pauli("Y"), H, 0) == pauli::parse_pauli("-Y"));

  auto P = SingleQubitClifford::P();
  CHECK(pauli::conjugate(pauli::parse_pauli("X"), P, 0) == pauli::parse_pauli("Y"));
  CHECK(pauli::conjugate(pauli::parse_pauli("Y"), P, 0) == pauli::parse_pauli("-X"));
  CHECK(pauli::conjugate(pauli::parse_pauli("Z"), P, 0) == pauli::parse_pauli("Z"));

  CHECK(pauli::conjugate_cnot(pauli::parse_pauli("XI"), 0, 1) == pauli::parse_pauli("XX"));
  CHECK(pauli::conjugate_cnot(pauli::parse_pauli("IX"), 0, 1) == pauli::parse_pauli("IX"));
  CHECK(pauli::conjugate_cnot(pauli::parse_pauli("ZI"), 0, 1) == pauli::parse_pauli("ZI"));
  CHECK(pauli::conjugate_cnot(pauli::parse_pauli("IZ"), 0, 1) == pauli::parse_pauli("ZZ"));

  CHECK(pauli::conjugate_cp(pauli::parse_pauli("XI"), 0, 1) == pauli::parse_pauli("XZ"));
  CHECK(pauli::conjugate_cp(pauli::parse_pauli("IX"), 0, 1) == pauli::parse_pauli("ZX"));
  CHECK(pauli::conjugate_cp(pauli::parse_pauli("ZI"), 0, 1) == pauli::parse_pauli("ZI"));
  CHECK(pauli::conjugate_cp(pauli::parse_pauli("IZ"), 0, 1) == pauli::parse_pauli("IZ"));
}

TEST_CASE("conjugation is a phase-exact homomorphism") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    PauliOperator a = random_pauli(rng, n), b = random_pauli(rng, n);
    CliffordLayer layer;
    const char* tags[] = {"", "H", "P", "HP", "PH", "HPH"};
    for (int q = 0; q < n; ++q) layer.emplace_back(tags[rng() % 6]);
    auto lhs = pauli::conjugate(pauli::multiply_pauli(a, b), layer);
    auto rhs = pauli::multiply_pauli(pauli::conjugate(a, layer), pauli::conjugate(b, layer));
    CHECK(lhs == rhs);

    int c = static_cast<int>(rng() % n);
    int t = static_cast<int>((c + 1 + rng() % (n - 1)) % n);
    auto lhs2 = pauli::conjugate_cnot(pauli::multiply_pauli(a, b), c, t);
    auto rhs2 =
        pauli::multiply_pauli(pauli::conjugate_cnot(a, c, t), pauli::conjugate_cnot(b, c, t));
    CHECK(lhs2 == rhs2);
  }
}

TEST_CASE("H twice is the identity; CP fixes Z factors") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    PauliOperator p = random_pauli(rng, 3);
    auto once = pauli::conjugate(p, SingleQubitClifford::H(), 1);
    CHECK(pauli::conjugate(once, SingleQubitClifford::H(), 1) == p);
  }
  CHECK(pauli::conjugate_cp(pauli::parse_pauli("ZI"), 0, 1) == pauli::parse_pauli("ZI"));
  CHECK(pauli::conjugate_cp(pauli::parse_pauli("IZ"), 0, 1) == pauli::parse_pauli("IZ"));
}

TEST_CASE("gate words: tags, composition, inverses") {
  CHECK(SingleQubitClifford("HPH").tag() == "HPH");
  CHECK(SingleQubitClifford("HH").tag() == "I");
  CHECK(SingleQubitClifford("PP").tag() == "I");  // PP = Z acts trivially on letters
  auto q = SingleQubitClifford::Q();
  std::mt19937 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    PauliOperator p = random_pauli(rng, 1);
    auto there = pauli::conjugate(p, q, 0);
    CHECK(pauli::conjugate(there, q.inverse(), 0) == p);
  }
}

TEST_CASE("apply_local_clifford reproduces the published codeword stabilizers") {
  // Leung: U = I (x) H (x) H (x) H.
  StabilizerGroupSpec leung{4,
                            {pauli::parse_pauli("XXXX"), pauli::parse_pauli("ZZII"),
                             pauli::parse_pauli("IIZZ"), pauli::parse_pauli("ZIZI")}};
  auto layer = pauli::layer_from_tags({"I", "H", "H", "H"});
  auto out = pauli::apply_local_clifford(leung, layer);
  StabilizerGroupSpec want{4,
                           {pauli::parse_pauli("XZZZ"), pauli::parse_pauli("ZXII"),
                            pauli::parse_pauli("IIXX"), pauli::parse_pauli("ZIXI")}};
  for (size_t i = 0; i < want.generators.size(); ++i)
    CHECK(out.generators[i].equal_mod_phase(want.generators[i]));

  // Grassl: H2 H3 H4 maps the CWS group onto the published primed generators.
  StabilizerGroupSpec grassl{4,
                             {pauli::parse_pauli("XXXX"), pauli::parse_pauli("ZIIZ"),
                              pauli::parse_pauli("IZZI"), pauli::parse_pauli("ZIZI")}};
  auto out2 = pauli::apply_local_clifford(grassl, layer);
  std::vector<std::string> primed{"XZZZ", "ZIIX", "IXXI", "ZIXI"};
  for (size_t i = 0; i < primed.size(); ++i)
    CHECK(out2.generators[i].equal_mod_phase(pauli::parse_pauli(primed[i])));

  // Identity layer leaves the group untouched.
  auto out3 = pauli::apply_local_clifford(leung, pauli::identity_layer(4));
  for (size_t i = 0; i < leung.generators.size(); ++i)
    CHECK(out3.generators[i] == leung.generators[i]);
}

TEST_CASE("syndrome and group membership") {
  StabilizerGroupSpec shor{9, {}};
  for (const char* s : {"ZZIIIIIII", "ZIZIIIIII", "IIIZZIIII", "IIIZIZIII", "IIIIIIZZI",
                        "IIIIIIZIZ", "XXXXXXIII", "XXXIIIXXX"})
    shor.generators.push_back(pauli::parse_pauli(s));

  CHECK(pauli::syndrome(PauliOperator::identity(9), shor).is_zero());
  auto z12 = pauli::parse_pauli("ZZIIIIIII");
  CHECK(pauli::syndrome(z12, shor).is_zero());
  CHECK(pauli::in_group_mod_phase(z12, shor));
  CHECK_FALSE(pauli::in_group_mod_phase(pauli::parse_pauli("XIIIIIIII"), shor));
  CHECK_FALSE(pauli::syndrome(pauli::parse_pauli("XIIIIIIII"), shor).is_zero());
}

TEST_CASE("weight") {
  CHECK(pauli::weight(PauliOperator::identity(4)) == 0);
  CHECK(pauli::weight(pauli::parse_pauli("IIIXIZ")) == 2);
  CHECK(pauli::weight(pauli::parse_pauli("YXXY")) == 4);
}

TEST_CASE("commutes agrees with products up to sign") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    PauliOperator a = random_pauli(rng, n), b = random_pauli(rng, n);
    auto ab = pauli::multiply_pauli(a, b);
    auto ba = pauli::multiply_pauli(b, a);
    CHECK(ab.z == ba.z);
    CHECK(ab.x == ba.x);
    bool same_phase = ab.phase == ba.phase;
    CHECK(pauli::commutes(a, b) == same_phase);
  }
}
