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

#include "stabgraph/gf2.hpp"

using namespace stabgraph;
using gf2::BitMatrix;
using gf2::BitVector;

namespace {

BitMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
  BitMatrix m(rows, cols);
  std::bernoulli_distribution coin(0.5);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, coin(rng));
  return m;
}

// Entry-by-entry triple loop, the independent product oracle.
BitMatrix slow_multiply(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      int acc = 0;
      for (int k = 0; k < a.cols(); ++k) acc ^= a.get(i, k) & b.get(k, j);
      out.set(i, j, acc);
    }
  return out;
}

}  // namespace

TEST_CASE("multiply: identity and the Leung product") {
  std::mt19937 rng(7);
  BitMatrix m = random_matrix(rng, 3, 5);
  CHECK(gf2::multiply(BitMatrix::identity(3), m) == m);

  BitMatrix a_prime = BitMatrix::from_rows({{0, 1, 0, 1}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}});
  BitMatrix b_prime_inv =
      BitMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}});
  BitMatrix gamma_leung =
      BitMatrix::from_rows({{0, 1, 1, 1}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}});
  CHECK(gf2::multiply(a_prime, b_prime_inv) == gamma_leung);
}

TEST_CASE("multiply agrees with the triple-loop oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    int m = 1 + static_cast<int>(rng() % 8);
    int p = 1 + static_cast<int>(rng() % 8);
    BitMatrix a = random_matrix(rng, n, m), b = random_matrix(rng, m, p);
    CHECK(gf2::multiply(a, b) == slow_multiply(a, b));
  }
}

TEST_CASE("inverse: published B' example, identity, and random round trips") {
  BitMatrix b_prime =
      BitMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 0}});
  BitMatrix want = BitMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}});
  CHECK(gf2::inverse(b_prime) == want);
  CHECK(gf2::inverse(BitMatrix::identity(6)) == BitMatrix::identity(6));

  std::mt19937 rng(13);
  int found = 0;
  while (found < 20) {
    int n = 1 + static_cast<int>(rng() % 16);
    BitMatrix m = random_matrix(rng, n, n);
    if (gf2::determinant_mod2(m) == 0) continue;
    ++found;
    CHECK(gf2::multiply(m, gf2::inverse(m)) == BitMatrix::identity(n));
  }
  CHECK_THROWS_AS((void)gf2::inverse(BitMatrix(3, 3)), gf2::SingularMatrix);
}

TEST_CASE("rank: zero matrix, the pentagon submatrix, rank-nullity") {
  CHECK(gf2::rank(BitMatrix(4, 6)) == 0);
  // The E1 = {0,1,2} detectability system of the pentagon code.
  BitMatrix pent = BitMatrix::from_rows({{1, 0, 1}, {1, 0, 0}, {1, 1, 0}});
  CHECK(gf2::rank(pent) == 3);

  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 16);
    int cols = 1 + static_cast<int>(rng() % 16);
    BitMatrix m = random_matrix(rng, rows, cols);
    CHECK(gf2::rank(m) + static_cast<int>(gf2::kernel_basis(m).size()) == cols);
  }
}

TEST_CASE("kernel_basis: identity, the Leung B-dagger, and basis properties") {
  CHECK(gf2::kernel_basis(BitMatrix::identity(5)).empty());

  BitMatrix bt = BitMatrix::from_rows({{0, 0, 1, 1}});
  auto basis = gf2::kernel_basis(bt);
  REQUIRE(basis.size() == 3);
  // Any basis of the same span is acceptable; check the span contains the
  // published vectors.
  BitMatrix span = BitMatrix::from_row_vectors(basis, 4);
  CHECK(gf2::in_row_space(span, BitVector::from_bits({1, 0, 0, 0})));
  CHECK(gf2::in_row_space(span, BitVector::from_bits({0, 1, 0, 0})));
  CHECK(gf2::in_row_space(span, BitVector::from_bits({0, 0, 1, 1})));

  std::mt19937 rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 10);
    int cols = 1 + static_cast<int>(rng() % 10);
    BitMatrix m = random_matrix(rng, rows, cols);
    auto kb = gf2::kernel_basis(m);
    for (const auto& v : kb) CHECK(gf2::multiply(m, v).is_zero());
    if (!kb.empty())
      CHECK(gf2::rank(BitMatrix::from_row_vectors(kb, cols)) == static_cast<int>(kb.size()));
  }
}

TEST_CASE("determinant_mod2: cube, its published LC image, identity") {
  BitMatrix cube = BitMatrix::from_rows({{0, 0, 0, 1, 0, 1, 1, 0},
                                         {0, 0, 0, 1, 0, 1, 0, 1},
                                         {0, 0, 0, 1, 0, 0, 1, 1},
                                         {1, 1, 1, 0, 0, 0, 0, 0},
                                         {0, 0, 0, 0, 0, 1, 1, 1},
                                         {1, 1, 0, 0, 1, 0, 0, 0},
                                         {1, 0, 1, 0, 1, 0, 0, 0},
                                         {0, 1, 1, 0, 1, 0, 0, 0}});
  CHECK(gf2::determinant_mod2(cube) == 1);
  // The published post-complementation matrix (it has two equal rows).
  BitMatrix gamma_prime = BitMatrix::from_rows({{0, 0, 0, 1, 0, 1, 1, 0},
                                                {0, 0, 1, 0, 1, 0, 1, 0},
                                                {0, 1, 0, 0, 1, 1, 0, 0},
                                                {1, 0, 0, 0, 1, 1, 1, 1},
                                                {0, 1, 1, 1, 0, 0, 0, 0},
                                                {1, 0, 1, 1, 0, 0, 1, 1},
                                                {1, 1, 0, 1, 0, 1, 0, 1},
                                                {0, 0, 0, 1, 0, 1, 1, 0}});
  CHECK(gf2::determinant_mod2(gamma_prime) == 0);
  CHECK(gf2::determinant_mod2(BitMatrix::identity(7)) == 1);

  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    BitMatrix m = random_matrix(rng, n, n);
    CHECK((gf2::determinant_mod2(m) == 1) == (gf2::rank(m) == n));
  }
}

TEST_CASE("solve: identity, consistent systems, inconsistent systems") {
  BitVector b = BitVector::from_bits({1, 0, 1, 1});
  auto x = gf2::solve(BitMatrix::identity(4), b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 8);
    int cols = 1 + static_cast<int>(rng() % 8);
    BitMatrix m = random_matrix(rng, rows, cols);
    BitVector x0(cols);
    for (int c = 0; c < cols; ++c) x0.set(c, static_cast<int>(rng() % 2));
    auto sol = gf2::solve(m, gf2::multiply(m, x0));
    REQUIRE(sol.has_value());
    CHECK(gf2::multiply(m, *sol) == gf2::multiply(m, x0));
  }

  CHECK_FALSE(gf2::solve(BitMatrix(3, 3), BitVector::from_bits({1, 0, 0})).has_value());
}

TEST_CASE("matrix text format round trip") {
  BitMatrix m = BitMatrix::from_rows({{0, 1, 1}, {1, 0, 0}});
  std::string text = gf2::format_matrix(m);
  CHECK(text == "2 3\n0 1 1\n1 0 0\n");
  CHECK(gf2::parse_matrix(text) == m);
}
