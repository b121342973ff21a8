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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabgraph::gf2 {

struct SingularMatrix : std::runtime_error {
  SingularMatrix() : std::runtime_error("matrix is singular mod 2") {}
};

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Vector over GF(2). Coordinates are packed into a single word; lengths are
/// capped at 64, which covers every object in this codebase (2n <= 24).
class BitVector {
 public:
  BitVector() : len_(0), bits_(0) {}
  explicit BitVector(int len) : len_(len), bits_(0) { check_len(len); }
  BitVector(int len, uint64_t bits) : len_(len), bits_(bits) {
    check_len(len);
    if (len < 64) bits_ &= (uint64_t{1} << len) - 1;
  }
  static BitVector unit(int len, int i) {
    BitVector v(len);
    v.set(i, 1);
    return v;
  }
  static BitVector from_bits(const std::vector<int>& bits);

  int len() const { return len_; }
  uint64_t word() const { return bits_; }
  int get(int i) const {
    bounds(i);
    return static_cast<int>((bits_ >> i) & 1u);
  }
  void set(int i, int value) {
    bounds(i);
    if (value & 1)
      bits_ |= uint64_t{1} << i;
    else
      bits_ &= ~(uint64_t{1} << i);
  }
  int weight() const { return __builtin_popcountll(bits_); }
  bool is_zero() const { return bits_ == 0; }

  BitVector operator^(const BitVector& o) const {
    same_len(o);
    return BitVector(len_, bits_ ^ o.bits_);
  }
  BitVector& operator^=(const BitVector& o) {
    same_len(o);
    bits_ ^= o.bits_;
    return *this;
  }
  int dot(const BitVector& o) const {
    same_len(o);
    return __builtin_popcountll(bits_ & o.bits_) & 1;
  }
  bool operator==(const BitVector& o) const = default;
  bool operator<(const BitVector& o) const {
    return len_ != o.len_ ? len_ < o.len_ : bits_ < o.bits_;
  }

  /// "0 1 1 0" style rendering, coordinate 0 first.
  std::string str() const;

 private:
  static void check_len(int len) {
    if (len < 0 || len > 64) throw DimensionMismatch("BitVector length out of range");
  }
  void bounds(int i) const {
    if (i < 0 || i >= len_) throw DimensionMismatch("BitVector index out of range");
  }
  void same_len(const BitVector& o) const {
    if (len_ != o.len_) throw DimensionMismatch("BitVector length mismatch");
  }
  int len_;
  uint64_t bits_;
};

/// Dense matrix over GF(2), rows stored as words. Column count capped at 64.
class BitMatrix {
 public:
  BitMatrix() : rows_(0), cols_(0) {}
  BitMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_(static_cast<size_t>(rows), 0) {
    if (rows < 0 || cols < 0 || cols > 64) throw DimensionMismatch("BitMatrix shape out of range");
  }
  static BitMatrix identity(int n);
  static BitMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static BitMatrix from_row_vectors(const std::vector<BitVector>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int get(int r, int c) const {
    bounds(r, c);
    return static_cast<int>((row_[static_cast<size_t>(r)] >> c) & 1u);
  }
  void set(int r, int c, int value) {
    bounds(r, c);
    if (value & 1)
      row_[static_cast<size_t>(r)] |= uint64_t{1} << c;
    else
      row_[static_cast<size_t>(r)] &= ~(uint64_t{1} << c);
  }
  BitVector row(int r) const {
    if (r < 0 || r >= rows_) throw DimensionMismatch("row index out of range");
    return BitVector(cols_, row_[static_cast<size_t>(r)]);
  }
  void set_row(int r, const BitVector& v) {
    if (r < 0 || r >= rows_ || v.len() != cols_) throw DimensionMismatch("set_row mismatch");
    row_[static_cast<size_t>(r)] = v.word();
  }
  BitVector column(int c) const;

  bool operator==(const BitMatrix& o) const = default;
  bool is_symmetric() const;
  bool has_zero_diagonal() const;

  BitMatrix transpose() const;
  BitMatrix operator^(const BitMatrix& o) const;
  BitMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

  std::string str() const;

 private:
  void bounds(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw DimensionMismatch("BitMatrix index out of range");
  }
  int rows_, cols_;
  std::vector<uint64_t> row_;
};

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);
BitVector multiply(const BitMatrix& a, const BitVector& v);

/// Inverse via Gauss-Jordan; throws SingularMatrix when det = 0 mod 2.
BitMatrix inverse(const BitMatrix& m);

int rank(const BitMatrix& m);

/// Reduced-echelon free-variable basis of {v : m v = 0}. Deterministic:
/// first-nonzero pivot per column, free columns in increasing order.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

int determinant_mod2(const BitMatrix& m);

/// Some x with m x = b, or nullopt if the system is inconsistent.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

bool in_row_space(const BitMatrix& m, const BitVector& v);

/// Matrix text format: first line "rows cols", then rows of space-separated 0/1.
std::string format_matrix(const BitMatrix& m);
BitMatrix parse_matrix(const std::string& text);

}  // namespace stabgraph::gf2
