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

#include "stabgraph/gf2.hpp"

#include <map>
#include <sstream>

namespace stabgraph::gf2 {

BitVector BitVector::from_bits(const std::vector<int>& bits) {
  BitVector v(static_cast<int>(bits.size()));
  for (size_t i = 0; i < bits.size(); ++i) v.set(static_cast<int>(i), bits[i]);
  return v;
}

std::string BitVector::str() const {
  std::string out;
  for (int i = 0; i < len_; ++i) {
    if (i) out += ' ';
    out += static_cast<char>('0' + get(i));
  }
  return out;
}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  BitMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
      throw DimensionMismatch("ragged row list");
    for (int j = 0; j < c; ++j) m.set(i, j, rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  }
  return m;
}

BitMatrix BitMatrix::from_row_vectors(const std::vector<BitVector>& rows, int cols) {
  BitMatrix m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) m.set_row(static_cast<int>(i), rows[i]);
  return m;
}

BitVector BitMatrix::column(int c) const {
  BitVector v(rows_);
  for (int r = 0; r < rows_; ++r) v.set(r, get(r, c));
  return v;
}

bool BitMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (get(i, j) != get(j, i)) return false;
  return true;
}

bool BitMatrix::has_zero_diagonal() const {
  for (int i = 0; i < std::min(rows_, cols_); ++i)
    if (get(i, i)) return false;
  return true;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.set(c, r, get(r, c));
  return t;
}

BitMatrix BitMatrix::operator^(const BitMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("xor shape mismatch");
  BitMatrix m(rows_, cols_);
  for (int r = 0; r < rows_; ++r) m.set_row(r, row(r) ^ o.row(r));
  return m;
}

BitMatrix BitMatrix::submatrix(const std::vector<int>& row_idx,
                               const std::vector<int>& col_idx) const {
  BitMatrix m(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
  for (size_t r = 0; r < row_idx.size(); ++r)
    for (size_t c = 0; c < col_idx.size(); ++c)
      m.set(static_cast<int>(r), static_cast<int>(c), get(row_idx[r], col_idx[c]));
  return m;
}

std::string BitMatrix::str() const {
  std::string out;
  for (int r = 0; r < rows_; ++r) {
    if (r) out += '\n';
    out += row(r).str();
  }
  return out;
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("multiply: a.cols != b.rows");
  BitMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    BitVector acc(b.cols());
    for (int k = 0; k < a.cols(); ++k)
      if (a.get(i, k)) acc ^= b.row(k);
    out.set_row(i, acc);
  }
  return out;
}

BitVector multiply(const BitMatrix& a, const BitVector& v) {
  if (a.cols() != v.len()) throw DimensionMismatch("multiply: a.cols != v.len");
  BitVector out(a.rows());
  for (int i = 0; i < a.rows(); ++i) out.set(i, a.row(i).dot(v));
  return out;
}

namespace {

struct Echelon {
  std::vector<uint64_t> rows;          // reduced rows, in pivot order
  std::map<int, int> pivot_row_of_col; // pivot column -> row index
};

// Plain Gaussian elimination, first-nonzero pivot per column (deterministic).
Echelon reduce(const BitMatrix& m) {
  std::vector<uint64_t> rows;
  rows.reserve(static_cast<size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r).word());
  Echelon e;
  size_t next = 0;
  for (int c = 0; c < m.cols(); ++c) {
    size_t piv = next;
    while (piv < rows.size() && !((rows[piv] >> c) & 1u)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[next], rows[piv]);
    for (size_t i = 0; i < rows.size(); ++i)
      if (i != next && ((rows[i] >> c) & 1u)) rows[i] ^= rows[next];
    e.pivot_row_of_col[c] = static_cast<int>(next);
    ++next;
  }
  rows.resize(next);
  e.rows = std::move(rows);
  return e;
}

}  // namespace

BitMatrix inverse(const BitMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  int n = m.rows();
  if (2 * n > 64) throw DimensionMismatch("inverse: matrix too wide");
  BitMatrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.set(r, c, m.get(r, c));
    aug.set(r, n + r, 1);
  }
  Echelon e = reduce(aug);
  for (int c = 0; c < n; ++c)
    if (!e.pivot_row_of_col.count(c)) throw SingularMatrix();
  BitMatrix out(n, n);
  for (int c = 0; c < n; ++c) {
    uint64_t w = e.rows[static_cast<size_t>(e.pivot_row_of_col[c])];
    for (int j = 0; j < n; ++j) out.set(c, j, static_cast<int>((w >> (n + j)) & 1u));
  }
  return out;
}

int rank(const BitMatrix& m) { return static_cast<int>(reduce(m).rows.size()); }

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
  Echelon e = reduce(m);
  std::vector<BitVector> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (e.pivot_row_of_col.count(c)) continue;
    BitVector v(m.cols());
    v.set(c, 1);
    for (const auto& [pc, pr] : e.pivot_row_of_col)
      if ((e.rows[static_cast<size_t>(pr)] >> c) & 1u) v.set(pc, 1);
    basis.push_back(v);
  }
  return basis;
}

int determinant_mod2(const BitMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
  return rank(m) == m.rows() ? 1 : 0;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
  if (m.rows() != b.len()) throw DimensionMismatch("solve: m.rows != b.len");
  if (m.cols() + 1 > 64) throw DimensionMismatch("solve: matrix too wide");
  BitMatrix aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug.set(r, c, m.get(r, c));
    aug.set(r, m.cols(), b.get(r));
  }
  Echelon e = reduce(aug);
  if (e.pivot_row_of_col.count(m.cols())) return std::nullopt;  // inconsistent
  BitVector x(m.cols());
  for (const auto& [pc, pr] : e.pivot_row_of_col)
    x.set(pc, static_cast<int>((e.rows[static_cast<size_t>(pr)] >> m.cols()) & 1u));
  return x;
}

bool in_row_space(const BitMatrix& m, const BitVector& v) {
  if (m.cols() != v.len()) throw DimensionMismatch("in_row_space: width mismatch");
  Echelon e = reduce(m);
  uint64_t cur = v.word();
  for (const auto& [pc, pr] : e.pivot_row_of_col)
    if ((cur >> pc) & 1u) cur ^= e.rows[static_cast<size_t>(pr)];
  return cur == 0;
}

std::string format_matrix(const BitMatrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n' << m.str() << '\n';
  return os.str();
}

BitMatrix parse_matrix(const std::string& text) {
  std::istringstream is(text);
  int rows = 0, cols = 0;
  if (!(is >> rows >> cols)) throw DimensionMismatch("matrix header parse error");
  BitMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int v;
      if (!(is >> v) || (v != 0 && v != 1)) throw DimensionMismatch("matrix entry parse error");
      m.set(r, c, v);
    }
  return m;
}

}  // namespace stabgraph::gf2
