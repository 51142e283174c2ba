// Copyright 2026 The mrank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mrank/matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "mrank/error.hpp"
#include "mrank/f2.hpp"

namespace mrank {

namespace {

void require_same_field(const FMatrix& a, const FMatrix& b) {
  if (!(a.field() == b.field()))
    throw Error(Errc::DimensionMismatch, "matrices over different fields");
}

// Row echelon form in place; pivots normalized to 1, first nonzero in
// column order. Returns the pivot columns.
std::vector<std::size_t> echelon(FMatrix& a, bool reduce_above) {
  const Field& f = a.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(piv, k), a(r, k));
    const Elem s = f.inv(a(r, c));
    if (s != 1)
      for (std::size_t k = c; k < a.cols(); ++k) a(r, k) = f.mul(a(r, k), s);
    for (std::size_t i = reduce_above ? 0 : r + 1; i < a.rows(); ++i) {
      if (i == r) continue;
      const Elem factor = a(i, c);
      if (factor == 0) continue;
      for (std::size_t k = c; k < a.cols(); ++k)
        a(i, k) = f.sub(a(i, k), f.mul(factor, a(r, k)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

FMatrix::FMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FMatrix FMatrix::identity(FieldPtr field, std::size_t n) {
  FMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FMatrix FMatrix::all_ones(FieldPtr field, std::size_t rows, std::size_t cols) {
  FMatrix m(std::move(field), rows, cols);
  std::fill(m.data_.begin(), m.data_.end(), Elem{1});
  return m;
}

FMatrix FMatrix::from_rows(FieldPtr field,
                           std::initializer_list<std::initializer_list<Elem>> rows) {
  std::vector<std::vector<Elem>> v;
  for (auto& r : rows) v.emplace_back(r);
  return from_rows(std::move(field), v);
}

FMatrix FMatrix::from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows.front().size() : 0;
  FMatrix m(std::move(field), nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw Error(Errc::DimensionMismatch, "ragged row list");
    for (std::size_t j = 0; j < nc; ++j) {
      if (!m.field().contains(rows[i][j]))
        throw Error(Errc::InvalidArgument, "entry outside the field");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

FMatrix FMatrix::diagonal(FieldPtr field, std::span<const Elem> diag) {
  FMatrix m(std::move(field), diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool FMatrix::is_symmetric() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool FMatrix::is_zero() const noexcept {
  for (Elem e : data_)
    if (e) return false;
  return true;
}

FMatrix FMatrix::transpose() const {
  FMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

FMatrix FMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(Errc::DimensionMismatch, "block out of range");
  FMatrix b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void FMatrix::set_block(std::size_t r0, std::size_t c0, const FMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
    throw Error(Errc::DimensionMismatch, "block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

FMatrix FMatrix::scaled(Elem c) const {
  FMatrix out = *this;
  for (Elem& e : out.data_) e = field_->mul(e, c);
  return out;
}

FMatrix FMatrix::permuted(std::span<const std::size_t> perm) const {
  if (!square() || perm.size() != rows_) throw Error(Errc::DimensionMismatch, "bad permutation size");
  FMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(perm[i], perm[j]);
  return out;
}

FMatrix FMatrix::operator+(const FMatrix& b) const {
  require_same_field(*this, b);
  if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(Errc::DimensionMismatch, "add");
  FMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_->add(data_[k], b.data_[k]);
  return out;
}

FMatrix FMatrix::operator-(const FMatrix& b) const {
  require_same_field(*this, b);
  if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(Errc::DimensionMismatch, "sub");
  FMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_->sub(data_[k], b.data_[k]);
  return out;
}

FMatrix FMatrix::operator*(const FMatrix& b) const {
  require_same_field(*this, b);
  if (cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "multiply");
  const Field& f = *field_;
  FMatrix out(field_, rows_, b.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        out(i, j) = f.add(out(i, j), f.mul(a, b(k, j)));
    }
  return out;
}

bool FMatrix::operator==(const FMatrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) return false;
  if (field_ && b.field_ && !(*field_ == *b.field_)) return false;
  return data_ == b.data_;
}

std::size_t rank_generic(const FMatrix& m) {
  FMatrix a = m;
  return echelon(a, false).size();
}

std::size_t rank(const FMatrix& m) {
  if (m.field_ptr() && m.field().q() == 2 && m.cols() >= kF2PackedThreshold)
    return f2::BitMatrix::from(m).rank();
  return rank_generic(m);
}

Elem determinant(const FMatrix& m) {
  if (!m.square()) throw Error(Errc::DimensionMismatch, "determinant of non-square matrix");
  const Field& f = m.field();
  FMatrix a = m;
  Elem det = 1;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(piv, k), a(c, k));
      det = f.neg(det);
    }
    det = f.mul(det, a(c, c));
    const Elem s = f.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      const Elem factor = f.mul(a(i, c), s);
      if (factor == 0) continue;
      for (std::size_t k = c; k < n; ++k) a(i, k) = f.sub(a(i, k), f.mul(factor, a(c, k)));
    }
  }
  return det;
}

FMatrix inverse(const FMatrix& m) {
  if (!m.square()) throw Error(Errc::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  FMatrix aug(m.field_ptr(), n, 2 * n);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < n; ++i) aug(i, n + i) = 1;
  const auto pivots = echelon(aug, true);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(Errc::Singular, "matrix is singular");
  return aug.block(0, n, n, n);
}

FMatrix schur_complement(const FMatrix& a, BlockSplit split) {
  if (!a.is_symmetric()) throw Error(Errc::NotSymmetric, "schur_complement expects a symmetric matrix");
  const std::size_t n = a.rows();
  const std::size_t k = split.head;
  if (k < 1 || k >= n) throw Error(Errc::DimensionMismatch, "split head must satisfy 1 <= k < n");
  const FMatrix a11 = a.block(0, 0, k, k);
  const FMatrix a12 = a.block(0, k, k, n - k);
  const FMatrix a22 = a.block(k, k, n - k, n - k);
  FMatrix a22_inv;
  try {
    a22_inv = inverse(a22);
  } catch (const Error& e) {
    if (e.code() == Errc::Singular)
      throw Error(Errc::SingularTrailingBlock, "trailing block is singular");
    throw;
  }
  return a11 - a12 * a22_inv * a12.transpose();
}

FMatrix congruence_diag(const FMatrix& a, std::span<const Elem> d) {
  if (!a.square() || d.size() != a.rows())
    throw Error(Errc::DimensionMismatch, "congruence_diag: size mismatch");
  for (Elem e : d)
    if (e == 0) throw Error(Errc::ZeroScale, "diagonal scale must be nonzero");
  const Field& f = a.field();
  FMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f.mul(f.mul(d[i], d[j]), a(i, j));
  return out;
}

void write_matrix_text(std::ostream& os, const FMatrix& m) {
  os << m.rows() << ' ' << m.cols() << ' ' << m.field().q() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
}

FMatrix read_matrix_text(std::istream& is) {
  std::size_t rows = 0, cols = 0;
  std::uint32_t q = 0;
  std::string header;
  if (!std::getline(is, header)) throw Error(Errc::BadMatrixText, "missing header");
  std::istringstream hs(header);
  if (!(hs >> rows >> cols >> q)) throw Error(Errc::BadMatrixText, "header must be 'rows cols q'");
  FMatrix m(parse_field(std::to_string(q)), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      long long v;
      if (!(is >> v) || v < 0 || v >= q) throw Error(Errc::BadMatrixText, "bad or missing entry");
      m(i, j) = static_cast<Elem>(v);
    }
  return m;
}

}  // namespace mrank
