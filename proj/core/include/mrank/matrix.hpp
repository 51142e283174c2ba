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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "mrank/field.hpp"

namespace mrank {

/// Dense row-major matrix over a finite field. Value semantics; the field
/// is shared.
class FMatrix {
public:
  FMatrix() = default;
  FMatrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static FMatrix identity(FieldPtr field, std::size_t n);
  static FMatrix all_ones(FieldPtr field, std::size_t rows, std::size_t cols);
  static FMatrix from_rows(FieldPtr field, std::initializer_list<std::initializer_list<Elem>> rows);
  static FMatrix from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows);
  static FMatrix diagonal(FieldPtr field, std::span<const Elem> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  const Field& field() const noexcept { return *field_; }

  Elem operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  std::span<const Elem> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<Elem> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }

  bool is_symmetric() const noexcept;
  bool is_zero() const noexcept;

  FMatrix transpose() const;
  FMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const FMatrix& b);
  FMatrix scaled(Elem c) const;
  /// Symmetric relabeling: result(i, j) = (*this)(perm[i], perm[j]).
  FMatrix permuted(std::span<const std::size_t> perm) const;

  FMatrix operator+(const FMatrix& b) const;
  FMatrix operator-(const FMatrix& b) const;
  FMatrix operator*(const FMatrix& b) const;

  bool operator==(const FMatrix& b) const;

private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

/// Row rank by Gaussian elimination. Matrices over F_2 with at least
/// kF2PackedThreshold columns take the word-parallel path.
std::size_t rank(const FMatrix& m);
/// Always the table-driven elimination, regardless of field.
std::size_t rank_generic(const FMatrix& m);

inline constexpr std::size_t kF2PackedThreshold = 8;

Elem determinant(const FMatrix& m);

/// Throws Error{Singular} when m is not invertible, DimensionMismatch when
/// not square.
FMatrix inverse(const FMatrix& m);

/// Leading block of size `head` and trailing block of size n - head.
struct BlockSplit {
  std::size_t head;
};

/// A11 - A12 * A22^{-1} * A12^T for the split A = [A11 A12; A12^T A22].
/// Throws SingularTrailingBlock when A22 is singular.
FMatrix schur_complement(const FMatrix& a, BlockSplit split);

/// Entry (i, j) becomes d_i * d_j * a_ij. Throws ZeroScale for a zero d_i.
FMatrix congruence_diag(const FMatrix& a, std::span<const Elem> d);

/// "rows cols q" followed by one line of space-separated encodings per row.
void write_matrix_text(std::ostream& os, const FMatrix& m);
/// Inverse of write_matrix_text; the field is rebuilt from q with its
/// default modulus.
FMatrix read_matrix_text(std::istream& is);

}  // namespace mrank
