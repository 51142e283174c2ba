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
#include <cstdint>
#include <span>
#include <vector>

namespace mrank {
class FMatrix;
}

namespace mrank::f2 {

/// Word-parallel matrix over F_2, rows padded to whole 64-bit words.
class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

  /// Requires m to be over F_2.
  static BitMatrix from(const FMatrix& m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t i, std::size_t j) const noexcept {
    return (data_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool v) noexcept {
    auto& w = data_[i * words_ + j / 64];
    const std::uint64_t bit = std::uint64_t(1) << (j % 64);
    w = v ? (w | bit) : (w & ~bit);
  }

  std::size_t rank() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Rank of a matrix with at most 64 columns given as one word per row.
/// Works in place.
std::size_t rank_words(std::span<std::uint64_t> rows) noexcept;

/// Incremental echelon basis over F_2^64, keyed by lowest set bit.
class EchelonBasis {
public:
  /// Reduces v against the basis; returns the residue.
  std::uint64_t reduce(std::uint64_t v) const noexcept {
    while (v) {
      const int b = __builtin_ctzll(v);
      if (!(mask_ >> b & 1u)) break;
      v ^= pivot_[b];
    }
    return v;
  }
  /// Fully reduced residue (no set bit coincides with a pivot).
  std::uint64_t reduce_full(std::uint64_t v) const noexcept {
    std::uint64_t hits = v & mask_;
    while (hits) {
      const int b = __builtin_ctzll(hits);
      v ^= pivot_[b];
      hits = v & mask_;
    }
    return v;
  }
  /// Adds a nonzero residue produced by reduce_full.
  void insert(std::uint64_t residue) noexcept {
    const int b = __builtin_ctzll(residue);
    pivot_[b] = residue;
    mask_ |= std::uint64_t(1) << b;
    ++size_;
  }
  /// Undoes the insert of `residue`; only valid for the latest insert.
  void erase(std::uint64_t residue) noexcept {
    mask_ &= ~(std::uint64_t(1) << __builtin_ctzll(residue));
    --size_;
  }
  std::size_t size() const noexcept { return size_; }

private:
  std::uint64_t pivot_[64] = {};
  std::uint64_t mask_ = 0;
  std::size_t size_ = 0;
};

}  // namespace mrank::f2
