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

#include "mrank/f2.hpp"

#include <utility>

#include "mrank/error.hpp"
#include "mrank/matrix.hpp"

namespace mrank::f2 {

BitMatrix BitMatrix::from(const FMatrix& m) {
  if (m.field().q() != 2) throw Error(Errc::InvalidArgument, "BitMatrix requires F_2 entries");
  BitMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j)) out.set(i, j, true);
  return out;
}

std::size_t BitMatrix::rank() const {
  std::vector<std::uint64_t> a = data_;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t(1) << (c % 64);
    std::size_t piv = r;
    while (piv < rows_ && !(a[piv * words_ + w] & bit)) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (std::size_t k = 0; k < words_; ++k) std::swap(a[piv * words_ + k], a[r * words_ + k]);
    const std::uint64_t* prow = &a[r * words_];
    for (std::size_t i = r + 1; i < rows_; ++i) {
      std::uint64_t* row = &a[i * words_];
      if (!(row[w] & bit)) continue;
      for (std::size_t k = w; k < words_; ++k) row[k] ^= prow[k];
    }
    ++r;
  }
  return r;
}

std::size_t rank_words(std::span<std::uint64_t> rows) noexcept {
  std::size_t r = 0;
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t v = rows[i];
    if (!v) continue;
    const std::uint64_t low = v & (~v + 1);
    for (std::size_t j = i + 1; j < n; ++j)
      if (rows[j] & low) rows[j] ^= v;
    ++r;
  }
  return r;
}

}  // namespace mrank::f2
