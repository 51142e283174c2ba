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
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mrank {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n) = prod_{i=1}^{floor((n-1)/2)} (1 - 2^{-2i}); C(0) = C(1) = C(2) = 1.
Rational orth_factor(std::size_t n);
/// |O(n, F_2)| = C(n) 2^{n(n-1)/2}; O(0) = 1.
BigInt orth_order(std::size_t n);
/// Number of n x k matrices over F_2 of rank k; N(n, 0) = 1.
BigInt n_rank_k_count(std::size_t n, std::size_t k);
/// |Sym(dim, F_2)| for even dim >= 2; OddDimension otherwise.
BigInt symplectic_order(std::size_t dim);
/// Number of symmetric n x n matrices over F_2 of rank k; theta(n, 0) = 1.
BigInt theta(std::size_t n, std::size_t k);

/// (2n - k + 1) k / 2, the exponent shared by the theta bounds and the
/// graph-count bound; always an integer.
std::size_t theta_exponent(std::size_t n, std::size_t k);
/// 16 * 2^{(2n - k + 1) k / 2}: bound on graphs with mr(F_2, G) <= k.
BigInt mr_le_k_graph_bound(std::size_t n, std::size_t k);

/// 1 >= C(n) > 1/4 and 2^{nk} > N(n,k) > 2^{nk-2}.
bool orth_and_rank_bounds_hold(std::size_t n, std::size_t k);
/// 2^{e-2} < theta(n,k) < 2^{e+3} with e = theta_exponent(n, k).
bool theta_bounds_hold(std::size_t n, std::size_t k);

struct ProductBound {
  Rational product;  // prod_{j=1}^{n-1} (1 - 2^{-j})
  bool holds = false;  // 1/4 < product < 1
};
ProductBound product_bound_check(std::size_t n);

inline constexpr std::size_t kMaxBruteCensusOrder = 5;
/// counts[k] = number of symmetric n x n F_2 matrices of rank k (n <= 5).
std::vector<std::uint64_t> brute_symmetric_rank_census(std::size_t n);
/// Number of Q with Q Q^T = I over F_2 (n <= 4).
std::uint64_t brute_orthogonal_count(std::size_t n);
/// Number of T with T^T J T = J, J a sum of H_2 blocks (dim in {2, 4}).
std::uint64_t brute_symplectic_count(std::size_t dim);

struct CensusRow {
  std::size_t k = 0;
  BigInt theta;
  std::optional<std::uint64_t> theta_brute;
  BigInt lower;  // 2^{e-2}, k >= 1
  BigInt upper;  // 2^{e+3}, k >= 1
  bool bounds_hold = true;
};

struct CensusReport {
  std::size_t n = 0;
  std::vector<CensusRow> rows;
  BigInt orthogonal;  // O(n)
  BigInt symplectic;  // |Sym(2n, F_2)|
  BigInt total;       // sum of theta over k
  bool total_matches = false;  // total == 2^{n(n+1)/2}
  bool brute_matches = true;
};

/// With brute, n <= 5 is required (TooLarge otherwise).
CensusReport census_report(std::size_t n, bool brute);

struct AlphaReport {
  enum class Mode { Exact, MonteCarlo };
  std::size_t n = 0;
  Mode mode = Mode::Exact;
  std::optional<Rational> exact;
  double estimate = 0;
  double stderr_estimate = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  /// histogram[r] = number of graphs (or samples) with mr(F_2, G) = r.
  std::vector<std::uint64_t> histogram;
};

inline constexpr std::size_t kMaxAlphaExactOrder = 6;
inline constexpr std::size_t kMaxAlphaSampleOrder = 24;

/// alpha_n(F_2) over every labeled graph (1 <= n <= 6).
AlphaReport alpha_exact(std::size_t n, unsigned threads = 1);
/// Mean of mr/n over `samples` graphs drawn from GraphSampler(seed), in
/// draw order; the worker count does not affect the result.
AlphaReport alpha_montecarlo(std::size_t n, std::uint64_t samples, std::uint64_t seed,
                             unsigned threads = 1);

}  // namespace mrank
