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

#include "mrank/census.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <thread>

#include "mrank/error.hpp"
#include "mrank/f2.hpp"
#include "mrank/graph.hpp"
#include "mrank/minrank.hpp"

namespace mrank {

namespace {

BigInt pow2(std::size_t e) { return BigInt(1) << e; }

// Runs fn(i) for i in [0, count) on up to `threads` workers, strided.
template <class Fn>
void parallel_for(std::uint64_t count, unsigned threads, Fn fn) {
  const unsigned t = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::uint64_t>(count, 1))));
  if (t == 1) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i, 0u);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < t; ++w)
    pool.emplace_back([&, w] {
      for (std::uint64_t i = w; i < count; i += t) fn(i, w);
    });
}

}  // namespace

Rational orth_factor(std::size_t n) {
  Rational c = 1;
  if (n <= 2) return c;
  for (std::size_t i = 1; i <= (n - 1) / 2; ++i) c *= 1 - Rational(1, pow2(2 * i));
  return c;
}

BigInt orth_order(std::size_t n) {
  if (n == 0) return 1;
  const Rational o = orth_factor(n) * Rational(pow2(n * (n - 1) / 2));
  if (denominator(o) != 1) throw Error(Errc::NonIntegralDivision, "orthogonal group order is not integral");
  return numerator(o);
}

BigInt n_rank_k_count(std::size_t n, std::size_t k) {
  if (k > n) throw Error(Errc::InvalidArgument, "rank exceeds the row count");
  BigInt out = 1;
  for (std::size_t j = 0; j < k; ++j) out *= pow2(n) - pow2(j);
  return out;
}

BigInt symplectic_order(std::size_t dim) {
  if (dim < 2 || dim % 2) throw Error(Errc::OddDimension, "symplectic dimension must be even and >= 2");
  return orth_order(dim + 1);
}

BigInt theta(std::size_t n, std::size_t k) {
  if (k > n) throw Error(Errc::InvalidArgument, "rank exceeds the order");
  if (k == 0) return 1;
  const BigInt num = n_rank_k_count(n, k);
  auto exact_div = [](const BigInt& a, const BigInt& b) {
    if (a % b != 0) throw Error(Errc::NonIntegralDivision, "N(n,k) is not divisible by the group order");
    return BigInt(a / b);
  };
  BigInt t = exact_div(num, orth_order(k));
  if (k % 2 == 0) t += exact_div(num, orth_order(k + 1));
  return t;
}

std::size_t theta_exponent(std::size_t n, std::size_t k) {
  return (2 * n - k + 1) * k / 2;
}

BigInt mr_le_k_graph_bound(std::size_t n, std::size_t k) {
  return pow2(theta_exponent(n, k) + 4);
}

bool orth_and_rank_bounds_hold(std::size_t n, std::size_t k) {
  const Rational c = orth_factor(n);
  if (!(c <= 1 && c > Rational(1, 4))) return false;
  if (k == 0 || k > n) return true;
  const BigInt count = n_rank_k_count(n, k);
  return pow2(n * k) > count && count > pow2(n * k - 2);
}

bool theta_bounds_hold(std::size_t n, std::size_t k) {
  if (k == 0) return true;
  const std::size_t e = theta_exponent(n, k);
  const BigInt t = theta(n, k);
  // 2^{e-2} < t  <=>  2^e < 4t (e may be below 2 only when n = k = 1)
  return pow2(e) < 4 * t && t < pow2(e + 3);
}

ProductBound product_bound_check(std::size_t n) {
  if (n < 2) throw Error(Errc::InvalidArgument, "product bound needs n >= 2");
  ProductBound out;
  out.product = 1;
  for (std::size_t j = 1; j < n; ++j) out.product *= 1 - Rational(1, pow2(j));
  out.holds = out.product > Rational(1, 4) && out.product < 1;
  return out;
}

std::vector<std::uint64_t> brute_symmetric_rank_census(std::size_t n) {
  if (n > kMaxBruteCensusOrder)
    throw Error(Errc::TooLarge, "brute census is limited to n <= " + std::to_string(kMaxBruteCensusOrder));
  const std::size_t free = n * (n + 1) / 2;
  std::vector<std::uint64_t> counts(n + 1, 0);
  std::vector<std::uint64_t> rows(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << free); ++mask) {
    std::fill(rows.begin(), rows.end(), 0);
    std::size_t bit = 0;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i <= j; ++i, ++bit)
        if (mask >> bit & 1u) {
          rows[i] |= std::uint64_t(1) << j;
          rows[j] |= std::uint64_t(1) << i;
        }
    ++counts[f2::rank_words(rows)];
  }
  return counts;
}

namespace {

// Counts n x n F_2 matrices T (row bitmasks) with T form T^T == form.
std::uint64_t brute_isometry_count(std::size_t n, const std::vector<std::uint64_t>& form) {
  std::uint64_t count = 0;
  std::vector<std::uint64_t> t(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (n * n)); ++mask) {
    for (std::size_t i = 0; i < n; ++i) t[i] = (mask >> (i * n)) & ((std::uint64_t(1) << n) - 1);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        // (T S T^T)_{ij} = sum_{a,b} t_ia s_ab t_jb
        unsigned acc = 0;
        for (std::size_t a = 0; a < n; ++a)
          if (t[i] >> a & 1u) acc ^= std::popcount(form[a] & t[j]) & 1u;
        if (acc != (form[i] >> j & 1u)) ok = false;
      }
    count += ok;
  }
  return count;
}

}  // namespace

std::uint64_t brute_orthogonal_count(std::size_t n) {
  if (n > 4) throw Error(Errc::TooLarge, "brute orthogonal count is limited to n <= 4");
  std::vector<std::uint64_t> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = std::uint64_t(1) << i;
  return brute_isometry_count(n, id);
}

std::uint64_t brute_symplectic_count(std::size_t dim) {
  if (dim % 2) throw Error(Errc::OddDimension, "symplectic dimension must be even");
  if (dim == 0 || dim > 4) throw Error(Errc::TooLarge, "brute symplectic count needs dim in {2, 4}");
  std::vector<std::uint64_t> j(dim);
  for (std::size_t i = 0; i < dim; ++i) j[i] = std::uint64_t(1) << (i ^ 1u);
  // T^T J T = J  <=>  T J T^T = J for invertible T; count via the transpose.
  return brute_isometry_count(dim, j);
}

CensusReport census_report(std::size_t n, bool brute) {
  CensusReport rep;
  rep.n = n;
  std::vector<std::uint64_t> counts;
  if (brute) counts = brute_symmetric_rank_census(n);
  for (std::size_t k = 0; k <= n; ++k) {
    CensusRow row;
    row.k = k;
    row.theta = theta(n, k);
    if (k >= 1) {
      const std::size_t e = theta_exponent(n, k);
      row.upper = pow2(e + 3);
      row.lower = e >= 2 ? pow2(e - 2) : BigInt(0);
      row.bounds_hold = theta_bounds_hold(n, k);
    }
    if (brute) {
      row.theta_brute = counts[k];
      if (row.theta != *row.theta_brute) rep.brute_matches = false;
    }
    rep.total += row.theta;
    rep.rows.push_back(std::move(row));
  }
  rep.orthogonal = orth_order(n);
  if (n >= 1) rep.symplectic = symplectic_order(2 * n);
  rep.total_matches = rep.total == pow2(n * (n + 1) / 2);
  return rep;
}

AlphaReport alpha_exact(std::size_t n, unsigned threads) {
  if (n == 0 || n > kMaxAlphaExactOrder)
    throw Error(Errc::TooLarge, "exact alpha needs 1 <= n <= " + std::to_string(kMaxAlphaExactOrder));
  const std::uint64_t count = labeled_graph_count(n);
  std::vector<std::vector<std::uint64_t>> hist(std::max(1u, threads), std::vector<std::uint64_t>(n + 1, 0));
  parallel_for(count, threads, [&](std::uint64_t i, unsigned w) {
    ++hist[w][f2_minrank(graph_from_index(n, i)).mr];
  });
  AlphaReport rep;
  rep.n = n;
  rep.mode = AlphaReport::Mode::Exact;
  rep.samples = count;
  rep.histogram.assign(n + 1, 0);
  BigInt sum = 0;
  for (const auto& h : hist)
    for (std::size_t r = 0; r <= n; ++r) rep.histogram[r] += h[r];
  for (std::size_t r = 0; r <= n; ++r) sum += BigInt(rep.histogram[r]) * r;
  rep.exact = Rational(sum, BigInt(n) * BigInt(count));
  rep.estimate = static_cast<double>(*rep.exact);
  return rep;
}

AlphaReport alpha_montecarlo(std::size_t n, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  if (n == 0 || n > kMaxAlphaSampleOrder)
    throw Error(Errc::TooLarge, "Monte Carlo alpha needs 1 <= n <= " + std::to_string(kMaxAlphaSampleOrder));
  if (samples == 0) throw Error(Errc::InvalidArgument, "sample count must be positive");
  GraphSampler sampler(seed);
  std::vector<Graph> graphs;
  graphs.reserve(samples);
  for (std::uint64_t s = 0; s < samples; ++s) graphs.push_back(sampler.next(n));
  std::vector<std::size_t> mr(samples);
  parallel_for(samples, threads, [&](std::uint64_t i, unsigned) { mr[i] = f2_minrank(graphs[i]).mr; });

  AlphaReport rep;
  rep.n = n;
  rep.mode = AlphaReport::Mode::MonteCarlo;
  rep.samples = samples;
  rep.seed = seed;
  rep.histogram.assign(n + 1, 0);
  double sum = 0, sum_sq = 0;
  for (std::size_t v : mr) {
    ++rep.histogram[v];
    const double x = static_cast<double>(v) / static_cast<double>(n);
    sum += x;
    sum_sq += x * x;
  }
  const double m = static_cast<double>(samples);
  rep.estimate = sum / m;
  if (samples > 1) {
    const double var = std::max(0.0, (sum_sq - m * rep.estimate * rep.estimate) / (m - 1));
    rep.stderr_estimate = std::sqrt(var / m);
  }
  return rep;
}

}  // namespace mrank
