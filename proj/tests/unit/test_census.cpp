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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mrank/census.hpp"
#include "mrank/error.hpp"
#include "mrank/minrank.hpp"

using namespace mrank;

namespace {

BigInt pow2(std::size_t e) { return BigInt(1) << e; }

// Sum of mr(F_2, G)/n over all labeled graphs, computed by brute force over
// diagonals.
Rational alpha_oracle(std::size_t n) {
  const auto f2 = make_field(2);
  std::uint64_t total = 0, count = 0;
  for_each_labeled_graph(n, [&](const Graph& g) {
    total += exhaustive_minrank(g, f2).mr;
    ++count;
  });
  return Rational(total) / Rational(count * n);
}

}  // namespace

TEST_CASE("theta spot values") {
  CHECK(theta(2, 0) == 1);
  CHECK(theta(2, 1) == 3);
  CHECK(theta(2, 2) == 4);
  for (std::size_t n = 1; n <= 10; ++n) CHECK(theta(n, 1) == pow2(n) - 1);
  CHECK_THROWS_AS(theta(3, 4), Error);
}

TEST_CASE("theta matches brute force and sums to the number of symmetric matrices") {
  for (std::size_t n = 1; n <= kMaxBruteCensusOrder; ++n) {
    const auto counts = brute_symmetric_rank_census(n);
    REQUIRE(counts.size() == n + 1);
    for (std::size_t k = 0; k <= n; ++k) CHECK(theta(n, k) == counts[k]);
  }
  for (std::size_t n = 1; n <= 30; ++n) {
    BigInt total = 0;
    for (std::size_t k = 0; k <= n; ++k) total += theta(n, k);
    CHECK(total == pow2(n * (n + 1) / 2));
  }
}

TEST_CASE("group orders") {
  CHECK(orth_order(0) == 1);
  CHECK(orth_order(1) == 1);
  CHECK(orth_order(2) == 2);
  CHECK(orth_order(3) == 6);
  CHECK(orth_order(4) == 48);
  for (std::size_t n = 1; n <= 4; ++n) CHECK(orth_order(n) == brute_orthogonal_count(n));
  CHECK(symplectic_order(2) == 6);
  CHECK(symplectic_order(4) == 720);
  CHECK(symplectic_order(6) == 1451520);
  CHECK(brute_symplectic_count(2) == 6);
  CHECK(brute_symplectic_count(4) == 720);
  CHECK_THROWS_AS(symplectic_order(3), Error);
}

TEST_CASE("rank-k matrix counts") {
  CHECK(n_rank_k_count(3, 0) == 1);
  CHECK(n_rank_k_count(3, 1) == 7);
  CHECK(n_rank_k_count(3, 3) == 168);
  CHECK_THROWS_AS(n_rank_k_count(2, 3), Error);
}

TEST_CASE("orthogonal factor") {
  CHECK(orth_factor(0) == 1);
  CHECK(orth_factor(2) == 1);
  CHECK(orth_factor(3) == Rational(3, 4));
  CHECK(orth_factor(5) == Rational(3, 4) * Rational(15, 16));
}

TEST_CASE("exponent and bounds") {
  CHECK(theta_exponent(4, 2) == 7);
  CHECK(theta_exponent(5, 3) == 12);
  CHECK(mr_le_k_graph_bound(4, 2) == pow2(11));
  for (std::size_t n = 1; n <= 40; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      REQUIRE(orth_and_rank_bounds_hold(n, k));
      REQUIRE(theta_bounds_hold(n, k));
    }
}

TEST_CASE("product bound") {
  CHECK(product_bound_check(2).product == Rational(1, 2));
  CHECK(product_bound_check(4).product == Rational(21, 64));
  const auto p20 = product_bound_check(20);
  CHECK(p20.holds);
  CHECK(p20.product > Rational(1, 4));
  CHECK(p20.product < Rational(29, 100));
  for (std::size_t n = 2; n <= 60; ++n) CHECK(product_bound_check(n).holds);
}

TEST_CASE("fraction of graphs with small minimum rank vanishes") {
  // bound on #{G : mr <= tn} over 2^{n(n-1)/2}, summed over k <= tn
  for (auto [num, den] : {std::pair{1, 4}, std::pair{1, 2}, std::pair{3, 4}}) {
    Rational last = 2;
    for (std::size_t n = 40; n <= 60; n += 4) {
      const std::size_t kmax = n * num / den;
      BigInt count = 0;
      for (std::size_t k = 0; k <= kmax; ++k) count += mr_le_k_graph_bound(n, k);
      const Rational ratio(count, pow2(n * (n - 1) / 2));
      CHECK(ratio < last);
      last = ratio;
    }
    CHECK(last < Rational(1, 1000));
  }
}

TEST_CASE("census report") {
  const auto r = census_report(4, true);
  CHECK(r.n == 4);
  CHECK(r.rows.size() == 5);
  CHECK(r.total_matches);
  CHECK(r.brute_matches);
  CHECK(r.orthogonal == 48);
  CHECK(r.symplectic == symplectic_order(8));
  for (const auto& row : r.rows) {
    CHECK(row.bounds_hold);
    REQUIRE(row.theta_brute.has_value());
    CHECK(row.theta == *row.theta_brute);
  }
  CHECK_THROWS_AS(census_report(6, true), Error);
  CHECK_FALSE(census_report(20, false).rows.empty());
}

TEST_CASE("exact alpha matches the exhaustive oracle") {
  CHECK(*alpha_exact(1).exact == 0);
  CHECK(*alpha_exact(2).exact == Rational(1, 4));
  CHECK(*alpha_exact(3).exact == Rational(5, 12));
  for (std::size_t n = 1; n <= 5; ++n) CHECK(*alpha_exact(n).exact == alpha_oracle(n));
  const auto a4 = alpha_exact(4, 2);
  CHECK(*a4.exact == alpha_oracle(4));
  std::uint64_t sum = 0;
  for (auto h : a4.histogram) sum += h;
  CHECK(sum == 64);
  CHECK_THROWS_AS(alpha_exact(7), Error);
}

TEST_CASE("Monte Carlo alpha is reproducible and thread independent") {
  const auto a = alpha_montecarlo(10, 40, 7, 1);
  const auto b = alpha_montecarlo(10, 40, 7, 3);
  CHECK(a.estimate == b.estimate);
  CHECK(a.histogram == b.histogram);
  CHECK(a.samples == 40);
  CHECK(a.estimate > 0.3);
  CHECK(a.estimate < 1.0);
  CHECK(a.stderr_estimate > 0);
  CHECK_THROWS_AS(alpha_montecarlo(25, 10, 1), Error);
}
