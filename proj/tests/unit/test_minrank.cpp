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

#include <random>

#include "mrank/error.hpp"
#include "mrank/minrank.hpp"

using namespace mrank;

namespace {

Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

bool connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::size_t v = 0; v < g.order(); ++v)
      if (frontier >> v & 1u) next |= g.neighbors(v);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (g.order() == 64 ? ~0ull : (1ull << g.order()) - 1);
}

void check_witness(const RankCertificate& c, const Graph& g) {
  REQUIRE(c.is_witness());
  const FMatrix a = c.x * c.s * c.x.transpose();
  REQUIRE(a == c.a);
  REQUIRE(pattern_matches(a, g));
  REQUIRE(rank(a) <= c.r);
}

}  // namespace

TEST_CASE("exhaustive solver examples") {
  const auto f2 = make_field(2);
  CHECK(exhaustive_minrank(complete(4), f2).mr == 1);
  for (auto f : {make_field(2), make_field(5)}) CHECK(exhaustive_minrank(Graph(4), f).mr == 0);
  Graph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  CHECK(exhaustive_minrank(p3, f2).mr == 2);
}

TEST_CASE("exhaustive solver guard") {
  SUBCASE("default guard") {
    try {
      exhaustive_minrank(complete(12), make_field(3, 2));
      FAIL("expected SearchSpaceTooLarge");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::SearchSpaceTooLarge);
    }
  }
  SUBCASE("explicit limit") { CHECK_THROWS_AS(exhaustive_minrank(complete(4), make_field(3), 10), Error); }
}

TEST_CASE("F_2 diagonal solver examples") {
  // K_4 plus a vertex adjacent to exactly two clique vertices
  Graph g = complete(5);
  g.remove_edge(2, 4);
  g.remove_edge(3, 4);
  CHECK(f2_minrank(g).mr == 3);
  CHECK(f2_minrank(complete(5)).mr == 1);
  Graph star(4);
  for (std::size_t v = 1; v < 4; ++v) star.add_edge(0, v);
  CHECK(minrank(star, make_field(2)).mr == 2);
  CHECK_THROWS_AS(f2_minrank(Graph(25)), Error);
}

TEST_CASE("F_2 diagonal solver equals exhaustive on all graphs with n <= 5") {
  const auto f2 = make_field(2);
  for (std::size_t n = 1; n <= 5; ++n)
    for_each_labeled_graph(n, [&](const Graph& g) {
      const auto fast = f2_minrank(g);
      REQUIRE(fast.mr == exhaustive_minrank(g, f2).mr);
      check_witness(fast.certificate, g);
    });
}

TEST_CASE("F_2 diagonal solver matches rank over all diagonals at n = 8") {
  std::mt19937_64 rng(31);
  const auto f2 = make_field(2);
  for (int t = 0; t < 20; ++t) {
    const Graph g = random_graph(8, rng());
    std::size_t best = 8;
    for (std::uint32_t d = 0; d < 256; ++d) {
      FMatrix a(f2, 8, 8);
      for (std::size_t i = 0; i < 8; ++i) {
        a(i, i) = d >> i & 1u;
        for (std::size_t j = 0; j < 8; ++j)
          if (g.has_edge(i, j)) a(i, j) = 1;
      }
      best = std::min(best, rank(a));
    }
    CHECK(f2_minrank(g).mr == best);
  }
}

TEST_CASE("rank_le_search examples") {
  for (auto f : {make_field(2), make_field(3), make_field(5), make_field(3, 2)}) {
    const auto c = rank_le_search(complete(3), f, 1);
    check_witness(c, complete(3));
    CHECK(c.x == FMatrix::all_ones(f, 3, 1));
  }
  // K_{n-2} plus two vertices over F_5
  std::mt19937_64 rng(32);
  const auto f5 = make_field(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 5 + rng() % 4;
    Graph g = random_graph(n, rng());
    for (std::size_t i = 0; i < n - 2; ++i)
      for (std::size_t j = i + 1; j < n - 2; ++j)
        if (!g.has_edge(i, j)) g.add_edge(i, j);
    check_witness(rank_le_search(g, f5, 3), g);
  }
}

TEST_CASE("rank_le_search finds rank-deficient witnesses at a larger target") {
  const auto f3 = make_field(3);
  const auto c = rank_le_search(complete(4), f3, 3);
  check_witness(c, complete(4));
}

TEST_CASE("exhaustion certificates carry statistics") {
  Graph p4(4);
  for (std::size_t i = 0; i < 3; ++i) p4.add_edge(i, i + 1);
  const auto f3 = make_field(3);
  const auto c = rank_le_search(p4, f3, 2);
  CHECK_FALSE(c.is_witness());
  CHECK(c.stats.forms_tried == 2);
  CHECK(c.stats.nodes_per_form.size() == 2);
  CHECK(c.stats.nodes > 0);
  const auto res = minrank(p4, f3);
  CHECK(res.mr == 3);
  REQUIRE(res.lower.has_value());
  CHECK(res.lower->r == 2);
}

TEST_CASE("node limit raises SearchSpaceTooLarge") {
  SearchOptions opts;
  opts.node_limit = 100;
  Graph g = random_graph(14, 5);
  try {
    certificate_minrank(g, make_field(5), opts);
    FAIL("expected SearchSpaceTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SearchSpaceTooLarge);
  }
}

TEST_CASE("minrank examples") {
  Graph g = complete(4);
  g.remove_edge(0, 1);
  CHECK(minrank(g, make_field(3)).mr == 2);
  CHECK(exhaustive_minrank(g, make_field(3)).mr == 2);
}

TEST_CASE("minrank equals exhaustive for every graph with n <= 4") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto f = parse_field(std::to_string(q));
    for (std::size_t n = 1; n <= 4; ++n)
      for_each_labeled_graph(n, [&](const Graph& g) {
        const auto res = minrank(g, f);
        REQUIRE(res.mr == exhaustive_minrank(g, f).mr);
        check_witness(res.certificate, g);
        REQUIRE(res.mr == (g.edge_count() ? res.mr : 0));
      });
  }
}

TEST_CASE("certificate search equals exhaustive on random graphs with n = 5") {
  for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
    const auto f = parse_field(std::to_string(q));
    GraphSampler sampler(q);
    for (int t = 0; t < 40; ++t) {
      const Graph g = sampler.next(5);
      const auto res = certificate_minrank(g, f);
      REQUIRE(res.mr == exhaustive_minrank(g, f).mr);
      check_witness(res.certificate, g);
    }
  }
}

TEST_CASE("complete graphs have minimum rank 1") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
    for (std::size_t n = 2; n <= 8; ++n) CHECK(minrank(complete(n), parse_field(std::to_string(q))).mr == 1);
}

TEST_CASE("minimum rank is at most n - 1 and monotone on induced subgraphs") {
  std::mt19937_64 rng(33);
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const auto f = parse_field(std::to_string(q));
    for (int t = 0; t < 15; ++t) {
      const std::size_t n = 3 + rng() % 5;
      const Graph g = random_graph(n, rng());
      const std::size_t mr = minrank(g, f).mr;
      if (connected(g)) CHECK(mr <= n - 1);
      CHECK((mr == 0) == (g.edge_count() == 0));
      std::vector<std::size_t> keep;
      for (std::size_t v = 0; v < n; ++v)
        if (rng() & 1u) keep.push_back(v);
      CHECK(minrank(g.induced(keep), f).mr <= mr);
    }
  }
}

TEST_CASE("corank-one completion") {
  std::mt19937_64 rng(34);
  for (auto f : {make_field(2), make_field(3), make_field(2, 2), make_field(7)})
    for (int t = 0; t < 20; ++t) {
      const std::size_t n = 2 + rng() % 8;
      const Graph g = random_graph(n, rng());
      const FMatrix a = corank_one_completion(g, f);
      CHECK(pattern_matches(a, g));
      CHECK(rank(a) == n - 1);
    }
}

TEST_CASE("rank cap reports a lower bound") {
  MinRankOptions opts;
  opts.max_rank = 1;
  Graph p4(4);
  for (std::size_t i = 0; i < 3; ++i) p4.add_edge(i, i + 1);
  const auto res = minrank(p4, make_field(3), opts);
  CHECK_FALSE(res.exact);
  CHECK(res.mr == 2);
  CHECK_FALSE(res.certificate.is_witness());
}

TEST_CASE("cross-check agrees") {
  MinRankOptions opts;
  opts.cross_check = true;
  CHECK(minrank(random_graph(5, 8), make_field(5), opts).mr >= 1);
}

TEST_CASE("worker count does not change the certificate") {
  const Graph g = random_graph(8, 77);
  for (auto f : {make_field(3), make_field(5)}) {
    SearchOptions one, four;
    four.threads = 4;
    for (std::size_t r = 1; r <= 3; ++r) {
      const auto a = rank_le_search(g, f, r, one);
      const auto b = rank_le_search(g, f, r, four);
      CHECK(a.is_witness() == b.is_witness());
      CHECK(a.stats.nodes == b.stats.nodes);
      if (a.is_witness()) CHECK(a.x == b.x);
    }
  }
}

TEST_CASE("repeated runs give identical certificates") {
  const Graph g = random_graph(8, 78);
  const auto a = minrank(g, make_field(7));
  const auto b = minrank(g, make_field(7));
  CHECK(a.mr == b.mr);
  CHECK(a.certificate.x == b.certificate.x);
  CHECK(a.certificate.stats.nodes == b.certificate.stats.nodes);
}
