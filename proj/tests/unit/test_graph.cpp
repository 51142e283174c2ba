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
#include <set>

#include "mrank/error.hpp"
#include "mrank/graph.hpp"

using namespace mrank;

namespace {

Errc error_code(auto fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::InvalidArgument;
}

Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

// Smallest k-subset (lexicographic) that is pairwise adjacent.
std::optional<std::vector<std::size_t>> subset_scan(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a)
      for (std::size_t b = a + 1; b < k && ok; ++b) ok = g.has_edge(idx[a], idx[b]);
    if (ok) return idx;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return std::nullopt;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

TEST_CASE("edge list parsing") {
  const Graph k3 = parse_edge_list("3 3\n1 2\n1 3\n2 3");
  CHECK(k3.order() == 3);
  CHECK(k3.edge_count() == 3);
  const Graph e2 = parse_edge_list("2 0");
  CHECK(e2.order() == 2);
  CHECK(e2.edge_count() == 0);
  CHECK(parse_edge_list("# comment\n\n3 1\n2 3\n").has_edge(1, 2));
  CHECK(error_code([] { parse_edge_list("3 1\n1 1"); }) == Errc::SelfLoop);
  CHECK(error_code([] { parse_edge_list("3 2\n1 2\n1 2"); }) == Errc::DuplicateEdge);
  CHECK(error_code([] { parse_edge_list("3 1\n1 4"); }) == Errc::VertexOutOfRange);
  CHECK(error_code([] { parse_edge_list("3"); }) == Errc::BadHeader);
  CHECK(error_code([] { parse_edge_list("3 2\n1 2"); }) == Errc::BadHeader);
}

TEST_CASE("edge list round trip") {
  const Graph g = path(5);
  CHECK(to_graph6(parse_edge_list(to_edge_list(g))) == to_graph6(g));
}

TEST_CASE("graph6 examples") {
  CHECK(to_graph6(complete(3)) == "Bw");
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(parse_graph6("Bw").edge_count() == 3);
  CHECK(parse_graph6("@").order() == 1);
  CHECK(error_code([] { parse_graph6(""); }) == Errc::BadGraph6);
  CHECK(error_code([] { parse_graph6("Bww"); }) == Errc::BadGraph6);
  CHECK(error_code([] { parse_graph6("Bx"); }) == Errc::BadGraph6);  // padding bit set
}

TEST_CASE("graph6 matches a hand encoding") {
  // P_4 = 1-2-3-4: upper triangle in column order 12 13 23 14 24 34 = 1 0 1 0 0 1
  // -> 101001 = 41, plus 63 -> 'h'; n = 4 -> 'C'
  CHECK(to_graph6(path(4)) == "Ch");
}

TEST_CASE("graph6 round trip over every graph with n <= 5") {
  for (std::size_t n = 1; n <= 5; ++n)
    for_each_labeled_graph(n, [&](const Graph& g) {
      const Graph h = parse_graph6(to_graph6(g));
      REQUIRE(h.edges() == g.edges());
    });
}

TEST_CASE("pattern membership") {
  const auto f3 = make_field(3), f7 = make_field(7);
  const Graph k3 = complete(3);
  CHECK(pattern_matches(FMatrix::all_ones(f3, 3, 3), k3));
  CHECK_FALSE(pattern_matches(FMatrix::identity(f3, 3), k3));
  CHECK(pattern_matches(FMatrix::from_rows(f7, {{0, 1}, {1, 5}}), complete(2)));
  CHECK(error_code([&] { pattern_matches(FMatrix::identity(f3, 2), k3); }) == Errc::DimensionMismatch);
}

TEST_CASE("pattern membership is preserved by diagonal congruence") {
  std::mt19937_64 rng(21);
  const auto f5 = make_field(5);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_graph(6, rng());
    FMatrix a(f5, 6, 6);
    for (std::size_t i = 0; i < 6; ++i) {
      a(i, i) = static_cast<Elem>(rng() % 5);
      for (std::size_t j = i + 1; j < 6; ++j)
        if (g.has_edge(i, j)) a(i, j) = a(j, i) = static_cast<Elem>(1 + rng() % 4);
    }
    REQUIRE(pattern_matches(a, g));
    std::vector<Elem> d(6);
    for (auto& e : d) e = static_cast<Elem>(1 + rng() % 4);
    CHECK(pattern_matches(congruence_diag(a, d), g));
  }
}

TEST_CASE("find_clique examples") {
  CHECK(find_clique(complete(5), 4) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK_FALSE(find_clique(path(4), 3).has_value());
  CHECK(find_clique(path(4), 2) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("find_clique agrees with a subset scan for n <= 10") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 10;
    Graph g = random_graph(n, rng());
    if (t % 2) {  // denser instances
      const Graph h = random_graph(n, rng());
      for (auto [u, v] : h.edges())
        if (!g.has_edge(u, v)) g.add_edge(u, v);
    }
    for (std::size_t k = 1; k <= n; ++k) {
      const auto fast = find_clique(g, k);
      REQUIRE(fast == subset_scan(g, k));
    }
    const auto mc = max_clique(g);
    REQUIRE(find_clique(g, mc.size()) == mc);
    if (mc.size() < n) REQUIRE_FALSE(find_clique(g, mc.size() + 1).has_value());
  }
}

TEST_CASE("declared cliques are checked") {
  Graph g = path(3);
  CHECK(error_code([&] { g.set_clique({0, 2}); }) == Errc::NotAClique);
  g.set_clique({0, 1});
  REQUIRE(g.clique().has_value());
}

TEST_CASE("relabel_clique_first") {
  const Graph k3 = complete(3);
  const std::vector<std::size_t> first{0, 1};
  const auto same = relabel_clique_first(k3, first);
  CHECK(same.perm == std::vector<std::size_t>{0, 1, 2});

  Graph g(3);  // edge 2-3 only
  g.add_edge(1, 2);
  const std::vector<std::size_t> c{1, 2};
  const auto rl = relabel_clique_first(g, c);
  CHECK(rl.perm == std::vector<std::size_t>{1, 2, 0});
  CHECK(rl.graph.has_edge(0, 1));
  CHECK(rl.graph.edge_count() == 1);

  const auto inv = invert_permutation(rl.perm);
  for (std::size_t i = 0; i < 3; ++i) CHECK(rl.perm[inv[i]] == i);
  CHECK(rl.graph.permuted(inv).edges() == g.edges());

  const std::vector<std::size_t> bad{0, 1};
  CHECK(error_code([&] { relabel_clique_first(g, bad); }) == Errc::NotAClique);
}

TEST_CASE("labeled graph enumeration") {
  CHECK(labeled_graph_count(3) == 8);
  CHECK(labeled_graph_count(4) == 64);
  std::set<std::string> seen;
  std::uint64_t index = 0;
  for_each_labeled_graph(4, [&](const Graph& g) {
    CHECK(to_graph6(g) == to_graph6(graph_from_index(4, index++)));
    seen.insert(to_graph6(g));
  });
  CHECK(seen.size() == 64);
  CHECK(error_code([] { for_each_labeled_graph(8, [](const Graph&) {}); }) == Errc::TooLargeToEnumerate);
}

TEST_CASE("sampler draws one generator bit per pair, low bits first") {
  std::mt19937_64 ref(99);
  GraphSampler sampler(99);
  const Graph g = sampler.next(12);  // 66 pairs: one full word and two bits
  const std::uint64_t w0 = ref(), w1 = ref();
  std::size_t k = 0;
  for (std::size_t v = 1; v < 12; ++v)
    for (std::size_t u = 0; u < v; ++u, ++k) {
      const bool bit = k < 64 ? (w0 >> k & 1u) : (w1 >> (k - 64) & 1u);
      REQUIRE(g.has_edge(u, v) == bit);
    }
}

TEST_CASE("sampling is reproducible by seed") {
  GraphSampler a(7), b(7);
  for (int i = 0; i < 20; ++i) CHECK(to_graph6(a.next(9)) == to_graph6(b.next(9)));
  CHECK(to_graph6(random_graph(10, 3)) == to_graph6(random_graph(10, 3)));
}
