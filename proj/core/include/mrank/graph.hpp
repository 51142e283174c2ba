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
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mrank/matrix.hpp"

namespace mrank {

inline constexpr std::size_t kMaxVertices = 64;

/// Simple undirected graph on vertices 0..n-1 (printed 1-based). Adjacency
/// rows are bit masks, so n is capped at 64.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept;

  bool has_edge(std::size_t u, std::size_t v) const noexcept { return (adj_[u] >> v) & 1u; }
  std::uint64_t neighbors(std::size_t v) const noexcept { return adj_[v]; }
  std::size_t degree(std::size_t v) const noexcept;

  /// Throws SelfLoop, VertexOutOfRange.
  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  /// Edges (u, v) with u < v, ordered by v then u.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Declared clique; every pair must be adjacent (NotAClique otherwise).
  void set_clique(std::vector<std::size_t> vertices);
  const std::optional<std::vector<std::size_t>>& clique() const noexcept { return clique_; }

  /// Subgraph induced by `vertices`, relabeled 0..k-1 in the given order.
  Graph induced(std::span<const std::size_t> vertices) const;
  /// Relabeled copy: new vertex i is old vertex perm[i].
  Graph permuted(std::span<const std::size_t> perm) const;

  bool operator==(const Graph& o) const noexcept { return n_ == o.n_ && adj_ == o.adj_; }

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> adj_;
  std::optional<std::vector<std::size_t>> clique_;
};

/// "n m" then m lines "u v" with 1 <= u < v <= n. Blank lines and lines
/// starting with '#' are ignored.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// graph6, short form only (n < 63).
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Off-diagonal support of `a` equals the edge set; diagonal is free.
/// Throws DimensionMismatch, NotSymmetric.
bool pattern_matches(const FMatrix& a, const Graph& g);

/// Lexicographically smallest k-clique, if any.
std::optional<std::vector<std::size_t>> find_clique(const Graph& g, std::size_t k);
/// Lexicographically smallest clique of maximum size.
std::vector<std::size_t> max_clique(const Graph& g);

struct Relabeling {
  Graph graph;
  std::vector<std::size_t> perm;  // new vertex i is old vertex perm[i]
};

/// Moves `clique` to positions 0..k-1 (in the given order); the remaining
/// vertices keep their relative order. Throws NotAClique.
Relabeling relabel_clique_first(const Graph& g, std::span<const std::size_t> clique);

std::vector<std::size_t> invert_permutation(std::span<const std::size_t> perm);

/// Full enumeration cap.
inline constexpr std::size_t kMaxEnumerationOrder = 7;

std::uint64_t labeled_graph_count(std::size_t n);
/// Graph whose edge set is the bit mask over pairs ordered as in edges().
Graph graph_from_index(std::size_t n, std::uint64_t mask);
/// Calls fn for all 2^C(n,2) labeled graphs in mask order. Throws
/// TooLargeToEnumerate for n > kMaxEnumerationOrder.
void for_each_labeled_graph(std::size_t n, const std::function<void(const Graph&)>& fn);

/// Uniform labeled graphs: every pair is an edge with probability 1/2, one
/// bit of std::mt19937_64 output per pair, low bits first.
class GraphSampler {
public:
  explicit GraphSampler(std::uint64_t seed) : engine_(seed) {}
  Graph next(std::size_t n);

private:
  bool bit();

  std::mt19937_64 engine_;
  std::uint64_t word_ = 0;
  int left_ = 0;
};

Graph random_graph(std::size_t n, std::uint64_t seed);

}  // namespace mrank
