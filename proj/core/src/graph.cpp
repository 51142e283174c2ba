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

#include "mrank/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "mrank/error.hpp"

namespace mrank {

Graph::Graph(std::size_t n) : n_(n), adj_(n, 0) {
  if (n > kMaxVertices) throw Error(Errc::TooLarge, "graphs are limited to 64 vertices");
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (auto row : adj_) twice += static_cast<std::size_t>(std::popcount(row));
  return twice / 2;
}

std::size_t Graph::degree(std::size_t v) const noexcept {
  return static_cast<std::size_t>(std::popcount(adj_[v]));
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw Error(Errc::VertexOutOfRange, "vertex out of range");
  if (u == v) throw Error(Errc::SelfLoop, "self loop at vertex " + std::to_string(u + 1));
  adj_[u] |= std::uint64_t(1) << v;
  adj_[v] |= std::uint64_t(1) << u;
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw Error(Errc::VertexOutOfRange, "vertex out of range");
  adj_[u] &= ~(std::uint64_t(1) << v);
  adj_[v] &= ~(std::uint64_t(1) << u);
  clique_.reset();
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t v = 1; v < n_; ++v)
    for (std::size_t u = 0; u < v; ++u)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

void Graph::set_clique(std::vector<std::size_t> vertices) {
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    if (vertices[a] >= n_) throw Error(Errc::VertexOutOfRange, "clique vertex out of range");
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (!has_edge(vertices[a], vertices[b])) throw Error(Errc::NotAClique, "declared clique has a non-edge");
  }
  clique_ = std::move(vertices);
}

Graph Graph::induced(std::span<const std::size_t> vertices) const {
  Graph h(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (has_edge(vertices[a], vertices[b])) h.add_edge(a, b);
  return h;
}

Graph Graph::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != n_) throw Error(Errc::DimensionMismatch, "permutation size differs from graph order");
  Graph h = induced(perm);
  if (clique_) {
    const auto inv = invert_permutation(perm);
    std::vector<std::size_t> mapped;
    for (auto v : *clique_) mapped.push_back(inv[v]);
    h.set_clique(std::move(mapped));
  }
  return h;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      const auto first = out.find_first_not_of(" \t\r");
      if (first == std::string::npos || out[first] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line(line)) throw Error(Errc::BadHeader, "empty edge list");
  std::istringstream hs(line);
  long long n = -1, m = -1;
  std::string extra;
  if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0)
    throw Error(Errc::BadHeader, "header must be 'n m'");
  if (n > static_cast<long long>(kMaxVertices)) throw Error(Errc::TooLarge, "graphs are limited to 64 vertices");
  Graph g(static_cast<std::size_t>(n));
  for (long long e = 0; e < m; ++e) {
    if (!next_line(line)) throw Error(Errc::BadHeader, "fewer edges than announced");
    std::istringstream es(line);
    long long u = 0, v = 0;
    if (!(es >> u >> v)) throw Error(Errc::BadHeader, "edge line must be 'u v'");
    if (u == v) throw Error(Errc::SelfLoop, "self loop at vertex " + std::to_string(u));
    if (u < 1 || v < 1 || u > n || v > n) throw Error(Errc::VertexOutOfRange, "edge " + line);
    if (g.has_edge(u - 1, v - 1)) throw Error(Errc::DuplicateEdge, "edge " + line + " repeated");
    g.add_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto e = g.edges();
  out << g.order() << ' ' << e.size() << '\n';
  for (auto [u, v] : e) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw Error(Errc::BadGraph6, "empty graph6 string");
  const int head = static_cast<unsigned char>(text[0]) - 63;
  if (head < 0 || head > 62) throw Error(Errc::BadGraph6, "only the short form (n < 63) is supported");
  const std::size_t n = static_cast<std::size_t>(head);
  const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (text.size() != 1 + chars) throw Error(Errc::BadGraph6, "length does not match vertex count");
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int c = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if (c < 0 || c > 63) throw Error(Errc::BadGraph6, "character out of range");
      if ((c >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  for (std::size_t c = 1; c < text.size(); ++c) {
    const int v = static_cast<unsigned char>(text[c]) - 63;
    if (v < 0 || v > 63) throw Error(Errc::BadGraph6, "character out of range");
  }
  // padding bits must be zero
  if (bits % 6) {
    const int last = static_cast<unsigned char>(text.back()) - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw Error(Errc::BadGraph6, "nonzero padding bits");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 62) throw Error(Errc::BadGraph6, "only the short form (n < 63) is supported");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0, used = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = used = 0;
      }
    }
  if (used) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

bool pattern_matches(const FMatrix& a, const Graph& g) {
  if (!a.square() || a.rows() != g.order())
    throw Error(Errc::DimensionMismatch, "matrix order differs from graph order");
  if (!a.is_symmetric()) throw Error(Errc::NotSymmetric, "pattern_matches expects a symmetric matrix");
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if ((a(i, j) != 0) != g.has_edge(i, j)) return false;
  return true;
}

namespace {

bool extend_clique(const Graph& g, std::size_t k, std::vector<std::size_t>& current,
                   std::uint64_t candidates) {
  if (current.size() == k) return true;
  while (candidates) {
    if (current.size() + static_cast<std::size_t>(std::popcount(candidates)) < k) return false;
    const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
    candidates &= candidates - 1;
    current.push_back(v);
    // only higher labels, so the first hit is the lexicographically smallest
    const std::uint64_t higher = v + 1 < 64 ? ~((std::uint64_t(2) << v) - 1) : 0;
    if (extend_clique(g, k, current, candidates & g.neighbors(v) & higher)) return true;
    current.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_clique(const Graph& g, std::size_t k) {
  if (k < 1 || k > g.order()) throw Error(Errc::InvalidArgument, "clique size must satisfy 1 <= k <= n");
  std::vector<std::size_t> current;
  const std::uint64_t all = g.order() == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.order()) - 1;
  if (extend_clique(g, k, current, all)) return current;
  return std::nullopt;
}

std::vector<std::size_t> max_clique(const Graph& g) {
  if (g.order() == 0) return {};
  std::vector<std::size_t> best = {0};
  for (std::size_t k = 2; k <= g.order(); ++k) {
    auto c = find_clique(g, k);
    if (!c) break;
    best = std::move(*c);
  }
  return best;
}

std::vector<std::size_t> invert_permutation(std::span<const std::size_t> perm) {
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  return inv;
}

Relabeling relabel_clique_first(const Graph& g, std::span<const std::size_t> clique) {
  std::vector<bool> in(g.order(), false);
  for (std::size_t a = 0; a < clique.size(); ++a) {
    if (clique[a] >= g.order()) throw Error(Errc::VertexOutOfRange, "clique vertex out of range");
    if (in[clique[a]]) throw Error(Errc::NotAClique, "repeated clique vertex");
    in[clique[a]] = true;
    for (std::size_t b = 0; b < a; ++b)
      if (!g.has_edge(clique[a], clique[b])) throw Error(Errc::NotAClique, "vertices are not pairwise adjacent");
  }
  std::vector<std::size_t> perm(clique.begin(), clique.end());
  for (std::size_t v = 0; v < g.order(); ++v)
    if (!in[v]) perm.push_back(v);
  Graph h = g.induced(perm);
  std::vector<std::size_t> head(clique.size());
  for (std::size_t i = 0; i < head.size(); ++i) head[i] = i;
  if (!head.empty()) h.set_clique(head);
  return {std::move(h), std::move(perm)};
}

std::uint64_t labeled_graph_count(std::size_t n) {
  const std::size_t pairs = n * (n ? n - 1 : 0) / 2;
  if (pairs >= 64) throw Error(Errc::TooLargeToEnumerate, "2^C(n,2) does not fit in 64 bits");
  return std::uint64_t(1) << pairs;
}

Graph graph_from_index(std::size_t n, std::uint64_t mask) {
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t v = 1; v < n; ++v)
    for (std::size_t u = 0; u < v; ++u, ++k)
      if ((mask >> k) & 1u) g.add_edge(u, v);
  return g;
}

void for_each_labeled_graph(std::size_t n, const std::function<void(const Graph&)>& fn) {
  if (n > kMaxEnumerationOrder)
    throw Error(Errc::TooLargeToEnumerate, "full enumeration is limited to n <= 7");
  const std::uint64_t count = labeled_graph_count(n);
  for (std::uint64_t mask = 0; mask < count; ++mask) fn(graph_from_index(n, mask));
}

bool GraphSampler::bit() {
  if (left_ == 0) {
    word_ = engine_();
    left_ = 64;
  }
  const bool b = word_ & 1u;
  word_ >>= 1;
  --left_;
  return b;
}

Graph GraphSampler::next(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 1; v < n; ++v)
    for (std::size_t u = 0; u < v; ++u)
      if (bit()) g.add_edge(u, v);
  return g;
}

Graph random_graph(std::size_t n, std::uint64_t seed) {
  GraphSampler s(seed);
  return s.next(n);
}

}  // namespace mrank
