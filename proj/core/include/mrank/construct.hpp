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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mrank/field.hpp"
#include "mrank/graph.hpp"
#include "mrank/matrix.hpp"
#include "mrank/minrank.hpp"

namespace mrank {

/// B in S(F, H) with unit edge entries and a diagonal making every leading
/// principal minor equal to 1 (so det B = 1). Entries lie in the prime
/// subfield.
FMatrix leading_minor_completion(const Graph& h, const FieldPtr& field);

/// rank n - k + 1 matrix in S(F, G) for a non-prime F and a k-clique in G
/// (4 <= k <= n - 1, n >= 5). The declared clique is used when it has at
/// least k vertices, otherwise the smallest k-clique.
FMatrix nonprime_construction(const Graph& g, std::size_t k, const FieldPtr& field);

/// Attachment pattern of a clique vertex to the three remaining vertices,
/// bit i set when adjacent to the i-th of them.
struct ColumnPatternProfile {
  std::array<std::size_t, 8> counts{};
  /// pattern[v] for every clique vertex v (original labels), else -1.
  std::vector<int> pattern;
};

struct KNMinus3Construction {
  FMatrix a;
  /// 1..4 by the number of edges among the three non-clique vertices
  /// (0 edges: case 1, ..., 3 edges: case 4).
  int case_number = 0;
  /// True when the field has characteristic 2 and the non-prime
  /// construction was used instead; scalar and alphas are then unset.
  bool delegated = false;
  Elem scalar = 0;  // beta (cases 1-3) or a (case 4)
  std::array<Elem, 12> alphas{};
  /// The three non-clique vertices in the order the case matrix uses.
  std::array<std::size_t, 3> outer{};
  ColumnPatternProfile profile;
};

/// Rank <= 4 matrix in S(F, G) when G has an (n-3)-clique, |F| > 3, n >= 5.
KNMinus3Construction k_n_minus_3_details(const Graph& g, const FieldPtr& field);
FMatrix k_n_minus_3_construction(const Graph& g, const FieldPtr& field);

/// alpha_1..alpha_12 used for a case: all ones, except over F_5 in cases 3
/// and 4.
std::array<Elem, 12> case_alphas(const Field& f, int case_number);
/// A_22^{-1} for the case matrix with the given scalar.
FMatrix case_inverse(const FieldPtr& field, int case_number, Elem scalar);
/// Whether 1 + v_g A_22^{-1} v_h^T != 0 for every pair of attachment
/// patterns g, h (including g = h), and the scalar is nonzero.
bool case_scalar_feasible(const FieldPtr& field, int case_number,
                          const std::array<Elem, 12>& alphas, Elem scalar);
/// Every feasible scalar in element order.
std::vector<Elem> case_feasible_scalars(const FieldPtr& field, int case_number,
                                        const std::array<Elem, 12>& alphas);

/// Clique on vertices 1..n-2, three mutually independent vertices n-2,
/// n-1, n, and the clique vertices 1..n-3 attached as: 1 to neither of
/// n-1, n; 2, 3 to n-1 only; 4, 5 to n only; 6, 7 to both; 8..n-3 to
/// neither (n >= 10). Labels here are 1-based; the graph is 0-based.
Graph f3_counterexample_graph(std::size_t n);

/// rank_le_search over F_3 at r = 3 on f3_counterexample_graph(n).
RankCertificate verify_f3_counterexample(std::size_t n, const SearchOptions& opts = {});

struct LargePrimeConstruction {
  FMatrix a;
  std::size_t tries = 0;
};

inline constexpr std::size_t kLargePrimeMin = 1009;
inline constexpr std::size_t kDefaultLargePrimeTries = 1000;

/// Random rank n - k + 1 matrix in S(F_p, G): the first k - 1 clique
/// vertices form the head, the trailing block A_22 (the last clique vertex
/// plus the rest) is sampled until invertible, and the head block is
/// A_12 A_22^{-1} A_12^T, accepted once its off-diagonal is nonzero.
LargePrimeConstruction large_prime_construction(const Graph& g, std::size_t k, std::uint32_t p,
                                                std::uint64_t seed,
                                                std::size_t max_tries = kDefaultLargePrimeTries);

/// Every graph made of K_{n-2} on vertices 0..n-3 plus two vertices, one per
/// attachment profile: the number of clique vertices adjacent to neither,
/// only the first, only the second, or both, and whether the two are
/// adjacent (n >= 3).
std::vector<Graph> clique_plus_two_family(std::size_t n);

}  // namespace mrank
