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
#include <string>
#include <string_view>
#include <vector>

#include "mrank/forms.hpp"
#include "mrank/graph.hpp"
#include "mrank/matrix.hpp"

namespace mrank {

inline constexpr std::uint64_t kDefaultSearchLimit = 100'000'000;

struct SearchStats {
  std::uint64_t nodes = 0;
  std::size_t forms_tried = 0;
  std::vector<std::uint64_t> nodes_per_form;
};

/// Witness: a = x * s * x^T lies in S(F, G) and has rank <= r.
/// Exhaustion: every factorization over every canonical form was traversed
/// (up to the symmetry reductions described in rank_le_search) and none
/// matched the pattern.
struct RankCertificate {
  enum class Kind { Witness, Exhaustion };
  Kind kind = Kind::Exhaustion;
  std::size_t r = 0;
  FMatrix x;
  FMatrix s;
  std::string form;  // CanonicalForm::label() of s
  FMatrix a;
  SearchStats stats;

  bool is_witness() const noexcept { return kind == Kind::Witness; }
};

enum class Method { Exhaustive, F2Diagonal, CertificateSearch };
std::string_view method_name(Method m) noexcept;

struct MinRankResult {
  std::size_t mr = 0;
  /// False when a rank cap stopped the search; mr is then a lower bound.
  bool exact = true;
  Method method = Method::CertificateSearch;
  RankCertificate certificate;
  /// Exhaustion at mr - 1, when the certificate search produced one.
  std::optional<RankCertificate> lower;
};

struct SearchOptions {
  std::uint64_t node_limit = kDefaultSearchLimit;
  unsigned threads = 1;
};

/// Decides whether some A in S(F, G) has rank <= r.
///
/// Rows x_i in F^r are assigned vertex by vertex (clique first, then by the
/// number of already placed neighbours, ties by label) under the constraint
/// x_i S x_j^T != 0 exactly when ij is an edge, with forward checking on
/// every decided pair. Two reductions keep the tree small:
///   - each row is taken up to a nonzero scalar (first nonzero coordinate 1),
///     which is the congruence A -> D A D by an invertible diagonal D;
///   - the first placed row ranges over one representative per orbit of a
///     group of isometries of S.
/// Isolated vertices get the zero row. Throws SearchSpaceTooLarge once
/// node_limit nodes have been visited.
RankCertificate rank_le_search(const Graph& g, const FieldPtr& field, std::size_t r,
                               const SearchOptions& opts = {});

/// Minimum over every A in S(F, G) with the entries on a spanning forest
/// fixed to 1 (again by diagonal congruence). Guard:
/// (q-1)^(|E| - forest edges) * q^n <= limit, else SearchSpaceTooLarge.
MinRankResult exhaustive_minrank(const Graph& g, const FieldPtr& field,
                                 std::uint64_t limit = kDefaultSearchLimit);

inline constexpr std::size_t kF2DiagonalMaxOrder = 24;

/// Over F_2 every edge entry is 1, so only the 2^n diagonals vary. Branch
/// and bound on an incremental echelon basis.
MinRankResult f2_minrank(const Graph& g);

/// Smallest r with a witness from rank_le_search, for any field. At
/// r = n - 1 the witness is built directly (every graph on n >= 2 vertices
/// admits one).
MinRankResult certificate_minrank(const Graph& g, const FieldPtr& field,
                                  const SearchOptions& opts = {},
                                  std::optional<std::size_t> max_rank = std::nullopt);

struct MinRankOptions {
  SearchOptions search;
  std::optional<std::size_t> max_rank;
  bool cross_check = false;
  std::uint64_t exhaustive_limit = kDefaultSearchLimit;
};

/// Dispatches to f2_minrank for q == 2 and n <= 24, otherwise to
/// certificate_minrank. With cross_check the exhaustive solver runs as well
/// (when within its guard) and a disagreement throws VerificationFailed.
MinRankResult minrank(const Graph& g, const FieldPtr& field, const MinRankOptions& opts = {});

/// Matrix in S(F, G) of rank exactly n - 1 (n >= 2): unit edge entries and
/// a diagonal chosen so the leading minors of order < n are 1 and det = 0.
FMatrix corank_one_completion(const Graph& g, const FieldPtr& field);

/// Builds a witness certificate for a matrix already known to lie in
/// S(F, G), factoring it through symmetric_decompose.
RankCertificate witness_from_matrix(const FMatrix& a, const Graph& g, std::size_t r);

}  // namespace mrank
