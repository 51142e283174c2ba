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
#include <optional>
#include <string>
#include <vector>

#include "mrank/matrix.hpp"

namespace mrank {

/// Congruence-class representatives S for nonsingular symmetric r x r
/// forms. Every symmetric matrix of rank <= r can be written X * S * X^T
/// with X of shape n x r for one of these S.
///
///   characteristic 2: Identity (I_r), Hyperbolic (H_2 + ... + H_2, r even)
///   odd characteristic: Identity, NonsquareTail (diag(1, ..., 1, eps)) with
///   eps the smallest non-square.
struct CanonicalForm {
  enum class Kind { Identity, Hyperbolic, NonsquareTail };
  Kind kind;
  FMatrix matrix;

  std::string label() const;
};

std::vector<CanonicalForm> canonical_rank_forms(const FieldPtr& field, std::size_t r);

/// a == x * form.matrix * x^T with rank(x) == rank(a) == form.matrix.rows().
struct SymmetricDecomposition {
  std::size_t form_index;  // into canonical_rank_forms(field, rank)
  CanonicalForm form;
  FMatrix x;
};

/// Congruence reduction of a symmetric matrix over any supported field.
/// Throws NotSymmetric.
SymmetricDecomposition symmetric_decompose(const FMatrix& a);

enum class F2Form { Gram, AlternatingBlock };

struct F2Decomposition {
  F2Form form;
  FMatrix x;
};

/// F_2 specialization: Gram (a == x x^T) unless the diagonal of a vanishes,
/// in which case a == x (H_2 + ... + H_2) x^T.
F2Decomposition f2_symmetric_decompose(const FMatrix& a);

/// Some invertible P with P^T * from * P == to, found by column-wise
/// backtracking. Intended for small orders (q^k up to a few thousand).
std::optional<FMatrix> find_congruence(const FMatrix& from, const FMatrix& to);

}  // namespace mrank
