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
#include <sstream>

#include "mrank/error.hpp"
#include "mrank/f2.hpp"
#include "mrank/forms.hpp"
#include "mrank/matrix.hpp"

using namespace mrank;

namespace {

FMatrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  FMatrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Elem>(rng() % f->q());
  return m;
}

FMatrix random_symmetric(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
  FMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = static_cast<Elem>(rng() % f->q());
  return m;
}

// Symmetric matrix number `code` in base-q over the upper triangle.
FMatrix symmetric_from_code(const FieldPtr& f, std::size_t n, std::uint64_t code) {
  FMatrix a(f, n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i <= j; ++i) {
      a(i, j) = a(j, i) = static_cast<Elem>(code % f->q());
      code /= f->q();
    }
  return a;
}

std::uint64_t symmetric_count(const FieldPtr& f, std::size_t n) {
  std::uint64_t t = 1;
  for (std::size_t i = 0; i < n * (n + 1) / 2; ++i) t *= f->q();
  return t;
}

// Determinant by cofactor expansion along the first row.
Elem cofactor_det(const FMatrix& m) {
  const Field& f = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Elem acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    FMatrix minor(m.field_ptr(), n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Elem term = f.mul(m(0, j), cofactor_det(minor));
    acc = j % 2 ? f.sub(acc, term) : f.add(acc, term);
  }
  return acc;
}

std::vector<std::size_t> random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i-- > 1;) std::swap(p[i], p[rng() % (i + 1)]);
  return p;
}

}  // namespace

TEST_CASE("rank examples") {
  const auto f2 = make_field(2), f3 = make_field(3);
  CHECK(rank(FMatrix::from_rows(f2, {{0, 1}, {1, 0}})) == 2);
  CHECK(rank(FMatrix::all_ones(f3, 4, 4)) == 1);
  CHECK(rank(FMatrix(f3, 3, 3)) == 0);
  CHECK(rank(FMatrix(f3, 0, 0)) == 0);
}

TEST_CASE("packed F_2 rank agrees with generic elimination") {
  std::mt19937_64 rng(11);
  const auto f2 = make_field(2);
  for (int t = 0; t < 300; ++t) {
    const std::size_t r = 1 + rng() % 40, c = 1 + rng() % 70;
    FMatrix m = random_matrix(f2, r, c, rng);
    if (t % 3 == 0 && r > 2) m.set_block(r - 1, 0, m.block(0, 0, 1, c));  // force dependence
    REQUIRE(rank(m) == rank_generic(m));
  }
}

TEST_CASE("rank is invariant under transpose and symmetric permutation") {
  std::mt19937_64 rng(12);
  for (auto f : {make_field(2), make_field(3), make_field(2, 2), make_field(5), make_field(3, 2)})
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 1 + rng() % 9;
      const FMatrix a = random_matrix(f, n, n, rng);
      CHECK(rank(a) == rank(a.transpose()));
      CHECK(rank(a) == rank(a.permuted(random_perm(n, rng))));
    }
}

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937_64 rng(13);
  for (auto f : {make_field(3), make_field(2, 2), make_field(7), make_field(3, 2)})
    for (int t = 0; t < 50; ++t) {
      const std::size_t n = 1 + rng() % 5;
      const FMatrix sq = random_matrix(f, n, n, rng);
      CHECK(determinant(sq) == cofactor_det(sq));
      CHECK((determinant(sq) != 0) == (rank(sq) == sq.rows()));
    }
}

TEST_CASE("inverse examples") {
  const auto f3 = make_field(3), f5 = make_field(5);
  CHECK(inverse(FMatrix::from_rows(f3, {{1, 0}, {0, 2}})) == FMatrix::from_rows(f3, {{1, 0}, {0, 2}}));
  CHECK(inverse(FMatrix::from_rows(f5, {{0, 0, 1}, {0, 1, 1}, {1, 1, 0}})) ==
        FMatrix::from_rows(f5, {{1, 4, 1}, {4, 1, 0}, {1, 0, 0}}));
  // (1/2)[[-1,1,1],[1,-1,1],[1,1,-1]] with 1/2 = 3 in F_5
  CHECK(inverse(FMatrix::from_rows(f5, {{2, 3, 3}, {3, 2, 3}, {3, 3, 2}})) ==
        FMatrix::from_rows(f5, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  CHECK_THROWS_AS(inverse(FMatrix::all_ones(f5, 2, 2)), Error);
}

TEST_CASE("inverse times matrix is the identity") {
  std::mt19937_64 rng(14);
  for (auto f : {make_field(2), make_field(5), make_field(2, 3), make_field(3, 2), make_field(1009)})
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = 1 + rng() % 7;
      const FMatrix a = random_matrix(f, n, n, rng);
      if (rank(a) < n) {
        CHECK_THROWS_AS(inverse(a), Error);
        continue;
      }
      CHECK(a * inverse(a) == FMatrix::identity(f, n));
      CHECK(inverse(a) * a == FMatrix::identity(f, n));
    }
}

TEST_CASE("schur complement examples and errors") {
  const auto f3 = make_field(3);
  CHECK(schur_complement(FMatrix::all_ones(f3, 2, 2), {1}) == FMatrix(f3, 1, 1));
  FMatrix bd(f3, 4, 4);
  bd.set_block(0, 0, FMatrix::from_rows(f3, {{1, 2}, {2, 0}}));
  bd.set_block(2, 2, FMatrix::from_rows(f3, {{2, 1}, {1, 1}}));
  CHECK(schur_complement(bd, {2}) == FMatrix::from_rows(f3, {{1, 2}, {2, 0}}));
  try {
    schur_complement(FMatrix::from_rows(f3, {{1, 1}, {1, 0}}), {1});
    FAIL("expected SingularTrailingBlock");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SingularTrailingBlock);
  }
  try {
    schur_complement(FMatrix::from_rows(f3, {{1, 1}, {0, 1}}), {1});
    FAIL("expected NotSymmetric");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSymmetric);
  }
}

TEST_CASE("schur identity: rank(A) = rank(A22) + rank(schur)") {
  std::mt19937_64 rng(15);
  int checked = 0;
  for (auto f : {make_field(3), make_field(5)})
    while (checked < 300) {
      const std::size_t n = 2 + rng() % 7, k = 1 + rng() % (n - 1);
      const FMatrix a = random_symmetric(f, n, rng);
      const FMatrix a22 = a.block(k, k, n - k, n - k);
      if (rank(a22) < n - k) continue;
      CHECK(rank(a) == rank(a22) + rank(schur_complement(a, {k})));
      ++checked;
    }
}

TEST_CASE("congruence_diag examples") {
  const auto f3 = make_field(3);
  const FMatrix a = FMatrix::from_rows(f3, {{0, 2}, {2, 0}});
  const std::vector<Elem> ones{1, 1}, d{1, 2};
  CHECK(congruence_diag(a, ones) == a);
  CHECK(congruence_diag(a, d) == FMatrix::from_rows(f3, {{0, 1}, {1, 0}}));
  const std::vector<Elem> zero{1, 0};
  CHECK_THROWS_AS(congruence_diag(a, zero), Error);
}

TEST_CASE("congruence_diag preserves rank on random 6x6 matrices over F_5") {
  std::mt19937_64 rng(16);
  const auto f5 = make_field(5);
  for (int t = 0; t < 100; ++t) {
    const FMatrix a = random_matrix(f5, 6, 6, rng);
    std::vector<Elem> d(6);
    for (auto& e : d) e = static_cast<Elem>(1 + rng() % 4);
    CHECK(rank(congruence_diag(a, d)) == rank(a));
  }
}

TEST_CASE("diagonal congruence preserves rank and zero pattern exhaustively") {
  for (auto f : {make_field(2), make_field(3), make_field(2, 2)})
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<std::vector<Elem>> scales(1);
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<Elem>> next;
        for (const auto& s : scales)
          for (Elem e = 1; e < f->q(); ++e) {
            next.push_back(s);
            next.back().push_back(e);
          }
        scales = std::move(next);
      }
      for (std::uint64_t code = 0; code < symmetric_count(f, n); ++code) {
        const FMatrix a = symmetric_from_code(f, n, code);
        for (const auto& d : scales) {
          const FMatrix b = congruence_diag(a, d);
          REQUIRE(rank(b) == rank(a));
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) REQUIRE((b(i, j) == 0) == (a(i, j) == 0));
        }
      }
    }
}

TEST_CASE("canonical rank forms") {
  const auto f2 = make_field(2), f3 = make_field(3), f4 = make_field(2, 2);
  auto forms = canonical_rank_forms(f2, 2);
  REQUIRE(forms.size() == 2);
  CHECK(forms[0].matrix == FMatrix::identity(f2, 2));
  CHECK(forms[1].matrix == FMatrix::from_rows(f2, {{0, 1}, {1, 0}}));
  CHECK(canonical_rank_forms(f2, 3).size() == 1);
  CHECK(canonical_rank_forms(f4, 4).size() == 2);
  forms = canonical_rank_forms(f3, 3);
  REQUIRE(forms.size() == 2);
  CHECK(forms[0].matrix == FMatrix::identity(f3, 3));
  CHECK(forms[1].matrix == FMatrix::from_rows(f3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
  forms = canonical_rank_forms(f3, 0);
  REQUIRE(forms.size() == 1);
  CHECK(forms[0].matrix.rows() == 0);
}

TEST_CASE("odd-characteristic forms are pairwise non-congruent and cover rank <= 3") {
  for (auto f : {make_field(3), make_field(5)}) {
    for (std::size_t r = 1; r <= 3; ++r) {
      const auto forms = canonical_rank_forms(f, r);
      REQUIRE(forms.size() == 2);
      CHECK_FALSE(find_congruence(forms[0].matrix, forms[1].matrix).has_value());
    }
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::uint64_t code = 0; code < symmetric_count(f, n); ++code) {
        const FMatrix a = symmetric_from_code(f, n, code);
        const std::size_t k = rank(a);
        // a restricted to a basis of its row space is congruent to one form
        const auto d = symmetric_decompose(a);
        REQUIRE(d.x.cols() == k);
        REQUIRE(d.x * d.form.matrix * d.x.transpose() == a);
      }
  }
}

TEST_CASE("find_congruence returns a valid transform") {
  const auto f3 = make_field(3);
  const FMatrix from = FMatrix::from_rows(f3, {{2, 0}, {0, 2}});
  const FMatrix to = FMatrix::identity(f3, 2);
  const auto p = find_congruence(from, to);
  REQUIRE(p.has_value());
  CHECK(p->transpose() * from * *p == to);
  const auto f2 = make_field(2);
  CHECK_FALSE(find_congruence(FMatrix::identity(f2, 2), FMatrix::from_rows(f2, {{0, 1}, {1, 0}})).has_value());
}

TEST_CASE("F_2 decomposition examples") {
  const auto f2 = make_field(2);
  auto d = f2_symmetric_decompose(FMatrix::from_rows(f2, {{0, 1}, {1, 0}}));
  CHECK(d.form == F2Form::AlternatingBlock);
  CHECK(d.x == FMatrix::identity(f2, 2));
  d = f2_symmetric_decompose(FMatrix::from_rows(f2, {{1}}));
  CHECK(d.form == F2Form::Gram);
  CHECK(d.x == FMatrix::from_rows(f2, {{1}}));
}

TEST_CASE("F_2 decomposition round-trips every symmetric matrix with n <= 4") {
  const auto f2 = make_field(2);
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::uint64_t code = 0; code < symmetric_count(f2, n); ++code) {
      const FMatrix a = symmetric_from_code(f2, n, code);
      const auto d = f2_symmetric_decompose(a);
      const std::size_t k = rank(a);
      REQUIRE(d.x.cols() == k);
      REQUIRE(rank(d.x) == k);
      bool zero_diag = true;
      for (std::size_t i = 0; i < n; ++i) zero_diag &= a(i, i) == 0;
      REQUIRE((d.form == F2Form::AlternatingBlock) == (zero_diag && k > 0));
      if (k % 2) REQUIRE(d.form == F2Form::Gram);
      FMatrix s = FMatrix::identity(f2, k);
      if (d.form == F2Form::AlternatingBlock) s = canonical_rank_forms(f2, k)[1].matrix;
      REQUIRE(d.x * s * d.x.transpose() == a);
    }
}

TEST_CASE("general decomposition round-trips random matrices over several fields") {
  std::mt19937_64 rng(17);
  for (auto f : {make_field(2, 2), make_field(2, 3), make_field(5), make_field(7), make_field(3, 2)})
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = 1 + rng() % 8;
      FMatrix a = random_symmetric(f, n, rng);
      if (t % 4 == 0) {
        const FMatrix x = random_matrix(f, n, 1 + rng() % 3, rng);
        a = x * x.transpose();
      }
      const auto d = symmetric_decompose(a);
      const auto forms = canonical_rank_forms(f, rank(a));
      REQUIRE(d.form_index < forms.size());
      REQUIRE(d.form.matrix == forms[d.form_index].matrix);
      REQUIRE(d.x * d.form.matrix * d.x.transpose() == a);
    }
}

TEST_CASE("matrix text round trip") {
  std::mt19937_64 rng(18);
  const auto f9 = make_field(3, 2);
  const FMatrix a = random_matrix(f9, 3, 4, rng);
  std::stringstream ss;
  write_matrix_text(ss, a);
  CHECK(ss.str().substr(0, 6) == "3 4 9\n");
  CHECK(read_matrix_text(ss) == a);
  std::istringstream bad("2 2 5\n1 2\n3 9\n");
  CHECK_THROWS_AS(read_matrix_text(bad), Error);
}

TEST_CASE("echelon basis tracks rank incrementally") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 200; ++t) {
    f2::EchelonBasis basis;
    std::vector<std::uint64_t> rows;
    for (int i = 0; i < 20; ++i) {
      const std::uint64_t v = rng() & 0xfffffu;
      rows.push_back(v);
      if (const auto r = basis.reduce_full(v)) basis.insert(r);
      std::vector<std::uint64_t> copy = rows;
      REQUIRE(basis.size() == f2::rank_words(copy));
    }
  }
}
