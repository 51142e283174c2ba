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

#include "mrank/forms.hpp"

#include <utility>

#include "mrank/error.hpp"

namespace mrank {

namespace {

// Tracks a == w * c * w^T while c is rewritten into canonical shape.
struct Reducer {
  const Field& f;
  FMatrix w;
  FMatrix c;

  // c restricted to `idx` equals v * sub * v^T; replace it by sub.
  void substitute(const std::vector<std::size_t>& idx, const FMatrix& v, const FMatrix& sub) {
    const std::size_t k = w.rows();
    FMatrix next = w;
    for (std::size_t row = 0; row < k; ++row)
      for (std::size_t b = 0; b < idx.size(); ++b) {
        Elem acc = 0;
        for (std::size_t a = 0; a < idx.size(); ++a)
          acc = f.add(acc, f.mul(w(row, idx[a]), v(a, b)));
        next(row, idx[b]) = acc;
      }
    w = std::move(next);
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) c(idx[a], idx[b]) = sub(a, b);
  }

  void swap_slots(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t row = 0; row < w.rows(); ++row) std::swap(w(row, i), w(row, j));
    for (std::size_t t = 0; t < c.rows(); ++t) std::swap(c(i, t), c(j, t));
    for (std::size_t t = 0; t < c.rows(); ++t) std::swap(c(t, i), c(t, j));
  }
};

// M <- E M E^T and P <- E P for E = I + factor * e_dst e_src^T.
void add_multiple(FMatrix& m, FMatrix& p, std::size_t dst, std::size_t src, Elem factor) {
  const Field& f = m.field();
  if (factor == 0) return;
  for (std::size_t k = 0; k < m.cols(); ++k) m(dst, k) = f.add(m(dst, k), f.mul(factor, m(src, k)));
  for (std::size_t k = 0; k < m.rows(); ++k) m(k, dst) = f.add(m(k, dst), f.mul(factor, m(k, src)));
  for (std::size_t k = 0; k < p.cols(); ++k) p(dst, k) = f.add(p(dst, k), f.mul(factor, p(src, k)));
}

void swap_index(FMatrix& m, FMatrix& p, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(i, k), m(j, k));
  for (std::size_t k = 0; k < m.rows(); ++k) std::swap(m(k, i), m(k, j));
  for (std::size_t k = 0; k < p.cols(); ++k) std::swap(p(i, k), p(j, k));
}

}  // namespace

std::string CanonicalForm::label() const {
  switch (kind) {
    case Kind::Identity: return "identity";
    case Kind::Hyperbolic: return "hyperbolic";
    case Kind::NonsquareTail: return "nonsquare-tail";
  }
  return "?";
}

std::vector<CanonicalForm> canonical_rank_forms(const FieldPtr& field, std::size_t r) {
  std::vector<CanonicalForm> out;
  out.push_back({CanonicalForm::Kind::Identity, FMatrix::identity(field, r)});
  if (r == 0) return out;
  if (field->char_two()) {
    if (r % 2 == 0) {
      FMatrix h(field, r, r);
      for (std::size_t i = 0; i < r; i += 2) h(i, i + 1) = h(i + 1, i) = 1;
      out.push_back({CanonicalForm::Kind::Hyperbolic, std::move(h)});
    }
  } else {
    FMatrix d = FMatrix::identity(field, r);
    d(r - 1, r - 1) = field->smallest_nonsquare();
    out.push_back({CanonicalForm::Kind::NonsquareTail, std::move(d)});
  }
  return out;
}

SymmetricDecomposition symmetric_decompose(const FMatrix& a) {
  if (!a.is_symmetric()) throw Error(Errc::NotSymmetric, "symmetric_decompose expects a symmetric matrix");
  const FieldPtr& fp = a.field_ptr();
  const Field& f = *fp;
  const std::size_t n = a.rows();

  FMatrix m = a;
  FMatrix p = FMatrix::identity(fp, n);
  std::vector<std::size_t> block_size;  // 1 or 2, in order of the leading slots
  std::size_t t = 0;
  while (t < n) {
    std::size_t piv = t;
    while (piv < n && m(piv, piv) == 0) ++piv;
    if (piv < n) {
      swap_index(m, p, piv, t);
      const Elem s = f.inv(m(t, t));
      for (std::size_t l = t + 1; l < n; ++l)
        add_multiple(m, p, l, t, f.neg(f.mul(m(l, t), s)));
      block_size.push_back(1);
      ++t;
      continue;
    }
    std::size_t bi = n, bj = n;
    for (std::size_t i = t; i < n && bi == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (m(i, j) != 0) {
          bi = i;
          bj = j;
          break;
        }
    if (bi == n) break;
    if (!f.char_two()) {
      add_multiple(m, p, bi, bj, 1);  // diagonal becomes 2 * m(bi, bj) != 0
      continue;
    }
    swap_index(m, p, bi, t);
    swap_index(m, p, bj, t + 1);
    const Elem b_inv = f.inv(m(t, t + 1));
    for (std::size_t l = t + 2; l < n; ++l) {
      const Elem c1 = f.mul(m(l, t + 1), b_inv);
      const Elem c0 = f.mul(m(l, t), b_inv);
      add_multiple(m, p, l, t, f.neg(c1));
      add_multiple(m, p, l, t + 1, f.neg(c0));
    }
    block_size.push_back(2);
    t += 2;
  }
  const std::size_t k = t;

  const FMatrix p_inv = inverse(p);
  const FMatrix l = p_inv.block(0, 0, n, k);
  Reducer red{f, FMatrix::identity(fp, k), m.block(0, 0, k, k)};

  bool has_unit = false;
  std::size_t slot = 0;
  for (std::size_t bs : block_size) {
    if (bs == 1) {
      const Elem d = red.c(slot, slot);
      if (auto s = f.sqrt(d)) {
        red.substitute({slot}, FMatrix::from_rows(fp, {{*s}}), FMatrix::from_rows(fp, {{1}}));
      } else {
        const Elem eps = f.smallest_nonsquare();
        const auto s2 = f.sqrt(f.div(d, eps));
        red.substitute({slot}, FMatrix::from_rows(fp, {{*s2}}), FMatrix::from_rows(fp, {{eps}}));
      }
      has_unit = true;
    } else {
      const Elem b = red.c(slot, slot + 1);
      FMatrix v(fp, 2, 2);
      v(0, 0) = b;
      v(1, 1) = 1;
      FMatrix h(fp, 2, 2);
      h(0, 1) = h(1, 0) = 1;
      red.substitute({slot, slot + 1}, v, h);
    }
    slot += bs;
  }

  std::size_t form_index = 0;
  if (f.char_two()) {
    if (has_unit) {
      // 1 + H_2 is congruent to I_3; fold every hyperbolic pair into the unit slot.
      std::size_t unit = 0;
      for (std::size_t s = 0, i = 0; i < block_size.size(); s += block_size[i], ++i)
        if (block_size[i] == 1) {
          unit = s;
          break;
        }
      const FMatrix u = FMatrix::from_rows(fp, {{1, 1, 0}, {1, 0, 1}, {1, 1, 1}});
      const FMatrix u_inv = inverse(u);
      for (std::size_t s = 0, i = 0; i < block_size.size(); s += block_size[i], ++i)
        if (block_size[i] == 2)
          red.substitute({unit, s, s + 1}, u_inv, FMatrix::identity(fp, 3));
    } else if (k > 0) {
      form_index = 1;
    }
  } else {
    const Elem eps = k ? f.smallest_nonsquare() : 0;
    std::vector<std::size_t> odd;
    for (std::size_t i = 0; i < k; ++i)
      if (red.c(i, i) != 1) odd.push_back(i);
    if (odd.size() >= 2) {
      // eps + eps is congruent to 1 + 1 via rows (x, y), (-y, x) with x^2 + y^2 = eps.
      Elem x = 0, y = 0;
      bool found = false;
      for (Elem u = 0; u < f.q() && !found; ++u)
        for (Elem w = 0; w < f.q(); ++w)
          if (f.add(f.mul(u, u), f.mul(w, w)) == eps) {
            x = u;
            y = w;
            found = true;
            break;
          }
      if (!found) throw Error(Errc::VerificationFailed, "no representation of eps as a sum of squares");
      const FMatrix v = FMatrix::from_rows(fp, {{x, y}, {f.neg(y), x}});
      for (std::size_t i = 0; i + 1 < odd.size(); i += 2)
        red.substitute({odd[i], odd[i + 1]}, v, FMatrix::identity(fp, 2));
      if (odd.size() % 2 == 1) odd = {odd.back()};
      else odd.clear();
    }
    if (!odd.empty()) {
      red.swap_slots(odd.front(), k - 1);
      form_index = 1;
    }
  }

  auto forms = canonical_rank_forms(fp, k);
  CanonicalForm form = forms.at(form_index);
  if (!(red.c == form.matrix))
    throw Error(Errc::VerificationFailed, "congruence reduction did not reach canonical shape");
  FMatrix x = k ? l * red.w : FMatrix(fp, n, 0);
  if (k && !(x * form.matrix * x.transpose() == a))
    throw Error(Errc::VerificationFailed, "symmetric decomposition does not reconstruct the input");
  return {form_index, std::move(form), std::move(x)};
}

F2Decomposition f2_symmetric_decompose(const FMatrix& a) {
  if (a.field().q() != 2) throw Error(Errc::InvalidArgument, "f2_symmetric_decompose expects F_2 entries");
  auto d = symmetric_decompose(a);
  return {d.form.kind == CanonicalForm::Kind::Hyperbolic ? F2Form::AlternatingBlock : F2Form::Gram,
          std::move(d.x)};
}

std::optional<FMatrix> find_congruence(const FMatrix& from, const FMatrix& to) {
  if (!from.square() || !to.square() || from.rows() != to.rows())
    throw Error(Errc::DimensionMismatch, "find_congruence: shapes differ");
  const Field& f = from.field();
  const std::size_t k = from.rows();
  if (k == 0) return FMatrix(from.field_ptr(), 0, 0);
  std::size_t count = 1;
  for (std::size_t i = 0; i < k; ++i) count *= f.q();

  std::vector<std::vector<Elem>> vecs(count, std::vector<Elem>(k));
  std::vector<std::vector<Elem>> image(count, std::vector<Elem>(k));  // from * v
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t v = idx;
    for (std::size_t i = 0; i < k; ++i) {
      vecs[idx][i] = static_cast<Elem>(v % f.q());
      v /= f.q();
    }
    for (std::size_t i = 0; i < k; ++i) {
      Elem acc = 0;
      for (std::size_t j = 0; j < k; ++j) acc = f.add(acc, f.mul(from(i, j), vecs[idx][j]));
      image[idx][i] = acc;
    }
  }
  auto bil = [&](std::size_t u, std::size_t v) {
    Elem acc = 0;
    for (std::size_t i = 0; i < k; ++i) acc = f.add(acc, f.mul(vecs[u][i], image[v][i]));
    return acc;
  };

  std::vector<std::size_t> chosen(k);
  FMatrix result(from.field_ptr(), k, k);
  auto search = [&](auto&& self, std::size_t col) -> bool {
    if (col == k) {
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < k; ++i) result(i, j) = vecs[chosen[j]][i];
      return rank(result) == k;
    }
    for (std::size_t v = 1; v < count; ++v) {
      if (bil(v, v) != to(col, col)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < col && ok; ++i) ok = bil(chosen[i], v) == to(i, col);
      if (!ok) continue;
      chosen[col] = v;
      if (self(self, col + 1)) return true;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return result;
}

}  // namespace mrank
