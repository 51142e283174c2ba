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

#include "mrank/construct.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "mrank/error.hpp"

namespace mrank {

namespace {

std::vector<std::size_t> resolve_clique(const Graph& g, std::size_t k) {
  if (const auto& declared = g.clique(); declared && declared->size() >= k) {
    std::vector<std::size_t> c(*declared);
    std::sort(c.begin(), c.end());
    c.resize(k);
    return c;
  }
  if (auto c = find_clique(g, k)) return *c;
  throw Error(Errc::NoClique, "graph has no " + std::to_string(k) + "-clique");
}

void verify(const FMatrix& a, const Graph& g, std::size_t max_rank, const char* what) {
  if (!a.is_symmetric() || !pattern_matches(a, g))
    throw Error(Errc::VerificationFailed, std::string(what) + ": result is not in S(F, G)");
  if (rank(a) > max_rank)
    throw Error(Errc::VerificationFailed, std::string(what) + ": rank exceeds " + std::to_string(max_rank));
}

// Assembles [[A11, A12], [A12^T, A22]] in the relabeled frame and maps it
// back to the original labels.
FMatrix assemble(const FMatrix& a11, const FMatrix& a12, const FMatrix& a22,
                 const std::vector<std::size_t>& perm) {
  const std::size_t k = a11.rows(), n = k + a22.rows();
  FMatrix a(a11.field_ptr(), n, n);
  a.set_block(0, 0, a11);
  a.set_block(0, k, a12);
  a.set_block(k, 0, a12.transpose());
  a.set_block(k, k, a22);
  return a.permuted(invert_permutation(perm));
}

FMatrix nonprime_impl(const Graph& g, const std::vector<std::size_t>& clique, const FieldPtr& field) {
  const Field& f = *field;
  const std::size_t n = g.order(), k = clique.size();
  const Relabeling rl = relabel_clique_first(g, clique);
  std::vector<std::size_t> rest(n - k);
  std::iota(rest.begin(), rest.end(), k);
  const FMatrix b = leading_minor_completion(rl.graph.induced(rest), field);
  const Elem beta = f.p();  // encodes x, the first element outside F_p
  FMatrix a12(field, k, n - k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = k; j < n; ++j)
      if (rl.graph.has_edge(i, j)) a12(i, j - k) = 1;
  const FMatrix a22 = b.scaled(f.inv(beta));
  const FMatrix a11 = FMatrix::all_ones(field, k, k) + (a12 * inverse(b) * a12.transpose()).scaled(beta);
  FMatrix a = assemble(a11, a12, a22, rl.perm);
  verify(a, g, n - k + 1, "nonprime construction");
  return a;
}

// Representative vector of attachment pattern g (bit i: adjacent to the
// i-th outer vertex) with the alpha slots of the case analysis.
std::array<Elem, 3> pattern_vector(int g, const std::array<Elem, 12>& al) {
  switch (g) {
    case 0b000: return {0, 0, 0};
    case 0b001: return {al[0], 0, 0};
    case 0b010: return {0, al[1], 0};
    case 0b100: return {0, 0, al[2]};
    case 0b011: return {al[3], al[4], 0};
    case 0b101: return {al[5], 0, al[6]};
    case 0b110: return {0, al[7], al[8]};
    default: return {al[9], al[10], al[11]};
  }
}

FMatrix case_matrix(const FieldPtr& field, int case_number, Elem scalar) {
  const Field& f = *field;
  switch (case_number) {
    case 1: return FMatrix::identity(field, 3).scaled(f.inv(scalar));
    case 2: return FMatrix::from_rows(field, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}).scaled(f.inv(scalar));
    case 3: return FMatrix::from_rows(field, {{0, 0, 1}, {0, 1, 1}, {1, 1, 0}}).scaled(f.inv(scalar));
    case 4: {
      const Elem m = f.neg(1);
      return FMatrix::from_rows(field, {{m, 1, 1}, {1, m, 1}, {1, 1, m}})
          .scaled(f.inv(f.mul(f.from_int(2), scalar)));
    }
    default: throw Error(Errc::InvalidArgument, "case number must be 1..4");
  }
}

}  // namespace

FMatrix leading_minor_completion(const Graph& h, const FieldPtr& field) {
  const Field& f = *field;
  const std::size_t n = h.order();
  FMatrix b(field, n, n);
  for (auto [u, v] : h.edges()) b(u, v) = b(v, u) = 1;
  for (std::size_t j = 0; j < n; ++j) {
    b(j, j) = 0;
    // det of the leading (j+1) block is b_jj * 1 + det(with b_jj = 0)
    b(j, j) = f.sub(1, determinant(b.block(0, 0, j + 1, j + 1)));
  }
  return b;
}

FMatrix nonprime_construction(const Graph& g, std::size_t k, const FieldPtr& field) {
  if (field->is_prime_field()) throw Error(Errc::PrimeField, "the field must not be a prime field");
  const std::size_t n = g.order();
  if (n < 5 || k < 4 || k >= n)
    throw Error(Errc::InvalidArgument, "need n >= 5 and 4 <= k <= n - 1");
  return nonprime_impl(g, resolve_clique(g, k), field);
}

std::array<Elem, 12> case_alphas(const Field& f, int case_number) {
  std::array<Elem, 12> al;
  al.fill(1);
  if (f.q() == 5 && case_number == 3) {
    al[6] = f.neg(1);
  } else if (f.q() == 5 && case_number == 4) {
    for (int i : {4, 6, 8, 10}) al[static_cast<std::size_t>(i)] = f.neg(1);
    al[11] = f.from_int(2);
  }
  return al;
}

FMatrix case_inverse(const FieldPtr& field, int case_number, Elem scalar) {
  return inverse(case_matrix(field, case_number, scalar));
}

bool case_scalar_feasible(const FieldPtr& field, int case_number, const std::array<Elem, 12>& alphas,
                          Elem scalar) {
  const Field& f = *field;
  if (scalar == 0) return false;
  if (case_number == 4 && f.char_two()) return false;
  const FMatrix m = case_inverse(field, case_number, scalar);
  for (int g = 0; g < 8; ++g) {
    const auto u = pattern_vector(g, alphas);
    for (int h = g; h < 8; ++h) {
      const auto v = pattern_vector(h, alphas);
      Elem acc = 1;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) acc = f.add(acc, f.mul(u[i], f.mul(m(i, j), v[j])));
      if (acc == 0) return false;
    }
  }
  return true;
}

std::vector<Elem> case_feasible_scalars(const FieldPtr& field, int case_number,
                                        const std::array<Elem, 12>& alphas) {
  std::vector<Elem> out;
  for (Elem s : field->elements())
    if (case_scalar_feasible(field, case_number, alphas, s)) out.push_back(s);
  return out;
}

KNMinus3Construction k_n_minus_3_details(const Graph& g, const FieldPtr& field) {
  const Field& f = *field;
  const std::size_t n = g.order();
  if (f.q() <= 3) throw Error(Errc::FieldTooSmall, "the field needs more than three elements");
  if (n < 5) throw Error(Errc::InvalidArgument, "need n >= 5");
  const std::size_t k = n - 3;
  const auto clique = resolve_clique(g, k);

  KNMinus3Construction out;
  std::vector<std::size_t> outer;
  for (std::size_t v = 0; v < n; ++v)
    if (!std::binary_search(clique.begin(), clique.end(), v)) outer.push_back(v);
  const bool e01 = g.has_edge(outer[0], outer[1]), e02 = g.has_edge(outer[0], outer[2]),
             e12 = g.has_edge(outer[1], outer[2]);
  const int edges = e01 + e02 + e12;
  out.case_number = edges + 1;
  // order the outer vertices as in the representative zero pattern
  std::array<std::size_t, 3> ord{outer[0], outer[1], outer[2]};
  if (edges == 1) {
    // case 2: the single edge joins the last two
    if (e01) ord = {outer[2], outer[0], outer[1]};
    else if (e02) ord = {outer[1], outer[0], outer[2]};
  } else if (edges == 2) {
    // case 3: the single non-edge joins the first two
    if (!e02) ord = {outer[0], outer[2], outer[1]};
    else if (!e12) ord = {outer[1], outer[2], outer[0]};
  }
  out.outer = ord;
  out.profile.pattern.assign(n, -1);
  for (std::size_t v : clique) {
    int pat = 0;
    for (int i = 0; i < 3; ++i)
      if (g.has_edge(v, ord[static_cast<std::size_t>(i)])) pat |= 1 << i;
    out.profile.pattern[v] = pat;
    ++out.profile.counts[static_cast<std::size_t>(pat)];
  }

  if (f.char_two()) {
    out.delegated = true;
    out.a = nonprime_impl(g, clique, field);
    return out;
  }

  out.alphas = case_alphas(f, out.case_number);
  std::optional<Elem> scalar;
  for (Elem s : f.elements())
    if (case_scalar_feasible(field, out.case_number, out.alphas, s)) {
      scalar = s;
      break;
    }
  if (!scalar) throw Error(Errc::NoFeasibleScalar, "no feasible scalar for case " + std::to_string(out.case_number));
  out.scalar = *scalar;

  std::vector<std::size_t> perm(clique.begin(), clique.end());
  perm.insert(perm.end(), ord.begin(), ord.end());
  const FMatrix a22 = case_matrix(field, out.case_number, out.scalar);
  FMatrix a12(field, k, 3);
  for (std::size_t i = 0; i < k; ++i) {
    const auto v = pattern_vector(out.profile.pattern[clique[i]], out.alphas);
    for (std::size_t j = 0; j < 3; ++j) a12(i, j) = v[j];
  }
  const FMatrix a11 = FMatrix::all_ones(field, k, k) + a12 * inverse(a22) * a12.transpose();
  out.a = assemble(a11, a12, a22, perm);
  verify(out.a, g, 4, "k = n - 3 construction");
  return out;
}

FMatrix k_n_minus_3_construction(const Graph& g, const FieldPtr& field) {
  return k_n_minus_3_details(g, field).a;
}

Graph f3_counterexample_graph(std::size_t n) {
  if (n < 10) throw Error(Errc::TooSmall, "the counterexample family needs n >= 10");
  Graph g(n);
  const std::size_t u = n - 2, w = n - 1;  // 0-based labels of n-1 and n
  std::vector<std::size_t> clique(n - 2);
  std::iota(clique.begin(), clique.end(), 0);
  for (std::size_t i = 0; i < n - 2; ++i)
    for (std::size_t j = i + 1; j < n - 2; ++j) g.add_edge(i, j);
  for (std::size_t v : {1, 2, 5, 6}) g.add_edge(v, u);
  for (std::size_t v : {3, 4, 5, 6}) g.add_edge(v, w);
  g.set_clique(std::move(clique));
  return g;
}

RankCertificate verify_f3_counterexample(std::size_t n, const SearchOptions& opts) {
  return rank_le_search(f3_counterexample_graph(n), make_field(3), 3, opts);
}

LargePrimeConstruction large_prime_construction(const Graph& g, std::size_t k, std::uint32_t p,
                                                std::uint64_t seed, std::size_t max_tries) {
  const std::size_t n = g.order();
  if (k < 4 || k >= n) throw Error(Errc::InvalidArgument, "need 4 <= k < n");
  if (p < kLargePrimeMin) throw Error(Errc::InvalidArgument, "the prime must be at least 1009");
  const FieldPtr field = make_field(p);
  const auto clique = resolve_clique(g, k);
  const Relabeling rl = relabel_clique_first(g, clique);
  const std::size_t h = k - 1, t = n - h;

  std::mt19937_64 engine(seed);
  auto nonzero = [&] { return static_cast<Elem>(engine() % (p - 1) + 1); };
  auto any = [&] { return static_cast<Elem>(engine() % p); };

  for (std::size_t tries = 1; tries <= max_tries; ++tries) {
    FMatrix a22(field, t, t);
    for (std::size_t i = 0; i < t; ++i) {
      a22(i, i) = any();
      for (std::size_t j = i + 1; j < t; ++j)
        if (rl.graph.has_edge(h + i, h + j)) a22(i, j) = a22(j, i) = nonzero();
    }
    if (rank(a22) < t) continue;
    FMatrix a12(field, h, t);
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < t; ++j)
        if (rl.graph.has_edge(i, h + j)) a12(i, j) = nonzero();
    const FMatrix c = a12 * inverse(a22) * a12.transpose();
    bool ok = true;
    for (std::size_t i = 0; i < h && ok; ++i)
      for (std::size_t j = i + 1; j < h && ok; ++j) ok = c(i, j) != 0;
    if (!ok) continue;
    LargePrimeConstruction out;
    out.a = assemble(c, a12, a22, rl.perm);
    out.tries = tries;
    verify(out.a, g, n - k + 1, "large prime construction");
    return out;
  }
  throw Error(Errc::RetriesExhausted, "no valid matrix after " + std::to_string(max_tries) + " tries");
}

std::vector<Graph> clique_plus_two_family(std::size_t n) {
  if (n < 3) throw Error(Errc::InvalidArgument, "need n >= 3");
  const std::size_t m = n - 2, u = n - 2, w = n - 1;
  std::vector<Graph> out;
  for (std::size_t c1 = 0; c1 <= m; ++c1)
    for (std::size_t c2 = 0; c1 + c2 <= m; ++c2)
      for (std::size_t c3 = 0; c1 + c2 + c3 <= m; ++c3)
        for (int joined = 0; joined < 2; ++joined) {
          Graph g(n);
          for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) g.add_edge(i, j);
          // clique vertices: c3 to both, then c1 to u only, then c2 to w only
          std::size_t v = 0;
          for (std::size_t i = 0; i < c3; ++i, ++v) {
            g.add_edge(v, u);
            g.add_edge(v, w);
          }
          for (std::size_t i = 0; i < c1; ++i, ++v) g.add_edge(v, u);
          for (std::size_t i = 0; i < c2; ++i, ++v) g.add_edge(v, w);
          if (joined) g.add_edge(u, w);
          std::vector<std::size_t> clique(m);
          std::iota(clique.begin(), clique.end(), 0);
          g.set_clique(std::move(clique));
          out.push_back(std::move(g));
        }
  return out;
}

}  // namespace mrank
