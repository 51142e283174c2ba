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

#include "checks.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "mrank/census.hpp"
#include "mrank/construct.hpp"
#include "mrank/error.hpp"
#include "mrank/forms.hpp"
#include "mrank/minrank.hpp"

namespace mrank::checks {

namespace {

template <class... Ts>
std::string cat(const Ts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

std::string rank_census(const CheckOptions&, std::string& note) {
  for (std::size_t n = 1; n <= kMaxBruteCensusOrder; ++n) {
    const auto counts = brute_symmetric_rank_census(n);
    for (std::size_t k = 0; k <= n; ++k)
      if (theta(n, k) != counts[k])
        return cat("theta(", n, ",", k, ") = ", theta(n, k), " but brute force counts ", counts[k]);
  }
  if (theta(2, 1) != 3 || theta(2, 2) != 4) return "spot values theta(2,1)=3, theta(2,2)=4 differ";
  note = "formula equals brute census for n <= 5; theta(2,1)=3, theta(2,2)=4";
  return {};
}

std::string group_orders(const CheckOptions&, std::string& note) {
  for (std::size_t n = 1; n <= 4; ++n)
    if (orth_order(n) != brute_orthogonal_count(n))
      return cat("O(", n, ") = ", orth_order(n), " but brute force counts ", brute_orthogonal_count(n));
  if (orth_order(3) != 6 || orth_order(4) != 48) return "O(3)=6 or O(4)=48 failed";
  for (std::size_t dim : {2u, 4u}) {
    const auto brute = brute_symplectic_count(dim);
    if (symplectic_order(dim) != brute || orth_order(dim + 1) != brute)
      return cat("Sym(", dim, ") brute force ", brute, " vs O(", dim + 1, ") = ", orth_order(dim + 1));
  }
  note = "O(1..4) = 1, 2, 6, 48; |Sym(2)| = 6, |Sym(4)| = 720";
  return {};
}

std::string counting_bounds(const CheckOptions&, std::string& note) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      if (!orth_and_rank_bounds_hold(n, k)) return cat("C(n) or N(n,k) bound fails at n=", n, ", k=", k);
      if (!theta_bounds_hold(n, k)) return cat("theta bound fails at n=", n, ", k=", k);
    }
  for (std::size_t n = 2; n <= 64; ++n)
    if (!product_bound_check(n).holds) return cat("partial product leaves (1/4, 1) at n=", n);
  note = "strict bounds for 1 <= k <= n <= 8; product in (1/4, 1) for n <= 64";
  return {};
}

std::string average_minrank(const CheckOptions& opts, std::string& note) {
  std::ostringstream summary;
  for (std::size_t n = 1; n <= kMaxAlphaExactOrder; ++n) {
    const AlphaReport rep = alpha_exact(n, opts.threads);
    if (*rep.exact < 0 || *rep.exact > Rational(n - 1, n)) return cat("alpha_", n, " outside [0, (n-1)/n]");
    if (n == 2 && *rep.exact != Rational(1, 4)) return cat("alpha_2 = ", *rep.exact, ", expected 1/4");
    std::uint64_t at_most = rep.histogram[0];
    for (std::size_t k = 1; k <= n; ++k) {
      at_most += rep.histogram[k];
      if (mr_le_k_graph_bound(n, k) < at_most)
        return cat("graph-count bound below the true count at n=", n, ", k=", k);
    }
    if (n == 6) summary << "alpha_6 = " << *rep.exact << "; ";
  }
  double prev = -1, prev_se = 0;
  std::string trend;
  double last = 0;
  for (std::size_t n : {8u, 12u, 16u, 20u}) {
    const AlphaReport rep = alpha_montecarlo(n, kAlphaSamples, kAlphaSeed, opts.threads);
    summary << "alpha_" << n << " ~ " << rep.estimate << " (se " << rep.stderr_estimate << ") ";
    if (prev >= 0 && rep.estimate < prev - 3 * std::hypot(prev_se, rep.stderr_estimate))
      trend = cat("estimate drops at n=", n);
    prev = rep.estimate;
    prev_se = rep.stderr_estimate;
    last = rep.estimate;
  }
  summary << "seed " << kAlphaSeed;
  note = summary.str();
  if (!trend.empty()) return trend;
  if (!(last > kAlphaTarget)) return cat("alpha_20 estimate ", last, " does not exceed ", kAlphaTarget);
  return {};
}

std::string solver_oracle(const CheckOptions& opts, std::string& note) {
  SearchOptions search;
  search.threads = opts.threads;
  std::size_t compared = 0;
  auto compare = [&](const Graph& g, const FieldPtr& f) -> std::string {
    const auto cert = certificate_minrank(g, f, search);
    const auto brute = exhaustive_minrank(g, f);
    ++compared;
    if (cert.mr != brute.mr)
      return cat("F_", f->name(), " graph ", to_graph6(g), ": search ", cert.mr, ", exhaustive ", brute.mr);
    if (f->q() == 2 && f2_minrank(g).mr != brute.mr)
      return cat("F_2 graph ", to_graph6(g), ": diagonal solver disagrees");
    return {};
  };
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const FieldPtr f = parse_field(std::to_string(q));
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask)
        if (auto err = compare(graph_from_index(n, mask), f); !err.empty()) return err;
    GraphSampler sampler(5);
    for (int s = 0; s < 200; ++s)
      if (auto err = compare(sampler.next(5), f); !err.empty()) return err;
  }
  note = cat(compared, " (graph, field) pairs agree");
  return {};
}

std::string f3_counterexample(const CheckOptions& opts, std::string& note) {
  SearchOptions search;
  search.threads = opts.threads;
  const auto r3 = verify_f3_counterexample(10, search);
  if (r3.is_witness()) return "found a rank-3 witness over F_3";
  const auto r4 = rank_le_search(f3_counterexample_graph(10), make_field(3), 4, search);
  if (!r4.is_witness()) return "no rank-4 witness over F_3";
  note = cat("n=10: exhaustion at r=3 after ", r3.stats.nodes, " nodes, witness at r=4");
  return {};
}

std::string k_n_minus_2(const CheckOptions& opts, std::string& note) {
  SearchOptions search;
  search.threads = opts.threads;
  std::size_t count = 0;
  for (std::uint32_t q : {4u, 5u}) {
    const FieldPtr f = parse_field(std::to_string(q));
    for (std::size_t n = 4; n <= 8; ++n)
      for (const Graph& g : clique_plus_two_family(n)) {
        ++count;
        if (!rank_le_search(g, f, 3, search).is_witness())
          return cat("no rank-3 witness over F_", q, " for ", to_graph6(g));
      }
  }
  note = cat(count, " attachment patterns (n = 4..8, F_4 and F_5) have rank-3 witnesses");
  return {};
}

std::string nonprime_clique(const CheckOptions&, std::string& note) {
  std::size_t count = 0;
  for (std::uint32_t q : {4u, 8u, 9u}) {
    const FieldPtr f = parse_field(std::to_string(q));
    for (std::size_t n = 5; n <= 12; ++n)
      for (std::size_t k = 4; k < n; ++k)
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
          const Graph g = planted_clique_graph(n, k, seed);
          const FMatrix a = nonprime_construction(g, k, f);
          ++count;
          if (!pattern_matches(a, g) || rank(a) != n - k + 1)
            return cat("F_", q, " n=", n, " k=", k, " seed ", seed, ": rank ", rank(a));
        }
  }
  note = cat(count, " constructions with rank n-k+1");
  return {};
}

// Graph with K_{n-3} and a prescribed edge set among the three others,
// then randomly relabeled.
Graph k_n_minus_3_instance(std::size_t n, unsigned outer_edges, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  Graph g(n);
  const std::size_t k = n - 3;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) g.add_edge(i, j);
  const std::pair<std::size_t, std::size_t> pairs[3] = {{k, k + 1}, {k, k + 2}, {k + 1, k + 2}};
  for (unsigned b = 0; b < 3; ++b)
    if (outer_edges >> b & 1u) g.add_edge(pairs[b].first, pairs[b].second);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = k; j < n; ++j)
      if (engine() & 1u) g.add_edge(i, j);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i-- > 1;) std::swap(perm[i], perm[engine() % (i + 1)]);
  return g.permuted(perm);
}

std::string k_n_minus_3(const CheckOptions&, std::string& note) {
  std::size_t count = 0;
  std::array<std::size_t, 5> per_case{};
  for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u}) {
    const FieldPtr f = parse_field(std::to_string(q));
    for (std::size_t n = 5; n <= 9; ++n)
      for (unsigned outer = 0; outer < 8; ++outer)
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
          const Graph g = k_n_minus_3_instance(n, outer, seed);
          const auto res = k_n_minus_3_details(g, f);
          ++count;
          if (!pattern_matches(res.a, g) || rank(res.a) > 4)
            return cat("F_", q, " n=", n, " seed ", seed, ": rank ", rank(res.a));
          if (res.delegated != f->char_two()) return cat("F_", q, ": unexpected delegation");
          if (!res.delegated) ++per_case[static_cast<std::size_t>(res.case_number)];
          if (q == 5 && res.case_number == 3 && res.scalar != 3) return cat("F_5 case 3 used beta=", res.scalar);
          if (q == 5 && res.case_number == 4 && res.scalar != 2) return cat("F_5 case 4 used a=", res.scalar);
        }
  }
  for (int c = 1; c <= 4; ++c)
    if (per_case[static_cast<std::size_t>(c)] == 0) return cat("case ", c, " never exercised");
  const FieldPtr f5 = make_field(5);
  if (!case_scalar_feasible(f5, 3, case_alphas(*f5, 3), 3)) return "beta=3 infeasible for F_5 case 3";
  if (!case_scalar_feasible(f5, 4, case_alphas(*f5, 4), 2)) return "a=2 infeasible for F_5 case 4";
  note = cat(count, " constructions of rank <= 4 (cases 1-4: ", per_case[1], "/", per_case[2], "/",
             per_case[3], "/", per_case[4], "); F_5 beta=3 and a=2 feasible");
  return {};
}

std::string canonical_forms(const CheckOptions&, std::string& note) {
  std::size_t count = 0;
  for (std::uint32_t q : {2u, 3u}) {
    const FieldPtr f = make_field(q);
    for (std::size_t n = 1; n <= 4; ++n) {
      const std::size_t free = n * (n + 1) / 2;
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < free; ++i) total *= q;
      std::vector<std::vector<bool>> seen(n + 1);
      for (std::uint64_t code = 0; code < total; ++code) {
        FMatrix a(f, n, n);
        std::uint64_t rest = code;
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t i = 0; i <= j; ++i) {
            a(i, j) = a(j, i) = static_cast<Elem>(rest % q);
            rest /= q;
          }
        const auto d = symmetric_decompose(a);
        const std::size_t k = rank(a);
        const auto forms = canonical_rank_forms(f, k);
        ++count;
        if (d.x.rows() != n || d.x.cols() != k || d.form_index >= forms.size() ||
            !(d.form.matrix == forms[d.form_index].matrix) || !(d.x * d.form.matrix * d.x.transpose() == a))
          return cat("F_", q, " matrix #", code, " (n=", n, ") does not round-trip");
        if (seen[k].empty()) seen[k].assign(forms.size(), false);
        seen[k][d.form_index] = true;
      }
      // every advertised form is used and no two are congruent
      for (std::size_t k = 1; k <= n; ++k) {
        const auto forms = canonical_rank_forms(f, k);
        for (std::size_t i = 0; i < forms.size(); ++i) {
          if (!seen[k][i]) return cat("F_", q, " rank ", k, " form ", forms[i].label(), " never occurs");
          for (std::size_t j = i + 1; j < forms.size(); ++j)
            if (find_congruence(forms[i].matrix, forms[j].matrix))
              return cat("F_", q, " rank ", k, ": forms ", i, " and ", j, " are congruent");
        }
      }
    }
  }
  note = cat(count, " symmetric matrices round-trip through the canonical forms");
  return {};
}

}  // namespace

const std::vector<Check>& acceptance_checks() {
  static const std::vector<Check> checks = {
      {"rank-census", "symmetric rank census over F_2", 10, rank_census},
      {"group-orders", "orthogonal and symplectic group orders", 30, group_orders},
      {"counting-bounds", "strict counting bounds", 60, counting_bounds},
      {"average-minrank", "scaled average minimum rank over F_2", 300, average_minrank},
      {"solver-oracle", "certificate search equals exhaustive minimum rank", 300, solver_oracle},
      {"f3-counterexample", "mr(F_3, G) = 4 for the n = 10 family graph", 600, f3_counterexample},
      {"k-n-minus-2", "rank-3 witnesses for K_{n-2} plus two vertices", 300, k_n_minus_2},
      {"nonprime-clique", "rank n-k+1 over non-prime fields", 300, nonprime_clique},
      {"k-n-minus-3", "rank <= 4 constructions for K_{n-3}", 300, k_n_minus_3},
      {"canonical-forms", "canonical-form completeness for n <= 4", 60, canonical_forms},
  };
  return checks;
}

CheckResult run_check(const Check& check, const CheckOptions& opts) {
  CheckResult res;
  res.id = check.id;
  res.title = check.title;
  res.budget_seconds = check.budget_seconds;
  const auto start = std::chrono::steady_clock::now();
  std::string failure;
  try {
    failure = check.body(opts, res.detail);
  } catch (const std::exception& e) {
    failure = cat("exception: ", e.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (failure.empty() && res.seconds > check.budget_seconds)
    failure = cat("took ", res.seconds, " s, budget ", check.budget_seconds, " s");
  res.passed = failure.empty();
  if (!res.passed) res.detail = res.detail.empty() ? failure : failure + "; " + res.detail;
  return res;
}

Graph planted_clique_graph(std::size_t n, std::size_t k, std::uint64_t seed) {
  GraphSampler sampler(seed);
  Graph g = sampler.next(n);
  std::mt19937_64 engine(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::size_t> vs(n);
  std::iota(vs.begin(), vs.end(), 0);
  for (std::size_t i = n; i-- > 1;) std::swap(vs[i], vs[engine() % (i + 1)]);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (!g.has_edge(vs[i], vs[j])) g.add_edge(vs[i], vs[j]);
  return g;
}

}  // namespace mrank::checks
