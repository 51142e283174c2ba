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

#include "mrank/minrank.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "mrank/error.hpp"
#include "mrank/f2.hpp"

namespace mrank {

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::Exhaustive: return "exhaustive";
    case Method::F2Diagonal: return "f2-diagonal";
    case Method::CertificateSearch: return "certificate-search";
  }
  return "?";
}

namespace {

using Word = std::uint64_t;

// Upper bound on projective points per form table; P^2 bits are stored.
constexpr std::size_t kMaxPoints = 4096;
constexpr std::size_t kMaxGenerators = 192;

// Normalized nonzero vectors of F^r (first nonzero coordinate 1), their
// pairwise orthogonality under a fixed form S, and first-row orbit
// representatives.
struct FormTable {
  std::size_t r = 0;
  std::size_t points = 0;
  std::size_t words = 0;
  std::vector<Elem> coords;  // points * r
  std::vector<Word> nonzero;  // row a: bit b set iff a S b^T != 0
  std::vector<Word> zero;     // complement within the valid points
  std::vector<std::uint32_t> orbit_reps;

  std::span<const Elem> point(std::size_t a) const { return {coords.data() + a * r, r}; }
  const Word* nz_row(std::size_t a) const { return nonzero.data() + a * words; }
  const Word* z_row(std::size_t a) const { return zero.data() + a * words; }
};

std::uint64_t encode(std::span<const Elem> v, std::uint32_t q) {
  std::uint64_t key = 0;
  for (Elem e : v) key = key * q + e;
  return key;
}

std::size_t find_root(std::vector<std::uint32_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

std::vector<FMatrix> isometry_generators(const FMatrix& s, const FormTable& t,
                                         const CanonicalForm::Kind kind,
                                         const std::vector<Elem>& q_values) {
  const FieldPtr& fp = s.field_ptr();
  const Field& f = *fp;
  const std::size_t r = s.rows();
  std::vector<FMatrix> gens;

  auto outer = [&](std::span<const Elem> u) {
    // (S u^T) u
    FMatrix col(fp, r, 1), row(fp, 1, r);
    for (std::size_t i = 0; i < r; ++i) row(0, i) = u[i];
    col = s * row.transpose();
    return col * row;
  };
  const FMatrix id = FMatrix::identity(fp, r);

  if (!f.char_two()) {
    // reflections x -> x - 2 B(x,u)/B(u,u) u in anisotropic u
    for (std::size_t a = 0; a < t.points && gens.size() < kMaxGenerators; ++a) {
      if (q_values[a] == 0) continue;
      const Elem c = f.div(f.from_int(2), q_values[a]);
      gens.push_back(id - outer(t.point(a)).scaled(c));
    }
  } else {
    // transvections x -> x + c B(x,u) u in isotropic u
    for (std::size_t a = 0; a < t.points && gens.size() < kMaxGenerators; ++a) {
      if (q_values[a] != 0) continue;
      const FMatrix o = outer(t.point(a));
      for (Elem c = 1; c < f.q(); ++c) gens.push_back(id + o.scaled(c));
    }
    auto swap_coords = [&](std::size_t i, std::size_t j) {
      FMatrix p = id;
      p(i, i) = p(j, j) = 0;
      p(i, j) = p(j, i) = 1;
      return p;
    };
    if (kind == CanonicalForm::Kind::Identity) {
      for (std::size_t i = 0; i + 1 < r; ++i) gens.push_back(swap_coords(i, i + 1));
    } else {
      for (std::size_t i = 0; i + 1 < r; i += 2) gens.push_back(swap_coords(i, i + 1));
      for (std::size_t i = 0; i + 3 < r; i += 2) {
        FMatrix p = swap_coords(i, i + 2);
        p(i + 1, i + 1) = p(i + 3, i + 3) = 0;
        p(i + 1, i + 3) = p(i + 3, i + 1) = 1;
        gens.push_back(std::move(p));
      }
    }
  }
  // keep only genuine isometries: Q S Q^T == S
  std::erase_if(gens, [&](const FMatrix& g) { return !(g * s * g.transpose() == s); });
  return gens;
}

std::shared_ptr<const FormTable> build_table(const Field& f, const CanonicalForm& form) {
  const std::size_t r = form.matrix.rows();
  const std::uint32_t q = f.q();
  std::uint64_t total = 0, power = 1;
  for (std::size_t i = 0; i < r; ++i) {
    total += power;  // points with leading coordinate at r-1-i
    power *= q;
    if (total > kMaxPoints)
      throw Error(Errc::SearchSpaceTooLarge,
                  "rank " + std::to_string(r) + " over F_" + f.name() + " has too many projective points");
  }
  auto t = std::make_shared<FormTable>();
  t->r = r;
  t->points = static_cast<std::size_t>(total);
  t->words = (t->points + 63) / 64;
  t->coords.reserve(t->points * r);
  for (std::size_t lead = 0; lead < r; ++lead) {
    std::uint64_t tail = 1;
    for (std::size_t i = lead + 1; i < r; ++i) tail *= q;
    for (std::uint64_t v = 0; v < tail; ++v) {
      std::vector<Elem> vec(r, 0);
      vec[lead] = 1;
      std::uint64_t rest = v;
      for (std::size_t i = r; i-- > lead + 1;) {
        vec[i] = static_cast<Elem>(rest % q);
        rest /= q;
      }
      t->coords.insert(t->coords.end(), vec.begin(), vec.end());
    }
  }
  const std::size_t P = t->points, W = t->words;
  const FMatrix& s = form.matrix;

  std::vector<Elem> image(P * r);  // S p^T for each point
  for (std::size_t b = 0; b < P; ++b)
    for (std::size_t i = 0; i < r; ++i) {
      Elem acc = 0;
      for (std::size_t j = 0; j < r; ++j) acc = f.add(acc, f.mul(s(i, j), t->coords[b * r + j]));
      image[b * r + i] = acc;
    }
  t->nonzero.assign(P * W, 0);
  t->zero.assign(P * W, 0);
  std::vector<Elem> q_values(P);
  for (std::size_t a = 0; a < P; ++a)
    for (std::size_t b = 0; b < P; ++b) {
      Elem acc = 0;
      for (std::size_t i = 0; i < r; ++i) acc = f.add(acc, f.mul(t->coords[a * r + i], image[b * r + i]));
      Word* row = acc ? &t->nonzero[a * W] : &t->zero[a * W];
      row[b / 64] |= Word(1) << (b % 64);
      if (a == b) q_values[a] = acc;
    }

  // orbits of the first row under generated isometries
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  for (std::size_t a = 0; a < P; ++a) index.emplace(encode(t->point(a), q), static_cast<std::uint32_t>(a));
  std::vector<std::uint32_t> parent(P);
  std::iota(parent.begin(), parent.end(), 0u);
  const auto gens = isometry_generators(s, *t, form.kind, q_values);
  std::vector<Elem> y(r);
  for (const FMatrix& g : gens)
    for (std::size_t a = 0; a < P; ++a) {
      const auto x = t->point(a);
      for (std::size_t j = 0; j < r; ++j) {
        Elem acc = 0;
        for (std::size_t i = 0; i < r; ++i) acc = f.add(acc, f.mul(x[i], g(i, j)));
        y[j] = acc;
      }
      std::size_t lead = 0;
      while (y[lead] == 0) ++lead;
      const Elem s_inv = f.inv(y[lead]);
      for (std::size_t j = 0; j < r; ++j) y[j] = f.mul(y[j], s_inv);
      const std::size_t b = index.at(encode(y, q));
      const std::size_t ra = find_root(parent, a), rb = find_root(parent, b);
      if (ra != rb) parent[std::max(ra, rb)] = static_cast<std::uint32_t>(std::min(ra, rb));
    }
  for (std::size_t a = 0; a < P; ++a)
    if (find_root(parent, a) == a) t->orbit_reps.push_back(static_cast<std::uint32_t>(a));
  return t;
}

std::shared_ptr<const FormTable> form_table(const Field& f, const CanonicalForm& form) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const FormTable>> cache;
  std::string key = f.name() + "/" + form.label() + "/" + std::to_string(form.matrix.rows());
  for (auto c : f.modulus()) key += "," + std::to_string(c);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto table = build_table(f, form);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(table)).first->second;
}

std::vector<std::size_t> search_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> clique = g.clique() ? *g.clique() : max_clique(g);
  if (clique.size() < 2) clique.clear();
  for (auto v : clique) {
    order.push_back(v);
    placed[v] = true;
  }
  std::vector<std::size_t> placed_neighbors(n, 0);
  for (auto v : order)
    for (std::size_t w = 0; w < n; ++w)
      if (g.has_edge(v, w)) ++placed_neighbors[w];
  while (true) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v] || g.degree(v) == 0) continue;
      if (best == n || placed_neighbors[v] > placed_neighbors[best]) best = v;
    }
    if (best == n) break;
    placed[best] = true;
    order.push_back(best);
    for (std::size_t w = 0; w < n; ++w)
      if (g.has_edge(best, w)) ++placed_neighbors[w];
  }
  return order;
}

// Shared between the workers of one form.
struct SharedState {
  std::atomic<std::size_t> best_task{SIZE_MAX};
  std::atomic<std::uint64_t> nodes{0};
  std::uint64_t limit = 0;
};

class Searcher {
public:
  Searcher(const Graph& g, const FormTable& t, const std::vector<std::size_t>& order,
           SharedState& shared, std::size_t task)
      : g_(g), t_(t), order_(order), shared_(shared), task_(task),
        m_(order.size()), levels_((m_ + 1) * m_ * t.words, 0), assign_(m_, 0) {
    const std::size_t W = t.words;
    for (std::size_t j = 0; j < m_; ++j) {
      Word* d = dom(0, j);
      for (std::size_t b = 0; b < t.points; ++b) d[b / 64] |= Word(1) << (b % 64);
      (void)W;
    }
  }

  /// Places the first vertex on `first` and searches the rest. True when a
  /// full assignment was found; false when exhausted or cancelled.
  bool run(std::size_t first) { return place(0, first); }

  bool cancelled() const noexcept { return cancelled_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  const std::vector<std::uint32_t>& assignment() const noexcept { return assign_; }

private:
  Word* dom(std::size_t level, std::size_t pos) {
    return levels_.data() + (level * m_ + pos) * t_.words;
  }

  bool place(std::size_t depth, std::size_t a) {
    ++nodes_;
    if ((nodes_ & 1023u) == 0) flush();
    if (cancelled_) return false;
    assign_[depth] = static_cast<std::uint32_t>(a);
    const std::size_t v = order_[depth];
    const std::size_t W = t_.words;
    for (std::size_t j = depth + 1; j < m_; ++j) {
      const Word* mask = g_.has_edge(v, order_[j]) ? t_.nz_row(a) : t_.z_row(a);
      const Word* src = dom(depth, j);
      Word* dst = dom(depth + 1, j);
      Word any = 0;
      for (std::size_t w = 0; w < W; ++w) any |= (dst[w] = src[w] & mask[w]);
      if (!any) return false;
    }
    if (depth + 1 == m_) return true;
    const Word* cand = dom(depth + 1, depth + 1);
    for (std::size_t w = 0; w < W; ++w) {
      Word bits = cand[w];
      while (bits) {
        const std::size_t b = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (place(depth + 1, b)) return true;
        if (cancelled_) return false;
      }
    }
    return false;
  }

  void flush() {
    const auto total = shared_.nodes.fetch_add(1024, std::memory_order_relaxed) + 1024;
    if (total > shared_.limit)
      throw Error(Errc::SearchSpaceTooLarge,
                  "certificate search exceeded " + std::to_string(shared_.limit) + " nodes");
    if (shared_.best_task.load(std::memory_order_relaxed) < task_) cancelled_ = true;
  }

  const Graph& g_;
  const FormTable& t_;
  const std::vector<std::size_t>& order_;
  SharedState& shared_;
  std::size_t task_;
  std::size_t m_;
  std::vector<Word> levels_;
  std::vector<std::uint32_t> assign_;
  std::uint64_t nodes_ = 0;
  bool cancelled_ = false;
};

struct FormOutcome {
  bool found = false;
  std::uint64_t nodes = 0;
  std::vector<std::uint32_t> assignment;
};

FormOutcome search_form(const Graph& g, const FormTable& t, const std::vector<std::size_t>& order,
                        std::uint64_t limit, unsigned threads) {
  const auto& tasks = t.orbit_reps;
  SharedState shared;
  shared.limit = limit;
  struct TaskResult {
    bool found = false;
    bool cancelled = false;
    std::uint64_t nodes = 0;
    std::vector<std::uint32_t> assignment;
  };
  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size() || shared.best_task.load() < i) return;
        Searcher s(g, t, order, shared, i);
        const bool found = s.run(tasks[i]);
        results[i] = {found, s.cancelled(), s.nodes(), found ? s.assignment() : std::vector<std::uint32_t>{}};
        if (found) {
          std::size_t cur = shared.best_task.load();
          while (i < cur && !shared.best_task.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      shared.best_task.store(0);
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  if (count == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < count; ++k) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  FormOutcome out;
  const std::size_t winner = shared.best_task.load();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (winner != SIZE_MAX && i > winner) break;
    out.nodes += results[i].nodes;
  }
  if (winner != SIZE_MAX) {
    out.found = true;
    out.assignment = results[winner].assignment;
  }
  return out;
}

// Rank of a small dense matrix held in `buf` (destroyed), table arithmetic.
std::size_t small_rank(const Field& f, Elem* buf, std::size_t n) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && buf[piv * n + c] == 0) ++piv;
    if (piv == n) continue;
    if (piv != r)
      for (std::size_t k = c; k < n; ++k) std::swap(buf[piv * n + k], buf[r * n + k]);
    const Elem s = f.inv(buf[r * n + c]);
    for (std::size_t i = r + 1; i < n; ++i) {
      const Elem factor = f.mul(buf[i * n + c], s);
      if (!factor) continue;
      for (std::size_t k = c; k < n; ++k)
        buf[i * n + k] = f.sub(buf[i * n + k], f.mul(factor, buf[r * n + k]));
    }
    ++r;
  }
  return r;
}

}  // namespace

RankCertificate witness_from_matrix(const FMatrix& a, const Graph& g, std::size_t r) {
  if (!pattern_matches(a, g))
    throw Error(Errc::VerificationFailed, "witness matrix does not match the graph pattern");
  auto d = symmetric_decompose(a);
  const std::size_t k = d.form.matrix.rows();
  if (k > r) throw Error(Errc::VerificationFailed, "witness rank exceeds the target rank");
  RankCertificate c;
  c.kind = RankCertificate::Kind::Witness;
  c.r = r;
  c.x = std::move(d.x);
  c.s = std::move(d.form.matrix);
  c.form = d.form.label();
  c.a = a;
  return c;
}

RankCertificate rank_le_search(const Graph& g, const FieldPtr& field, std::size_t r,
                               const SearchOptions& opts) {
  const std::size_t n = g.order();
  if (r > n) throw Error(Errc::InvalidArgument, "target rank exceeds the graph order");
  RankCertificate cert;
  cert.r = r;
  if (g.edge_count() == 0) {
    cert.kind = RankCertificate::Kind::Witness;
    cert.x = FMatrix(field, n, r);
    cert.s = FMatrix::identity(field, r);
    cert.form = "identity";
    cert.a = FMatrix(field, n, n);
    return cert;
  }
  if (r == 0) {
    cert.kind = RankCertificate::Kind::Exhaustion;
    return cert;
  }
  const auto order = search_order(g);
  const auto forms = canonical_rank_forms(field, r);
  std::uint64_t budget = opts.node_limit;
  for (const auto& form : forms) {
    const auto table = form_table(*field, form);
    const FormOutcome out = search_form(g, *table, order, budget, opts.threads);
    cert.stats.nodes += out.nodes;
    cert.stats.nodes_per_form.push_back(out.nodes);
    ++cert.stats.forms_tried;
    budget = budget > out.nodes ? budget - out.nodes : 0;
    if (!out.found) continue;

    FMatrix x(field, n, r);
    for (std::size_t d = 0; d < order.size(); ++d) {
      const auto p = table->point(out.assignment[d]);
      for (std::size_t j = 0; j < r; ++j) x(order[d], j) = p[j];
    }
    FMatrix a = x * form.matrix * x.transpose();
    if (!pattern_matches(a, g) || rank(a) > r)
      throw Error(Errc::VerificationFailed, "search produced an invalid witness");
    cert.kind = RankCertificate::Kind::Witness;
    cert.x = std::move(x);
    cert.s = form.matrix;
    cert.form = form.label();
    cert.a = std::move(a);
    return cert;
  }
  cert.kind = RankCertificate::Kind::Exhaustion;
  return cert;
}

MinRankResult exhaustive_minrank(const Graph& g, const FieldPtr& field, std::uint64_t limit) {
  const Field& f = *field;
  const std::size_t n = g.order();
  const std::uint32_t q = f.q();
  const auto edges = g.edges();

  // spanning forest in edge order
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  std::vector<std::pair<std::size_t, std::size_t>> free_edges;
  std::vector<Elem> base(n * n, 0);
  for (auto [u, v] : edges) {
    const std::size_t ru = find_root(parent, u), rv = find_root(parent, v);
    if (ru != rv) {
      parent[ru] = static_cast<std::uint32_t>(rv);
      base[u * n + v] = base[v * n + u] = 1;
    } else {
      free_edges.emplace_back(u, v);
    }
  }
  long double space = 1;
  for (std::size_t i = 0; i < free_edges.size(); ++i) space *= (q - 1);
  for (std::size_t i = 0; i < n; ++i) space *= q;
  if (space > static_cast<long double>(limit))
    throw Error(Errc::SearchSpaceTooLarge, "exhaustive search space exceeds the configured limit");

  MinRankResult res;
  res.method = Method::Exhaustive;
  const std::size_t lower = edges.empty() ? 0 : 1;
  std::size_t best = n + 1;
  std::vector<Elem> best_matrix;
  std::vector<Elem> cur = base, work(n * n);
  std::vector<Elem> edge_val(free_edges.size(), 1), diag(n, 0);
  for (std::size_t e = 0; e < free_edges.size(); ++e) {
    auto [u, v] = free_edges[e];
    cur[u * n + v] = cur[v * n + u] = 1;
  }

  bool done = false;
  while (!done) {
    std::fill(diag.begin(), diag.end(), 0);
    for (std::size_t i = 0; i < n; ++i) cur[i * n + i] = 0;
    while (true) {
      work = cur;
      const std::size_t rk = small_rank(f, work.data(), n);
      if (rk < best) {
        best = rk;
        best_matrix = cur;
        if (best == lower) {
          done = true;
          break;
        }
      }
      std::size_t i = 0;
      while (i < n && diag[i] + 1 == q) {
        diag[i] = 0;
        cur[i * n + i] = 0;
        ++i;
      }
      if (i == n) break;
      cur[i * n + i] = ++diag[i];
    }
    if (done) break;
    std::size_t e = 0;
    while (e < free_edges.size() && edge_val[e] + 1 == q) {
      edge_val[e] = 1;
      auto [u, v] = free_edges[e];
      cur[u * n + v] = cur[v * n + u] = 1;
      ++e;
    }
    if (e == free_edges.size()) break;
    ++edge_val[e];
    auto [u, v] = free_edges[e];
    cur[u * n + v] = cur[v * n + u] = edge_val[e];
  }

  FMatrix a(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = best_matrix[i * n + j];
  res.mr = best;
  res.certificate = witness_from_matrix(a, g, best);
  return res;
}

MinRankResult f2_minrank(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kF2DiagonalMaxOrder) throw Error(Errc::TooLarge, "f2_minrank is limited to n <= 24");
  MinRankResult res;
  res.method = Method::F2Diagonal;
  const std::size_t lower = g.edge_count() ? 1 : 0;
  std::size_t best = n + 1;
  std::uint64_t best_diag = 0, cur_diag = 0, nodes = 0;
  f2::EchelonBasis basis;

  auto dfs = [&](auto&& self, std::size_t i) -> bool {
    ++nodes;
    if (basis.size() >= best) return false;
    if (i == n) {
      best = basis.size();
      best_diag = cur_diag;
      return best == lower;
    }
    for (std::uint64_t d = 0; d < 2; ++d) {
      const std::uint64_t row = g.neighbors(i) | (d << i);
      const std::uint64_t res_row = basis.reduce_full(row);
      if (d) cur_diag |= std::uint64_t(1) << i;
      else cur_diag &= ~(std::uint64_t(1) << i);
      bool stop;
      if (res_row) {
        basis.insert(res_row);
        stop = self(self, i + 1);
        basis.erase(res_row);
      } else {
        stop = self(self, i + 1);
      }
      if (stop) return true;
    }
    return false;
  };
  dfs(dfs, 0);

  const FieldPtr f2 = make_field(2);
  FMatrix a(f2, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (g.has_edge(i, j)) a(i, j) = 1;
    a(i, i) = static_cast<Elem>((best_diag >> i) & 1u);
  }
  res.mr = best;
  res.certificate = witness_from_matrix(a, g, best);
  res.certificate.stats.nodes = nodes;
  return res;
}

FMatrix corank_one_completion(const Graph& g, const FieldPtr& field) {
  const Field& f = *field;
  const std::size_t n = g.order();
  if (n < 2) throw Error(Errc::InvalidArgument, "corank_one_completion needs n >= 2");
  FMatrix a(field, n, n);
  for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1;
  for (std::size_t j = 0; j < n; ++j) {
    a(j, j) = 0;
    const Elem c = determinant(a.block(0, 0, j + 1, j + 1));  // leading minor of order j is 1
    a(j, j) = j + 1 < n ? f.sub(1, c) : f.neg(c);
  }
  return a;
}

MinRankResult certificate_minrank(const Graph& g, const FieldPtr& field, const SearchOptions& opts,
                                  std::optional<std::size_t> max_rank) {
  const std::size_t n = g.order();
  MinRankResult res;
  res.method = Method::CertificateSearch;
  std::optional<RankCertificate> previous;
  for (std::size_t r = 0;; ++r) {
    if (max_rank && r > *max_rank) {
      res.mr = r;
      res.exact = false;
      res.certificate = std::move(*previous);
      return res;
    }
    RankCertificate cert;
    if (n >= 2 && r == n - 1 && g.edge_count() > 0) {
      cert = witness_from_matrix(corank_one_completion(g, field), g, r);
    } else {
      cert = rank_le_search(g, field, r, opts);
    }
    if (cert.is_witness()) {
      res.mr = r;
      res.certificate = std::move(cert);
      res.lower = std::move(previous);
      return res;
    }
    previous = std::move(cert);
  }
}

MinRankResult minrank(const Graph& g, const FieldPtr& field, const MinRankOptions& opts) {
  MinRankResult res;
  if (field->q() == 2 && g.order() <= kF2DiagonalMaxOrder) {
    res = f2_minrank(g);
  } else {
    res = certificate_minrank(g, field, opts.search, opts.max_rank);
  }
  if (opts.cross_check && res.exact) {
    std::optional<MinRankResult> oracle;
    try {
      oracle = exhaustive_minrank(g, field, opts.exhaustive_limit);
    } catch (const Error& e) {
      if (e.code() != Errc::SearchSpaceTooLarge) throw;
    }
    if (oracle && oracle->mr != res.mr)
      throw Error(Errc::VerificationFailed, "cross-check failed: solver says " + std::to_string(res.mr) +
                                                ", exhaustive says " + std::to_string(oracle->mr));
  }
  return res;
}

}  // namespace mrank
