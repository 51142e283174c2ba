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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "checks.hpp"
#include "mrank/census.hpp"
#include "mrank/construct.hpp"
#include "mrank/error.hpp"
#include "mrank/minrank.hpp"

#ifndef MRANK_VERSION
#define MRANK_VERSION "unknown"
#endif

namespace mrank::cli {

namespace {

using json = nlohmann::ordered_json;

// Raised for failed verifications; carries the exit code 1 path.
struct Failure {
  std::string what;
};

struct GraphInput {
  std::string file;
  std::string graph6;

  void add(CLI::App* app) {
    auto* f = app->add_option("--graph", file, "edge-list file");
    auto* s = app->add_option("--graph6", graph6, "graph6 string");
    f->excludes(s);
  }
  Graph load() const {
    if (!graph6.empty()) return parse_graph6(graph6);
    if (file.empty()) throw mrank::Error(Errc::InvalidArgument, "one of --graph or --graph6 is required");
    std::ifstream in(file);
    if (!in) throw mrank::Error(Errc::InvalidArgument, "cannot open " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_edge_list(ss.str());
  }
};

json matrix_json(const FMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json certificate_json(const RankCertificate& c) {
  json j;
  j["kind"] = c.is_witness() ? "witness" : "exhaustion";
  j["r"] = c.r;
  j["nodes"] = c.stats.nodes;
  j["forms_tried"] = c.stats.forms_tried;
  j["nodes_per_form"] = c.stats.nodes_per_form;
  if (c.is_witness()) {
    j["form"] = c.form;
    j["s"] = matrix_json(c.s);
    j["x"] = matrix_json(c.x);
    j["a"] = matrix_json(c.a);
  }
  return j;
}

std::string big(const BigInt& v) { return v.str(); }
std::string rat(const Rational& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void emit_matrix(const std::string& path, const FMatrix& a) {
  if (path.empty()) return;
  std::ofstream os(path);
  if (!os) throw mrank::Error(Errc::InvalidArgument, "cannot write " + path);
  write_matrix_text(os, a);
}

void print_certificate(std::ostream& out, const RankCertificate& c) {
  out << "certificate: " << (c.is_witness() ? "WITNESS" : "EXHAUSTION") << " at r=" << c.r
      << ", nodes " << c.stats.nodes << ", forms tried " << c.stats.forms_tried << "\n";
  if (c.is_witness()) {
    out << "form: " << c.form << "\n";
    write_matrix_text(out, c.a);
  }
}

struct Common {
  bool as_json = false;
  unsigned threads = 1;
  void add(CLI::App* app, bool with_threads = true) {
    app->add_flag("--json", as_json, "structured report");
    if (with_threads) app->add_option("--threads", threads, "worker count")->check(CLI::Range(1u, 256u));
  }
};

json header(const std::string& sub) {
  json j;
  j["schema"] = kReportSchema;
  j["tool_version"] = MRANK_VERSION;
  j["subcommand"] = sub;
  return j;
}

// ---- minrank -------------------------------------------------------------

struct MinrankCmd {
  GraphInput graph;
  Common common;
  std::string field = "2";
  std::optional<std::size_t> max_rank;
  bool cross_check = false;
  std::string emit;
  std::uint64_t node_limit = kDefaultSearchLimit;

  void add(CLI::App& root) {
    auto* app = root.add_subcommand("minrank", "minimum rank of a graph over a finite field");
    graph.add(app);
    common.add(app);
    app->add_option("--field", field, "q or p^m")->required();
    app->add_option("--max-rank", max_rank, "stop the search above this rank");
    app->add_flag("--cross-check", cross_check, "also run the exhaustive solver when feasible");
    app->add_option("--emit-matrix", emit, "write the witness matrix");
    app->add_option("--node-limit", node_limit, "search node budget");
  }

  int exec(std::ostream& out) {
    const Graph g = graph.load();
    const FieldPtr f = parse_field(field);
    MinRankOptions opts;
    opts.search.threads = common.threads;
    opts.search.node_limit = node_limit;
    opts.max_rank = max_rank;
    opts.cross_check = cross_check;
    opts.exhaustive_limit = node_limit;
    const MinRankResult res = minrank(g, f, opts);
    emit_matrix(emit, res.certificate.a);
    if (common.as_json) {
      json j = header("minrank");
      j["inputs"] = {{"graph6", to_graph6(g)}, {"n", g.order()}, {"edges", g.edge_count()},
                     {"field", f->name()}, {"cross_check", cross_check}, {"threads", common.threads}};
      if (max_rank) j["inputs"]["max_rank"] = *max_rank;
      j["outputs"] = {{"mr", res.mr}, {"exact", res.exact}, {"method", std::string(method_name(res.method))},
                      {"certificate", certificate_json(res.certificate)}};
      if (res.lower) j["outputs"]["lower"] = certificate_json(*res.lower);
      out << j.dump(2) << "\n";
    } else {
      out << "graph: " << to_graph6(g) << " (n=" << g.order() << ", m=" << g.edge_count() << ")\n"
          << "field: F_" << f->name() << "\n"
          << "method: " << method_name(res.method) << "\n"
          << (res.exact ? "mr: " : "mr > ") << (res.exact ? res.mr : res.mr - 1) << "\n";
      if (res.lower) out << "lower bound: EXHAUSTION at r=" << res.lower->r << ", nodes " << res.lower->stats.nodes << "\n";
      if (res.exact) print_certificate(out, res.certificate);
    }
    return kOk;
  }
};

// ---- census --------------------------------------------------------------

struct CensusCmd {
  Common common;
  std::size_t n = 0;
  bool brute = false;

  void add(CLI::App& root) {
    auto* app = root.add_subcommand("census", "rank census of symmetric F_2 matrices");
    common.add(app, false);
    app->add_option("--n", n, "matrix order")->required()->check(CLI::Range(1, 64));
    app->add_flag("--brute", brute, "compare with brute-force enumeration (n <= 5)");
  }

  int exec(std::ostream& out) {
    const CensusReport rep = census_report(n, brute);
    bool ok = rep.total_matches && rep.brute_matches;
    for (const auto& row : rep.rows) ok = ok && row.bounds_hold;
    if (common.as_json) {
      json j = header("census");
      j["inputs"] = {{"n", n}, {"brute", brute}};
      json rows = json::array();
      for (const auto& row : rep.rows) {
        json r = {{"k", row.k}, {"theta", big(row.theta)}};
        if (row.theta_brute) r["theta_brute"] = *row.theta_brute;
        if (row.k >= 1) r["bounds"] = {{"lower", big(row.lower)}, {"upper", big(row.upper)}, {"hold", row.bounds_hold}};
        rows.push_back(std::move(r));
      }
      j["outputs"] = {{"rows", rows},
                      {"orthogonal_order", big(rep.orthogonal)},
                      {"symplectic_order", big(rep.symplectic)},
                      {"total", big(rep.total)},
                      {"total_matches", rep.total_matches},
                      {"brute_matches", rep.brute_matches}};
      out << j.dump(2) << "\n";
    } else {
      std::size_t w = 5;
      for (const auto& row : rep.rows) w = std::max({w, big(row.theta).size(), big(row.upper).size()});
      out << std::setw(3) << "k" << "  " << std::setw(static_cast<int>(w)) << "theta";
      if (brute) out << "  " << std::setw(static_cast<int>(w)) << "brute";
      out << "  " << std::setw(static_cast<int>(w)) << "lower" << "  " << std::setw(static_cast<int>(w)) << "upper"
          << "  bounds\n";
      for (const auto& row : rep.rows) {
        out << std::setw(3) << row.k << "  " << std::setw(static_cast<int>(w)) << big(row.theta);
        if (brute) out << "  " << std::setw(static_cast<int>(w)) << *row.theta_brute;
        if (row.k >= 1)
          out << "  " << std::setw(static_cast<int>(w)) << big(row.lower) << "  " << std::setw(static_cast<int>(w))
              << big(row.upper) << "  " << (row.bounds_hold ? "ok" : "FAIL");
        out << "\n";
      }
      out << "O(" << n << ") = " << big(rep.orthogonal) << "\n"
          << "|Sym(" << 2 * n << ")| = " << big(rep.symplectic) << "\n"
          << "total = " << big(rep.total) << (rep.total_matches ? " (= 2^(n(n+1)/2))" : " (MISMATCH)") << "\n";
      if (brute) out << "formula vs brute: " << (rep.brute_matches ? "equal" : "DIFFER") << "\n";
    }
    if (!ok) throw Failure{"census mismatch"};
    return kOk;
  }
};

// ---- alpha ---------------------------------------------------------------

struct AlphaCmd {
  Common common;
  std::size_t n = 0;
  bool exact = false;
  std::uint64_t samples = checks::kAlphaSamples;
  std::uint64_t seed = checks::kAlphaSeed;

  void add(CLI::App& root) {
    auto* app = root.add_subcommand("alpha", "scaled average minimum rank over F_2");
    common.add(app);
    app->add_option("--n", n, "graph order")->required();
    auto* e = app->add_flag("--exact", exact, "enumerate every labeled graph (n <= 6)");
    app->add_option("--samples", samples, "Monte Carlo sample count")->excludes(e);
    app->add_option("--seed", seed, "Monte Carlo seed")->excludes(e);
  }

  int exec(std::ostream& out) {
    const AlphaReport rep = exact ? alpha_exact(n, common.threads)
                                  : alpha_montecarlo(n, samples, seed, common.threads);
    if (common.as_json) {
      json j = header("alpha");
      j["inputs"] = {{"n", n}, {"mode", exact ? "exact" : "montecarlo"}};
      if (!exact) {
        j["inputs"]["samples"] = samples;
        j["inputs"]["seed"] = seed;
      }
      j["outputs"] = {{"alpha", rep.estimate}, {"histogram", rep.histogram}};
      if (rep.exact) j["outputs"]["alpha_exact"] = rat(*rep.exact);
      else j["outputs"]["stderr"] = rep.stderr_estimate;
      out << j.dump(2) << "\n";
    } else {
      out << "n: " << n << "\n";
      if (rep.exact) {
        out << "alpha: " << rat(*rep.exact) << " = " << std::setprecision(10) << rep.estimate << "\n"
            << "graphs: " << rep.samples << "\n";
      } else {
        out << "alpha: " << std::setprecision(6) << rep.estimate << " +- " << rep.stderr_estimate << " (stderr)\n"
            << "samples: " << samples << "\nseed: " << seed << "\n";
      }
      out << "mr histogram:";
      for (std::size_t r = 0; r < rep.histogram.size(); ++r) out << " " << r << ":" << rep.histogram[r];
      out << "\n";
    }
    return kOk;
  }
};

// ---- construct -----------------------------------------------------------

struct ConstructCmd {
  GraphInput graph;
  Common common;
  std::string theorem;
  std::string field;
  std::optional<std::size_t> k;
  std::uint64_t seed = 1;
  std::size_t max_tries = kDefaultLargePrimeTries;
  std::string emit;

  void add(CLI::App& root) {
    auto* app = root.add_subcommand("construct", "build a low-rank matrix in S(F, G)");
    graph.add(app);
    common.add(app, false);
    app->add_option("--theorem", theorem, "5.1 (non-prime field), 6.1 (K_{n-3}) or A (large prime)")
        ->required()
        ->check(CLI::IsMember({"5.1", "6.1", "A"}));
    app->add_option("--field", field, "q or p^m; for A a prime >= 1009")->required();
    app->add_option("--k", k, "clique size (default: largest clique)");
    app->add_option("--seed", seed, "seed for --theorem A");
    app->add_option("--max-tries", max_tries, "retry bound for --theorem A");
    app->add_option("--emit-matrix", emit, "write the matrix");
  }

  int exec(std::ostream& out) {
    const Graph g = graph.load();
    const FieldPtr f = parse_field(field);
    json details;
    FMatrix a;
    std::size_t bound = 0;
    if (theorem == "6.1") {
      const auto res = k_n_minus_3_details(g, f);
      a = res.a;
      bound = 4;
      details = {{"case", res.case_number}, {"delegated", res.delegated}};
      if (!res.delegated) {
        details["scalar"] = res.scalar;
        details["alphas"] = res.alphas;
      }
      json outer = json::array();
      for (auto v : res.outer) outer.push_back(v + 1);
      details["outer_vertices"] = outer;
      details["pattern_counts"] = res.profile.counts;
    } else {
      const std::size_t kk = k ? *k : max_clique(g).size();
      bound = g.order() - kk + 1;
      details["k"] = kk;
      if (theorem == "5.1") {
        a = nonprime_construction(g, kk, f);
        details["beta"] = f->p();
      } else {
        if (!f->is_prime_field()) throw mrank::Error(Errc::InvalidArgument, "--theorem A needs a prime field");
        const auto res = large_prime_construction(g, kk, f->p(), seed, max_tries);
        a = res.a;
        details["seed"] = seed;
        details["tries"] = res.tries;
      }
    }
    emit_matrix(emit, a);
    const std::size_t rk = rank(a);
    if (common.as_json) {
      json j = header("construct");
      j["inputs"] = {{"theorem", theorem}, {"graph6", to_graph6(g)}, {"field", f->name()}};
      j["outputs"] = {{"rank", rk}, {"bound", bound}, {"details", details}, {"matrix", matrix_json(a)}};
      out << j.dump(2) << "\n";
    } else {
      out << "theorem: " << theorem << "\ngraph: " << to_graph6(g) << "\nfield: F_" << f->name() << "\n";
      for (const auto& [key, value] : details.items()) out << key << ": " << value.dump() << "\n";
      out << "rank: " << rk << " (bound " << bound << ")\n";
      write_matrix_text(out, a);
    }
    return kOk;
  }
};

// ---- counterexample --------------------------------------------------------

struct CounterexampleCmd {
  Common common;
  std::size_t n = 10;
  bool verify = false;
  std::string emit;

  void add(CLI::App& root) {
    auto* app = root.add_subcommand("counterexample", "the F_3 family graph with mr > 3");
    common.add(app);
    app->add_option("--n", n, "order (>= 10)");
    app->add_flag("--verify", verify, "prove mr > 3 by exhaustion and find a rank-4 witness");
    app->add_option("--emit-matrix", emit, "write the rank-4 witness (with --verify)");
  }

  int exec(std::ostream& out) {
    const Graph g = f3_counterexample_graph(n);
    json j = header("counterexample");
    j["inputs"] = {{"n", n}, {"verify", verify}, {"threads", common.threads}};
    j["outputs"] = {{"graph6", to_graph6(g)}, {"edges", g.edge_count()}};
    if (!common.as_json)
      out << "graph: " << to_graph6(g) << " (n=" << n << ", m=" << g.edge_count() << ")\n";
    if (verify) {
      SearchOptions opts;
      opts.threads = common.threads;
      const auto f3 = make_field(3);
      const auto r3 = rank_le_search(g, f3, 3, opts);
      const auto r4 = rank_le_search(g, f3, 4, opts);
      emit_matrix(emit, r4.a);
      const bool ok = !r3.is_witness() && r4.is_witness();
      j["outputs"]["r3"] = certificate_json(r3);
      j["outputs"]["r4"] = certificate_json(r4);
      if (ok) j["outputs"]["mr"] = 4;
      if (common.as_json) {
        out << j.dump(2) << "\n";
      } else {
        print_certificate(out, r3);
        print_certificate(out, r4);
        if (ok) out << "mr(F_3, G) = 4\n";
      }
      if (!ok) throw Failure{"expected EXHAUSTION at r=3 and WITNESS at r=4"};
    } else {
      if (common.as_json) out << j.dump(2) << "\n";
      else out << to_edge_list(g);
    }
    return kOk;
  }
};

// ---- verify-paper ----------------------------------------------------------

struct VerifyCmd {
  Common common;
  std::vector<std::string> only;

  void add(CLI::App& root) {
    auto* app = root.add_subcommand("verify-paper", "run every acceptance check");
    common.add(app);
    app->add_option("--only", only, "run only these check ids");
  }

  int exec(std::ostream& out) {
    checks::CheckOptions opts;
    opts.threads = common.threads;
    json results = json::array();
    std::optional<std::string> first_failure;
    std::size_t width = 0;
    for (const auto& c : checks::acceptance_checks()) width = std::max(width, c.id.size());
    for (const auto& c : checks::acceptance_checks()) {
      if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
      const auto r = checks::run_check(c, opts);
      if (!r.passed && !first_failure) first_failure = r.id;
      results.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed},
                         {"seconds", r.seconds}, {"detail", r.detail}});
      if (!common.as_json)
        out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.id
            << std::right << "  " << std::fixed << std::setprecision(2) << std::setw(8) << r.seconds << " s  "
            << std::defaultfloat << r.detail << "\n"
            << std::flush;
    }
    if (common.as_json) {
      json j = header("verify-paper");
      j["inputs"] = {{"threads", common.threads}, {"only", only}};
      j["outputs"] = {{"checks", results}, {"all_passed", !first_failure}};
      out << j.dump(2) << "\n";
    }
    if (first_failure) throw Failure{"check " + *first_failure + " failed"};
    return kOk;
  }
};

bool is_usage_error(Errc c) {
  switch (c) {
    case Errc::NotPrime:
    case Errc::ReducibleModulus:
    case Errc::TooLarge:
    case Errc::BadModulus:
    case Errc::BadFieldName:
    case Errc::BadHeader:
    case Errc::VertexOutOfRange:
    case Errc::DuplicateEdge:
    case Errc::SelfLoop:
    case Errc::BadGraph6:
    case Errc::NotAClique:
    case Errc::TooLargeToEnumerate:
    case Errc::OddDimension:
    case Errc::PrimeField:
    case Errc::NoClique:
    case Errc::FieldTooSmall:
    case Errc::TooSmall:
    case Errc::BadMatrixText:
    case Errc::InvalidArgument:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum rank of graphs over finite fields", "mrank"};
  app.set_version_flag("--version", MRANK_VERSION);
  app.require_subcommand(1);
  MinrankCmd minrank_cmd;
  CensusCmd census_cmd;
  AlphaCmd alpha_cmd;
  ConstructCmd construct_cmd;
  CounterexampleCmd counterexample_cmd;
  VerifyCmd verify_cmd;
  minrank_cmd.add(app);
  census_cmd.add(app);
  alpha_cmd.add(app);
  construct_cmd.add(app);
  counterexample_cmd.add(app);
  verify_cmd.add(app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand("minrank")) return minrank_cmd.exec(out);
    if (app.got_subcommand("census")) return census_cmd.exec(out);
    if (app.got_subcommand("alpha")) return alpha_cmd.exec(out);
    if (app.got_subcommand("construct")) return construct_cmd.exec(out);
    if (app.got_subcommand("counterexample")) return counterexample_cmd.exec(out);
    return verify_cmd.exec(out);
  } catch (const Failure& f) {
    err << "mrank: verification failed: " << f.what << "\n";
    return kFailed;
  } catch (const mrank::Error& e) {
    err << "mrank: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return is_usage_error(e.code()) ? kUsage : kFailed;
  }
}

}  // namespace mrank::cli
