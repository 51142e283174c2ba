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

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mrank/graph.hpp"

namespace mrank::checks {

struct CheckOptions {
  unsigned threads = 1;
};

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

struct Check {
  std::string id;
  std::string title;
  double budget_seconds;
  /// Returns the failure reason, or an empty string; `note` collects a
  /// one-line summary either way.
  std::function<std::string(const CheckOptions&, std::string& note)> body;
};

const std::vector<Check>& acceptance_checks();

/// Runs one check, timing it; exceptions count as failures.
CheckResult run_check(const Check& check, const CheckOptions& opts);

/// G(n, 1/2) from GraphSampler(seed) with a k-clique planted on a seeded
/// random vertex subset.
Graph planted_clique_graph(std::size_t n, std::size_t k, std::uint64_t seed);

/// Seeds and sizes used by the Monte Carlo trend check.
inline constexpr std::uint64_t kAlphaSeed = 1;
inline constexpr std::uint64_t kAlphaSamples = 200;
inline constexpr double kAlphaTarget = 0.8;

}  // namespace mrank::checks
