// Copyright 2026 The HIRO Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hiro/verify.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include "hiro/combinations.h"
#include "hiro/errors.h"
#include "hiro/parallel.h"

namespace hiro {
namespace {

std::vector<SeedSet> AllSets(int n, int k) {
  if (k < 1 || k > n) throw ParameterError("k outside [1, n]");
  const std::uint64_t count = BinomialCapped(n, k, kMaxBruteForceSets);
  if (count > kMaxBruteForceSets) {
    throw CapacityError("brute force over C(" + std::to_string(n) + ", " +
                        std::to_string(k) + ") sets exceeds " +
                        std::to_string(kMaxBruteForceSets));
  }
  std::vector<SeedSet> sets;
  sets.reserve(count);
  ForEachCombination(n, k, [&](std::span<const NodeId> nodes) {
    sets.emplace_back(std::vector<NodeId>(nodes.begin(), nodes.end()));
  });
  return sets;
}

// Index of the first maximum.
std::size_t FirstArgmax(const std::vector<double>& values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

}  // namespace

BruteForceResult BruteForceRobust(const FunctionFamily& family, int k) {
  if (family.size() == 0) throw ParameterError("empty function family");
  const std::vector<SeedSet> sets = AllSets(family.graph->num_nodes(), k);
  std::vector<double> min_values(sets.size());
  ParallelFor(static_cast<std::int64_t>(sets.size()), [&](std::int64_t s) {
    double v = std::numeric_limits<double>::infinity();
    for (int i = 0; i < family.size(); ++i) {
      v = std::min(v, family[i].Value(sets[s]));
    }
    min_values[s] = v;
  });
  const std::size_t best = FirstArgmax(min_values);
  return {sets[best], min_values[best]};
}

BruteForceResult BruteForceRobust(std::shared_ptr<const Graph> graph,
                                  const std::vector<ProbVector>& probs, int k) {
  return BruteForceRobust(MakeExactFamily(std::move(graph), probs), k);
}

RatioChoice MaximizeRobustRatio(const FunctionFamily& family, int k) {
  if (family.size() == 0) throw ParameterError("empty function family");
  const std::vector<SeedSet> sets = AllSets(family.graph->num_nodes(), k);
  std::vector<double> optima(family.size());
  for (int i = 0; i < family.size(); ++i) {
    optima[i] = BruteForceOptimum(family[i], k);
  }
  std::vector<double> ratios(sets.size());
  ParallelFor(static_cast<std::int64_t>(sets.size()), [&](std::int64_t s) {
    double r = std::numeric_limits<double>::infinity();
    for (int i = 0; i < family.size(); ++i) {
      const double ratio =
          optima[i] > 0.0 ? family[i].Value(sets[s]) / optima[i] : 1.0;
      r = std::min(r, ratio);
    }
    ratios[s] = r;
  });
  const std::size_t best = FirstArgmax(ratios);
  return {sets[best], ratios[best]};
}

NodeId Fixture::label(const std::string& name) const {
  auto it = labels.find(name);
  if (it == labels.end()) throw ParameterError("fixture has no node " + name);
  return it->second;
}

Fixture RatioGapInstance(int n_leaves) {
  const int root = static_cast<int>(std::lround(std::sqrt(n_leaves)));
  if (n_leaves < 4 || root * root != n_leaves) {
    throw ParameterError("n_leaves must be a perfect square >= 4");
  }
  const NodeId u = 0;
  const NodeId v = 1;
  GraphBuilder builder(n_leaves + 2, 0);
  for (int j = 0; j < n_leaves; ++j) builder.AddArc(u, 2 + j, {});
  for (int j = 0; j < n_leaves; ++j) builder.AddArc(v, 2 + j, {});
  const double n = n_leaves;
  const double q = 1.0 / root;
  // u beats v on the ratio objective iff 1 + a > (1 + sqrt n)^2 / (1 + n).
  const double a_min = 2.0 * root / (n + 1.0);
  const double a = a_min + (1.0 - a_min) / (2.0 * root);

  std::vector<double> p1(2 * n_leaves, 0.0);
  std::vector<double> p2(2 * n_leaves, 1.0);
  p1[0] = a;
  for (int j = 0; j < n_leaves; ++j) {
    p1[n_leaves + j] = q;
    p2[n_leaves + j] = q;
  }
  Fixture f;
  f.graph = std::make_shared<const Graph>(std::move(builder).Build());
  f.probs = {ProbVector(std::move(p1)), ProbVector(std::move(p2))};
  f.labels = {{"u", u}, {"v", v}};
  return f;
}

Fixture ImproperGapInstance(int leaves_per_side) {
  if (leaves_per_side < 1) {
    throw ParameterError("leaves_per_side must be >= 1");
  }
  const NodeId u = 0;
  const NodeId v = 1;
  const int m = 2 * leaves_per_side;
  GraphBuilder builder(m + 2, 0);
  for (int j = 0; j < leaves_per_side; ++j) builder.AddArc(u, 2 + j, {});
  for (int j = 0; j < leaves_per_side; ++j) {
    builder.AddArc(v, 2 + leaves_per_side + j, {});
  }
  std::vector<double> p1(m, 0.0);
  std::vector<double> p2(m, 0.0);
  for (int j = 0; j < leaves_per_side; ++j) {
    p1[j] = 1.0;
    p2[leaves_per_side + j] = 1.0;
  }
  Fixture f;
  f.graph = std::make_shared<const Graph>(std::move(builder).Build());
  f.probs = {ProbVector(std::move(p1)), ProbVector(std::move(p2))};
  f.labels = {{"u", u}, {"v", v}};
  return f;
}

Fixture LipschitzTightInstance(int n, double lambda) {
  if (n < 10) throw ParameterError("cycle length must be >= 10");
  if (!(lambda > 0.0) || !(lambda < 1.0 / n)) {
    throw ParameterError("lambda must lie in (0, 1/n)");
  }
  const NodeId center = n;
  GraphBuilder builder(n + 1, 0);
  for (int i = 0; i < n; ++i) builder.AddArc(i, (i + 1) % n, {});
  for (int i = 0; i < n; ++i) builder.AddArc(center, i, {});
  std::vector<double> p1(2 * n);
  std::vector<double> p2(2 * n);
  for (int i = 0; i < n; ++i) {
    p1[i] = p2[i] = 1.0 - lambda;
    p1[n + i] = lambda;
    p2[n + i] = 1.0 / n;
  }
  Fixture f;
  f.graph = std::make_shared<const Graph>(std::move(builder).Build());
  f.probs = {ProbVector(std::move(p1)), ProbVector(std::move(p2))};
  f.labels = {{"center", center}};
  return f;
}

void SaveProbabilities(const std::vector<ProbVector>& probs,
                       const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  char buf[32];
  for (const ProbVector& p : probs) {
    for (int e = 0; e < p.size(); ++e) {
      std::snprintf(buf, sizeof(buf), "%.17g", p[e]);
      if (e > 0) out << ' ';
      out << buf;
    }
    out << '\n';
  }
  if (!out) throw IoError("failed writing " + path);
}

std::vector<ProbVector> LoadProbabilities(const std::string& path,
                                          int num_arcs) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<ProbVector> probs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<double> p;
    const char* cur = line.data();
    const char* end = line.data() + line.size();
    while (true) {
      while (cur < end && (*cur == ' ' || *cur == '\t' || *cur == '\r')) ++cur;
      if (cur == end) break;
      double x = 0.0;
      auto [ptr, ec] = std::from_chars(cur, end, x);
      if (ec != std::errc()) throw ParseError(path, line_no, "bad number");
      p.push_back(x);
      cur = ptr;
    }
    if (static_cast<int>(p.size()) != num_arcs) {
      throw ParseError(path, line_no,
                       "expected " + std::to_string(num_arcs) +
                           " probabilities, got " + std::to_string(p.size()));
    }
    try {
      probs.emplace_back(std::move(p));
    } catch (const ParameterError& e) {
      throw ParseError(path, line_no, e.what());
    }
  }
  if (probs.empty()) throw ParseError(path, line_no, "no probability vectors");
  return probs;
}

}  // namespace hiro
