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

// Independent reference implementations and instance builders shared by the
// tests. Nothing here calls the code paths it is used to check.

#ifndef HIRO_TESTS_ORACLES_H_
#define HIRO_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "hiro/cascade.h"
#include "hiro/graph.h"
#include "hiro/hypermodel.h"

namespace hiro::testing {

// Directed graph with `arcs` distinct random arcs and uniform features.
inline Graph RandomGraph(int n, int arcs, int dim, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) pairs.emplace_back(u, v);
    }
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  arcs = std::min<int>(arcs, pairs.size());
  std::uniform_real_distribution<double> feature(-1.0, 1.0);
  GraphBuilder b(n, dim);
  for (int i = 0; i < arcs; ++i) {
    std::vector<double> x(dim);
    for (double& f : x) f = feature(rng);
    b.AddArc(pairs[i].first, pairs[i].second, x);
  }
  return std::move(b).Build();
}

inline ProbVector RandomProbs(int m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> p(m);
  for (double& x : p) x = u(rng);
  return ProbVector(std::move(p));
}

inline SeedSet RandomSet(int n, int k, std::mt19937_64& rng) {
  std::vector<NodeId> nodes(n);
  for (int i = 0; i < n; ++i) nodes[i] = i;
  std::shuffle(nodes.begin(), nodes.end(), rng);
  nodes.resize(k);
  return SeedSet(nodes);
}

// Reached-node count from `seeds` when exactly the arcs in `alive_mask`
// exist, by plain DFS.
inline int ReachCount(const Graph& g, std::uint64_t alive_mask,
                      const std::vector<NodeId>& seeds) {
  std::vector<char> seen(g.num_nodes(), 0);
  std::vector<NodeId> stack;
  for (NodeId s : seeds) {
    if (!seen[s]) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  int count = static_cast<int>(stack.size());
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (ArcId e = 0; e < g.num_arcs(); ++e) {
      if (g.src(e) == v && ((alive_mask >> e) & 1) && !seen[g.dst(e)]) {
        seen[g.dst(e)] = 1;
        ++count;
        stack.push_back(g.dst(e));
      }
    }
  }
  return count;
}

// The live-edge sum over all 2^m arc subsets, with no pruning.
inline double BruteExactInfluence(const Graph& g, const ProbVector& p,
                                  const SeedSet& seeds) {
  const int m = g.num_arcs();
  const std::vector<NodeId> s(seeds.nodes().begin(), seeds.nodes().end());
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    double prob = 1.0;
    for (int e = 0; e < m; ++e) prob *= ((mask >> e) & 1) ? p[e] : 1.0 - p[e];
    if (prob == 0.0) continue;
    total += prob * ReachCount(g, mask, s);
  }
  return total;
}

// Best exact value of one function over all size-k sets.
inline double BruteOptimum(const Graph& g, const ProbVector& p, int k) {
  const int n = g.num_nodes();
  double best = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<NodeId> nodes;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1) nodes.push_back(v);
    }
    best = std::max(best, BruteExactInfluence(g, p, SeedSet(nodes)));
  }
  return best;
}

// Best exact max-min value over all size-k sets.
inline double BruteMaxMin(const Graph& g, const std::vector<ProbVector>& ps,
                          int k) {
  const int n = g.num_nodes();
  double best = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<NodeId> nodes;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1) nodes.push_back(v);
    }
    double worst = 1e300;
    for (const ProbVector& p : ps) {
      worst = std::min(worst, BruteExactInfluence(g, p, SeedSet(nodes)));
    }
    best = std::max(best, worst);
  }
  return best;
}

// Greedy on sum_i w_i * (pool total_i / R), recomputing every gain from
// scratch, ties to the lowest id.
inline SeedSet NaiveGreedy(const Graph& g,
                           const std::vector<SamplePool>& pools,
                           const std::vector<double>& w, int k) {
  std::vector<NodeId> chosen;
  std::vector<std::int64_t> base(pools.size(), 0);
  for (int step = 0; step < k; ++step) {
    double best_gain = -1.0;
    NodeId best = -1;
    std::vector<std::int64_t> best_totals;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
      std::vector<NodeId> with = chosen;
      with.push_back(v);
      double gain = 0.0;
      std::vector<std::int64_t> totals(pools.size());
      for (std::size_t i = 0; i < pools.size(); ++i) {
        totals[i] = PoolInfluence(g, pools[i], SeedSet(with)).total;
        if (w[i] > 0.0) {
          gain += w[i] * (static_cast<double>(totals[i] - base[i]) /
                          pools[i].replicates());
        }
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
        best_totals = totals;
      }
    }
    chosen.push_back(best);
    base = best_totals;
  }
  return SeedSet(chosen);
}

}  // namespace hiro::testing

#endif  // HIRO_TESTS_ORACLES_H_
