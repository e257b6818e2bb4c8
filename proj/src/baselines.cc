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

#include "hiro/baselines.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "hiro/errors.h"
#include "hiro/parallel.h"
#include "hiro/random.h"

namespace hiro {
namespace {

void CheckBudget(const Graph& graph, int k) {
  if (k < 1 || k > graph.num_nodes()) {
    throw ParameterError("k = " + std::to_string(k) + " outside [1, " +
                         std::to_string(graph.num_nodes()) + "]");
  }
}

}  // namespace

std::vector<SeedSet> RandomSeedSets(const Graph& graph, int k, int trials,
                                    std::uint64_t seed) {
  CheckBudget(graph, k);
  if (trials < 1) throw ParameterError("trials must be >= 1");
  const int n = graph.num_nodes();
  const std::uint64_t base = DeriveSeed(seed, {stream::kBaseline, 0});
  std::vector<SeedSet> sets(trials);
  ParallelFor(trials, [&](std::int64_t t) {
    Engine rng = SubstreamEngine(base, t);
    std::vector<NodeId> nodes(n);
    std::iota(nodes.begin(), nodes.end(), 0);
    // Partial Fisher-Yates.
    for (int i = 0; i < k; ++i) {
      const auto j = i + UniformIndex(rng, n - i);
      std::swap(nodes[i], nodes[j]);
    }
    nodes.resize(k);
    sets[t] = SeedSet(std::move(nodes));
  });
  return sets;
}

SeedSet TopKDegree(const Graph& graph, int k) {
  CheckBudget(graph, k);
  std::vector<NodeId> order(graph.num_nodes());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return graph.out_degree(a) > graph.out_degree(b);
  });
  order.resize(k);
  return SeedSet(std::move(order));
}

std::vector<SeedSet> PerFunctionGreedy(const FunctionFamily& family, int k) {
  std::vector<SeedSet> sets;
  sets.reserve(family.size());
  for (int i = 0; i < family.size(); ++i) {
    sets.push_back(
        LazyGreedy(family, WeightVector::OneHot(family.size(), i), k));
  }
  return sets;
}

SeedSet PickRandomGreedy(const std::vector<SeedSet>& per_function,
                         std::uint64_t seed) {
  if (per_function.empty()) throw ParameterError("no greedy sets to pick from");
  Engine rng(DeriveSeed(seed, {stream::kBaseline, 1}));
  return per_function[UniformIndex(rng, per_function.size())];
}

SeedSet RandomGreedy(const FunctionFamily& family, int k, std::uint64_t seed) {
  return PickRandomGreedy(PerFunctionGreedy(family, k), seed);
}

void IntervalBounds::Validate() const {
  if (lo.size() != hi.size()) {
    throw ParameterError("interval bounds have different lengths");
  }
  for (int e = 0; e < lo.size(); ++e) {
    if (lo[e] > hi[e]) {
      throw ParameterError("lower bound exceeds upper bound on arc " +
                           std::to_string(e));
    }
  }
}

IntervalBounds DeriveIntervals(const std::vector<ProbVector>& probs) {
  if (probs.empty()) throw ParameterError("no probability vectors");
  const int m = probs.front().size();
  std::vector<double> lo(probs.front().values().begin(),
                         probs.front().values().end());
  std::vector<double> hi = lo;
  for (const ProbVector& p : probs) {
    if (p.size() != m) throw ParameterError("probability vector lengths differ");
    for (int e = 0; e < m; ++e) {
      lo[e] = std::min(lo[e], p[e]);
      hi[e] = std::max(hi[e], p[e]);
    }
  }
  return {ProbVector(std::move(lo)), ProbVector(std::move(hi))};
}

IntervalBounds DeriveIntervals(const FunctionFamily& family) {
  return DeriveIntervals(family.AllProbs());
}

LuGreedyResult LuGreedy(std::shared_ptr<const Graph> graph,
                        const IntervalBounds& bounds, int k, int replicates,
                        std::uint64_t seed) {
  bounds.Validate();
  CheckBudget(*graph, k);
  const std::uint64_t base = DeriveSeed(seed, {stream::kBaseline, 2});
  FunctionFamily lower = MakePoolFamily(graph, {bounds.lo}, replicates, base);
  FunctionFamily upper =
      MakePoolFamily(graph, {bounds.hi}, replicates, DeriveSeed(base, {1}));
  LuGreedyResult result;
  result.lower_set = LazyGreedy(lower, WeightVector::Uniform(1), k);
  result.upper_set = LazyGreedy(upper, WeightVector::Uniform(1), k);
  result.lower_set_value = lower[0].Value(result.lower_set);
  result.upper_set_value = lower[0].Value(result.upper_set);
  result.set = result.upper_set_value > result.lower_set_value
                   ? result.upper_set
                   : result.lower_set;
  return result;
}

}  // namespace hiro
