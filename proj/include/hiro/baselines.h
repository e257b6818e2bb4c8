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

#ifndef HIRO_BASELINES_H_
#define HIRO_BASELINES_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "hiro/cascade.h"
#include "hiro/graph.h"
#include "hiro/hypermodel.h"
#include "hiro/optimize.h"

namespace hiro {

// `trials` independent uniform size-k subsets.
std::vector<SeedSet> RandomSeedSets(const Graph& graph, int k, int trials,
                                    std::uint64_t seed);

// The k nodes of largest out-degree, ties by lowest id.
SeedSet TopKDegree(const Graph& graph, int k);

// Greedy on each function of the family alone.
std::vector<SeedSet> PerFunctionGreedy(const FunctionFamily& family, int k);

// One of `per_function` drawn uniformly.
SeedSet PickRandomGreedy(const std::vector<SeedSet>& per_function,
                         std::uint64_t seed);
SeedSet RandomGreedy(const FunctionFamily& family, int k, std::uint64_t seed);

struct IntervalBounds {
  ProbVector lo;
  ProbVector hi;

  // Throws ParameterError unless lo[e] <= hi[e] for every arc.
  void Validate() const;
};

// Per-arc min and max over the family's probability vectors.
IntervalBounds DeriveIntervals(const std::vector<ProbVector>& probs);
IntervalBounds DeriveIntervals(const FunctionFamily& family);

struct LuGreedyResult {
  SeedSet set;  // the chosen candidate
  SeedSet lower_set;
  SeedSet upper_set;
  // Both candidates scored on the lower-bound pool.
  double lower_set_value = 0.0;
  double upper_set_value = 0.0;
};

// Greedy under the lower and the upper bounds; keeps whichever scores
// higher under the lower bounds (the lower-bound set on ties).
LuGreedyResult LuGreedy(std::shared_ptr<const Graph> graph,
                        const IntervalBounds& bounds, int k, int replicates,
                        std::uint64_t seed);

}  // namespace hiro

#endif  // HIRO_BASELINES_H_
