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

#ifndef HIRO_VERIFY_H_
#define HIRO_VERIFY_H_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hiro/cascade.h"
#include "hiro/graph.h"
#include "hiro/hypermodel.h"
#include "hiro/optimize.h"

namespace hiro {

struct BruteForceResult {
  SeedSet set;
  double value = 0.0;
};

// Exhaustive max over size-k sets of min_i f_i(S), using the family's own
// evaluation (exact for exact families). Ties go to the lexicographically
// smallest set. Throws CapacityError when C(n,k) > kMaxBruteForceSets.
BruteForceResult BruteForceRobust(const FunctionFamily& family, int k);
BruteForceResult BruteForceRobust(std::shared_ptr<const Graph> graph,
                                  const std::vector<ProbVector>& probs, int k);

// Exhaustive max over size-k sets of the robust ratio, with brute-force
// per-function optima.
struct RatioChoice {
  SeedSet set;
  double ratio = 0.0;
};
RatioChoice MaximizeRobustRatio(const FunctionFamily& family, int k);

// A small instance with explicit probability vectors and named nodes.
struct Fixture {
  std::shared_ptr<const Graph> graph;
  std::vector<ProbVector> probs;
  std::map<std::string, NodeId> labels;

  NodeId label(const std::string& name) const;
};

// Nodes u = 0, v = 1 and n_leaves blue nodes, each reachable from both u and
// v. Under f_1 only one u-arc is live (with a probability just above the
// point where u wins the ratio objective) and every v-arc has probability
// 1/sqrt(n_leaves); under f_2 every u-arc is certain and the v-arcs keep
// 1/sqrt(n_leaves). The ratio objective prefers u, the value objective v.
Fixture RatioGapInstance(int n_leaves);

// Two stars, centers u = 0 and v = 1. f_1 makes u's arcs certain and v's
// dead, f_2 the reverse.
Fixture ImproperGapInstance(int leaves_per_side);

// Directed cycle over nodes 0..n-1 with arc probability 1 - lambda, plus a
// center node n with spokes to every cycle node: lambda under f_1, 1/n under
// f_2.
Fixture LipschitzTightInstance(int n, double lambda);

// One probability vector per line.
void SaveProbabilities(const std::vector<ProbVector>& probs,
                       const std::string& path);
// Throws ParseError if a line's length differs from `num_arcs`.
std::vector<ProbVector> LoadProbabilities(const std::string& path,
                                          int num_arcs);

}  // namespace hiro

#endif  // HIRO_VERIFY_H_
