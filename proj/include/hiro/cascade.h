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

#ifndef HIRO_CASCADE_H_
#define HIRO_CASCADE_H_

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "hiro/graph.h"
#include "hiro/hypermodel.h"
#include "hiro/random.h"

namespace hiro {

// Sorted, duplicate-free set of nodes.
class SeedSet {
 public:
  SeedSet() = default;
  // Sorts and removes duplicates.
  explicit SeedSet(std::vector<NodeId> nodes);
  SeedSet(std::initializer_list<NodeId> nodes)
      : SeedSet(std::vector<NodeId>(nodes)) {}

  std::span<const NodeId> nodes() const { return nodes_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  bool empty() const { return nodes_.empty(); }
  bool contains(NodeId node) const;
  SeedSet With(NodeId node) const;

  // Throws ParameterError if a node is outside [0, n).
  void Validate(int n) const;

  auto operator<=>(const SeedSet&) const = default;

 private:
  std::vector<NodeId> nodes_;
};

// One live-edge realization: each arc is alive or blocked.
class LiveEdgeSample {
 public:
  LiveEdgeSample() = default;
  explicit LiveEdgeSample(int num_arcs)
      : num_arcs_(num_arcs), words_((num_arcs + 63) / 64, 0) {}

  // Keeps arc e alive with probability p[e], independently.
  static LiveEdgeSample Draw(const ProbVector& p, Engine& rng);

  int num_arcs() const { return num_arcs_; }
  bool alive(ArcId e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
  void set_alive(ArcId e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  std::span<const std::uint64_t> words() const { return words_; }
  int CountAlive() const;

 private:
  int num_arcs_ = 0;
  std::vector<std::uint64_t> words_;
};

// R live-edge samples drawn from one probability vector. Replicate i is drawn
// from SubstreamEngine(seed, i), so a pool is a pure function of
// (p, R, seed) no matter how its construction is scheduled.
struct SamplePool {
  std::vector<LiveEdgeSample> samples;
  ProbVector prob;
  std::uint64_t seed = 0;

  int replicates() const { return static_cast<int>(samples.size()); }
};

struct InfluenceEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t replicates = 0;
  // Sum of reached-node counts over replicates; mean == total / replicates.
  std::int64_t total = 0;
};

// Reusable BFS buffers.
class ReachScratch {
 public:
  explicit ReachScratch(int n = 0) { Resize(n); }
  void Resize(int n);
  // Marks a node; returns false if it was already marked this round.
  bool Mark(NodeId v) {
    if (stamp_[v] == round_) return false;
    stamp_[v] = round_;
    return true;
  }
  bool Marked(NodeId v) const { return stamp_[v] == round_; }
  void NextRound();
  std::vector<NodeId>& queue() { return queue_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t round_ = 1;
  std::vector<NodeId> queue_;
};

// Nodes reachable from `seeds` over alive arcs, seeds included.
int CountReachable(const Graph& graph, const LiveEdgeSample& sample,
                   std::span<const NodeId> seeds, ReachScratch& scratch);

// One stochastic Independent Cascade run. Returns the activated nodes,
// sorted.
std::vector<NodeId> SimulateCascade(const Graph& graph, const ProbVector& p,
                                    const SeedSet& seeds, Engine& rng);

// Largest number of uncertain arcs ExactInfluence will enumerate over.
inline constexpr int kMaxExactArcs = 20;

// Expected number of activated nodes, by enumerating live-edge subsets.
// Arcs with p in {0, 1} are not enumerated, nor arcs that cannot lie on a
// path from the seeds. When the remaining uncertain arcs exceed
// kMaxExactArcs the sum is split per target node, each target enumerating
// only the arcs that can lie on a path to it. Throws CapacityError when even
// one target needs more than kMaxExactArcs uncertain arcs.
double ExactInfluence(const Graph& graph, const ProbVector& p,
                      const SeedSet& seeds);

SamplePool BuildPool(const Graph& graph, const ProbVector& p, int replicates,
                     std::uint64_t seed);

// Sample-average influence of `seeds` over the pool.
InfluenceEstimate PoolInfluence(const Graph& graph, const SamplePool& pool,
                                const SeedSet& seeds);

// BuildPool followed by PoolInfluence.
InfluenceEstimate EstimateInfluence(const Graph& graph, const ProbVector& p,
                                    const SeedSet& seeds, int replicates,
                                    std::uint64_t seed);

}  // namespace hiro

#endif  // HIRO_CASCADE_H_
