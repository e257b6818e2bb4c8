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

#ifndef HIRO_INFLUENCE_FUNCTION_H_
#define HIRO_INFLUENCE_FUNCTION_H_

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "hiro/cascade.h"
#include "hiro/graph.h"
#include "hiro/hypermodel.h"
#include "hiro/reachability.h"

namespace hiro {

// Incremental view of an influence function while a set is grown one node
// at a time.
class GainState {
 public:
  virtual ~GainState() = default;
  // f(S + node) - f(S) for the current S.
  virtual double Gain(NodeId node) = 0;
  virtual void Add(NodeId node) = 0;
  virtual double Value() const = 0;
};

// A monotone submodular set function f_p(S) for one probability vector,
// evaluated either on a fixed sample pool or exactly.
class InfluenceFunction {
 public:
  virtual ~InfluenceFunction() = default;
  virtual const Graph& graph() const = 0;
  virtual const ProbVector& probs() const = 0;
  virtual double Value(const SeedSet& seeds) const = 0;
  virtual std::unique_ptr<GainState> NewGainState() const = 0;
  virtual bool exact() const = 0;
};

// Sample-average influence over a fixed pool. Marginal gains are integer
// reach-count differences divided by R, so the greedy built on top is
// deterministic. When the pool's closures fit in `index_budget_bytes` the
// per-sample transitive closures are precomputed and gains become bitset
// popcounts; otherwise gains are computed by BFS.
class PoolInfluenceFunction : public InfluenceFunction {
 public:
  static constexpr std::size_t kDefaultIndexBudget = std::size_t{64} << 20;

  PoolInfluenceFunction(std::shared_ptr<const Graph> graph, SamplePool pool,
                        std::size_t index_budget_bytes = kDefaultIndexBudget);

  const Graph& graph() const override { return *graph_; }
  const ProbVector& probs() const override { return pool_.prob; }
  const SamplePool& pool() const { return pool_; }
  bool indexed() const { return !closures_.empty(); }
  bool exact() const override { return false; }

  double Value(const SeedSet& seeds) const override;
  // Reach-count total over the pool (Value == total / R).
  std::int64_t Total(const SeedSet& seeds) const;
  std::unique_ptr<GainState> NewGainState() const override;

  // Reach-count totals of every single node, computed once.
  const std::vector<std::int64_t>& SingletonTotals() const;
  const std::vector<ReachClosure>& closures() const { return closures_; }

 private:
  std::shared_ptr<const Graph> graph_;
  SamplePool pool_;
  std::vector<ReachClosure> closures_;
  mutable std::once_flag singleton_once_;
  mutable std::vector<std::int64_t> singleton_totals_;
};

// Exact influence. With at most kWorldTableMaxArcs uncertain arcs every
// live-edge world is tabulated with its probability and closure; otherwise
// each query runs ExactInfluence.
class ExactInfluenceFunction : public InfluenceFunction {
 public:
  static constexpr int kWorldTableMaxArcs = 16;

  ExactInfluenceFunction(std::shared_ptr<const Graph> graph, ProbVector p);

  const Graph& graph() const override { return *graph_; }
  const ProbVector& probs() const override { return p_; }
  bool exact() const override { return true; }
  bool tabulated() const { return !worlds_.empty(); }

  double Value(const SeedSet& seeds) const override;
  std::unique_ptr<GainState> NewGainState() const override;

  struct World {
    double probability;
    ReachClosure closure;
  };
  const std::vector<World>& worlds() const { return worlds_; }

 private:
  std::shared_ptr<const Graph> graph_;
  ProbVector p_;
  std::vector<World> worlds_;
};

}  // namespace hiro

#endif  // HIRO_INFLUENCE_FUNCTION_H_
