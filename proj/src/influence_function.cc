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

#include "hiro/influence_function.h"

#include <utility>

#include "hiro/errors.h"
#include "hiro/parallel.h"

namespace hiro {
namespace {

class IndexedPoolGainState : public GainState {
 public:
  explicit IndexedPoolGainState(const PoolInfluenceFunction& f)
      : f_(f),
        words_(f.closures().empty() ? 0 : f.closures().front().words()),
        covered_(static_cast<std::size_t>(f.pool().replicates()) * words_, 0) {}

  double Gain(NodeId node) override { return Delta(node) / Replicates(); }

  void Add(NodeId node) override {
    const auto& closures = f_.closures();
    total_ += Delta(node);
    for (std::size_t r = 0; r < closures.size(); ++r) {
      const auto reach = closures[r].Reach(node);
      std::uint64_t* covered = covered_.data() + r * words_;
      for (int i = 0; i < words_; ++i) covered[i] |= reach[i];
    }
    fresh_ = false;
  }

  double Value() const override { return total_ / Replicates(); }

 private:
  double Replicates() const { return f_.pool().replicates(); }

  double Delta(NodeId node) const {
    if (fresh_) return static_cast<double>(f_.SingletonTotals()[node]);
    const auto& closures = f_.closures();
    std::int64_t delta = 0;
    const std::size_t word = node >> 6;
    const std::uint64_t bit = std::uint64_t{1} << (node & 63);
    for (std::size_t r = 0; r < closures.size(); ++r) {
      const std::uint64_t* covered = covered_.data() + r * words_;
      if (covered[word] & bit) continue;  // everything node reaches is covered
      delta += PopcountAndNot(closures[r].Reach(node),
                              std::span<const std::uint64_t>(covered, words_));
    }
    return static_cast<double>(delta);
  }

  const PoolInfluenceFunction& f_;
  int words_;
  std::vector<std::uint64_t> covered_;
  double total_ = 0.0;
  bool fresh_ = true;
};

// Covered sets are closed under reachability, so the BFS stops at them.
class BfsPoolGainState : public GainState {
 public:
  explicit BfsPoolGainState(const PoolInfluenceFunction& f)
      : f_(f),
        n_(f.graph().num_nodes()),
        covered_(static_cast<std::size_t>(f.pool().replicates()) * n_, 0),
        scratch_(n_) {}

  double Gain(NodeId node) override {
    if (fresh_) return f_.SingletonTotals()[node] / Replicates();
    return static_cast<double>(Walk(node, false)) / Replicates();
  }

  void Add(NodeId node) override {
    total_ += static_cast<double>(Walk(node, true));
    fresh_ = false;
  }

  double Value() const override { return total_ / Replicates(); }

 private:
  double Replicates() const { return f_.pool().replicates(); }

  std::int64_t Walk(NodeId node, bool mark) {
    const Graph& g = f_.graph();
    std::int64_t count = 0;
    const auto& samples = f_.pool().samples;
    for (std::size_t r = 0; r < samples.size(); ++r) {
      char* covered = covered_.data() + r * n_;
      if (covered[node]) continue;
      scratch_.NextRound();
      auto& queue = scratch_.queue();
      scratch_.Mark(node);
      queue.push_back(node);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (ArcId e : g.out_arcs(queue[head])) {
          const NodeId w = g.dst(e);
          if (samples[r].alive(e) && !covered[w] && scratch_.Mark(w)) {
            queue.push_back(w);
          }
        }
      }
      count += static_cast<std::int64_t>(queue.size());
      if (mark) {
        for (NodeId w : queue) covered[w] = 1;
      }
    }
    return count;
  }

  const PoolInfluenceFunction& f_;
  int n_;
  std::vector<char> covered_;
  ReachScratch scratch_;
  double total_ = 0.0;
  bool fresh_ = true;
};

class TabulatedGainState : public GainState {
 public:
  explicit TabulatedGainState(const ExactInfluenceFunction& f)
      : f_(f),
        words_(f.worlds().front().closure.words()),
        covered_(f.worlds().size() * words_, 0) {}

  double Gain(NodeId node) override {
    const auto& worlds = f_.worlds();
    double gain = 0.0;
    const std::size_t word = node >> 6;
    const std::uint64_t bit = std::uint64_t{1} << (node & 63);
    for (std::size_t w = 0; w < worlds.size(); ++w) {
      if (covered_[w * words_ + word] & bit) continue;
      gain += worlds[w].probability *
              PopcountAndNot(worlds[w].closure.Reach(node),
                             std::span<const std::uint64_t>(
                                 covered_.data() + w * words_, words_));
    }
    return gain;
  }

  void Add(NodeId node) override {
    value_ += Gain(node);
    const auto& worlds = f_.worlds();
    for (std::size_t w = 0; w < worlds.size(); ++w) {
      const auto reach = worlds[w].closure.Reach(node);
      for (int i = 0; i < words_; ++i) covered_[w * words_ + i] |= reach[i];
    }
  }

  double Value() const override { return value_; }

 private:
  const ExactInfluenceFunction& f_;
  int words_;
  std::vector<std::uint64_t> covered_;
  double value_ = 0.0;
};

class DirectExactGainState : public GainState {
 public:
  explicit DirectExactGainState(const ExactInfluenceFunction& f) : f_(f) {}

  double Gain(NodeId node) override {
    if (seeds_.contains(node)) return 0.0;
    return f_.Value(seeds_.With(node)) - value_;
  }
  void Add(NodeId node) override {
    seeds_ = seeds_.With(node);
    value_ = f_.Value(seeds_);
  }
  double Value() const override { return value_; }

 private:
  const ExactInfluenceFunction& f_;
  SeedSet seeds_;
  double value_ = 0.0;
};

}  // namespace

PoolInfluenceFunction::PoolInfluenceFunction(std::shared_ptr<const Graph> graph,
                                             SamplePool pool,
                                             std::size_t index_budget_bytes)
    : graph_(std::move(graph)), pool_(std::move(pool)) {
  if (pool_.prob.size() != graph_->num_arcs()) {
    throw ParameterError("pool does not match the graph's arc count");
  }
  const std::size_t worst = static_cast<std::size_t>(pool_.replicates()) *
                            ClosureWorstCaseBytes(graph_->num_nodes());
  if (worst <= index_budget_bytes) {
    closures_.resize(pool_.replicates());
    ParallelFor(pool_.replicates(), [&](std::int64_t r) {
      closures_[r] = ReachClosure(*graph_, pool_.samples[r].words());
    });
  }
}

std::int64_t PoolInfluenceFunction::Total(const SeedSet& seeds) const {
  std::int64_t total = 0;
  if (indexed()) {
    std::vector<std::uint64_t> scratch;
    for (const ReachClosure& c : closures_) {
      total += c.CountUnion(seeds.nodes(), scratch);
    }
  } else {
    ReachScratch scratch(graph_->num_nodes());
    for (const LiveEdgeSample& s : pool_.samples) {
      total += CountReachable(*graph_, s, seeds.nodes(), scratch);
    }
  }
  return total;
}

double PoolInfluenceFunction::Value(const SeedSet& seeds) const {
  seeds.Validate(graph_->num_nodes());
  return static_cast<double>(Total(seeds)) / pool_.replicates();
}

const std::vector<std::int64_t>& PoolInfluenceFunction::SingletonTotals()
    const {
  std::call_once(singleton_once_, [this] {
    const int n = graph_->num_nodes();
    singleton_totals_.assign(n, 0);
    ParallelFor(n, [&](std::int64_t v) {
      const NodeId node = static_cast<NodeId>(v);
      if (indexed()) {
        std::int64_t sum = 0;
        for (const ReachClosure& c : closures_) sum += c.ReachCount(node);
        singleton_totals_[v] = sum;
      } else {
        singleton_totals_[v] = Total(SeedSet{node});
      }
    });
  });
  return singleton_totals_;
}

std::unique_ptr<GainState> PoolInfluenceFunction::NewGainState() const {
  if (indexed()) return std::make_unique<IndexedPoolGainState>(*this);
  return std::make_unique<BfsPoolGainState>(*this);
}

ExactInfluenceFunction::ExactInfluenceFunction(
    std::shared_ptr<const Graph> graph, ProbVector p)
    : graph_(std::move(graph)), p_(std::move(p)) {
  if (p_.size() != graph_->num_arcs()) {
    throw ParameterError("probability vector length does not match arc count");
  }
  std::vector<ArcId> uncertain;
  std::vector<std::uint64_t> base((graph_->num_arcs() + 63) / 64, 0);
  for (ArcId e = 0; e < graph_->num_arcs(); ++e) {
    if (p_[e] >= 1.0) {
      base[e >> 6] |= std::uint64_t{1} << (e & 63);
    } else if (p_[e] > 0.0) {
      uncertain.push_back(e);
    }
  }
  constexpr std::size_t kTableBudget = std::size_t{128} << 20;
  const int r = static_cast<int>(uncertain.size());
  if (r > kWorldTableMaxArcs ||
      (std::size_t{1} << r) * ClosureWorstCaseBytes(graph_->num_nodes()) >
          kTableBudget) {
    return;
  }
  const std::uint64_t masks = std::uint64_t{1} << r;
  worlds_.reserve(masks);
  std::vector<std::uint64_t> alive;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    double prob = 1.0;
    alive = base;
    for (int b = 0; b < r; ++b) {
      const ArcId e = uncertain[b];
      if ((mask >> b) & 1u) {
        prob *= p_[e];
        alive[e >> 6] |= std::uint64_t{1} << (e & 63);
      } else {
        prob *= 1.0 - p_[e];
      }
    }
    worlds_.push_back({prob, ReachClosure(*graph_, alive)});
  }
}

double ExactInfluenceFunction::Value(const SeedSet& seeds) const {
  if (!tabulated()) return ExactInfluence(*graph_, p_, seeds);
  seeds.Validate(graph_->num_nodes());
  std::vector<std::uint64_t> scratch;
  double value = 0.0;
  for (const World& w : worlds_) {
    value += w.probability * w.closure.CountUnion(seeds.nodes(), scratch);
  }
  return value;
}

std::unique_ptr<GainState> ExactInfluenceFunction::NewGainState() const {
  if (tabulated()) return std::make_unique<TabulatedGainState>(*this);
  return std::make_unique<DirectExactGainState>(*this);
}

}  // namespace hiro
