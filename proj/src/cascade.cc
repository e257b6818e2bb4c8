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

#include "hiro/cascade.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "hiro/errors.h"
#include "hiro/parallel.h"

namespace hiro {

SeedSet::SeedSet(std::vector<NodeId> nodes) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
}

bool SeedSet::contains(NodeId node) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), node);
}

SeedSet SeedSet::With(NodeId node) const {
  std::vector<NodeId> nodes = nodes_;
  nodes.push_back(node);
  return SeedSet(std::move(nodes));
}

void SeedSet::Validate(int n) const {
  for (NodeId v : nodes_) {
    if (v < 0 || v >= n) {
      throw ParameterError("seed node " + std::to_string(v) +
                           " outside [0," + std::to_string(n) + ")");
    }
  }
}

LiveEdgeSample LiveEdgeSample::Draw(const ProbVector& p, Engine& rng) {
  LiveEdgeSample sample(p.size());
  for (ArcId e = 0; e < p.size(); ++e) {
    if (UniformUnit(rng) < p[e]) sample.set_alive(e);
  }
  return sample;
}

int LiveEdgeSample::CountAlive() const {
  int count = 0;
  for (std::uint64_t w : words_) count += std::popcount(w);
  return count;
}

void ReachScratch::Resize(int n) {
  stamp_.assign(n, 0);
  round_ = 1;
  queue_.clear();
  queue_.reserve(n);
}

void ReachScratch::NextRound() {
  if (++round_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    round_ = 1;
  }
  queue_.clear();
}

int CountReachable(const Graph& graph, const LiveEdgeSample& sample,
                   std::span<const NodeId> seeds, ReachScratch& scratch) {
  scratch.NextRound();
  auto& queue = scratch.queue();
  for (NodeId s : seeds) {
    if (scratch.Mark(s)) queue.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (ArcId e : graph.out_arcs(queue[head])) {
      if (sample.alive(e) && scratch.Mark(graph.dst(e))) {
        queue.push_back(graph.dst(e));
      }
    }
  }
  return static_cast<int>(queue.size());
}

std::vector<NodeId> SimulateCascade(const Graph& graph, const ProbVector& p,
                                    const SeedSet& seeds, Engine& rng) {
  seeds.Validate(graph.num_nodes());
  std::vector<char> active(graph.num_nodes(), 0);
  std::vector<NodeId> frontier(seeds.nodes().begin(), seeds.nodes().end());
  for (NodeId s : frontier) active[s] = 1;
  std::vector<NodeId> activated = frontier;
  std::vector<NodeId> next;
  while (!frontier.empty()) {
    next.clear();
    for (NodeId u : frontier) {
      for (ArcId e : graph.out_arcs(u)) {
        const NodeId v = graph.dst(e);
        if (active[v]) continue;
        if (UniformUnit(rng) < p[e]) {
          active[v] = 1;
          next.push_back(v);
          activated.push_back(v);
        }
      }
    }
    frontier.swap(next);
  }
  std::sort(activated.begin(), activated.end());
  return activated;
}

namespace {

// Arcs taking part in one enumeration, grouped by source node. Uncertain arcs
// carry their bit position in the enumeration mask, certain arcs carry -1.
struct EnumArcs {
  struct Entry {
    NodeId dst;
    int bit;
  };
  std::vector<std::vector<Entry>> out;
  std::vector<double> prob;  // per bit
};

// Probability-weighted sum over all 2^r masks of visit(mask).
template <typename Visit>
double Enumerate(const EnumArcs& arcs, Visit visit) {
  const int r = static_cast<int>(arcs.prob.size());
  const std::uint64_t masks = std::uint64_t{1} << r;
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    double weight = 1.0;
    for (int b = 0; b < r && weight > 0.0; ++b) {
      weight *= (mask >> b) & 1u ? arcs.prob[b] : 1.0 - arcs.prob[b];
    }
    if (weight == 0.0) continue;
    total += weight * visit(mask);
  }
  return total;
}

// BFS from the seeds over the arcs alive under `mask`. Returns the number of
// nodes reached, or whether `target` is reached when target >= 0.
int MaskedReach(const EnumArcs& arcs, std::span<const NodeId> seeds,
                std::uint64_t mask, NodeId target, ReachScratch& scratch) {
  scratch.NextRound();
  auto& queue = scratch.queue();
  for (NodeId s : seeds) {
    if (scratch.Mark(s)) queue.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& entry : arcs.out[queue[head]]) {
      if (entry.bit >= 0 && !((mask >> entry.bit) & 1u)) continue;
      if (scratch.Mark(entry.dst)) {
        if (entry.dst == target) return 1;
        queue.push_back(entry.dst);
      }
    }
  }
  return target >= 0 ? 0 : static_cast<int>(queue.size());
}

// Nodes reachable from `start` along arcs with positive probability, in the
// forward or backward direction, restricted to `allowed` when given.
std::vector<char> PositiveReach(const Graph& graph, const ProbVector& p,
                                std::span<const NodeId> start, bool forward,
                                const std::vector<std::vector<ArcId>>* in_arcs,
                                const std::vector<char>* allowed) {
  std::vector<char> seen(graph.num_nodes(), 0);
  std::vector<NodeId> queue;
  for (NodeId s : start) {
    if (!seen[s]) {
      seen[s] = 1;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    auto relax = [&](ArcId e, NodeId next) {
      if (p[e] <= 0.0 || seen[next]) return;
      if (allowed && !(*allowed)[next]) return;
      seen[next] = 1;
      queue.push_back(next);
    };
    if (forward) {
      for (ArcId e : graph.out_arcs(u)) relax(e, graph.dst(e));
    } else {
      for (ArcId e : (*in_arcs)[u]) relax(e, graph.src(e));
    }
  }
  return seen;
}

}  // namespace

double ExactInfluence(const Graph& graph, const ProbVector& p,
                      const SeedSet& seeds) {
  const int n = graph.num_nodes();
  if (p.size() != graph.num_arcs()) {
    throw ParameterError("probability vector length does not match arc count");
  }
  seeds.Validate(n);
  if (seeds.empty()) return 0.0;

  const std::vector<char> forward =
      PositiveReach(graph, p, seeds.nodes(), true, nullptr, nullptr);
  // Candidate arcs: positive probability, source reachable, head not a seed.
  std::vector<ArcId> candidates;
  for (ArcId e = 0; e < graph.num_arcs(); ++e) {
    if (p[e] > 0.0 && forward[graph.src(e)] && !seeds.contains(graph.dst(e))) {
      candidates.push_back(e);
    }
  }
  auto build = [&](const std::vector<ArcId>& arcs) {
    EnumArcs out;
    out.out.resize(n);
    for (ArcId e : arcs) {
      int bit = -1;
      if (p[e] < 1.0) {
        bit = static_cast<int>(out.prob.size());
        out.prob.push_back(p[e]);
      }
      out.out[graph.src(e)].push_back({graph.dst(e), bit});
    }
    return out;
  };

  ReachScratch scratch(n);
  const EnumArcs all = build(candidates);
  if (static_cast<int>(all.prob.size()) <= kMaxExactArcs) {
    return Enumerate(all, [&](std::uint64_t mask) {
      return MaskedReach(all, seeds.nodes(), mask, -1, scratch);
    });
  }

  // Per-target split: P[target reached] only depends on arcs (a, b) with a
  // reachable from the seeds and the target reachable from b.
  std::vector<std::vector<ArcId>> in_arcs(n);
  for (ArcId e : candidates) in_arcs[graph.dst(e)].push_back(e);
  double total = static_cast<double>(seeds.size());
  for (NodeId target = 0; target < n; ++target) {
    if (!forward[target] || seeds.contains(target)) continue;
    const NodeId start[] = {target};
    const std::vector<char> backward =
        PositiveReach(graph, p, start, false, &in_arcs, &forward);
    std::vector<ArcId> relevant;
    for (ArcId e : candidates) {
      if (graph.src(e) != target && backward[graph.dst(e)]) {
        relevant.push_back(e);
      }
    }
    const EnumArcs arcs = build(relevant);
    if (static_cast<int>(arcs.prob.size()) > kMaxExactArcs) {
      throw CapacityError(
          "exact influence needs " + std::to_string(arcs.prob.size()) +
          " uncertain arcs for node " + std::to_string(target) +
          " (limit " + std::to_string(kMaxExactArcs) +
          "); use EstimateInfluence instead");
    }
    total += Enumerate(arcs, [&](std::uint64_t mask) {
      return MaskedReach(arcs, seeds.nodes(), mask, target, scratch);
    });
  }
  return total;
}

SamplePool BuildPool(const Graph& graph, const ProbVector& p, int replicates,
                     std::uint64_t seed) {
  if (replicates < 1) throw ParameterError("pool needs at least 1 replicate");
  if (p.size() != graph.num_arcs()) {
    throw ParameterError("probability vector length does not match arc count");
  }
  SamplePool pool;
  pool.prob = p;
  pool.seed = seed;
  pool.samples.resize(replicates);
  ParallelFor(replicates, [&](std::int64_t i) {
    Engine rng = SubstreamEngine(seed, static_cast<std::uint64_t>(i));
    pool.samples[i] = LiveEdgeSample::Draw(p, rng);
  });
  return pool;
}

InfluenceEstimate PoolInfluence(const Graph& graph, const SamplePool& pool,
                                const SeedSet& seeds) {
  seeds.Validate(graph.num_nodes());
  const int r = pool.replicates();
  std::vector<std::int64_t> counts(r);
  constexpr int kBlock = 256;
  const int blocks = (r + kBlock - 1) / kBlock;
  ParallelFor(blocks, [&](std::int64_t b) {
    ReachScratch scratch(graph.num_nodes());
    const int end = std::min(r, static_cast<int>((b + 1) * kBlock));
    for (int i = static_cast<int>(b * kBlock); i < end; ++i) {
      counts[i] = CountReachable(graph, pool.samples[i], seeds.nodes(), scratch);
    }
  });
  InfluenceEstimate est;
  est.replicates = r;
  std::int64_t sum = 0;
  for (std::int64_t c : counts) sum += c;
  est.total = sum;
  est.mean = static_cast<double>(sum) / r;
  if (r > 1) {
    double ss = 0.0;
    for (std::int64_t c : counts) {
      const double dev = static_cast<double>(c) - est.mean;
      ss += dev * dev;
    }
    est.std_error = std::sqrt(ss / (r - 1)) / std::sqrt(static_cast<double>(r));
  }
  return est;
}

InfluenceEstimate EstimateInfluence(const Graph& graph, const ProbVector& p,
                                    const SeedSet& seeds, int replicates,
                                    std::uint64_t seed) {
  return PoolInfluence(graph, BuildPool(graph, p, replicates, seed), seeds);
}

}  // namespace hiro
