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

#include "hiro/optimize.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <utility>

#include "hiro/combinations.h"
#include "hiro/errors.h"
#include "hiro/parallel.h"
#include "hiro/random.h"
#include "hiro/reachability.h"

namespace hiro {

std::vector<ProbVector> FunctionFamily::AllProbs() const {
  std::vector<ProbVector> out;
  out.reserve(functions.size());
  for (const auto& f : functions) out.push_back(f->probs());
  return out;
}

FunctionFamily FunctionFamily::Prefix(int count) const {
  if (count < 1 || count > size()) {
    throw ParameterError("family prefix " + std::to_string(count) +
                         " outside [1, " + std::to_string(size()) + "]");
  }
  FunctionFamily out;
  out.graph = graph;
  if (!thetas.empty()) {
    out.thetas.assign(thetas.begin(), thetas.begin() + count);
  }
  out.functions.assign(functions.begin(), functions.begin() + count);
  return out;
}

std::uint64_t FamilyPoolSeed(std::uint64_t seed, int function_index) {
  return DeriveSeed(seed, {stream::kTrainPools,
                           static_cast<std::uint64_t>(function_index)});
}

FunctionFamily MakePoolFamily(std::shared_ptr<const Graph> graph,
                              const HyperModel& model,
                              std::vector<Hyperparameter> thetas,
                              int replicates, std::uint64_t seed) {
  std::vector<ProbVector> probs;
  probs.reserve(thetas.size());
  for (const Hyperparameter& theta : thetas) {
    probs.push_back(EdgeProbabilities(model, theta, *graph));
  }
  FunctionFamily family =
      MakePoolFamily(std::move(graph), probs, replicates, seed);
  family.thetas = std::move(thetas);
  return family;
}

FunctionFamily MakePoolFamily(std::shared_ptr<const Graph> graph,
                              const std::vector<ProbVector>& probs,
                              int replicates, std::uint64_t seed) {
  if (probs.empty()) throw ParameterError("function family must be non-empty");
  if (replicates < 1) throw ParameterError("replicates must be >= 1");
  FunctionFamily family;
  family.graph = graph;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    SamplePool pool = BuildPool(*graph, probs[i], replicates,
                                FamilyPoolSeed(seed, static_cast<int>(i)));
    family.functions.push_back(
        std::make_shared<PoolInfluenceFunction>(graph, std::move(pool)));
  }
  return family;
}

FunctionFamily MakeExactFamily(std::shared_ptr<const Graph> graph,
                               const std::vector<ProbVector>& probs) {
  if (probs.empty()) throw ParameterError("function family must be non-empty");
  FunctionFamily family;
  family.graph = graph;
  for (const ProbVector& p : probs) {
    family.functions.push_back(
        std::make_shared<ExactInfluenceFunction>(graph, p));
  }
  return family;
}

WeightVector::WeightVector(std::vector<double> w) : w_(std::move(w)) {
  if (w_.empty()) throw ParameterError("weight vector must be non-empty");
  double sum = 0.0;
  for (double x : w_) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw ParameterError("weights must be finite and non-negative");
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ParameterError("weights must sum to 1, got " + std::to_string(sum));
  }
}

WeightVector WeightVector::Uniform(int size) {
  if (size < 1) throw ParameterError("weight vector must be non-empty");
  return WeightVector(std::vector<double>(size, 1.0 / size));
}

WeightVector WeightVector::OneHot(int size, int index) {
  if (index < 0 || index >= size) {
    throw ParameterError("one-hot index out of range");
  }
  std::vector<double> w(size, 0.0);
  w[index] = 1.0;
  return WeightVector(std::move(w));
}

MixedStrategy::MixedStrategy(std::vector<SeedSet> seed_sets)
    : sets_(std::move(seed_sets)) {
  if (sets_.empty()) throw ParameterError("mixed strategy needs >= 1 set");
  for (const SeedSet& s : sets_) {
    if (s.size() != sets_.front().size()) {
      throw ParameterError("sets of a mixed strategy must share one size");
    }
  }
}

MixedStrategy MixedStrategy::Single(SeedSet set) {
  return MixedStrategy(std::vector<SeedSet>{std::move(set)});
}

namespace {

struct HeapEntry {
  double gain;
  NodeId node;
  int stamp;  // |S| when `gain` was computed
};

struct HeapOrder {
  // std::priority_queue pops the "largest"; larger gain first, then lower id.
  bool operator()(const HeapEntry& a, const HeapEntry& b) const {
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.node > b.node;
  }
};

}  // namespace

SeedSet LazyGreedy(const FunctionFamily& family, const WeightVector& weights,
                   int k, const GreedyOptions& options) {
  if (family.size() == 0) throw ParameterError("empty function family");
  if (weights.size() != family.size()) {
    throw ParameterError("weight count does not match family size");
  }
  const int n = family.graph->num_nodes();
  if (k < 1 || k > n) {
    throw ParameterError("k = " + std::to_string(k) + " outside [1, " +
                         std::to_string(n) + "]");
  }
  std::vector<NodeId> candidates;
  if (options.candidates) {
    candidates = *options.candidates;
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    for (NodeId v : candidates) {
      if (v < 0 || v >= n) throw ParameterError("candidate node out of range");
    }
    if (static_cast<int>(candidates.size()) < k) {
      throw ParameterError("fewer candidates than k");
    }
  } else {
    candidates.resize(n);
    for (int v = 0; v < n; ++v) candidates[v] = v;
  }

  // Zero-weight functions contribute exactly +0.0 and are skipped.
  std::vector<int> active;
  std::vector<std::unique_ptr<GainState>> states;
  for (int i = 0; i < family.size(); ++i) {
    if (weights[i] > 0.0) {
      active.push_back(i);
      states.push_back(family[i].NewGainState());
    }
  }
  auto weighted_gain = [&](NodeId v) {
    double g = 0.0;
    for (std::size_t a = 0; a < active.size(); ++a) {
      g += weights[active[a]] * states[a]->Gain(v);
    }
    return g;
  };

  std::vector<HeapEntry> initial;
  initial.reserve(candidates.size());
  for (NodeId v : candidates) initial.push_back({weighted_gain(v), v, 0});
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapOrder> heap(
      HeapOrder{}, std::move(initial));

  std::vector<NodeId> chosen;
  while (static_cast<int>(chosen.size()) < k) {
    HeapEntry top = heap.top();
    heap.pop();
    const int stamp = static_cast<int>(chosen.size());
    if (top.stamp == stamp) {
      chosen.push_back(top.node);
      for (auto& s : states) s->Add(top.node);
    } else {
      heap.push({weighted_gain(top.node), top.node, stamp});
    }
  }
  return SeedSet(std::move(chosen));
}

WeightVector MwuWeights(int size, std::span<const std::vector<double>> history,
                        double eta) {
  if (size < 1) throw ParameterError("weight vector must be non-empty");
  if (!(eta > 0.0)) throw ParameterError("eta must be positive");
  std::vector<double> exponent(size, 0.0);
  for (const auto& round : history) {
    if (static_cast<int>(round.size()) != size) {
      throw ParameterError("payoff vector length does not match family");
    }
    for (int i = 0; i < size; ++i) exponent[i] -= eta * round[i];
  }
  const double top = *std::max_element(exponent.begin(), exponent.end());
  double sum = 0.0;
  for (double& e : exponent) {
    e = std::exp(e - top);
    sum += e;
  }
  for (double& e : exponent) e /= sum;
  return WeightVector(std::move(exponent));
}

std::vector<double> FamilyValues(const FunctionFamily& family,
                                 const SeedSet& set) {
  std::vector<double> values(family.size());
  ParallelFor(family.size(),
              [&](std::int64_t i) { values[i] = family[i].Value(set); });
  return values;
}

HiroResult Hiro(const FunctionFamily& family, const HiroConfig& config) {
  const int l = family.size();
  if (l == 0) throw ParameterError("empty function family");
  if (config.rounds < 1) throw ParameterError("T must be >= 1");
  const int n = family.graph->num_nodes();
  if (config.k < 1 || config.k > n) {
    throw ParameterError("k = " + std::to_string(config.k) + " outside [1, " +
                         std::to_string(n) + "]");
  }
  HiroResult result;
  if (config.eta) {
    result.eta = *config.eta;
  } else {
    result.eta = std::log(static_cast<double>(l)) / (2.0 * config.rounds);
  }
  // With l = 1 the default rate is 0 and weights stay uniform anyway.
  const double eta = result.eta > 0.0 ? result.eta : 1.0;
  if (config.eta && !(*config.eta > 0.0)) {
    throw ParameterError("eta must be positive");
  }

  std::vector<std::vector<double>> normalized;
  std::vector<double> cumulative(l, 0.0);
  std::vector<SeedSet> sets;
  for (int t = 0; t < config.rounds; ++t) {
    WeightVector w = MwuWeights(l, normalized, eta);
    SeedSet s = LazyGreedy(family, w, config.k);
    std::vector<double> payoff = FamilyValues(family, s);
    std::vector<double> scaled(l);
    for (int i = 0; i < l; ++i) {
      scaled[i] = payoff[i] / n;
      cumulative[i] += payoff[i];
    }
    double running = std::numeric_limits<double>::infinity();
    for (int i = 0; i < l; ++i) {
      running = std::min(running, cumulative[i] / (t + 1));
    }
    result.weights.push_back(std::move(w));
    result.payoffs.push_back(std::move(payoff));
    result.running_min.push_back(running);
    normalized.push_back(std::move(scaled));
    sets.push_back(std::move(s));
  }
  result.strategy = MixedStrategy(std::move(sets));
  return result;
}

SeedSet DrawFromStrategy(const MixedStrategy& strategy, std::uint64_t seed) {
  if (strategy.rounds() == 0) throw ParameterError("empty mixed strategy");
  Engine rng(DeriveSeed(seed, {stream::kDraw}));
  return strategy[static_cast<int>(UniformIndex(rng, strategy.rounds()))];
}

BicriteriaResult BicriteriaUnion(const MixedStrategy& strategy) {
  if (strategy.rounds() == 0) throw ParameterError("empty mixed strategy");
  std::vector<NodeId> all;
  for (const SeedSet& s : strategy.seed_sets()) {
    all.insert(all.end(), s.nodes().begin(), s.nodes().end());
  }
  BicriteriaResult result;
  result.set = SeedSet(std::move(all));
  result.blowup = strategy.set_size() == 0
                      ? 1.0
                      : static_cast<double>(result.set.size()) /
                            strategy.set_size();
  return result;
}

std::uint64_t EvaluationPoolSeed(std::uint64_t seed, int function_index) {
  return DeriveSeed(seed, {stream::kEvalPools,
                           static_cast<std::uint64_t>(function_index)});
}

namespace {

// Above this many nodes a per-sample closure costs more than one BFS per set.
constexpr int kClosureNodeLimit = 4096;
constexpr int kEvalBlock = 64;

struct Moments {
  std::int64_t sum = 0;
  __int128 sum_sq = 0;
};

// Per-sample totals c_s = sum_t |reach(S_t)| for each strategy s, summed
// over replicates in fixed blocks so the result does not depend on the
// worker count.
std::vector<Moments> StreamMoments(const Graph& graph, const ProbVector& p,
                                   std::span<const MixedStrategy> strategies,
                                   int replicates, std::uint64_t pool_seed) {
  const int num_strategies = static_cast<int>(strategies.size());
  // Each distinct set is counted once per sample; strategies then sum
  // the counts of their (possibly repeated) members.
  std::map<SeedSet, int> index;
  std::vector<const SeedSet*> distinct;
  std::vector<std::vector<int>> members(num_strategies);
  for (int s = 0; s < num_strategies; ++s) {
    for (const SeedSet& set : strategies[s].seed_sets()) {
      auto [it, inserted] =
          index.emplace(set, static_cast<int>(distinct.size()));
      if (inserted) distinct.push_back(&set);
      members[s].push_back(it->second);
    }
  }
  const std::int64_t blocks = (replicates + kEvalBlock - 1) / kEvalBlock;
  std::vector<std::vector<Moments>> per_block(
      blocks, std::vector<Moments>(num_strategies));
  const bool use_closure = graph.num_nodes() <= kClosureNodeLimit;
  ParallelFor(blocks, [&](std::int64_t b) {
    ReachScratch scratch(graph.num_nodes());
    std::vector<std::uint64_t> words;
    std::vector<std::int64_t> counts(distinct.size());
    const int begin = static_cast<int>(b * kEvalBlock);
    const int end = std::min(replicates, begin + kEvalBlock);
    for (int r = begin; r < end; ++r) {
      Engine rng = SubstreamEngine(pool_seed, r);
      LiveEdgeSample sample = LiveEdgeSample::Draw(p, rng);
      std::optional<ReachClosure> closure;
      if (use_closure) closure.emplace(graph, sample.words());
      for (std::size_t d = 0; d < distinct.size(); ++d) {
        const auto nodes = distinct[d]->nodes();
        counts[d] = closure ? closure->CountUnion(nodes, words)
                            : CountReachable(graph, sample, nodes, scratch);
      }
      for (int s = 0; s < num_strategies; ++s) {
        std::int64_t c = 0;
        for (int d : members[s]) c += counts[d];
        per_block[b][s].sum += c;
        per_block[b][s].sum_sq += static_cast<__int128>(c) * c;
      }
    }
  });
  std::vector<Moments> total(num_strategies);
  for (const auto& block : per_block) {
    for (int s = 0; s < num_strategies; ++s) {
      total[s].sum += block[s].sum;
      total[s].sum_sq += block[s].sum_sq;
    }
  }
  return total;
}

void FinishReport(RobustReport& report) {
  report.min_value = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < report.values.size(); ++j) {
    if (report.values[j] < report.min_value) {
      report.min_value = report.values[j];
      report.argmin = static_cast<int>(j);
    }
  }
}

}  // namespace

std::vector<RobustReport> EvaluateMany(const Graph& graph,
                                       std::span<const ProbVector> probs,
                                       std::span<const MixedStrategy> strategies,
                                       const EvalOptions& options) {
  if (probs.empty()) throw ParameterError("no functions to evaluate against");
  for (const MixedStrategy& s : strategies) {
    if (s.rounds() == 0) throw ParameterError("empty mixed strategy");
    for (const SeedSet& set : s.seed_sets()) set.Validate(graph.num_nodes());
  }
  for (const ProbVector& p : probs) {
    if (p.size() != graph.num_arcs()) {
      throw ParameterError("probability vector length does not match graph");
    }
  }
  if (!options.exact && options.replicates < 2) {
    throw ParameterError("evaluation needs >= 2 replicates");
  }
  const int l = static_cast<int>(probs.size());
  std::vector<RobustReport> reports(strategies.size());
  for (RobustReport& r : reports) {
    r.values.resize(l);
    r.std_errors.resize(l, 0.0);
    r.replicates = options.exact ? 0 : options.replicates;
    r.seed = options.seed;
  }
  for (int j = 0; j < l; ++j) {
    if (options.exact) {
      std::map<SeedSet, double> cache;
      for (std::size_t s = 0; s < strategies.size(); ++s) {
        double sum = 0.0;
        for (const SeedSet& set : strategies[s].seed_sets()) {
          auto it = cache.find(set);
          if (it == cache.end()) {
            it = cache.emplace(set, ExactInfluence(graph, probs[j], set)).first;
          }
          sum += it->second;
        }
        reports[s].values[j] = sum / strategies[s].rounds();
      }
      continue;
    }
    const std::vector<Moments> moments =
        StreamMoments(graph, probs[j], strategies, options.replicates,
                      EvaluationPoolSeed(options.seed, j));
    const double r = options.replicates;
    for (std::size_t s = 0; s < strategies.size(); ++s) {
      const double t = strategies[s].rounds();
      const double sum = static_cast<double>(moments[s].sum);
      const double sum_sq = static_cast<double>(moments[s].sum_sq);
      const double var =
          std::max(0.0, (sum_sq - sum * sum / r) / (r - 1.0)) / (t * t);
      reports[s].values[j] = sum / (r * t);
      reports[s].std_errors[j] = std::sqrt(var / r);
    }
  }
  for (RobustReport& r : reports) FinishReport(r);
  return reports;
}

RobustReport Evaluate(const FunctionFamily& family,
                      const MixedStrategy& strategy,
                      const EvalOptions& options) {
  const std::vector<ProbVector> probs = family.AllProbs();
  return EvaluateMany(*family.graph, probs,
                      std::span<const MixedStrategy>(&strategy, 1), options)
      .front();
}

double BruteForceOptimum(const InfluenceFunction& f, int k) {
  const int n = f.graph().num_nodes();
  if (k < 1 || k > n) throw ParameterError("k outside [1, n]");
  const std::uint64_t count = BinomialCapped(n, k, kMaxBruteForceSets);
  if (count > kMaxBruteForceSets) {
    throw CapacityError("brute force over C(" + std::to_string(n) + ", " +
                        std::to_string(k) + ") sets exceeds " +
                        std::to_string(kMaxBruteForceSets));
  }
  double best = -1.0;
  ForEachCombination(n, k, [&](std::span<const NodeId> nodes) {
    best = std::max(
        best, f.Value(SeedSet(std::vector<NodeId>(nodes.begin(), nodes.end()))));
  });
  return best;
}

RatioReport RobustRatio(const FunctionFamily& family, const SeedSet& set,
                        int k, OptimumMode mode) {
  const int l = family.size();
  if (l == 0) throw ParameterError("empty function family");
  RatioReport report;
  report.values = FamilyValues(family, set);
  report.optima.resize(l);
  for (int i = 0; i < l; ++i) {
    if (mode == OptimumMode::kBruteForce) {
      report.optima[i] = BruteForceOptimum(family[i], k);
    } else {
      SeedSet best = LazyGreedy(family, WeightVector::OneHot(l, i), k);
      report.optima[i] = family[i].Value(best);
    }
  }
  if (mode == OptimumMode::kGreedy) report.max_overestimate = M_E / (M_E - 1.0);
  report.ratio = std::numeric_limits<double>::infinity();
  for (int i = 0; i < l; ++i) {
    const double ratio =
        report.optima[i] > 0.0 ? report.values[i] / report.optima[i] : 1.0;
    report.ratio = std::min(report.ratio, ratio);
  }
  return report;
}

}  // namespace hiro
