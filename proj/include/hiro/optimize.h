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

#ifndef HIRO_OPTIMIZE_H_
#define HIRO_OPTIMIZE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "hiro/cascade.h"
#include "hiro/graph.h"
#include "hiro/hypermodel.h"
#include "hiro/influence_function.h"

namespace hiro {

// The finite family f_1..f_l the robust objective is taken over. Functions
// share one graph; `thetas` is empty when the family was built from
// explicit probability vectors.
struct FunctionFamily {
  std::shared_ptr<const Graph> graph;
  std::vector<Hyperparameter> thetas;
  std::vector<std::shared_ptr<const InfluenceFunction>> functions;

  int size() const { return static_cast<int>(functions.size()); }
  const InfluenceFunction& operator[](int i) const { return *functions[i]; }
  const ProbVector& probs(int i) const { return functions[i]->probs(); }
  std::vector<ProbVector> AllProbs() const;
  // The first `count` functions.
  FunctionFamily Prefix(int count) const;
};

// Seed of the pool of function i in a family built with `seed`.
std::uint64_t FamilyPoolSeed(std::uint64_t seed, int function_index);

FunctionFamily MakePoolFamily(std::shared_ptr<const Graph> graph,
                              const HyperModel& model,
                              std::vector<Hyperparameter> thetas,
                              int replicates, std::uint64_t seed);
FunctionFamily MakePoolFamily(std::shared_ptr<const Graph> graph,
                              const std::vector<ProbVector>& probs,
                              int replicates, std::uint64_t seed);
FunctionFamily MakeExactFamily(std::shared_ptr<const Graph> graph,
                               const std::vector<ProbVector>& probs);

// Non-negative weights summing to one.
class WeightVector {
 public:
  // Throws ParameterError unless w >= 0 and |sum - 1| <= 1e-9.
  explicit WeightVector(std::vector<double> w);
  static WeightVector Uniform(int size);
  static WeightVector OneHot(int size, int index);

  int size() const { return static_cast<int>(w_.size()); }
  double operator[](int i) const { return w_[i]; }
  std::span<const double> values() const { return w_; }

 private:
  std::vector<double> w_;
};

// Uniform distribution over T seed sets of a common size.
class MixedStrategy {
 public:
  MixedStrategy() = default;
  explicit MixedStrategy(std::vector<SeedSet> seed_sets);
  static MixedStrategy Single(SeedSet set);

  int rounds() const { return static_cast<int>(sets_.size()); }
  int set_size() const { return sets_.empty() ? 0 : sets_.front().size(); }
  const std::vector<SeedSet>& seed_sets() const { return sets_; }
  const SeedSet& operator[](int t) const { return sets_[t]; }

 private:
  std::vector<SeedSet> sets_;
};

struct GreedyOptions {
  // When set, only these nodes may be selected.
  std::optional<std::vector<NodeId>> candidates;
};

// Greedy maximization of sum_i w_i f_i(S) under |S| = k with lazy
// (stale upper bound) re-evaluation. Ties go to the lowest node id, so the
// result equals plain greedy on the same functions.
SeedSet LazyGreedy(const FunctionFamily& family, const WeightVector& weights,
                   int k, const GreedyOptions& options = {});

// w_i proportional to exp(-eta * sum_t payoff_t[i]); `history` holds one
// payoff vector (entries in [0,1]) per past round.
WeightVector MwuWeights(int size, std::span<const std::vector<double>> history,
                        double eta);

struct HiroConfig {
  int k = 10;
  int rounds = 10;  // T
  std::optional<double> eta;  // default log(l) / (2T)
};

struct HiroResult {
  MixedStrategy strategy;
  double eta = 0.0;
  std::vector<WeightVector> weights;          // weights used in round t
  std::vector<std::vector<double>> payoffs;   // f_i(S_t), unnormalized
  std::vector<double> running_min;            // min_i mean_{tau<=t} f_i(S_tau)
};

// Multiplicative weights over the family with LazyGreedy as best response.
// Payoffs enter the exponent divided by n.
HiroResult Hiro(const FunctionFamily& family, const HiroConfig& config);

// One set drawn uniformly from the strategy.
SeedSet DrawFromStrategy(const MixedStrategy& strategy, std::uint64_t seed);

struct BicriteriaResult {
  SeedSet set;
  double blowup = 1.0;  // |union| / k
};
BicriteriaResult BicriteriaUnion(const MixedStrategy& strategy);

struct RobustReport {
  std::vector<double> values;      // per function
  std::vector<double> std_errors;  // per function, 0 in exact mode
  double min_value = 0.0;
  int argmin = -1;
  std::optional<double> robust_ratio;
  std::int64_t replicates = 0;  // 0 in exact mode
  std::uint64_t seed = 0;
};

struct EvalOptions {
  int replicates = 10000;
  std::uint64_t seed = 0;
  bool exact = false;
};

// Seed of the evaluation pool for function j.
std::uint64_t EvaluationPoolSeed(std::uint64_t seed, int function_index);

// Evaluates every strategy against every probability vector on fresh pools
// (or exactly). A strategy's value under f_j is the mean over its sets.
// Pools are streamed, so memory does not grow with the replicate count.
std::vector<RobustReport> EvaluateMany(const Graph& graph,
                                       std::span<const ProbVector> probs,
                                       std::span<const MixedStrategy> strategies,
                                       const EvalOptions& options);

RobustReport Evaluate(const FunctionFamily& family,
                      const MixedStrategy& strategy,
                      const EvalOptions& options);

// Values of `set` under each function of the family, as the family
// evaluates them (pool or exact).
std::vector<double> FamilyValues(const FunctionFamily& family,
                                 const SeedSet& set);

enum class OptimumMode { kGreedy, kBruteForce };

struct RatioReport {
  double ratio = 0.0;
  std::vector<double> values;
  std::vector<double> optima;
  // With kGreedy the optima are greedy values, at least (1-1/e) of the true
  // optima, so `ratio` may overstate the true ratio by up to this factor.
  double max_overestimate = 1.0;
};

// Largest number of candidate sets brute-force enumeration will visit.
inline constexpr std::uint64_t kMaxBruteForceSets = 100000;

// Best value of f over all size-k sets. Throws CapacityError when C(n,k)
// exceeds kMaxBruteForceSets.
double BruteForceOptimum(const InfluenceFunction& f, int k);

// rho(S) = min_i f_i(S) / f_i(S*_i).
RatioReport RobustRatio(const FunctionFamily& family, const SeedSet& set,
                        int k, OptimumMode mode);

}  // namespace hiro

#endif  // HIRO_OPTIMIZE_H_
