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

#include <cmath>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "hiro/errors.h"
#include "hiro/optimize.h"
#include "hiro/parallel.h"
#include "hiro/verify.h"
#include "oracles.h"

namespace hiro {
namespace {

std::shared_ptr<const Graph> Star(int leaves) {
  GraphBuilder b(leaves + 1, 0);
  for (int i = 1; i <= leaves; ++i) b.AddArc(0, i, {});
  return std::make_shared<const Graph>(std::move(b).Build());
}

std::vector<ProbVector> RandomFamilyProbs(const Graph& g, int l,
                                          std::mt19937_64& rng) {
  std::vector<ProbVector> probs;
  for (int i = 0; i < l; ++i) {
    probs.push_back(testing::RandomProbs(g.num_arcs(), rng));
  }
  return probs;
}

WeightVector RandomWeights(int l, std::mt19937_64& rng) {
  std::vector<double> w(l);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (double& x : w) x = u(rng);
  if (l > 2) w[0] = 0.0;
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= sum;
  return WeightVector(w);
}

TEST(WeightVectorTest, Validates) {
  EXPECT_THROW(WeightVector({0.5, 0.6}), ParameterError);
  EXPECT_THROW(WeightVector({1.5, -0.5}), ParameterError);
  EXPECT_NO_THROW(WeightVector({0.25, 0.75}));
  EXPECT_EQ(WeightVector::OneHot(3, 1)[1], 1.0);
}

TEST(MixedStrategyTest, RequiresCommonSize) {
  EXPECT_THROW(MixedStrategy({SeedSet{0}, SeedSet{1, 2}}), ParameterError);
  EXPECT_THROW(MixedStrategy(std::vector<SeedSet>{}), ParameterError);
  EXPECT_EQ(MixedStrategy({SeedSet{0}, SeedSet{1}}).set_size(), 1);
}

TEST(LazyGreedyTest, StarCenterWins) {
  auto g = Star(6);
  const FunctionFamily f =
      MakePoolFamily(g, {ProbVector::Constant(6, 1.0)}, 10, 1);
  EXPECT_EQ(LazyGreedy(f, WeightVector::Uniform(1), 1), SeedSet{0});
  EXPECT_THROW(LazyGreedy(f, WeightVector::Uniform(1), 8), ParameterError);
  EXPECT_THROW(LazyGreedy(f, WeightVector::Uniform(2), 1), ParameterError);
}

TEST(LazyGreedyTest, EqualsNaiveGreedy) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 6 + trial % 25;
    auto g = std::make_shared<const Graph>(
        testing::RandomGraph(n, 2 * n, 0, rng));
    const int l = 1 + trial % 4;
    const auto probs = RandomFamilyProbs(*g, l, rng);
    const int R = 50 + 10 * (trial % 5);
    // Small budgets exercise the BFS gain path too.
    const FunctionFamily family = MakePoolFamily(g, probs, R, trial);
    const WeightVector w = RandomWeights(l, rng);
    const int k = 1 + trial % std::min(n, 6);
    std::vector<SamplePool> pools;
    for (int i = 0; i < l; ++i) {
      pools.push_back(BuildPool(*g, probs[i], R, FamilyPoolSeed(trial, i)));
    }
    std::vector<double> wv(w.values().begin(), w.values().end());
    EXPECT_EQ(LazyGreedy(family, w, k), testing::NaiveGreedy(*g, pools, wv, k))
        << "trial " << trial;
  }
}

TEST(LazyGreedyTest, BfsGainPathMatchesIndexedPath) {
  std::mt19937_64 rng(2);
  auto g = std::make_shared<const Graph>(testing::RandomGraph(25, 60, 0, rng));
  const auto probs = RandomFamilyProbs(*g, 3, rng);
  const FunctionFamily indexed = MakePoolFamily(g, probs, 200, 5);
  FunctionFamily bfs = indexed;
  for (auto& f : bfs.functions) {
    const auto& pool = static_cast<const PoolInfluenceFunction&>(*f).pool();
    f = std::make_shared<PoolInfluenceFunction>(g, pool, 0);
  }
  const WeightVector w({0.2, 0.3, 0.5});
  EXPECT_EQ(LazyGreedy(indexed, w, 6), LazyGreedy(bfs, w, 6));
}

TEST(LazyGreedyTest, RestrictedCandidates) {
  auto g = Star(5);
  const FunctionFamily f = MakeExactFamily(g, {ProbVector::Constant(5, 1.0)});
  GreedyOptions options;
  options.candidates = std::vector<NodeId>{3, 4, 5};
  EXPECT_EQ(LazyGreedy(f, WeightVector::Uniform(1), 2, options),
            (SeedSet{3, 4}));
  options.candidates = std::vector<NodeId>{3};
  EXPECT_THROW(LazyGreedy(f, WeightVector::Uniform(1), 2, options),
               ParameterError);
}

TEST(LazyGreedyTest, GreedyGuaranteeOnExactInstances) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 5 + trial % 5;
    auto g = std::make_shared<const Graph>(
        testing::RandomGraph(n, 8 + trial % 5, 0, rng));
    const ProbVector p = testing::RandomProbs(g->num_arcs(), rng);
    const FunctionFamily f = MakeExactFamily(g, {p});
    const int k = 1 + trial % 3;
    const double greedy = f[0].Value(LazyGreedy(f, WeightVector::Uniform(1), k));
    EXPECT_GE(greedy + 1e-9,
              (1 - 1 / M_E) * testing::BruteOptimum(*g, p, k));
  }
}

TEST(MwuWeightsTest, Examples) {
  const WeightVector empty = MwuWeights(4, {}, 0.3);
  for (int i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(empty[i], 0.25);
  const std::vector<std::vector<double>> one = {{1.0, 0.0}};
  const WeightVector w = MwuWeights(2, one, std::log(2.0));
  EXPECT_NEAR(w[0], 1.0 / 3.0, 1e-9);
  EXPECT_NEAR(w[1], 2.0 / 3.0, 1e-9);
  const std::vector<std::vector<double>> same = {{0.4, 0.4, 0.4},
                                                 {0.1, 0.1, 0.1}};
  const WeightVector u = MwuWeights(3, same, 2.0);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(u[i], 1.0 / 3.0, 1e-12);
  EXPECT_THROW(MwuWeights(2, one, 0.0), ParameterError);
  EXPECT_THROW(MwuWeights(3, one, 1.0), ParameterError);
}

TEST(MwuWeightsTest, SmallestCumulativePayoffGetsLargestWeight) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int l = 2 + trial % 6;
    std::vector<std::vector<double>> history(1 + trial % 10,
                                             std::vector<double>(l));
    std::vector<double> cumulative(l, 0.0);
    for (auto& round : history) {
      for (int i = 0; i < l; ++i) {
        round[i] = u(rng);
        cumulative[i] += round[i];
      }
    }
    const WeightVector w = MwuWeights(l, history, 0.5);
    const int low = static_cast<int>(
        std::min_element(cumulative.begin(), cumulative.end()) -
        cumulative.begin());
    for (int i = 0; i < l; ++i) {
      if (i != low) EXPECT_GT(w[low], w[i]);
    }
    EXPECT_NEAR(std::accumulate(w.values().begin(), w.values().end(), 0.0),
                1.0, 1e-9);
  }
}

TEST(HiroTest, SingleFunctionRepeatsGreedy) {
  std::mt19937_64 rng(5);
  auto g = std::make_shared<const Graph>(testing::RandomGraph(15, 40, 0, rng));
  const FunctionFamily f =
      MakePoolFamily(g, RandomFamilyProbs(*g, 1, rng), 100, 1);
  const HiroResult r = Hiro(f, {3, 4, std::nullopt});
  const SeedSet greedy = LazyGreedy(f, WeightVector::Uniform(1), 3);
  ASSERT_EQ(r.strategy.rounds(), 4);
  for (const SeedSet& s : r.strategy.seed_sets()) EXPECT_EQ(s, greedy);
  EXPECT_DOUBLE_EQ(r.running_min.back(), f[0].Value(greedy));
}

TEST(HiroTest, DiagnosticsShapesAndDefaultEta) {
  std::mt19937_64 rng(6);
  auto g = std::make_shared<const Graph>(testing::RandomGraph(12, 30, 0, rng));
  const FunctionFamily f =
      MakePoolFamily(g, RandomFamilyProbs(*g, 4, rng), 100, 2);
  const HiroResult r = Hiro(f, {2, 6, std::nullopt});
  EXPECT_DOUBLE_EQ(r.eta, std::log(4.0) / 12.0);
  ASSERT_EQ(r.weights.size(), 6u);
  ASSERT_EQ(r.payoffs.size(), 6u);
  ASSERT_EQ(r.running_min.size(), 6u);
  for (const WeightVector& w : r.weights) {
    EXPECT_NEAR(std::accumulate(w.values().begin(), w.values().end(), 0.0),
                1.0, 1e-9);
  }
  for (int i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(r.weights[0][i], 0.25);
  EXPECT_THROW(Hiro(f, {2, 0, std::nullopt}), ParameterError);
  EXPECT_THROW(Hiro(f, {2, 3, -1.0}), ParameterError);
}

TEST(HiroTest, ImproperFixtureMixesCenters) {
  const Fixture fx = ImproperGapInstance(5);
  const FunctionFamily f = MakeExactFamily(fx.graph, fx.probs);
  const HiroResult r = Hiro(f, {1, 20, std::nullopt});
  EvalOptions exact;
  exact.exact = true;
  EXPECT_GE(Evaluate(f, r.strategy, exact).min_value, 0.9 * 3.5);
}

TEST(HiroTest, DeterministicAcrossWorkerCounts) {
  std::mt19937_64 rng(7);
  auto g = std::make_shared<const Graph>(testing::RandomGraph(30, 90, 0, rng));
  const auto probs = RandomFamilyProbs(*g, 5, rng);
  SetWorkerCount(1);
  const HiroResult a = Hiro(MakePoolFamily(g, probs, 200, 3), {4, 5, {}});
  SetWorkerCount(3);
  const HiroResult b = Hiro(MakePoolFamily(g, probs, 200, 3), {4, 5, {}});
  SetWorkerCount(0);
  EXPECT_EQ(a.strategy.seed_sets(), b.strategy.seed_sets());
  EXPECT_EQ(a.payoffs, b.payoffs);
}

TEST(BicriteriaTest, UnionAndBlowup) {
  const BicriteriaResult single = BicriteriaUnion(MixedStrategy::Single({1, 2}));
  EXPECT_EQ(single.set, (SeedSet{1, 2}));
  EXPECT_DOUBLE_EQ(single.blowup, 1.0);
  const BicriteriaResult same =
      BicriteriaUnion(MixedStrategy({SeedSet{1, 2}, SeedSet{1, 2}}));
  EXPECT_DOUBLE_EQ(same.blowup, 1.0);
  const BicriteriaResult mixed =
      BicriteriaUnion(MixedStrategy({SeedSet{1, 2}, SeedSet{2, 3}}));
  EXPECT_EQ(mixed.set, (SeedSet{1, 2, 3}));
  EXPECT_DOUBLE_EQ(mixed.blowup, 1.5);
}

TEST(BicriteriaTest, UnionDominatesMixedValue) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = std::make_shared<const Graph>(
        testing::RandomGraph(20, 50, 0, rng));
    const FunctionFamily f =
        MakePoolFamily(g, RandomFamilyProbs(*g, 3, rng), 100, trial);
    const HiroResult r = Hiro(f, {2, 8, {}});
    const SeedSet u = BicriteriaUnion(r.strategy).set;
    EXPECT_LE(u.size(), 8 * 2);
    const auto union_values = FamilyValues(f, u);
    for (int i = 0; i < f.size(); ++i) {
      double mixed = 0.0;
      for (const SeedSet& s : r.strategy.seed_sets()) mixed += f[i].Value(s);
      EXPECT_GE(union_values[i] + 1e-12, mixed / r.strategy.rounds());
    }
  }
}

TEST(EvaluateTest, SingleSetMatchesEstimate) {
  std::mt19937_64 rng(9);
  auto g = std::make_shared<const Graph>(testing::RandomGraph(15, 40, 0, rng));
  const auto probs = RandomFamilyProbs(*g, 1, rng);
  const FunctionFamily f = MakePoolFamily(g, probs, 50, 1);
  EvalOptions options;
  options.replicates = 3000;
  options.seed = 77;
  const SeedSet s{2, 5};
  const RobustReport r = Evaluate(f, MixedStrategy::Single(s), options);
  const InfluenceEstimate est = EstimateInfluence(
      *g, probs[0], s, 3000, EvaluationPoolSeed(77, 0));
  EXPECT_DOUBLE_EQ(r.values[0], est.mean);
  EXPECT_NEAR(r.std_errors[0], est.std_error, 1e-12);
  EXPECT_EQ(r.min_value, est.mean);
  EXPECT_EQ(r.argmin, 0);
  EXPECT_EQ(r.replicates, 3000);
}

TEST(EvaluateTest, ExactModeMatchesExactInfluence) {
  std::mt19937_64 rng(10);
  auto g = std::make_shared<const Graph>(testing::RandomGraph(8, 14, 0, rng));
  const auto probs = RandomFamilyProbs(*g, 3, rng);
  const FunctionFamily f = MakeExactFamily(g, probs);
  const MixedStrategy mix({SeedSet{0, 1}, SeedSet{2, 3}});
  EvalOptions exact;
  exact.exact = true;
  const RobustReport r = Evaluate(f, mix, exact);
  for (int i = 0; i < 3; ++i) {
    const double expected = (ExactInfluence(*g, probs[i], {0, 1}) +
                             ExactInfluence(*g, probs[i], {2, 3})) /
                            2;
    EXPECT_NEAR(r.values[i], expected, 1e-9);
  }
  EXPECT_DOUBLE_EQ(r.min_value, *std::min_element(r.values.begin(),
                                                  r.values.end()));
}

TEST(EvaluateTest, FreshPoolsAreUnbiased) {
  // The training pool overstates the value of the set optimized on it; the
  // fresh evaluation pool must stay within noise of the exact value.
  std::mt19937_64 rng(11);
  int within = 0;
  const int cases = 20;
  for (int trial = 0; trial < cases; ++trial) {
    auto g = std::make_shared<const Graph>(
        testing::RandomGraph(9, 14, 0, rng));
    const auto probs = RandomFamilyProbs(*g, 1, rng);
    const FunctionFamily f = MakePoolFamily(g, probs, 30, trial);
    const SeedSet s = LazyGreedy(f, WeightVector::Uniform(1), 2);
    EvalOptions options;
    options.replicates = 5000;
    options.seed = trial;
    const RobustReport r = Evaluate(f, MixedStrategy::Single(s), options);
    within += std::abs(r.values[0] - ExactInfluence(*g, probs[0], s)) <=
              4 * r.std_errors[0] + 1e-12;
  }
  EXPECT_GE(within, cases - 1);
}

TEST(EvaluateTest, IndependentOfWorkerCount) {
  std::mt19937_64 rng(12);
  auto g = std::make_shared<const Graph>(testing::RandomGraph(40, 120, 0, rng));
  const auto probs = RandomFamilyProbs(*g, 3, rng);
  const std::vector<MixedStrategy> strategies = {
      MixedStrategy::Single({0, 1}), MixedStrategy({SeedSet{2, 3}, {4, 5}})};
  EvalOptions options;
  options.replicates = 700;
  SetWorkerCount(1);
  const auto a = EvaluateMany(*g, probs, strategies, options);
  SetWorkerCount(4);
  const auto b = EvaluateMany(*g, probs, strategies, options);
  SetWorkerCount(0);
  for (int s = 0; s < 2; ++s) {
    EXPECT_EQ(a[s].values, b[s].values);
    EXPECT_EQ(a[s].std_errors, b[s].std_errors);
  }
}

TEST(RobustRatioTest, OptimumHasRatioOne) {
  std::mt19937_64 rng(13);
  auto g = std::make_shared<const Graph>(testing::RandomGraph(7, 12, 0, rng));
  const auto probs = RandomFamilyProbs(*g, 1, rng);
  const FunctionFamily f = MakeExactFamily(g, probs);
  double best = -1;
  SeedSet best_set;
  for (NodeId a = 0; a < 7; ++a) {
    for (NodeId b = a + 1; b < 7; ++b) {
      const double v = f[0].Value({a, b});
      if (v > best) {
        best = v;
        best_set = SeedSet{a, b};
      }
    }
  }
  EXPECT_NEAR(RobustRatio(f, best_set, 2, OptimumMode::kBruteForce).ratio, 1.0,
              1e-12);
}

TEST(RobustRatioTest, NeverAboveOneInBruteForceMode) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 15; ++trial) {
    auto g = std::make_shared<const Graph>(
        testing::RandomGraph(7, 12, 0, rng));
    const FunctionFamily f = MakeExactFamily(g, RandomFamilyProbs(*g, 3, rng));
    const SeedSet s = testing::RandomSet(7, 2, rng);
    const RatioReport r = RobustRatio(f, s, 2, OptimumMode::kBruteForce);
    EXPECT_LE(r.ratio, 1.0 + 1e-12);
    EXPECT_EQ(r.max_overestimate, 1.0);
    const RatioReport greedy = RobustRatio(f, s, 2, OptimumMode::kGreedy);
    EXPECT_GE(greedy.ratio + 1e-12, r.ratio);
    EXPECT_NEAR(greedy.max_overestimate, M_E / (M_E - 1), 1e-12);
    EXPECT_LE(greedy.ratio, r.ratio * greedy.max_overestimate + 1e-12);
  }
}

TEST(BruteForceOptimumTest, CapacityLimit) {
  auto g = std::make_shared<const Graph>(
      std::move(GraphBuilder(40, 0)).Build());
  const FunctionFamily f = MakeExactFamily(g, {ProbVector()});
  EXPECT_THROW(BruteForceOptimum(f[0], 10), CapacityError);
  EXPECT_DOUBLE_EQ(BruteForceOptimum(f[0], 2), 2.0);
}

}  // namespace
}  // namespace hiro
