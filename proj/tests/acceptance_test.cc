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

// Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero when any
// criterion fails. `--only 1,5,12` restricts the run; `--out DIR` is where
// the experiment tables for criteria 10 and 11 are written.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hiro/baselines.h"
#include "hiro/cascade.h"
#include "hiro/experiments.h"
#include "hiro/hypermodel.h"
#include "hiro/optimize.h"
#include "hiro/verify.h"
#include "oracles.h"

namespace hiro {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

const double kGreedyFactor = 1.0 - 1.0 / std::numbers::e;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  return buf;
}

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double MinOf(const std::vector<double>& v) {
  return *std::min_element(v.begin(), v.end());
}

fs::path g_out = "acceptance_out";

// 1. Monte Carlo agrees with exact enumeration.
Outcome OracleAgreement() {
  const auto start = Clock::now();
  std::mt19937_64 rng(101);
  int agree = 0;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const int m = 1 + static_cast<int>(rng() % 12);
    const Graph g = testing::RandomGraph(n, m, 0, rng);
    const ProbVector p = testing::RandomProbs(g.num_arcs(), rng);
    const SeedSet s =
        testing::RandomSet(n, 1 + static_cast<int>(rng() % std::min(n, 3)), rng);
    const double exact = ExactInfluence(g, p, s);
    const InfluenceEstimate est = EstimateInfluence(g, p, s, 50000, 1000 + i);
    const double z = est.std_error > 0
                         ? std::abs(est.mean - exact) / est.std_error
                         : (std::abs(est.mean - exact) < 1e-12 ? 0.0 : 1e9);
    worst = std::max(worst, z);
    agree += z <= 4.0;
  }
  const double secs = Seconds(start);
  return {agree >= 99 && secs < 120.0,
          Format("%d/100 within 4 stderr (worst %.2f), %.1fs", agree, worst,
                 secs)};
}

// 2. Closed-form values.
Outcome ExactSpotChecks() {
  const Graph empty = GraphBuilder(4, 0).Build();
  const double f_empty = ExactInfluence(empty, ProbVector(), SeedSet{0, 2, 3});

  const double p = 0.37;
  GraphBuilder arc(2, 0);
  arc.AddArc(0, 1, {});
  const Graph single = std::move(arc).Build();
  const double f_arc = ExactInfluence(single, ProbVector({p}), SeedSet{0});

  GraphBuilder chain_builder(3, 0);
  chain_builder.AddArc(0, 1, {}).AddArc(1, 2, {});
  const Graph chain = std::move(chain_builder).Build();
  const double f_chain =
      ExactInfluence(chain, ProbVector({0.5, 0.5}), SeedSet{0});

  const bool ok = std::abs(f_empty - 3.0) <= 1e-9 &&
                  std::abs(f_arc - (1.0 + p)) <= 1e-9 &&
                  std::abs(f_chain - 1.75) <= 1e-9;
  return {ok, Format("empty %.12g (3), arc %.12g (%.12g), chain %.12g (1.75)",
                     f_empty, f_arc, 1.0 + p, f_chain)};
}

// 3. Greedy reaches 1 - 1/e of the single-function optimum.
Outcome GreedyGuarantee() {
  std::mt19937_64 rng(103);
  int violations = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 50; ++i) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const int k = 1 + static_cast<int>(rng() % 3);
    auto g = std::make_shared<const Graph>(
        testing::RandomGraph(n, 1 + static_cast<int>(rng() % 14), 0, rng));
    const FunctionFamily f =
        MakeExactFamily(g, {testing::RandomProbs(g->num_arcs(), rng)});
    const SeedSet greedy = LazyGreedy(f, WeightVector::Uniform(1), k);
    const double value = f[0].Value(greedy);
    const double best = BruteForceRobust(f, k).value;
    worst = std::min(worst, value / best);
    violations += value < kGreedyFactor * best - 1e-9;
  }
  return {violations == 0,
          Format("%d violations, worst ratio %.4f (bound %.4f)", violations,
                 worst, kGreedyFactor)};
}

// 4. The mixed strategy approaches the max-min optimum.
Outcome HiroNearOptimal() {
  const auto start = Clock::now();
  std::mt19937_64 rng(104);
  int violations = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  EvalOptions exact;
  exact.exact = true;
  for (int i = 0; i < 25; ++i) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const int m = 4 + static_cast<int>(rng() % 11);
    const int l = 1 + static_cast<int>(rng() % 4);
    const int k = 1 + static_cast<int>(rng() % 2);
    auto g = std::make_shared<const Graph>(testing::RandomGraph(n, m, 0, rng));
    std::vector<ProbVector> probs;
    for (int j = 0; j < l; ++j) {
      probs.push_back(testing::RandomProbs(g->num_arcs(), rng));
    }
    const FunctionFamily f = MakeExactFamily(g, probs);
    const HiroResult result = Hiro(f, {k, 50, std::nullopt});
    const double mixed = Evaluate(f, result.strategy, exact).min_value;
    const double best = BruteForceRobust(f, k).value;
    const double margin = mixed - (kGreedyFactor * best - 0.05 * n);
    worst_margin = std::min(worst_margin, margin);
    violations += margin < -1e-9;
  }
  const double secs = Seconds(start);
  return {violations == 0 && secs < 300.0,
          Format("%d violations, smallest margin %.4f, %.1fs", violations,
                 worst_margin, secs)};
}

// 5. Improper solutions beat every single set on the two-star instance.
Outcome ImproperFixture() {
  bool ok = true;
  std::string detail;
  EvalOptions exact;
  exact.exact = true;
  for (int leaves : {5, 10}) {
    const Fixture fx = ImproperGapInstance(leaves);
    const FunctionFamily f = MakeExactFamily(fx.graph, fx.probs);
    const double deterministic = BruteForceRobust(f, 1).value;
    const MixedStrategy uniform(
        {SeedSet{fx.label("u")}, SeedSet{fx.label("v")}});
    const double mix = Evaluate(f, uniform, exact).min_value;
    const HiroResult h = Hiro(f, {1, 20, std::nullopt});
    const double hiro = Evaluate(f, h.strategy, exact).min_value;
    const double target = (leaves + 2) / 2.0;
    ok = ok && deterministic == 1.0 && std::abs(mix - target) <= 1e-12 &&
         hiro >= 0.9 * target;
    detail += Format("leaves=%d: best set %.6g, uniform mix %.6g (%.6g), "
                     "hiro %.6g; ",
                     leaves, deterministic, mix, target, hiro);
  }
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

// 6. Ratio and value objectives pick different nodes.
Outcome RatioGapFixture() {
  const Fixture fx = RatioGapInstance(100);
  const FunctionFamily f = MakeExactFamily(fx.graph, fx.probs);
  const NodeId u = fx.label("u");
  const NodeId v = fx.label("v");
  const RatioChoice by_ratio = MaximizeRobustRatio(f, 1);
  const BruteForceResult by_value = BruteForceRobust(f, 1);
  const double value_u = MinOf(FamilyValues(f, SeedSet{u}));
  const double value_v = MinOf(FamilyValues(f, SeedSet{v}));
  const bool ok = by_ratio.set == SeedSet{u} && by_value.set == SeedSet{v} &&
                  value_v >= 0.8 * 10.0 * value_u;
  return {ok, Format("ratio picks %s, value picks %s, min-value v %.6g vs "
                     "8 x min-value u %.6g",
                     by_ratio.set == SeedSet{u} ? "u" : "other",
                     by_value.set == SeedSet{v} ? "v" : "other", value_v,
                     8.0 * value_u)};
}

// 7. Influence is n*m Lipschitz in theta; the cycle fixture is tight.
Outcome LipschitzProperty() {
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const Link links[] = {Link::kLinear, Link::kLogistic, Link::kProbit};
  int violations = 0;
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const int dim = 1 + static_cast<int>(rng() % 3);
    const Graph g =
        testing::RandomGraph(n, 2 + static_cast<int>(rng() % 9), dim, rng);
    const HyperModel model(links[i % 3], 1.0, dim);
    Hyperparameter a, b;
    for (int j = 0; j < dim; ++j) {
      a.theta.push_back(unit(rng));
      // Mix nearby and far pairs.
      b.theta.push_back(i % 2 ? std::clamp(a.theta[j] + 0.05 * unit(rng),
                                           -1.0, 1.0)
                              : unit(rng));
    }
    const SeedSet s =
        testing::RandomSet(n, 1 + static_cast<int>(rng() % 2), rng);
    const double diff =
        std::abs(ExactInfluence(g, EdgeProbabilities(model, a, g), s) -
                 ExactInfluence(g, EdgeProbabilities(model, b, g), s));
    const double bound = LipschitzBound(g) * L1Distance(a, b);
    if (bound > 0) worst = std::max(worst, diff / bound);
    violations += diff > bound + 1e-12;
  }
  std::string detail =
      Format("%d violations, largest diff/bound %.4f", violations, worst);
  bool ok = violations == 0;
  for (int n : {50, 100}) {
    const double eps = 1.0 / n;
    const double lambda = 1.0 / (static_cast<double>(n) * n);
    const Fixture fx = LipschitzTightInstance(n, lambda);
    const SeedSet center{fx.label("center")};
    const double low =
        EstimateInfluence(*fx.graph, fx.probs[0], center, 100000, 71).mean;
    const double high =
        EstimateInfluence(*fx.graph, fx.probs[1], center, 100000, 72).mean;
    const double ratio = (high - low) / (static_cast<double>(n) * n * eps);
    ok = ok && ratio >= 0.5 && ratio <= 1.5;
    detail += Format("; n=%d change/(n^2 eps) %.4f", n, ratio);
  }
  return {ok, detail};
}

// 8. Sampled covers cover the box, in parameters and in function values.
Outcome CoverProperty() {
  const int draws = 200;
  const double slack = 0.1 * draws + 3.0 * std::sqrt(draws * 0.1 * 0.9);
  std::mt19937_64 rng(108);
  std::uniform_real_distribution<double> box(-1.0, 1.0);

  const HyperModel model(Link::kLogistic, 1.0, 2);
  int probe_failures = 0;
  std::int64_t points = 0;
  for (int d = 0; d < draws; ++d) {
    const Cover cover = SampleCover(model, 0.5, 0.1, 8000 + d);
    points = cover.sample_count();
    for (int probe = 0; probe < 1000; ++probe) {
      const Hyperparameter theta{{box(rng), box(rng)}};
      if (NearestCoverPoint(cover, theta).distance > 0.5) {
        ++probe_failures;
        break;
      }
    }
  }

  // Function values: the parameter radius that guarantees an epsilon_value
  // cover of the influence functions.
  const Graph g = testing::RandomGraph(8, 10, 2, rng);
  const double epsilon_value = 4.0;
  const double radius = FunctionCoverRadius(epsilon_value, g);
  const SeedSet s{0, 3};
  int value_failures = 0;
  double worst = 0.0;
  for (int d = 0; d < draws; ++d) {
    const Cover cover = SampleCover(model, radius, 0.1, 9000 + d);
    bool failed = false;
    for (int probe = 0; probe < 200; ++probe) {
      const Hyperparameter theta{{box(rng), box(rng)}};
      const NearestPoint near = NearestCoverPoint(cover, theta);
      const double diff = std::abs(
          ExactInfluence(g, EdgeProbabilities(model, theta, g), s) -
          ExactInfluence(
              g, EdgeProbabilities(model, cover.thetas[near.index], g), s));
      worst = std::max(worst, diff);
      failed = failed || diff > epsilon_value;
    }
    value_failures += failed;
  }
  const bool ok = probe_failures <= slack && value_failures <= slack;
  return {ok, Format("parameter cover (%lld points): %d/%d draws missed a "
                     "probe; value cover (radius %.4g): %d/%d draws failed, "
                     "largest gap %.4g vs %.4g; allowed %.1f",
                     static_cast<long long>(points), probe_failures, draws,
                     radius, value_failures, draws, worst, epsilon_value,
                     slack)};
}

// 9. Multiplicative weights.
Outcome MwuChecks() {
  const WeightVector empty = MwuWeights(5, {}, 0.4);
  bool uniform = true;
  for (int i = 0; i < 5; ++i) uniform = uniform && empty[i] == 0.2;

  const std::vector<std::vector<double>> one = {{1.0, 0.0}};
  const WeightVector w = MwuWeights(2, one, std::log(2.0));
  const bool example = std::abs(w[0] - 1.0 / 3.0) <= 1e-9 &&
                       std::abs(w[1] - 2.0 / 3.0) <= 1e-9;

  std::mt19937_64 rng(109);
  std::uniform_real_distribution<double> payoff(0.0, 1.0);
  std::vector<std::vector<double>> history;
  double worst = 0.0;
  for (int round = 0; round < 100; ++round) {
    const WeightVector weights = MwuWeights(7, history, 0.8);
    double sum = 0.0;
    for (double x : weights.values()) sum += x;
    worst = std::max(worst, std::abs(sum - 1.0));
    std::vector<double> next(7);
    for (double& x : next) x = payoff(rng);
    history.push_back(std::move(next));
  }
  auto g = std::make_shared<const Graph>(testing::RandomGraph(12, 30, 0, rng));
  std::vector<ProbVector> probs;
  for (int i = 0; i < 4; ++i) {
    probs.push_back(testing::RandomProbs(g->num_arcs(), rng));
  }
  const HiroResult h = Hiro(MakePoolFamily(g, probs, 100, 9), {2, 100, 0.5});
  for (const WeightVector& weights : h.weights) {
    double sum = 0.0;
    for (double x : weights.values()) sum += x;
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  const bool ok = uniform && example && worst <= 1e-9;
  return {ok, Format("empty history uniform: %s; (1,0) example (%.12f, "
                     "%.12f); largest |sum - 1| over 200 rounds %.3g",
                     uniform ? "yes" : "no", w[0], w[1], worst)};
}

void WriteTables(const std::string& name, const ExperimentConfig& config,
                 const std::vector<ResultRow>& rows) {
  ExperimentConfig c = config;
  c.out_dir = (g_out / name).string();
  WriteExperimentOutputs(c, rows);
}

std::map<std::tuple<std::string, int, std::string>, SummaryRow> ByModelKAlgo(
    const std::vector<SummaryRow>& summary) {
  std::map<std::tuple<std::string, int, std::string>, SummaryRow> out;
  for (const SummaryRow& s : summary) {
    out[{s.graph_model, s.k, s.algorithm}] = s;
  }
  return out;
}

// 10. HIRO matches or beats every baseline on average.
Outcome Experiment3Ordering() {
  const auto start = Clock::now();
  const ExperimentConfig c = ExperimentConfig::Preset(Scale::kDesk);
  const std::vector<ResultRow> rows = RunExperiment3(c);
  const double secs = Seconds(start);
  WriteTables("experiment3", c, rows);
  const auto summary = Summarize(rows);
  const double tolerance = 0.02 * c.graph.n;
  int violations = 0;
  int checks = 0;
  double worst = std::numeric_limits<double>::infinity();
  std::string worst_where;
  std::map<std::pair<std::string, int>, double> hiro;
  for (const SummaryRow& s : summary) {
    if (s.algorithm == "hiro") hiro[{s.graph_model, s.k}] = s.mean;
  }
  for (const SummaryRow& s : summary) {
    if (s.algorithm == "hiro") continue;
    const double margin = hiro.at({s.graph_model, s.k}) - s.mean;
    ++checks;
    if (margin < worst) {
      worst = margin;
      worst_where = Format("%s k=%d vs %s", s.graph_model.c_str(), s.k,
                           s.algorithm.c_str());
    }
    violations += margin < -tolerance;
  }
  const bool ok = violations == 0 && checks == 4 * 3 * 4 && secs < 1800.0;
  return {ok, Format("%d/%d comparisons below baseline - %.2g; smallest "
                     "margin %.4g (%s); %.0fs",
                     violations, checks, tolerance, worst, worst_where.c_str(),
                     secs)};
}

// Inversions of the trial-mean curve along `grid` for one (model, k) sweep.
struct SweepCheck {
  int sweeps = 0;
  int failed = 0;
  std::string notes;
};

void CheckSweeps(const std::vector<ResultRow>& rows, bool by_rounds,
                 const std::string& label, SweepCheck& check) {
  // (model, k) -> grid value -> per-trial values
  std::map<std::pair<std::string, int>, std::map<int, std::vector<double>>>
      curves;
  for (const ResultRow& r : rows) {
    curves[{r.graph_model, r.k}][by_rounds ? r.rounds : r.l].push_back(
        r.min_value);
  }
  for (const auto& [key, curve] : curves) {
    ++check.sweeps;
    std::vector<double> means, stds;
    for (const auto& [x, values] : curve) {
      double sum = 0.0;
      for (double v : values) sum += v;
      const double mean = sum / values.size();
      double ss = 0.0;
      for (double v : values) ss += (v - mean) * (v - mean);
      means.push_back(mean);
      stds.push_back(values.size() > 1 ? std::sqrt(ss / (values.size() - 1))
                                       : 0.0);
    }
    int inversions = 0;
    bool within = true;
    for (std::size_t i = 1; i < means.size(); ++i) {
      if (means[i] < means[i - 1]) {
        ++inversions;
        within = within && means[i - 1] - means[i] <= stds[i];
      }
    }
    if (inversions > 1 || !within) {
      ++check.failed;
      check.notes += Format(" %s %s k=%d (%d inversions)", label.c_str(),
                            key.first.c_str(), key.second, inversions);
    }
  }
}

// 11. More training functions and more rounds do not hurt.
Outcome TrainingTrends() {
  const auto start = Clock::now();
  const ExperimentConfig c = ExperimentConfig::Preset(Scale::kDesk);
  const std::vector<ResultRow> e1 = RunExperiment1(c);
  WriteTables("experiment1", c, e1);
  const std::vector<ResultRow> e2 = RunExperiment2(c);
  WriteTables("experiment2", c, e2);
  SweepCheck check;
  CheckSweeps(e1, false, "r", check);
  CheckSweeps(e2, true, "T", check);
  return {check.failed == 0 && check.sweeps == 2 * 4 * 3,
          Format("%d/%d sweeps outside tolerance;%s %.0fs", check.failed,
                 check.sweeps, check.notes.empty() ? "" : check.notes.c_str(),
                 Seconds(start))};
}

int RunCli(const std::string& args) {
  const std::string cmd =
      std::string(HIRO_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Every output file under `a`, compared with its namesake under `b`. Wall-clock
// timings and the manifest (which names the output directory) are skipped.
int CompareOutputs(const fs::path& a, const fs::path& b, int& files) {
  int differing = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    const fs::path name = entry.path().filename();
    if (name == "timings.csv" || name == "manifest.txt") continue;
    ++files;
    if (!fs::exists(b / name) ||
        Slurp(entry.path()) != Slurp(b / name)) {
      ++differing;
    }
  }
  return differing;
}

// 12. Byte-identical CSVs across repeats, manifest replays and worker counts.
Outcome Determinism() {
  const fs::path root = fs::temp_directory_path() / "hiro_acceptance_cli";
  fs::remove_all(root);
  fs::create_directories(root);
  {
    std::ofstream sets(root / "sets.txt");
    sets << "0 1 2\n5 6 7\n";
  }
  struct Invocation {
    std::string name;
    std::string options;
    std::string command;
  };
  const std::vector<Invocation> invocations = {
      {"pipeline", "--n 40 --l 4 --T 4 --k 3 --r-train 100 --r-eval 100",
       "pipeline"},
      {"hiro", "--model ws --n 40 --l 5 --T 6 --k 4 --r-train 100", "hiro"},
      {"baseline", "--n 40 --l 4 --k 3 --r-train 100 --name lu-greedy",
       "baseline"},
      {"experiment",
       "--n 30 --models ba er --l 3 --l-val 4 --T 3 --k 2 4 --r-train 60 "
       "--r-eval 60 --trials 2 --random-draws 5",
       "experiment 3"},
      {"fixture", "--size 16", "fixture ratio"},
  };
  int files = 0;
  int differing = 0;
  int failed_runs = 0;
  std::string notes;
  for (const Invocation& inv : invocations) {
    const fs::path first = root / (inv.name + "_t1");
    const fs::path again = root / (inv.name + "_t1_again");
    const fs::path threads = root / (inv.name + "_t4");
    const fs::path replay = root / (inv.name + "_replay");
    const std::string args = inv.options + " " + inv.command;
    failed_runs +=
        RunCli("--threads 1 --out-dir " + first.string() + " " + args) != 0;
    failed_runs +=
        RunCli("--threads 1 --out-dir " + again.string() + " " + args) != 0;
    failed_runs +=
        RunCli("--threads 4 --out-dir " + threads.string() + " " + args) != 0;
    // The replay takes every setting from the first run's manifest.
    failed_runs += RunCli("--config " + (first / "manifest.txt").string() +
                          " --threads 2 --out-dir " + replay.string() + " " +
                          inv.command) != 0;
    for (const fs::path& other : {again, threads, replay}) {
      const int d = CompareOutputs(first, other, files);
      if (d > 0) notes += " " + other.filename().string();
      differing += d;
    }
  }
  // Evaluate reads the pipeline's graph.
  const fs::path graph = root / "pipeline_t1" / "graph.txt";
  const std::string eval_args = "--graph " + graph.string() + " --sets " +
                                (root / "sets.txt").string() +
                                " --l-val 5 --r-eval 300 evaluate";
  failed_runs += RunCli("--threads 1 --out-dir " +
                        (root / "evaluate_t1").string() + " " + eval_args) != 0;
  failed_runs += RunCli("--threads 3 --out-dir " +
                        (root / "evaluate_t3").string() + " " + eval_args) != 0;
  failed_runs +=
      RunCli("--config " + (root / "evaluate_t1" / "manifest.txt").string() +
             " --out-dir " + (root / "evaluate_replay").string() +
             " evaluate") != 0;
  for (const char* other : {"evaluate_t3", "evaluate_replay"}) {
    const int d = CompareOutputs(root / "evaluate_t1", root / other, files);
    if (d > 0) notes += std::string(" ") + other;
    differing += d;
  }
  const bool ok = failed_runs == 0 && differing == 0 && files > 0;
  return {ok, Format("%d failed runs, %d of %d file comparisons differ%s",
                     failed_runs, differing, files, notes.c_str())};
}

}  // namespace
}  // namespace hiro

int main(int argc, char** argv) {
  using namespace hiro;
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      std::stringstream list(argv[++i]);
      std::string item;
      while (std::getline(list, item, ',')) only.insert(std::stoi(item));
    } else if (arg == "--out" && i + 1 < argc) {
      g_out = argv[++i];
    } else {
      std::fprintf(stderr, "usage: %s [--only 1,2,...] [--out DIR]\n",
                   argv[0]);
      return 2;
    }
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>>
      criteria = {
          {"oracle agreement", OracleAgreement},
          {"exact spot checks", ExactSpotChecks},
          {"greedy guarantee", GreedyGuarantee},
          {"hiro near-optimality", HiroNearOptimal},
          {"improper-gap fixture", ImproperFixture},
          {"ratio-gap fixture", RatioGapFixture},
          {"lipschitz property", LipschitzProperty},
          {"cover property", CoverProperty},
          {"mwu checks", MwuChecks},
          {"experiment 3 ordering", Experiment3Ordering},
          {"experiment 1-2 trends", TrainingTrends},
          {"cli determinism", Determinism},
      };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.contains(id)) continue;
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    failures += !outcome.pass;
    std::printf("criterion %2d %-24s %s  %s\n", id,
                criteria[i].first.c_str(), outcome.pass ? "PASS" : "FAIL",
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
