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

#include "hiro/experiments.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <tuple>
#include <utility>

#include "hiro/baselines.h"
#include "hiro/errors.h"
#include "hiro/parallel.h"
#include "hiro/random.h"

namespace hiro {

std::string ToString(Scale scale) {
  return scale == Scale::kDesk ? "desk" : "full";
}

Scale ParseScale(const std::string& name) {
  if (name == "desk") return Scale::kDesk;
  if (name == "full") return Scale::kFull;
  throw ParameterError("unknown scale '" + name + "' (desk or full)");
}

ExperimentConfig ExperimentConfig::Preset(Scale scale) {
  ExperimentConfig c;
  c.scale = scale;
  if (scale == Scale::kDesk) {
    c.graph.n = 100;
    c.r_train = 1000;
    c.r_eval = 1000;
    c.trials = 10;
  } else {
    c.graph.n = 500;
    c.r_train = 1000;
    c.r_eval = 10000;
    c.trials = 50;
  }
  return c;
}

void ExperimentConfig::Validate() const {
  auto positive = [](int v, const char* name) {
    if (v < 1) throw ParameterError(std::string(name) + " must be >= 1");
  };
  positive(l, "l");
  positive(l_validation, "l-val");
  positive(rounds, "T");
  positive(r_train, "r-train");
  positive(trials, "trials");
  positive(random_draws, "random-draws");
  positive(union_k, "union-k");
  if (r_eval < 2) throw ParameterError("r-eval must be >= 2");
  if (eta && !(*eta > 0.0)) throw ParameterError("eta must be positive");
  if (!(box > 0.0)) throw ParameterError("B must be positive");
  if (!(epsilon_theta > 0.0)) throw ParameterError("eps-theta must be positive");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ParameterError("delta must lie in (0, 1)");
  }
  if (ks.empty()) throw ParameterError("k list is empty");
  if (models.empty()) throw ParameterError("models list is empty");
  for (int k : ks) positive(k, "k");
  for (int r : r_grid) positive(r, "r-grid entry");
  for (int t : t_grid) positive(t, "t-grid entry");
  for (double b : beta_grid) {
    if (!(b > 0.0 && b <= 1.0)) {
      throw ParameterError("beta-grid entries must lie in (0, 1]");
    }
  }
  if (!graph_path) {
    for (GraphModel m : models) {
      GeneratorSpec spec = graph;
      spec.model = m;
      ValidateSpec(spec);
    }
  }
}

namespace {

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string Exact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

template <typename T, typename F>
std::string List(const std::vector<T>& values, F format) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += format(values[i]);
  }
  return out + "]";
}

std::string Join(std::span<const double> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += Num(values[i]);
  }
  return out;
}

std::string Join(std::span<const NodeId> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::string ManifestText(const ExperimentConfig& c) {
  std::ostringstream out;
  auto str = [](auto v) { return std::to_string(v); };
  out << "scale=" << ToString(c.scale) << '\n';
  out << "seed=" << c.seed << '\n';
  out << "models="
      << List(c.models, [](GraphModel m) { return ToString(m); }) << '\n';
  if (c.graph_path) out << "graph=\"" << *c.graph_path << "\"\n";
  out << "n=" << c.graph.n << '\n';
  out << "d=" << c.graph.feature_dim << '\n';
  out << "feature-dist=" << ToString(c.graph.feature_dist) << '\n';
  out << "attach=" << c.graph.attach << '\n';
  out << "ring-degree=" << c.graph.ring_degree << '\n';
  if (c.graph.rewire_prob) {
    out << "rewire-prob=" << Exact(*c.graph.rewire_prob) << '\n';
  }
  if (c.graph.edge_prob) out << "edge-prob=" << Exact(*c.graph.edge_prob) << '\n';
  out << "alpha=" << Exact(c.graph.alpha) << '\n';
  out << "min-degree=" << c.graph.min_degree << '\n';
  out << "link=" << ToString(c.link) << '\n';
  out << "B=" << Exact(c.box) << '\n';
  out << "eps-theta=" << Exact(c.epsilon_theta) << '\n';
  out << "delta=" << Exact(c.delta) << '\n';
  out << "l=" << c.l << '\n';
  out << "l-val=" << c.l_validation << '\n';
  out << "T=" << c.rounds << '\n';
  if (c.eta) out << "eta=" << Exact(*c.eta) << '\n';
  out << "k=" << List(c.ks, str) << '\n';
  out << "r-train=" << c.r_train << '\n';
  out << "r-eval=" << c.r_eval << '\n';
  out << "trials=" << c.trials << '\n';
  out << "random-draws=" << c.random_draws << '\n';
  out << "r-grid=" << List(c.r_grid, str) << '\n';
  out << "t-grid=" << List(c.t_grid, str) << '\n';
  out << "union-k=" << c.union_k << '\n';
  out << "beta-grid=" << List(c.beta_grid, Exact) << '\n';
  out << "out-dir=\"" << c.out_dir << "\"\n";
  return out.str();
}

void SortRows(std::vector<ResultRow>& rows) {
  auto key = [](const ResultRow& r) {
    return std::tie(r.experiment, r.graph_model, r.trial, r.k, r.l, r.rounds,
                    r.algorithm, r.set_size);
  };
  std::stable_sort(rows.begin(), rows.end(),
                   [&](const ResultRow& a, const ResultRow& b) {
                     return key(a) < key(b);
                   });
}

std::vector<SummaryRow> Summarize(const std::vector<ResultRow>& rows) {
  using Key = std::tuple<std::string, std::string, int, int, int, std::string>;
  std::map<Key, std::vector<double>> groups;
  for (const ResultRow& r : rows) {
    groups[{r.experiment, r.graph_model, r.k, r.l, r.rounds, r.algorithm}]
        .push_back(r.min_value);
  }
  std::vector<SummaryRow> out;
  for (const auto& [key, values] : groups) {
    SummaryRow s;
    std::tie(s.experiment, s.graph_model, s.k, s.l, s.rounds, s.algorithm) =
        key;
    s.trials = static_cast<int>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / s.trials;
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.std_dev = s.trials > 1 ? std::sqrt(ss / (s.trials - 1)) : 0.0;
    out.push_back(std::move(s));
  }
  return out;
}

std::string ResultsCsv(const std::vector<ResultRow>& rows) {
  std::string out =
      "experiment,trial,graph_model,k,l,T,algorithm,set_size,min_value,"
      "stderr\n";
  for (const ResultRow& r : rows) {
    out += r.experiment + ',' + std::to_string(r.trial) + ',' + r.graph_model +
           ',' + std::to_string(r.k) + ',' + std::to_string(r.l) + ',' +
           std::to_string(r.rounds) + ',' + r.algorithm + ',' +
           std::to_string(r.set_size) + ',' + Num(r.min_value) + ',' +
           Num(r.std_error) + '\n';
  }
  return out;
}

std::string SummaryCsv(const std::vector<SummaryRow>& rows) {
  std::string out =
      "experiment,graph_model,k,l,T,algorithm,trials,mean_min_value,"
      "std_min_value\n";
  for (const SummaryRow& s : rows) {
    out += s.experiment + ',' + s.graph_model + ',' + std::to_string(s.k) +
           ',' + std::to_string(s.l) + ',' + std::to_string(s.rounds) + ',' +
           s.algorithm + ',' + std::to_string(s.trials) + ',' + Num(s.mean) +
           ',' + Num(s.std_dev) + '\n';
  }
  return out;
}

std::string TimingsCsv(const std::vector<ResultRow>& rows) {
  std::string out = "experiment,trial,graph_model,k,l,T,algorithm,wall_time_ms\n";
  for (const ResultRow& r : rows) {
    out += r.experiment + ',' + std::to_string(r.trial) + ',' + r.graph_model +
           ',' + std::to_string(r.k) + ',' + std::to_string(r.l) + ',' +
           std::to_string(r.rounds) + ',' + r.algorithm + ',' +
           Num(r.wall_time_ms) + '\n';
  }
  return out;
}

std::string DiagnosticsCsv(const HiroResult& result) {
  std::string out = "round,weights,set,payoffs,running_min\n";
  for (int t = 0; t < result.strategy.rounds(); ++t) {
    out += std::to_string(t + 1) + ',' + Join(result.weights[t].values()) +
           ',' + Join(result.strategy[t].nodes()) + ',' +
           Join(result.payoffs[t]) + ',' + Num(result.running_min[t]) + '\n';
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

struct Trial {
  std::string experiment;
  std::string model_name;
  int index = 0;
  std::uint64_t seed = 0;
  std::shared_ptr<const Graph> graph;
  std::optional<HyperModel> model;
  std::vector<ProbVector> validation;
};

std::uint64_t TrialSeed(const ExperimentConfig& c, GraphModel model,
                        int trial) {
  return DeriveSeed(c.seed, {stream::kTrial, static_cast<std::uint64_t>(model),
                             static_cast<std::uint64_t>(trial)});
}

Trial SetupTrial(const ExperimentConfig& c, const std::string& experiment,
                 GraphModel model, int index,
                 const std::shared_ptr<const Graph>& loaded) {
  Trial t;
  t.experiment = experiment;
  t.index = index;
  t.seed = TrialSeed(c, model, index);
  if (loaded) {
    t.graph = loaded;
    t.model_name = "file";
  } else {
    GeneratorSpec spec = c.graph;
    spec.model = model;
    t.graph = std::make_shared<const Graph>(GenerateGraph(spec, t.seed));
    t.model_name = ToString(model);
  }
  t.model.emplace(c.link, c.box, t.graph->feature_dim());
  const Cover validation =
      SampleCover(*t.model, c.epsilon_theta, c.delta,
                  DeriveSeed(t.seed, {stream::kValidationCover}),
                  c.l_validation);
  for (const Hyperparameter& theta : validation.thetas) {
    t.validation.push_back(EdgeProbabilities(*t.model, theta, *t.graph));
  }
  return t;
}

FunctionFamily TrainingFamily(const ExperimentConfig& c, const Trial& t,
                              int size) {
  Cover cover = SampleCover(*t.model, c.epsilon_theta, c.delta, t.seed, size);
  return MakePoolFamily(t.graph, *t.model, std::move(cover.thetas), c.r_train,
                        DeriveSeed(t.seed, {stream::kTrainPools}));
}

EvalOptions EvalFor(const ExperimentConfig& c, const Trial& t) {
  EvalOptions o;
  o.replicates = c.r_eval;
  o.seed = DeriveSeed(t.seed, {stream::kEvalPools});
  return o;
}

// Seed of baseline `which` at budget k.
std::uint64_t BaselineSeed(std::uint64_t trial_seed, int which, int k) {
  return DeriveSeed(trial_seed, {static_cast<std::uint64_t>(which),
                                 static_cast<std::uint64_t>(k)});
}

void CheckK(const Trial& t, int k) {
  if (k > t.graph->num_nodes()) {
    throw ParameterError("k = " + std::to_string(k) + " exceeds n = " +
                         std::to_string(t.graph->num_nodes()));
  }
}

// A strategy awaiting evaluation plus the row it will fill. Consecutive
// draws of the random baseline at one k collapse into a single row.
struct Pending {
  ResultRow row;
  MixedStrategy strategy;
  bool draw = false;
};

std::vector<ResultRow> EvaluatePending(const ExperimentConfig& c,
                                       const Trial& t,
                                       const std::vector<Pending>& pending) {
  std::vector<MixedStrategy> strategies;
  for (const Pending& p : pending) strategies.push_back(p.strategy);
  const std::vector<RobustReport> reports =
      EvaluateMany(*t.graph, t.validation, strategies, EvalFor(c, t));
  std::vector<ResultRow> rows;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    ResultRow row = pending[i].row;
    if (!pending[i].draw) {
      row.min_value = reports[i].min_value;
      row.std_error = reports[i].std_errors[reports[i].argmin];
      rows.push_back(std::move(row));
      continue;
    }
    // The random baseline reports the mean over draws of each draw's
    // min-value.
    double sum = 0.0;
    double sum_sq = 0.0;
    std::size_t j = i;
    for (; j < pending.size() && pending[j].draw &&
           pending[j].row.k == row.k;
         ++j) {
      sum += reports[j].min_value;
      sum_sq += reports[j].min_value * reports[j].min_value;
    }
    const double count = static_cast<double>(j - i);
    row.min_value = sum / count;
    const double var =
        count > 1 ? std::max(0.0, (sum_sq - sum * sum / count) / (count - 1))
                  : 0.0;
    row.std_error = std::sqrt(var / count);
    rows.push_back(std::move(row));
    i = j - 1;
  }
  return rows;
}

ResultRow BaseRow(const Trial& t, int k, int l, int rounds,
                  const std::string& algorithm, int set_size) {
  ResultRow r;
  r.experiment = t.experiment;
  r.trial = t.index;
  r.graph_model = t.model_name;
  r.k = k;
  r.l = l;
  r.rounds = rounds;
  r.algorithm = algorithm;
  r.set_size = set_size;
  return r;
}

void AddRandomDraws(const ExperimentConfig& c, const Trial& t, int k, int l,
                    std::vector<Pending>& pending) {
  const auto start = Clock::now();
  std::vector<SeedSet> draws = RandomSeedSets(*t.graph, k, c.random_draws,
                                              BaselineSeed(t.seed, 3, k));
  const double ms = MillisSince(start);
  const std::size_t first = pending.size();
  for (SeedSet& s : draws) {
    pending.push_back({BaseRow(t, k, l, c.rounds, "random", k),
                       MixedStrategy::Single(std::move(s)), true});
  }
  pending[first].row.wall_time_ms = ms;
}

Pending RunHiroPending(const ExperimentConfig& c, const Trial& t,
                       const FunctionFamily& family, int k, int rounds) {
  const auto start = Clock::now();
  HiroResult result = Hiro(family, {k, rounds, c.eta});
  Pending p{BaseRow(t, k, family.size(), rounds, "hiro", k),
            std::move(result.strategy)};
  p.row.wall_time_ms = MillisSince(start);
  return p;
}

std::vector<ResultRow> Experiment1Trial(const ExperimentConfig& c,
                                        const Trial& t) {
  const int size = *std::max_element(c.r_grid.begin(), c.r_grid.end());
  const FunctionFamily family = TrainingFamily(c, t, size);
  std::vector<Pending> pending;
  for (int k : c.ks) {
    CheckK(t, k);
    for (int r : c.r_grid) {
      pending.push_back(RunHiroPending(c, t, family.Prefix(r), k, c.rounds));
    }
  }
  return EvaluatePending(c, t, pending);
}

std::vector<ResultRow> Experiment2Trial(const ExperimentConfig& c,
                                        const Trial& t) {
  const FunctionFamily family = TrainingFamily(c, t, c.l);
  std::vector<Pending> pending;
  for (int k : c.ks) {
    CheckK(t, k);
    for (int rounds : c.t_grid) {
      pending.push_back(RunHiroPending(c, t, family, k, rounds));
    }
  }
  return EvaluatePending(c, t, pending);
}

std::vector<ResultRow> Experiment3Trial(const ExperimentConfig& c,
                                        const Trial& t) {
  const FunctionFamily family = TrainingFamily(c, t, c.l);
  const IntervalBounds bounds = DeriveIntervals(family);
  const int l = family.size();
  std::vector<Pending> pending;
  for (int k : c.ks) {
    CheckK(t, k);
    pending.push_back(RunHiroPending(c, t, family, k, c.rounds));

    auto start = Clock::now();
    SeedSet degree = TopKDegree(*t.graph, k);
    pending.push_back({BaseRow(t, k, l, c.rounds, "degree", k),
                       MixedStrategy::Single(std::move(degree))});
    pending.back().row.wall_time_ms = MillisSince(start);

    start = Clock::now();
    SeedSet greedy = RandomGreedy(family, k, BaselineSeed(t.seed, 1, k));
    pending.push_back({BaseRow(t, k, l, c.rounds, "random-greedy", k),
                       MixedStrategy::Single(std::move(greedy))});
    pending.back().row.wall_time_ms = MillisSince(start);

    start = Clock::now();
    LuGreedyResult lu = LuGreedy(t.graph, bounds, k, c.r_train,
                                 BaselineSeed(t.seed, 2, k));
    pending.push_back({BaseRow(t, k, l, c.rounds, "lu-greedy", k),
                       MixedStrategy::Single(std::move(lu.set))});
    pending.back().row.wall_time_ms = MillisSince(start);

    AddRandomDraws(c, t, k, l, pending);
  }
  return EvaluatePending(c, t, pending);
}

std::string BetaName(double beta) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "union-%g", beta);
  return buf;
}

std::vector<ResultRow> Experiment4Trial(const ExperimentConfig& c,
                                        const Trial& t) {
  const FunctionFamily family = TrainingFamily(c, t, c.l);
  const int k = c.union_k;
  CheckK(t, k);
  std::vector<Pending> pending;
  pending.push_back(RunHiroPending(c, t, family, k, c.rounds));
  const BicriteriaResult u = BicriteriaUnion(pending.front().strategy);
  const std::vector<NodeId> members(u.set.nodes().begin(),
                                    u.set.nodes().end());
  for (double beta : c.beta_grid) {
    const auto start = Clock::now();
    const int size = std::max(
        1, static_cast<int>(std::ceil(beta * u.set.size() - 1e-9)));
    GreedyOptions options;
    options.candidates = members;
    SeedSet subset =
        size == u.set.size()
            ? u.set
            : LazyGreedy(family, WeightVector::Uniform(family.size()), size,
                         options);
    pending.push_back({BaseRow(t, k, family.size(), c.rounds, BetaName(beta),
                               size),
                       MixedStrategy::Single(std::move(subset))});
    pending.back().row.wall_time_ms = MillisSince(start);
  }
  return EvaluatePending(c, t, pending);
}

using TrialRunner = std::vector<ResultRow> (*)(const ExperimentConfig&,
                                               const Trial&);

std::vector<ResultRow> RunTrials(const ExperimentConfig& c,
                                 const std::string& experiment,
                                 TrialRunner runner) {
  c.Validate();
  std::shared_ptr<const Graph> loaded;
  std::vector<GraphModel> models = c.models;
  if (c.graph_path) {
    loaded = std::make_shared<const Graph>(LoadGraph(*c.graph_path));
    models = {models.front()};
  }
  const int per_model = c.trials;
  const std::int64_t jobs =
      static_cast<std::int64_t>(models.size()) * per_model;
  std::vector<std::vector<ResultRow>> slots(jobs);
  ParallelFor(jobs, [&](std::int64_t j) {
    const Trial t = SetupTrial(c, experiment, models[j / per_model],
                               static_cast<int>(j % per_model), loaded);
    slots[j] = runner(c, t);
  });
  std::vector<ResultRow> rows;
  for (auto& s : slots) rows.insert(rows.end(), s.begin(), s.end());
  SortRows(rows);
  return rows;
}

}  // namespace

std::vector<ResultRow> RunExperiment1(const ExperimentConfig& config) {
  return RunTrials(config, "1", Experiment1Trial);
}
std::vector<ResultRow> RunExperiment2(const ExperimentConfig& config) {
  return RunTrials(config, "2", Experiment2Trial);
}
std::vector<ResultRow> RunExperiment3(const ExperimentConfig& config) {
  return RunTrials(config, "3", Experiment3Trial);
}
std::vector<ResultRow> RunExperiment4(const ExperimentConfig& config) {
  return RunTrials(config, "4", Experiment4Trial);
}

std::vector<ResultRow> RunExperiment(int id, const ExperimentConfig& config) {
  switch (id) {
    case 1: return RunExperiment1(config);
    case 2: return RunExperiment2(config);
    case 3: return RunExperiment3(config);
    case 4: return RunExperiment4(config);
  }
  throw ParameterError("experiment must be 1, 2, 3 or 4");
}

namespace {

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

std::filesystem::path PrepareDir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir + ": " + ec.message());
  return dir;
}

std::string SeedLines(const ExperimentConfig& c) {
  std::string out;
  std::vector<GraphModel> models = c.models;
  if (c.graph_path) models = {models.front()};
  for (GraphModel m : models) {
    for (int t = 0; t < c.trials; ++t) {
      out += "# trial-seed " + ToString(m) + " " + std::to_string(t) + " " +
             std::to_string(TrialSeed(c, m, t)) + "\n";
    }
  }
  return out;
}

}  // namespace

void WriteExperimentOutputs(const ExperimentConfig& config,
                            const std::vector<ResultRow>& rows,
                            const std::string& extra_manifest) {
  const std::filesystem::path dir = PrepareDir(config.out_dir);
  WriteFile(dir / "results.csv", ResultsCsv(rows));
  WriteFile(dir / "summary.csv", SummaryCsv(Summarize(rows)));
  WriteFile(dir / "timings.csv", TimingsCsv(rows));
  WriteFile(dir / "manifest.txt",
            extra_manifest + ManifestText(config) + SeedLines(config));
}

namespace {

template <typename F>
auto Stage(const std::string& name, F body) -> decltype(body()) {
  try {
    return body();
  } catch (const Error& e) {
    throw Error(e.kind(), name + ": " + e.what());
  }
}

}  // namespace

std::vector<ResultRow> RunPipeline(const ExperimentConfig& config) {
  Stage("config", [&] { config.Validate(); return 0; });
  ExperimentConfig c = config;
  c.trials = 1;
  const GraphModel model = c.models.front();
  const int k = c.ks.front();
  const std::uint64_t seed = TrialSeed(c, model, 0);

  Trial t = Stage("graph", [&] {
    std::shared_ptr<const Graph> loaded;
    if (c.graph_path) {
      loaded = std::make_shared<const Graph>(LoadGraph(*c.graph_path));
    }
    Trial trial = SetupTrial(c, "pipeline", model, 0, loaded);
    CheckK(trial, k);
    return trial;
  });
  const Cover cover = Stage("cover", [&] {
    return SampleCover(*t.model, c.epsilon_theta, c.delta, seed, c.l);
  });
  const FunctionFamily family = Stage("pools", [&] {
    return MakePoolFamily(t.graph, *t.model, cover.thetas, c.r_train,
                          DeriveSeed(seed, {stream::kTrainPools}));
  });
  const int l = family.size();

  std::vector<Pending> pending;
  HiroResult hiro = Stage("hiro", [&] {
    const auto start = Clock::now();
    HiroResult r = Hiro(family, {k, c.rounds, c.eta});
    pending.push_back({BaseRow(t, k, l, c.rounds, "hiro", k), r.strategy});
    pending.back().row.wall_time_ms = MillisSince(start);
    BicriteriaResult u = BicriteriaUnion(r.strategy);
    pending.push_back({BaseRow(t, k, l, c.rounds, "hiro-union", u.set.size()),
                       MixedStrategy::Single(u.set)});
    return r;
  });

  std::vector<ResultRow> rows;
  Stage("baselines", [&] {
    auto start = Clock::now();
    pending.push_back({BaseRow(t, k, l, c.rounds, "degree", k),
                       MixedStrategy::Single(TopKDegree(*t.graph, k))});
    pending.back().row.wall_time_ms = MillisSince(start);
    start = Clock::now();
    pending.push_back(
        {BaseRow(t, k, l, c.rounds, "random-greedy", k),
         MixedStrategy::Single(
             RandomGreedy(family, k, BaselineSeed(seed, 1, k)))});
    pending.back().row.wall_time_ms = MillisSince(start);
    start = Clock::now();
    LuGreedyResult lu = LuGreedy(t.graph, DeriveIntervals(family), k,
                                 c.r_train, BaselineSeed(seed, 2, k));
    pending.push_back({BaseRow(t, k, l, c.rounds, "lu-greedy", k),
                       MixedStrategy::Single(lu.set)});
    pending.back().row.wall_time_ms = MillisSince(start);
    return 0;
  });
  Stage("evaluate", [&] {
    AddRandomDraws(c, t, k, l, pending);
    rows = EvaluatePending(c, t, pending);
    SortRows(rows);
    return 0;
  });
  Stage("write", [&] {
    const std::filesystem::path dir = PrepareDir(c.out_dir);
    WriteFile(dir / "results.csv", ResultsCsv(rows));
    WriteFile(dir / "timings.csv", TimingsCsv(rows));
    WriteFile(dir / "diagnostics.csv", DiagnosticsCsv(hiro));
    SaveGraph(*t.graph, (dir / "graph.txt").string());
    SaveCover(cover, (dir / "cover.txt").string());
    WriteFile(dir / "manifest.txt", "# command: pipeline\n" +
                                        ManifestText(config) +
                                        "# trial-seed " + ToString(model) +
                                        " 0 " + std::to_string(seed) + "\n");
    return 0;
  });
  return rows;
}

}  // namespace hiro
