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

// Command-line entry point.
//
//   hiro generate --model ba --n 100 --seed 1 --out graph.txt
//   hiro hiro --graph graph.txt --k 10 --l 20 --T 10 --out-dir run
//   hiro experiment 3 --scale desk --out-dir exp3
//   hiro pipeline --config run/manifest.txt
//
// Every option lives on the top-level app so that a flat key=value file
// (a previous run's manifest.txt) can be replayed with --config.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hiro/baselines.h"
#include "hiro/cascade.h"
#include "hiro/errors.h"
#include "hiro/experiments.h"
#include "hiro/graph.h"
#include "hiro/hypermodel.h"
#include "hiro/optimize.h"
#include "hiro/parallel.h"
#include "hiro/random.h"
#include "hiro/verify.h"

namespace hiro {
namespace {

// An option whose value, when given, overrides the preset.
struct Override {
  CLI::Option* option;
  std::function<void(ExperimentConfig&)> apply;
};

class ConfigOptions {
 public:
  explicit ConfigOptions(CLI::App& app) : app_(app) {}

  template <typename T, typename Apply>
  void Add(const std::string& flag, const std::string& help, Apply apply) {
    auto value = std::make_shared<T>();
    CLI::Option* opt = app_.add_option(flag, *value, help);
    overrides_.push_back(
        {opt, [value, apply](ExperimentConfig& c) { apply(c, *value); }});
  }

  ExperimentConfig Resolve(const std::string& scale) const {
    ExperimentConfig c = ExperimentConfig::Preset(ParseScale(scale));
    for (const Override& o : overrides_) {
      if (o.option->count() > 0) o.apply(c);
    }
    return c;
  }

 private:
  CLI::App& app_;
  std::vector<Override> overrides_;
};

void RegisterConfigOptions(ConfigOptions& o) {
  using Strings = std::vector<std::string>;
  o.Add<std::uint64_t>("--seed", "Base random seed",
                       [](ExperimentConfig& c, auto v) { c.seed = v; });
  o.Add<std::string>("--out-dir", "Output directory",
                     [](ExperimentConfig& c, auto v) { c.out_dir = v; });
  o.Add<std::string>("--graph", "Edge-list file used instead of a generator",
                     [](ExperimentConfig& c, auto v) { c.graph_path = v; });
  o.Add<std::string>("--model", "Graph model (ba, ws, er, cm)",
                     [](ExperimentConfig& c, auto v) {
                       c.models = {ParseGraphModel(v)};
                     });
  o.Add<Strings>("--models", "Graph models for experiments",
                 [](ExperimentConfig& c, const Strings& v) {
                   c.models.clear();
                   for (const auto& s : v) c.models.push_back(ParseGraphModel(s));
                 });
  o.Add<int>("--n", "Node count",
             [](ExperimentConfig& c, auto v) { c.graph.n = v; });
  o.Add<int>("--d", "Feature dimension",
             [](ExperimentConfig& c, auto v) { c.graph.feature_dim = v; });
  o.Add<std::string>("--feature-dist",
                     "uniform_cube, normal_clipped or rademacher",
                     [](ExperimentConfig& c, auto v) {
                       c.graph.feature_dist = ParseFeatureDistribution(v);
                     });
  o.Add<int>("--attach", "Barabasi-Albert edges per new node",
             [](ExperimentConfig& c, auto v) { c.graph.attach = v; });
  o.Add<int>("--ring-degree", "Watts-Strogatz ring degree",
             [](ExperimentConfig& c, auto v) { c.graph.ring_degree = v; });
  o.Add<double>("--rewire-prob", "Watts-Strogatz rewiring probability",
                [](ExperimentConfig& c, auto v) { c.graph.rewire_prob = v; });
  o.Add<double>("--edge-prob", "Erdos-Renyi edge probability",
                [](ExperimentConfig& c, auto v) { c.graph.edge_prob = v; });
  o.Add<double>("--alpha", "Configuration-model power-law exponent",
                [](ExperimentConfig& c, auto v) { c.graph.alpha = v; });
  o.Add<int>("--min-degree", "Configuration-model minimum degree",
             [](ExperimentConfig& c, auto v) { c.graph.min_degree = v; });
  o.Add<std::string>("--link", "linear, logistic or probit",
                     [](ExperimentConfig& c, auto v) { c.link = ParseLink(v); });
  o.Add<double>("--B", "Hyperparameter box half-width",
                [](ExperimentConfig& c, auto v) { c.box = v; });
  o.Add<double>("--eps-theta", "Cover radius in parameter space",
                [](ExperimentConfig& c, auto v) { c.epsilon_theta = v; });
  o.Add<double>("--delta", "Cover failure probability",
                [](ExperimentConfig& c, auto v) { c.delta = v; });
  o.Add<int>("--l", "Training functions",
             [](ExperimentConfig& c, auto v) { c.l = v; });
  o.Add<int>("--l-val", "Validation functions",
             [](ExperimentConfig& c, auto v) { c.l_validation = v; });
  o.Add<int>("--T", "HIRO rounds",
             [](ExperimentConfig& c, auto v) { c.rounds = v; });
  o.Add<double>("--eta", "MWU learning rate (default log(l)/(2T))",
                [](ExperimentConfig& c, auto v) { c.eta = v; });
  o.Add<std::vector<int>>("--k", "Seed-set sizes",
                          [](ExperimentConfig& c, auto v) { c.ks = v; });
  o.Add<int>("--r-train", "Training pool size",
             [](ExperimentConfig& c, auto v) { c.r_train = v; });
  o.Add<int>("--r-eval", "Evaluation pool size",
             [](ExperimentConfig& c, auto v) { c.r_eval = v; });
  o.Add<int>("--trials", "Trials per grid point",
             [](ExperimentConfig& c, auto v) { c.trials = v; });
  o.Add<int>("--random-draws", "Draws for the random baseline",
             [](ExperimentConfig& c, auto v) { c.random_draws = v; });
  o.Add<std::vector<int>>("--r-grid", "Experiment 1 training sizes",
                          [](ExperimentConfig& c, auto v) { c.r_grid = v; });
  o.Add<std::vector<int>>("--t-grid", "Experiment 2 round counts",
                          [](ExperimentConfig& c, auto v) { c.t_grid = v; });
  o.Add<int>("--union-k", "Experiment 4 budget",
             [](ExperimentConfig& c, auto v) { c.union_k = v; });
  o.Add<std::vector<double>>("--beta-grid", "Experiment 4 union fractions",
                             [](ExperimentConfig& c, auto v) {
                               c.beta_grid = v;
                             });
}

std::filesystem::path OutDir(const ExperimentConfig& c) {
  std::error_code ec;
  std::filesystem::create_directories(c.out_dir, ec);
  if (ec) throw IoError("cannot create " + c.out_dir + ": " + ec.message());
  return c.out_dir;
}

void WriteText(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

struct Extras {
  std::string out;
  std::string cover;
  std::string probs;
  std::string sets;
  std::string name = "degree";
  std::string ratio;
  bool exact = false;
  bool draw = false;
  int threads = 0;
  int size = 0;
  double lambda = 0.0;
  int experiment = 0;
  std::string fixture;
};

std::string Quoted(const std::string& v) { return '"' + v + '"'; }

// Command-specific flags, so that --config on the manifest replays the run.
// --threads and --out-dir are left to the caller.
std::string ExtrasText(const Extras& x) {
  std::string out;
  auto line = [&out](const std::string& key, const std::string& value) {
    out += key + '=' + value + '\n';
  };
  if (!x.cover.empty()) line("cover", Quoted(x.cover));
  if (!x.probs.empty()) line("probs", Quoted(x.probs));
  if (!x.sets.empty()) line("sets", Quoted(x.sets));
  line("name", Quoted(x.name));
  if (!x.ratio.empty()) line("ratio", Quoted(x.ratio));
  if (x.exact) line("exact", "true");
  if (x.draw) line("draw", "true");
  if (x.size > 0) line("size", std::to_string(x.size));
  if (x.lambda > 0.0) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x.lambda);
    line("lambda", buf);
  }
  return out;
}

void WriteManifest(const ExperimentConfig& c, const Extras& x,
                   const std::string& command) {
  WriteText(OutDir(c) / "manifest.txt",
            "# command: " + command + "\n" + ManifestText(c) + ExtrasText(x));
}

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string SetLine(const SeedSet& s) {
  std::string out;
  for (NodeId v : s.nodes()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::string SetsText(const std::vector<SeedSet>& sets) {
  std::string out;
  for (const SeedSet& s : sets) out += SetLine(s) + '\n';
  return out;
}

// One seed set per line; '#' starts a comment line.
std::vector<SeedSet> ReadSets(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<SeedSet> sets;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<NodeId> nodes;
    std::string token;
    while (fields >> token) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        nodes.push_back(v);
      } catch (const std::exception&) {
        throw ParseError(path, line_no, "bad node id '" + token + "'");
      }
    }
    sets.emplace_back(std::move(nodes));
  }
  if (sets.empty()) throw ParseError(path, line_no, "no seed sets");
  return sets;
}

std::shared_ptr<const Graph> GraphFor(const ExperimentConfig& c) {
  if (c.graph_path) {
    return std::make_shared<const Graph>(LoadGraph(*c.graph_path));
  }
  GeneratorSpec spec = c.graph;
  spec.model = c.models.front();
  return std::make_shared<const Graph>(GenerateGraph(spec, c.seed));
}

struct Workspace {
  std::shared_ptr<const Graph> graph;
  std::optional<HyperModel> model;
  Cover cover;
  FunctionFamily family;
};

Workspace TrainingWorkspace(const ExperimentConfig& c,
                            const std::string& cover_path) {
  Workspace w;
  w.graph = GraphFor(c);
  w.model.emplace(c.link, c.box, w.graph->feature_dim());
  w.cover = cover_path.empty()
                ? SampleCover(*w.model, c.epsilon_theta, c.delta, c.seed, c.l)
                : LoadCover(cover_path);
  w.family = MakePoolFamily(w.graph, *w.model, w.cover.thetas, c.r_train,
                            DeriveSeed(c.seed, {stream::kTrainPools}));
  return w;
}


int RunGenerate(const ExperimentConfig& c, const Extras& x) {
  if (x.out.empty()) throw ParameterError("generate needs --out");
  const auto graph = GraphFor(c);
  SaveGraph(*graph, x.out);
  std::cout << "n=" << graph->num_nodes() << " arcs=" << graph->num_arcs()
            << " d=" << graph->feature_dim() << "\n";
  return 0;
}

int RunHiroCommand(const ExperimentConfig& c, const Extras& x) {
  const Workspace w = TrainingWorkspace(c, x.cover);
  const HiroResult result = Hiro(w.family, {c.ks.front(), c.rounds, c.eta});
  const auto dir = OutDir(c);
  WriteText(dir / "strategy.txt", SetsText(result.strategy.seed_sets()));
  WriteText(dir / "diagnostics.csv", DiagnosticsCsv(result));
  const BicriteriaResult u = BicriteriaUnion(result.strategy);
  WriteText(dir / "union.txt", SetLine(u.set) + '\n');
  WriteManifest(c, x, "hiro");
  std::cout << "rounds=" << result.strategy.rounds()
            << " union_size=" << u.set.size() << " blowup=" << Num(u.blowup)
            << " training_min=" << Num(result.running_min.back()) << "\n";
  if (x.draw) {
    std::cout << "draw: " << SetLine(DrawFromStrategy(result.strategy, c.seed))
              << "\n";
  }
  return 0;
}

int RunBaselineCommand(const ExperimentConfig& c, const Extras& x) {
  const int k = c.ks.front();
  std::vector<SeedSet> sets;
  if (x.name == "degree") {
    sets = {TopKDegree(*GraphFor(c), k)};
  } else if (x.name == "random") {
    sets = RandomSeedSets(*GraphFor(c), k, c.random_draws, c.seed);
  } else if (x.name == "random-greedy") {
    const Workspace w = TrainingWorkspace(c, x.cover);
    sets = {RandomGreedy(w.family, k, c.seed)};
  } else if (x.name == "lu-greedy") {
    const Workspace w = TrainingWorkspace(c, x.cover);
    sets = {LuGreedy(w.graph, DeriveIntervals(w.family), k, c.r_train, c.seed)
                .set};
  } else {
    throw ParameterError("unknown baseline '" + x.name + "'");
  }
  WriteText(OutDir(c) / "baseline.txt", SetsText(sets));
  WriteManifest(c, x, "baseline --name " + x.name);
  std::cout << SetsText(sets);
  return 0;
}

int RunEvaluateCommand(const ExperimentConfig& c, const Extras& x) {
  if (x.sets.empty()) throw ParameterError("evaluate needs --sets");
  const auto graph = GraphFor(c);
  std::vector<ProbVector> probs;
  if (!x.probs.empty()) {
    probs = LoadProbabilities(x.probs, graph->num_arcs());
  } else {
    const HyperModel model(c.link, c.box, graph->feature_dim());
    const Cover cover =
        x.cover.empty()
            ? SampleCover(model, c.epsilon_theta, c.delta,
                          DeriveSeed(c.seed, {stream::kValidationCover}),
                          c.l_validation)
            : LoadCover(x.cover);
    for (const auto& theta : cover.thetas) {
      probs.push_back(EdgeProbabilities(model, theta, *graph));
    }
  }
  const MixedStrategy strategy(ReadSets(x.sets));
  EvalOptions options;
  options.exact = x.exact;
  options.replicates = c.r_eval;
  options.seed = DeriveSeed(c.seed, {stream::kEvalPools});
  RobustReport report =
      EvaluateMany(*graph, probs, std::span<const MixedStrategy>(&strategy, 1),
                   options)
          .front();
  std::string ratio_line;
  if (!x.ratio.empty()) {
    if (strategy.rounds() != 1) {
      throw ParameterError("--ratio needs a single seed set");
    }
    const FunctionFamily family =
        x.exact ? MakeExactFamily(graph, probs)
                : MakePoolFamily(graph, probs, c.r_train,
                                 DeriveSeed(c.seed, {stream::kTrainPools}));
    OptimumMode mode;
    if (x.ratio == "greedy") {
      mode = OptimumMode::kGreedy;
    } else if (x.ratio == "brute_force") {
      mode = OptimumMode::kBruteForce;
    } else {
      throw ParameterError("--ratio must be greedy or brute_force");
    }
    const RatioReport r =
        RobustRatio(family, strategy[0], strategy.set_size(), mode);
    report.robust_ratio = r.ratio;
    ratio_line = "robust_ratio," + Num(r.ratio) + "\nmax_overestimate," +
                 Num(r.max_overestimate) + "\n";
  }
  std::string csv = "function,value,stderr\n";
  for (std::size_t j = 0; j < report.values.size(); ++j) {
    csv += std::to_string(j) + ',' + Num(report.values[j]) + ',' +
           Num(report.std_errors[j]) + '\n';
  }
  const auto dir = OutDir(c);
  WriteText(dir / "report.csv", csv);
  const std::string summary =
      "key,value\nmin_value," + Num(report.min_value) + "\nargmin," +
      std::to_string(report.argmin) + "\nreplicates," +
      std::to_string(report.replicates) + "\nseed," +
      std::to_string(options.seed) + "\n" + ratio_line;
  WriteText(dir / "report_summary.csv", summary);
  WriteManifest(c, x, "evaluate");
  std::cout << summary;
  return 0;
}

int RunExperimentCommand(const ExperimentConfig& c, const Extras& x) {
  const std::vector<ResultRow> rows = RunExperiment(x.experiment, c);
  WriteExperimentOutputs(c, rows,
                         "# command: experiment " +
                             std::to_string(x.experiment) + "\n");
  std::cout << SummaryCsv(Summarize(rows));
  return 0;
}

int RunFixtureCommand(const ExperimentConfig& c, const Extras& x) {
  std::string csv = "key,value\n";
  auto put = [&](const std::string& key, double v) {
    csv += key + ',' + Num(v) + '\n';
  };
  Fixture f;
  if (x.fixture == "ratio") {
    const int n = x.size > 0 ? x.size : 100;
    f = RatioGapInstance(n);
    const FunctionFamily family = MakeExactFamily(f.graph, f.probs);
    const BruteForceResult value = BruteForceRobust(family, 1);
    const RatioChoice ratio = MaximizeRobustRatio(family, 1);
    auto min_value = [&](NodeId node) {
      const auto v = FamilyValues(family, SeedSet{node});
      return std::min(v[0], v[1]);
    };
    put("value_choice", value.set.nodes()[0]);
    put("ratio_choice", ratio.set.nodes()[0]);
    put("min_value_u", min_value(f.label("u")));
    put("min_value_v", min_value(f.label("v")));
    put("gap", min_value(f.label("v")) / min_value(f.label("u")));
  } else if (x.fixture == "improper") {
    const int n = x.size > 0 ? x.size : 5;
    f = ImproperGapInstance(n);
    const FunctionFamily family = MakeExactFamily(f.graph, f.probs);
    put("best_deterministic", BruteForceRobust(family, 1).value);
    const MixedStrategy mix(
        {SeedSet{f.label("u")}, SeedSet{f.label("v")}});
    EvalOptions exact;
    exact.exact = true;
    put("uniform_mix", Evaluate(family, mix, exact).min_value);
    const HiroResult h = Hiro(family, {1, std::max(c.rounds, 20), c.eta});
    put("hiro_mix", Evaluate(family, h.strategy, exact).min_value);
  } else if (x.fixture == "lipschitz") {
    const int n = x.size > 0 ? x.size : 50;
    const double lambda = x.lambda > 0.0 ? x.lambda : 1.0 / (double(n) * n);
    f = LipschitzTightInstance(n, lambda);
    const SeedSet center{f.label("center")};
    const auto seed = DeriveSeed(c.seed, {stream::kEvalPools});
    const InfluenceEstimate a =
        EstimateInfluence(*f.graph, f.probs[0], center, c.r_eval, seed);
    const InfluenceEstimate b = EstimateInfluence(
        *f.graph, f.probs[1], center, c.r_eval, DeriveSeed(seed, {1}));
    const double scale = double(n) * n * (1.0 / n);
    put("influence_lambda", a.mean);
    put("influence_eps", b.mean);
    put("change", b.mean - a.mean);
    put("n2_eps", scale);
    put("ratio", (b.mean - a.mean) / scale);
  } else {
    throw ParameterError("fixture must be ratio, improper or lipschitz");
  }
  const auto dir = OutDir(c);
  SaveGraph(*f.graph, (dir / "graph.txt").string());
  SaveProbabilities(f.probs, (dir / "probs.txt").string());
  WriteText(dir / "fixture.csv", csv);
  WriteManifest(c, x, "fixture " + x.fixture);
  std::cout << csv;
  return 0;
}

int RunPipelineCommand(const ExperimentConfig& c, const Extras&) {
  const std::vector<ResultRow> rows = RunPipeline(c);
  std::cout << ResultsCsv(rows);
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"Robust influence maximization under hyperparametric "
               "Independent Cascade models"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file");
  ConfigOptions options(app);
  RegisterConfigOptions(options);
  std::string scale = "desk";
  app.add_option("--scale", scale, "Preset: desk or full");
  Extras x;
  app.add_option("--threads", x.threads,
                 "Worker threads (0: hardware concurrency)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--out", x.out, "Output file (generate)");
  app.add_option("--cover", x.cover, "Cover file instead of sampling");
  app.add_option("--probs", x.probs, "Probability-vector file (evaluate)");
  app.add_option("--sets", x.sets, "Seed-set file, one set per line");
  app.add_option("--name", x.name,
                 "Baseline: random, degree, random-greedy or lu-greedy");
  app.add_option("--ratio", x.ratio, "Also report the robust ratio: greedy "
                                     "or brute_force");
  app.add_flag("--exact", x.exact, "Exact evaluation (small graphs)");
  app.add_flag("--draw", x.draw, "Print one set drawn from the strategy");
  app.add_option("--size", x.size, "Fixture size");
  app.add_option("--lambda", x.lambda, "Lipschitz fixture lambda");

  std::function<int(const ExperimentConfig&, const Extras&)> command;
  auto sub = [&](const std::string& name, const std::string& help, auto fn) {
    CLI::App* s = app.add_subcommand(name, help)->fallthrough();
    s->callback([&command, fn] { command = fn; });
    return s;
  };
  sub("generate", "Generate a synthetic graph", RunGenerate);
  sub("hiro", "Run HIRO and write the mixed strategy", RunHiroCommand);
  sub("baseline", "Run one baseline", RunBaselineCommand);
  sub("evaluate", "Evaluate seed sets on fresh pools", RunEvaluateCommand);
  sub("experiment", "Run experiment 1, 2, 3 or 4", RunExperimentCommand)
      ->add_option("id", x.experiment, "Experiment number")
      ->required()
      ->check(CLI::Range(1, 4));
  sub("fixture", "Build and check a constructed instance", RunFixtureCommand)
      ->add_option("kind", x.fixture, "ratio, improper or lipschitz")
      ->required();
  sub("pipeline", "Generate, optimize, evaluate and report", RunPipelineCommand);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::FileError& e) {
    app.exit(e);
    return static_cast<int>(ErrorKind::kIo);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ErrorKind::kParameter);
  }
  try {
    SetWorkerCount(x.threads);
    const ExperimentConfig config = options.Resolve(scale);
    config.Validate();
    return command(config, x);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  }
}

}  // namespace
}  // namespace hiro

int main(int argc, char** argv) { return hiro::Main(argc, argv); }
