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

#ifndef HIRO_EXPERIMENTS_H_
#define HIRO_EXPERIMENTS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hiro/graph.h"
#include "hiro/hypermodel.h"
#include "hiro/optimize.h"

namespace hiro {

enum class Scale { kDesk, kFull };
std::string ToString(Scale scale);
Scale ParseScale(const std::string& name);

struct ExperimentConfig {
  Scale scale = Scale::kDesk;
  std::uint64_t seed = 1;

  // Graph: generated per trial from `graph` (once per entry of `models`)
  // unless `graph_path` names a file, which is then used for every trial.
  GeneratorSpec graph;
  std::vector<GraphModel> models = {
      GraphModel::kBarabasiAlbert, GraphModel::kWattsStrogatz,
      GraphModel::kErdosRenyi, GraphModel::kConfiguration};
  std::optional<std::string> graph_path;

  Link link = Link::kLogistic;
  double box = 1.0;  // B
  double epsilon_theta = 0.5;
  double delta = 0.1;

  int l = 20;              // training functions
  int l_validation = 50;   // evaluation functions
  int rounds = 10;         // T
  std::optional<double> eta;
  std::vector<int> ks = {10, 25, 50};
  int r_train = 1000;
  int r_eval = 1000;
  int trials = 10;
  int random_draws = 100;

  std::vector<int> r_grid = {1, 10, 20, 30, 40, 50};  // experiment 1
  std::vector<int> t_grid = {1, 5, 10, 15};           // experiment 2
  int union_k = 10;                                   // experiment 4
  std::vector<double> beta_grid = {0.25, 0.5, 0.75, 1.0};

  std::string out_dir = "out";

  static ExperimentConfig Preset(Scale scale);
  // Throws ParameterError on the first invalid field.
  void Validate() const;
};

// key=value lines, readable back as a --config file.
std::string ManifestText(const ExperimentConfig& config);

struct ResultRow {
  std::string experiment;
  int trial = 0;
  std::string graph_model;
  int k = 0;
  int l = 0;
  int rounds = 0;
  std::string algorithm;
  int set_size = 0;
  double min_value = 0.0;
  double std_error = 0.0;
  double wall_time_ms = 0.0;
};

struct SummaryRow {
  std::string experiment;
  std::string graph_model;
  int k = 0;
  int l = 0;
  int rounds = 0;
  std::string algorithm;
  int trials = 0;
  double mean = 0.0;
  double std_dev = 0.0;  // sample standard deviation over trials
};

// Sorts rows by (experiment, graph model, trial, k, l, T, algorithm,
// set size).
void SortRows(std::vector<ResultRow>& rows);
std::vector<SummaryRow> Summarize(const std::vector<ResultRow>& rows);

// Numbers are printed with 6 significant digits. Timings go to a separate
// file so result files stay byte-identical across runs.
std::string ResultsCsv(const std::vector<ResultRow>& rows);
std::string SummaryCsv(const std::vector<SummaryRow>& rows);
std::string TimingsCsv(const std::vector<ResultRow>& rows);
std::string DiagnosticsCsv(const HiroResult& result);

// Each runner returns rows for every trial and grid point, sorted.
std::vector<ResultRow> RunExperiment1(const ExperimentConfig& config);
std::vector<ResultRow> RunExperiment2(const ExperimentConfig& config);
std::vector<ResultRow> RunExperiment3(const ExperimentConfig& config);
std::vector<ResultRow> RunExperiment4(const ExperimentConfig& config);
std::vector<ResultRow> RunExperiment(int id, const ExperimentConfig& config);

// Writes results.csv, summary.csv, timings.csv and manifest.txt to
// config.out_dir.
void WriteExperimentOutputs(const ExperimentConfig& config,
                            const std::vector<ResultRow>& rows,
                            const std::string& extra_manifest = "");

// generate/load graph, sample the covers, build pools, run HIRO and the
// baselines, evaluate, and write results.csv, diagnostics.csv,
// timings.csv and manifest.txt. Uses models.front() and ks.front(). Errors
// are rethrown with the failing stage prefixed.
std::vector<ResultRow> RunPipeline(const ExperimentConfig& config);

}  // namespace hiro

#endif  // HIRO_EXPERIMENTS_H_
