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

#ifndef HIRO_HYPERMODEL_H_
#define HIRO_HYPERMODEL_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hiro/graph.h"

namespace hiro {

enum class Link { kLinear, kLogistic, kProbit };

std::string ToString(Link link);
Link ParseLink(const std::string& name);

// A point of the hyperparameter box [-B, B]^d.
struct Hyperparameter {
  std::vector<double> theta;

  int dim() const { return static_cast<int>(theta.size()); }
  bool operator==(const Hyperparameter&) const = default;
};

double L1Distance(const Hyperparameter& a, const Hyperparameter& b);

// Per-arc activation probabilities, in arc order. Every entry lies in [0,1].
class ProbVector {
 public:
  ProbVector() = default;
  // Throws ParameterError if any entry falls outside [0, 1].
  explicit ProbVector(std::vector<double> p);
  // All arcs share the probability `value`.
  static ProbVector Constant(int num_arcs, double value);

  int size() const { return static_cast<int>(p_.size()); }
  double operator[](int arc) const { return p_[arc]; }
  std::span<const double> values() const { return p_; }

 private:
  std::vector<double> p_;
};

// Generalized linear model p_e = h(theta . x_e) over theta in [-B, B]^d.
// Construction checks numerically that h is 1-Lipschitz.
class HyperModel {
 public:
  HyperModel(Link link, double box_half_width, int dim);

  Link link() const { return link_; }
  double box_half_width() const { return box_; }
  int dim() const { return dim_; }

  // The scalar link h. Linear clamps to [0, 1].
  double Apply(double z) const;
  bool Contains(const Hyperparameter& theta) const;

 private:
  Link link_;
  double box_;
  int dim_;
};

// Standard normal CDF.
double NormalCdf(double z);

// p_e = h(theta . x_e) for every arc.
ProbVector EdgeProbabilities(const HyperModel& model,
                             const Hyperparameter& theta, const Graph& graph);

// Covering numbers for [-B, B]^d with l1 radius epsilon:
//   balls  = ceil((2 B d / epsilon)^d)
//   points = ceil(balls * ln(balls / delta))
struct CoverSizing {
  std::uint64_t balls = 0;
  std::uint64_t points = 0;
};

// Throws CapacityError when the counts overflow 64 bits.
CoverSizing ComputeCoverSizing(double box_half_width, int dim,
                               double epsilon_theta, double delta);

struct Cover {
  std::vector<Hyperparameter> thetas;
  double epsilon_theta = 0.0;
  double delta = 0.0;
  double box_half_width = 1.0;
  int dim = 0;

  std::int64_t sample_count() const {
    return static_cast<std::int64_t>(thetas.size());
  }
};

// Draws thetas i.i.d. uniformly from the model's box. The sample count comes
// from ComputeCoverSizing unless `sample_override` is supplied; an overflowing
// count without override raises CapacityError.
Cover SampleCover(const HyperModel& model, double epsilon_theta, double delta,
                  std::uint64_t seed,
                  std::optional<std::int64_t> sample_override = std::nullopt);

// Index of the cover point closest in l1 to `theta`, and that distance.
struct NearestPoint {
  int index = -1;
  double distance = 0.0;
};
NearestPoint NearestCoverPoint(const Cover& cover, const Hyperparameter& theta);

// Lipschitz constant n*m of theta -> f_theta(S) for stable models.
double LipschitzBound(const Graph& graph);

// Parameter-space radius whose cover is an epsilon_value cover in influence.
double FunctionCoverRadius(double epsilon_value, const Graph& graph);

// Text format: header "# d=<d> B=<B> eps=<eps> s=<s>" (plus delta=<delta>),
// then one whitespace-separated theta per line.
void SaveCover(const Cover& cover, const std::string& path);
Cover LoadCover(const std::string& path);

}  // namespace hiro

#endif  // HIRO_HYPERMODEL_H_
