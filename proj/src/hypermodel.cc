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

#include "hiro/hypermodel.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "hiro/errors.h"
#include "hiro/random.h"

namespace hiro {

std::string ToString(Link link) {
  switch (link) {
    case Link::kLinear:
      return "linear";
    case Link::kLogistic:
      return "logistic";
    case Link::kProbit:
      return "probit";
  }
  return "unknown";
}

Link ParseLink(const std::string& name) {
  if (name == "linear") return Link::kLinear;
  if (name == "logistic" || name == "sigmoid") return Link::kLogistic;
  if (name == "probit") return Link::kProbit;
  throw ParameterError("unknown link '" + name + "'");
}

double L1Distance(const Hyperparameter& a, const Hyperparameter& b) {
  if (a.dim() != b.dim()) throw ParameterError("hyperparameter dims differ");
  double sum = 0.0;
  for (int i = 0; i < a.dim(); ++i) sum += std::abs(a.theta[i] - b.theta[i]);
  return sum;
}

ProbVector::ProbVector(std::vector<double> p) : p_(std::move(p)) {
  for (std::size_t e = 0; e < p_.size(); ++e) {
    if (!(p_[e] >= 0.0 && p_[e] <= 1.0)) {
      throw ParameterError("probability " + std::to_string(p_[e]) +
                           " of arc " + std::to_string(e) +
                           " outside [0,1]");
    }
  }
}

ProbVector ProbVector::Constant(int num_arcs, double value) {
  return ProbVector(std::vector<double>(num_arcs, value));
}

double NormalCdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

HyperModel::HyperModel(Link link, double box_half_width, int dim)
    : link_(link), box_(box_half_width), dim_(dim) {
  if (!(box_half_width > 0.0)) throw ParameterError("B must be > 0");
  if (dim < 0) throw ParameterError("dimension must be >= 0");
  // theta . x ranges over [-B d, B d]; check the slope on a fine grid there.
  const double reach = box_ * std::max(dim_, 1) + 1.0;
  constexpr int kSteps = 4096;
  const double step = 2.0 * reach / kSteps;
  double prev = Apply(-reach);
  for (int i = 1; i <= kSteps; ++i) {
    const double cur = Apply(-reach + i * step);
    if (std::abs(cur - prev) > step + 1e-12) {
      throw ParameterError("link " + ToString(link_) + " is not 1-Lipschitz");
    }
    prev = cur;
  }
}

double HyperModel::Apply(double z) const {
  switch (link_) {
    case Link::kLinear:
      return std::clamp(z, 0.0, 1.0);
    case Link::kLogistic:
      if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
      return std::exp(z) / (1.0 + std::exp(z));
    case Link::kProbit:
      return NormalCdf(z);
  }
  return 0.0;
}

bool HyperModel::Contains(const Hyperparameter& theta) const {
  if (theta.dim() != dim_) return false;
  return std::all_of(theta.theta.begin(), theta.theta.end(),
                     [this](double t) { return t >= -box_ && t <= box_; });
}

ProbVector EdgeProbabilities(const HyperModel& model,
                             const Hyperparameter& theta, const Graph& graph) {
  if (theta.dim() != graph.feature_dim() || theta.dim() != model.dim()) {
    throw ParameterError("theta dimension " + std::to_string(theta.dim()) +
                         " does not match graph feature dimension " +
                         std::to_string(graph.feature_dim()));
  }
  std::vector<double> p(graph.num_arcs());
  for (ArcId e = 0; e < graph.num_arcs(); ++e) {
    const auto x = graph.features(e);
    double z = 0.0;
    for (int j = 0; j < theta.dim(); ++j) z += theta.theta[j] * x[j];
    p[e] = model.Apply(z);
  }
  return ProbVector(std::move(p));
}

CoverSizing ComputeCoverSizing(double box_half_width, int dim,
                               double epsilon_theta, double delta) {
  if (!(epsilon_theta > 0.0)) throw ParameterError("epsilon_theta must be > 0");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ParameterError("delta must lie in (0,1)");
  }
  if (dim < 1) throw ParameterError("cover needs dimension >= 1");
  constexpr double kLimit = 9.2e18;  // just under 2^63
  const double base = 2.0 * box_half_width * dim / epsilon_theta;
  const double balls_real = std::pow(base, dim);
  if (!(balls_real < kLimit)) {
    throw CapacityError(
        "cover ball count overflows a 64-bit integer; supply an explicit "
        "sample count override");
  }
  // Guard against pow() landing a hair above an integer.
  const double balls = std::max(1.0, std::ceil(balls_real * (1.0 - 1e-12)));
  const double points_real = std::ceil(balls * std::log(balls / delta));
  if (!(points_real < kLimit)) {
    throw CapacityError(
        "cover sample count overflows a 64-bit integer; supply an explicit "
        "sample count override");
  }
  CoverSizing sizing;
  sizing.balls = static_cast<std::uint64_t>(balls);
  sizing.points = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(points_real));
  return sizing;
}

Cover SampleCover(const HyperModel& model, double epsilon_theta, double delta,
                  std::uint64_t seed,
                  std::optional<std::int64_t> sample_override) {
  if (!(epsilon_theta > 0.0)) throw ParameterError("epsilon_theta must be > 0");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ParameterError("delta must lie in (0,1)");
  }
  std::int64_t count;
  if (sample_override.has_value()) {
    if (*sample_override < 1) throw ParameterError("cover size must be >= 1");
    count = *sample_override;
  } else {
    count = static_cast<std::int64_t>(
        ComputeCoverSizing(model.box_half_width(), model.dim(), epsilon_theta,
                           delta)
            .points);
  }
  Cover cover;
  cover.epsilon_theta = epsilon_theta;
  cover.delta = delta;
  cover.box_half_width = model.box_half_width();
  cover.dim = model.dim();
  cover.thetas.reserve(count);
  Engine rng(DeriveSeed(seed, {stream::kCover}));
  std::uniform_real_distribution<double> coord(-model.box_half_width(),
                                               model.box_half_width());
  for (std::int64_t i = 0; i < count; ++i) {
    Hyperparameter h;
    h.theta.resize(model.dim());
    for (double& t : h.theta) t = coord(rng);
    cover.thetas.push_back(std::move(h));
  }
  return cover;
}

NearestPoint NearestCoverPoint(const Cover& cover, const Hyperparameter& theta) {
  NearestPoint best;
  best.distance = std::numeric_limits<double>::infinity();
  for (int i = 0; i < static_cast<int>(cover.thetas.size()); ++i) {
    const double dist = L1Distance(cover.thetas[i], theta);
    if (dist < best.distance) {
      best.distance = dist;
      best.index = i;
    }
  }
  return best;
}

double LipschitzBound(const Graph& graph) {
  return static_cast<double>(graph.num_nodes()) * graph.num_arcs();
}

double FunctionCoverRadius(double epsilon_value, const Graph& graph) {
  if (!(epsilon_value > 0.0)) throw ParameterError("epsilon must be > 0");
  const double lipschitz = LipschitzBound(graph);
  if (lipschitz == 0.0) {
    throw ParameterError(
        "Lipschitz bound is zero (edgeless graph); every theta yields the "
        "same influence function");
  }
  return epsilon_value / lipschitz;
}

void SaveCover(const Cover& cover, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write cover file '" + path + "'");
  char buf[64];
  out << "# d=" << cover.dim;
  std::snprintf(buf, sizeof(buf), " B=%.17g eps=%.17g", cover.box_half_width,
                cover.epsilon_theta);
  out << buf << " s=" << cover.sample_count();
  std::snprintf(buf, sizeof(buf), " delta=%.17g", cover.delta);
  out << buf << '\n';
  for (const Hyperparameter& h : cover.thetas) {
    for (int j = 0; j < h.dim(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", h.theta[j]);
      out << (j ? " " : "") << buf;
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed for '" + path + "'");
}

Cover LoadCover(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open cover file '" + path + "'");
  std::string line;
  int line_no = 0;
  Cover cover;
  long long declared = -1;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string tok;
    if (!(tokens >> tok)) continue;
    if (!have_header) {
      if (tok != "#") throw ParseError(path, line_no, "missing cover header");
      bool have_d = false;
      while (tokens >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = tok.substr(0, eq);
        const std::string value = tok.substr(eq + 1);
        try {
          if (key == "d") {
            cover.dim = std::stoi(value);
            have_d = true;
          } else if (key == "B") {
            cover.box_half_width = std::stod(value);
          } else if (key == "eps") {
            cover.epsilon_theta = std::stod(value);
          } else if (key == "delta") {
            cover.delta = std::stod(value);
          } else if (key == "s") {
            declared = std::stoll(value);
          }
        } catch (const std::exception&) {
          throw ParseError(path, line_no, "bad header value '" + tok + "'");
        }
      }
      if (!have_d || cover.dim < 1) {
        throw ParseError(path, line_no, "header must define d>=1");
      }
      have_header = true;
      continue;
    }
    if (tok[0] == '#') continue;
    Hyperparameter h;
    std::istringstream values(line);
    double v;
    while (values >> v) h.theta.push_back(v);
    if (!values.eof() || h.dim() != cover.dim) {
      throw ParseError(path, line_no,
                       "expected " + std::to_string(cover.dim) + " reals");
    }
    for (double t : h.theta) {
      if (std::abs(t) > cover.box_half_width) {
        throw ParseError(path, line_no, "theta outside [-B,B]^d");
      }
    }
    cover.thetas.push_back(std::move(h));
  }
  if (!have_header) throw ParseError(path, line_no, "empty cover file");
  if (declared >= 0 && declared != cover.sample_count()) {
    throw ParseError(path, line_no,
                     "header declares s=" + std::to_string(declared) +
                         " but file holds " +
                         std::to_string(cover.sample_count()) + " points");
  }
  return cover;
}

}  // namespace hiro
