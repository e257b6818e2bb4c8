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

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hiro/errors.h"
#include "hiro/graph.h"
#include "hiro/random.h"

namespace hiro {
namespace {

using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

// Undirected adjacency used while generating; keeps edges unique.
class EdgeSet {
 public:
  explicit EdgeSet(int n) : adj_(n) {}
  bool Contains(NodeId a, NodeId b) const { return adj_[a].count(b) > 0; }
  bool Insert(NodeId a, NodeId b) {
    if (a == b || Contains(a, b)) return false;
    adj_[a].insert(b);
    adj_[b].insert(a);
    return true;
  }
  void Erase(NodeId a, NodeId b) {
    adj_[a].erase(b);
    adj_[b].erase(a);
  }
  int Degree(NodeId a) const { return static_cast<int>(adj_[a].size()); }

 private:
  std::vector<std::set<NodeId>> adj_;
};

double DefaultOverN(const std::optional<double>& value, int n) {
  return value.has_value() ? *value : 3.0 / n;
}

EdgeList ErdosRenyi(const GeneratorSpec& spec, Engine& rng) {
  const double p = DefaultOverN(spec.edge_prob, spec.n);
  EdgeList edges;
  for (NodeId i = 0; i < spec.n; ++i) {
    for (NodeId j = i + 1; j < spec.n; ++j) {
      if (UniformUnit(rng) < p) edges.emplace_back(i, j);
    }
  }
  return edges;
}

// Seeds with a clique on attach+1 nodes; every later node links to `attach`
// distinct earlier nodes chosen proportionally to degree.
EdgeList BarabasiAlbert(const GeneratorSpec& spec, Engine& rng) {
  const int core = spec.attach + 1;
  EdgeList edges;
  std::vector<NodeId> endpoints;  // node repeated once per incident edge
  for (NodeId i = 0; i < core; ++i) {
    for (NodeId j = i + 1; j < core; ++j) {
      edges.emplace_back(i, j);
      endpoints.push_back(i);
      endpoints.push_back(j);
    }
  }
  std::vector<NodeId> targets;
  for (NodeId t = core; t < spec.n; ++t) {
    targets.clear();
    while (static_cast<int>(targets.size()) < spec.attach) {
      const NodeId pick = endpoints[UniformIndex(
          rng, static_cast<std::int64_t>(endpoints.size()))];
      if (std::find(targets.begin(), targets.end(), pick) == targets.end()) {
        targets.push_back(pick);
      }
    }
    for (NodeId target : targets) {
      edges.emplace_back(target, t);
      endpoints.push_back(target);
      endpoints.push_back(t);
    }
  }
  return edges;
}

EdgeList WattsStrogatz(const GeneratorSpec& spec, Engine& rng) {
  const double beta = DefaultOverN(spec.rewire_prob, spec.n);
  EdgeList edges = RingLattice(spec.n, spec.ring_degree);
  EdgeSet present(spec.n);
  for (const auto& [a, b] : edges) present.Insert(a, b);
  for (auto& edge : edges) {
    if (!(UniformUnit(rng) < beta)) continue;
    const NodeId u = edge.first;
    if (present.Degree(u) >= spec.n - 1) continue;
    NodeId w;
    do {
      w = static_cast<NodeId>(UniformIndex(rng, spec.n));
    } while (w == u || present.Contains(u, w));
    present.Erase(u, edge.second);
    present.Insert(u, w);
    edge.second = w;
  }
  return edges;
}

// Degrees follow P(k) ~ k^-alpha on [min_degree, n-1]; stubs are paired at
// random and colliding pairs (self-loops, repeats) are re-drawn a bounded
// number of times before being dropped.
EdgeList Configuration(const GeneratorSpec& spec, Engine& rng) {
  const int n = spec.n;
  const int k_min = spec.min_degree;
  const int k_max = n - 1;
  std::vector<double> weights;
  for (int k = k_min; k <= k_max; ++k) {
    weights.push_back(std::pow(static_cast<double>(k), -spec.alpha));
  }
  std::discrete_distribution<int> degree_dist(weights.begin(), weights.end());
  std::vector<int> degree(n);
  long long total = 0;
  for (int i = 0; i < n; ++i) {
    degree[i] = k_min + degree_dist(rng);
    total += degree[i];
  }
  if (total % 2 != 0) {
    const NodeId i = static_cast<NodeId>(UniformIndex(rng, n));
    degree[i] += degree[i] < k_max ? 1 : -1;
  }
  std::vector<NodeId> stubs;
  for (NodeId i = 0; i < n; ++i) stubs.insert(stubs.end(), degree[i], i);
  std::shuffle(stubs.begin(), stubs.end(), rng);

  constexpr int kMaxRedraws = 100;
  EdgeList edges;
  EdgeSet present(n);
  const std::size_t num_stubs = stubs.size();
  for (std::size_t s = 0; s + 1 < num_stubs; s += 2) {
    bool placed = present.Insert(stubs[s], stubs[s + 1]);
    for (int attempt = 0; !placed && attempt < kMaxRedraws; ++attempt) {
      if (s + 2 >= num_stubs) break;
      const std::size_t swap_with =
          s + 2 + UniformIndex(rng, static_cast<std::int64_t>(num_stubs - s - 2));
      std::swap(stubs[s + 1], stubs[swap_with]);
      placed = present.Insert(stubs[s], stubs[s + 1]);
    }
    if (placed) edges.emplace_back(stubs[s], stubs[s + 1]);
  }
  return edges;
}

void DrawFeatures(FeatureDistribution dist, Engine& rng,
                  std::vector<double>& out) {
  for (double& x : out) {
    switch (dist) {
      case FeatureDistribution::kUniformCube:
        x = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
        break;
      case FeatureDistribution::kNormalClipped:
        x = std::clamp(std::normal_distribution<double>(0.0, 0.5)(rng), -1.0,
                       1.0);
        break;
      case FeatureDistribution::kRademacher:
        x = std::bernoulli_distribution(0.5)(rng) ? 1.0 : -1.0;
        break;
    }
  }
}

}  // namespace

std::vector<std::pair<NodeId, NodeId>> RingLattice(int n, int ring_degree) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  const int half = ring_degree / 2;
  for (int offset = 1; offset <= half; ++offset) {
    for (NodeId i = 0; i < n; ++i) {
      edges.emplace_back(i, static_cast<NodeId>((i + offset) % n));
    }
  }
  if (ring_degree % 2 == 1) {
    if (n % 2 == 0) {
      for (NodeId i = 0; i < n / 2; ++i) edges.emplace_back(i, i + n / 2);
    } else {
      for (NodeId i = 0; i <= (n - 1) / 2; ++i) {
        edges.emplace_back(i, static_cast<NodeId>((i + (n + 1) / 2) % n));
      }
    }
  }
  return edges;
}

void ValidateSpec(const GeneratorSpec& spec) {
  const int n = spec.n;
  if (n < 2) throw ParameterError("generator needs n >= 2");
  if (spec.feature_dim < 0) throw ParameterError("feature_dim must be >= 0");
  auto check_prob = [](const std::optional<double>& p, const char* name) {
    if (p.has_value() && !(*p >= 0.0 && *p <= 1.0)) {
      throw ParameterError(std::string(name) + " must lie in [0,1]");
    }
  };
  switch (spec.model) {
    case GraphModel::kErdosRenyi:
      check_prob(spec.edge_prob, "edge_prob");
      if (!spec.edge_prob && 3.0 / n > 1.0) {
        throw ParameterError("default edge_prob 3/n exceeds 1; set edge_prob");
      }
      break;
    case GraphModel::kBarabasiAlbert:
      if (spec.attach < 1) throw ParameterError("attach must be >= 1");
      if (spec.attach + 1 > n) {
        throw ParameterError("Barabasi-Albert needs n >= attach+1 (attach=" +
                             std::to_string(spec.attach) + ", n=" +
                             std::to_string(n) + ")");
      }
      break;
    case GraphModel::kWattsStrogatz:
      check_prob(spec.rewire_prob, "rewire_prob");
      if (spec.ring_degree < 1) throw ParameterError("ring_degree must be >= 1");
      if (spec.ring_degree >= n) {
        throw ParameterError("Watts-Strogatz ring_degree " +
                             std::to_string(spec.ring_degree) +
                             " must be < n = " + std::to_string(n));
      }
      if (!spec.rewire_prob && 3.0 / n > 1.0) {
        throw ParameterError("default rewire_prob 3/n exceeds 1; set it");
      }
      break;
    case GraphModel::kConfiguration:
      if (!(spec.alpha > 0.0)) throw ParameterError("alpha must be > 0");
      if (spec.min_degree < 1 || spec.min_degree > n - 1) {
        throw ParameterError("min_degree must lie in [1, n-1]");
      }
      break;
  }
}

Graph GenerateGraph(const GeneratorSpec& spec, std::uint64_t seed) {
  ValidateSpec(spec);
  Engine topology_rng = SubstreamEngine(seed, stream::kTopology);
  EdgeList edges;
  switch (spec.model) {
    case GraphModel::kErdosRenyi:
      edges = ErdosRenyi(spec, topology_rng);
      break;
    case GraphModel::kBarabasiAlbert:
      edges = BarabasiAlbert(spec, topology_rng);
      break;
    case GraphModel::kWattsStrogatz:
      edges = WattsStrogatz(spec, topology_rng);
      break;
    case GraphModel::kConfiguration:
      edges = Configuration(spec, topology_rng);
      break;
  }
  Engine feature_rng = SubstreamEngine(seed, stream::kFeatures);
  GraphBuilder builder(spec.n, spec.feature_dim);
  std::vector<double> x(spec.feature_dim);
  for (const auto& [a, b] : edges) {
    DrawFeatures(spec.feature_dist, feature_rng, x);
    builder.AddEdge(a, b, x);
  }
  return std::move(builder).Build();
}

}  // namespace hiro
