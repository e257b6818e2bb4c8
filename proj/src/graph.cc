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

#include "hiro/graph.h"

#include <algorithm>
#include <string>

#include "hiro/errors.h"

namespace hiro {
namespace {

std::uint64_t PairKey(NodeId a, NodeId b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

}  // namespace

GraphBuilder::GraphBuilder(int num_nodes, int feature_dim) {
  if (num_nodes < 1) throw ParameterError("graph needs at least one node");
  if (feature_dim < 0) throw ParameterError("negative feature dimension");
  graph_.num_nodes_ = num_nodes;
  graph_.feature_dim_ = feature_dim;
}

GraphBuilder& GraphBuilder::AddArc(NodeId src, NodeId dst,
                                   std::span<const double> x) {
  const int n = graph_.num_nodes_;
  if (src < 0 || src >= n || dst < 0 || dst >= n) {
    throw ParameterError("arc (" + std::to_string(src) + "," +
                         std::to_string(dst) + ") has a node index outside [0," +
                         std::to_string(n) + ")");
  }
  if (src == dst) {
    throw ParameterError("self-loop at node " + std::to_string(src));
  }
  if (static_cast<int>(x.size()) != graph_.feature_dim_) {
    throw ParameterError("arc feature dimension " + std::to_string(x.size()) +
                         " != " + std::to_string(graph_.feature_dim_));
  }
  for (double v : x) {
    if (!(v >= -1.0 && v <= 1.0)) {
      throw ParameterError("arc feature " + std::to_string(v) +
                           " outside [-1,1]");
    }
  }
  Record(src, dst);
  graph_.src_.push_back(src);
  graph_.dst_.push_back(dst);
  graph_.feature_row_.push_back(
      static_cast<std::int32_t>(graph_.feature_row_.empty()
                                    ? 0
                                    : graph_.feature_row_.back() + 1));
  graph_.features_.insert(graph_.features_.end(), x.begin(), x.end());
  all_twins_ = false;
  return *this;
}

GraphBuilder& GraphBuilder::AddEdge(NodeId u, NodeId v,
                                    std::span<const double> x) {
  const bool twins_so_far = all_twins_;
  AddArc(u, v, x);
  Record(v, u);
  graph_.src_.push_back(v);
  graph_.dst_.push_back(u);
  graph_.feature_row_.push_back(graph_.feature_row_.back());
  all_twins_ = twins_so_far;
  return *this;
}

void GraphBuilder::Record(NodeId src, NodeId dst) {
  if (!seen_.insert(PairKey(src, dst)).second) {
    throw ParameterError("duplicate arc (" + std::to_string(src) + "," +
                         std::to_string(dst) + ")");
  }
}

Graph GraphBuilder::Build() && {
  Graph& g = graph_;
  const int m = g.num_arcs();
  g.out_offsets_.assign(g.num_nodes_ + 1, 0);
  for (ArcId e = 0; e < m; ++e) ++g.out_offsets_[g.src_[e] + 1];
  for (int v = 0; v < g.num_nodes_; ++v) {
    g.out_offsets_[v + 1] += g.out_offsets_[v];
  }
  g.out_arcs_.assign(m, 0);
  std::vector<std::int32_t> fill(g.out_offsets_.begin(),
                                 g.out_offsets_.end() - 1);
  for (ArcId e = 0; e < m; ++e) g.out_arcs_[fill[g.src_[e]]++] = e;
  g.undirected_ = all_twins_;
  return std::move(graph_);
}

std::string ToString(GraphModel model) {
  switch (model) {
    case GraphModel::kBarabasiAlbert:
      return "barabasi_albert";
    case GraphModel::kWattsStrogatz:
      return "watts_strogatz";
    case GraphModel::kErdosRenyi:
      return "erdos_renyi";
    case GraphModel::kConfiguration:
      return "configuration";
  }
  return "unknown";
}

GraphModel ParseGraphModel(const std::string& name) {
  for (GraphModel m :
       {GraphModel::kBarabasiAlbert, GraphModel::kWattsStrogatz,
        GraphModel::kErdosRenyi, GraphModel::kConfiguration}) {
    if (ToString(m) == name) return m;
  }
  if (name == "ba") return GraphModel::kBarabasiAlbert;
  if (name == "ws") return GraphModel::kWattsStrogatz;
  if (name == "er") return GraphModel::kErdosRenyi;
  if (name == "cm") return GraphModel::kConfiguration;
  throw ParameterError("unknown graph model '" + name + "'");
}

std::string ToString(FeatureDistribution dist) {
  switch (dist) {
    case FeatureDistribution::kUniformCube:
      return "uniform_cube";
    case FeatureDistribution::kNormalClipped:
      return "normal_clipped";
    case FeatureDistribution::kRademacher:
      return "rademacher";
  }
  return "unknown";
}

FeatureDistribution ParseFeatureDistribution(const std::string& name) {
  for (FeatureDistribution d :
       {FeatureDistribution::kUniformCube, FeatureDistribution::kNormalClipped,
        FeatureDistribution::kRademacher}) {
    if (ToString(d) == name) return d;
  }
  throw ParameterError("unknown feature distribution '" + name + "'");
}

}  // namespace hiro
