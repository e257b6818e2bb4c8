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

#ifndef HIRO_GRAPH_H_
#define HIRO_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace hiro {

using NodeId = std::int32_t;
using ArcId = std::int32_t;

// Directed graph with a d-dimensional feature vector on every arc. Built once
// through GraphBuilder and immutable afterwards, so a Graph can be shared
// freely between threads.
//
// Undirected edges are stored as two opposite arcs that point at the same
// feature row. When every arc has such a twin, the graph reports
// undirected() and arcs 2i and 2i+1 form the i-th edge.
class Graph {
 public:
  Graph() = default;

  int num_nodes() const { return num_nodes_; }
  int num_arcs() const { return static_cast<int>(src_.size()); }
  int feature_dim() const { return feature_dim_; }
  bool undirected() const { return undirected_; }

  NodeId src(ArcId arc) const { return src_[arc]; }
  NodeId dst(ArcId arc) const { return dst_[arc]; }
  std::span<const double> features(ArcId arc) const {
    return {features_.data() + static_cast<std::size_t>(feature_row_[arc]) *
                                   feature_dim_,
            static_cast<std::size_t>(feature_dim_)};
  }
  // Arcs leaving `node`, in increasing arc id order.
  std::span<const ArcId> out_arcs(NodeId node) const {
    return {out_arcs_.data() + out_offsets_[node],
            out_arcs_.data() + out_offsets_[node + 1]};
  }
  int out_degree(NodeId node) const {
    return out_offsets_[node + 1] - out_offsets_[node];
  }

 private:
  friend class GraphBuilder;

  int num_nodes_ = 0;
  int feature_dim_ = 0;
  bool undirected_ = false;
  std::vector<NodeId> src_;
  std::vector<NodeId> dst_;
  std::vector<std::int32_t> feature_row_;
  std::vector<double> features_;
  std::vector<std::int32_t> out_offsets_{0};
  std::vector<ArcId> out_arcs_;
};

// Accumulates arcs and validates them in Build(). Self-loops, repeated
// (src, dst) pairs, out-of-range node ids, wrong feature dimensions and
// feature values outside [-1, 1] are rejected with ParameterError.
class GraphBuilder {
 public:
  GraphBuilder(int num_nodes, int feature_dim);

  // One directed arc.
  GraphBuilder& AddArc(NodeId src, NodeId dst, std::span<const double> x);
  // Two opposite arcs sharing one feature vector.
  GraphBuilder& AddEdge(NodeId u, NodeId v, std::span<const double> x);

  Graph Build() &&;

 private:
  void Record(NodeId src, NodeId dst);

  Graph graph_;
  bool all_twins_ = true;
  std::unordered_set<std::uint64_t> seen_;
};

enum class GraphModel {
  kBarabasiAlbert,
  kWattsStrogatz,
  kErdosRenyi,
  kConfiguration
};
enum class FeatureDistribution { kUniformCube, kNormalClipped, kRademacher };

std::string ToString(GraphModel model);
GraphModel ParseGraphModel(const std::string& name);
std::string ToString(FeatureDistribution dist);
FeatureDistribution ParseFeatureDistribution(const std::string& name);

// Parameters of a synthetic graph. Parameters that default to a function of
// n are left empty and resolved by GenerateGraph.
struct GeneratorSpec {
  GraphModel model = GraphModel::kErdosRenyi;
  int n = 100;
  int feature_dim = 5;
  FeatureDistribution feature_dist = FeatureDistribution::kUniformCube;

  int attach = 4;                     // Barabasi-Albert edges per new node.
  int ring_degree = 5;                // Watts-Strogatz lattice degree.
  std::optional<double> rewire_prob;  // Watts-Strogatz, default 3/n.
  std::optional<double> edge_prob;    // Erdos-Renyi, default 3/n.
  double alpha = 2.0;                 // Configuration power-law exponent.
  int min_degree = 1;                 // Configuration minimum degree.
};

// Throws ParameterError when the spec is invalid for its model.
void ValidateSpec(const GeneratorSpec& spec);

// Generates an undirected graph (stored as twin arcs) with i.i.d. features.
// Deterministic in (spec, seed).
Graph GenerateGraph(const GeneratorSpec& spec, std::uint64_t seed);

// The undirected edge list of the Harary-style ring lattice: every node is
// joined to its ring_degree/2 nearest neighbours on each side and, for odd
// ring_degree, to the diametrically opposite node. Exposed for tests.
std::vector<std::pair<NodeId, NodeId>> RingLattice(int n, int ring_degree);

// Edge-list text format:
//   # n=<n> d=<d> [undirected=1]
//   src dst f_1 ... f_d
// Without undirected=1 each line is one arc; with it each line is an
// undirected edge that becomes two twin arcs.
Graph LoadGraph(const std::string& path);
void SaveGraph(const Graph& graph, const std::string& path);

}  // namespace hiro

#endif  // HIRO_GRAPH_H_
