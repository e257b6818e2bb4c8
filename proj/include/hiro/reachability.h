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

#ifndef HIRO_REACHABILITY_H_
#define HIRO_REACHABILITY_H_

#include <cstdint>
#include <span>
#include <vector>

#include "hiro/graph.h"

namespace hiro {

// Transitive closure of one live-edge subgraph, stored per strongly
// connected component: Reach(v) is the bitset (over nodes) of everything
// reachable from v, v included. Built with Tarjan's algorithm, whose
// sink-first component order lets each closure be the union of its
// successors' closures.
class ReachClosure {
 public:
  ReachClosure() = default;
  // `alive` is a bitmask over arc ids.
  ReachClosure(const Graph& graph, std::span<const std::uint64_t> alive);

  int words() const { return words_; }
  int num_components() const { return num_components_; }
  std::span<const std::uint64_t> Reach(NodeId v) const {
    return {bits_.data() + static_cast<std::size_t>(comp_of_[v]) * words_,
            static_cast<std::size_t>(words_)};
  }
  int ReachCount(NodeId v) const { return comp_size_[comp_of_[v]]; }
  // |union of Reach(v) for v in nodes|; `scratch` is resized as needed.
  int CountUnion(std::span<const NodeId> nodes,
                 std::vector<std::uint64_t>& scratch) const;
  std::size_t MemoryBytes() const;

 private:
  int words_ = 0;
  int num_components_ = 0;
  std::vector<std::int32_t> comp_of_;
  std::vector<std::int32_t> comp_size_;  // closure size, not SCC size
  std::vector<std::uint64_t> bits_;
};

// Bytes a closure over n nodes can occupy in the worst case.
std::size_t ClosureWorstCaseBytes(int num_nodes);

inline int PopcountAndNot(std::span<const std::uint64_t> a,
                          std::span<const std::uint64_t> covered) {
  int count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    count += __builtin_popcountll(a[i] & ~covered[i]);
  }
  return count;
}

}  // namespace hiro

#endif  // HIRO_REACHABILITY_H_
