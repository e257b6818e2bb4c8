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

#include "hiro/reachability.h"

#include <algorithm>
#include <bit>

namespace hiro {

ReachClosure::ReachClosure(const Graph& graph,
                           std::span<const std::uint64_t> alive) {
  const int n = graph.num_nodes();
  words_ = (n + 63) / 64;
  comp_of_.assign(n, -1);
  auto is_alive = [&alive](ArcId e) {
    return (alive[e >> 6] >> (e & 63)) & 1u;
  };

  std::vector<std::int32_t> index(n, -1);
  std::vector<std::int32_t> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<NodeId> stack;
  struct Frame {
    NodeId node;
    std::int32_t next;  // position in out_arcs(node)
  };
  std::vector<Frame> calls;
  std::int32_t counter = 0;
  std::vector<NodeId> members;
  stack.reserve(n);
  calls.reserve(n);
  members.reserve(n);
  // One row per component; at most n of them.
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
  comp_size_.reserve(n);

  for (NodeId root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    calls.push_back({root, 0});
    while (!calls.empty()) {
      Frame& frame = calls.back();
      const NodeId v = frame.node;
      const auto arcs = graph.out_arcs(v);
      if (frame.next < static_cast<std::int32_t>(arcs.size())) {
        const ArcId e = arcs[frame.next++];
        if (!is_alive(e)) continue;
        const NodeId w = graph.dst(e);
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          calls.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      calls.pop_back();
      if (!calls.empty()) {
        const NodeId parent = calls.back().node;
        low[parent] = std::min(low[parent], low[v]);
      }
      if (low[v] != index[v]) continue;

      // v roots a component; every component it reaches is already closed.
      const std::int32_t comp = num_components_++;
      members.clear();
      NodeId w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp_of_[w] = comp;
        members.push_back(w);
      } while (w != v);
      std::uint64_t* out = bits_.data() + static_cast<std::size_t>(comp) * words_;
      for (NodeId u : members) {
        out[u >> 6] |= std::uint64_t{1} << (u & 63);
        for (ArcId e : graph.out_arcs(u)) {
          if (!is_alive(e)) continue;
          const std::int32_t c = comp_of_[graph.dst(e)];
          if (c == comp) continue;
          const std::uint64_t* in =
              bits_.data() + static_cast<std::size_t>(c) * words_;
          for (int i = 0; i < words_; ++i) out[i] |= in[i];
        }
      }
      int size = 0;
      for (int i = 0; i < words_; ++i) size += std::popcount(out[i]);
      comp_size_.push_back(size);
    }
  }
  bits_.resize(static_cast<std::size_t>(num_components_) * words_);
  if (2 * bits_.size() < bits_.capacity()) bits_.shrink_to_fit();
}

int ReachClosure::CountUnion(std::span<const NodeId> nodes,
                             std::vector<std::uint64_t>& scratch) const {
  if (nodes.size() == 1) return ReachCount(nodes[0]);
  scratch.assign(words_, 0);
  for (NodeId v : nodes) {
    const auto reach = Reach(v);
    for (int i = 0; i < words_; ++i) scratch[i] |= reach[i];
  }
  int count = 0;
  for (std::uint64_t w : scratch) count += std::popcount(w);
  return count;
}

std::size_t ReachClosure::MemoryBytes() const {
  return bits_.capacity() * sizeof(std::uint64_t) +
         (comp_of_.capacity() + comp_size_.capacity()) * sizeof(std::int32_t);
}

std::size_t ClosureWorstCaseBytes(int num_nodes) {
  const std::size_t words = (num_nodes + 63) / 64;
  return static_cast<std::size_t>(num_nodes) *
         (words * sizeof(std::uint64_t) + 2 * sizeof(std::int32_t));
}

}  // namespace hiro
