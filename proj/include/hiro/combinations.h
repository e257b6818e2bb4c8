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

#ifndef HIRO_COMBINATIONS_H_
#define HIRO_COMBINATIONS_H_

#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "hiro/graph.h"

namespace hiro {

// C(n, k), saturating at `cap` + 1 so callers can compare against a limit
// without overflow.
inline std::uint64_t BinomialCapped(std::uint64_t n, std::uint64_t k,
                                    std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(result);
}

// Calls visit(nodes) for every size-k subset of {0..n-1} in lexicographic
// order.
template <typename Visit>
void ForEachCombination(int n, int k, Visit visit) {
  if (k < 0 || k > n) return;
  std::vector<NodeId> combo(k);
  std::iota(combo.begin(), combo.end(), 0);
  while (true) {
    visit(std::span<const NodeId>(combo));
    int i = k - 1;
    while (i >= 0 && combo[i] == n - k + i) --i;
    if (i < 0) return;
    ++combo[i];
    for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
}

}  // namespace hiro

#endif  // HIRO_COMBINATIONS_H_
