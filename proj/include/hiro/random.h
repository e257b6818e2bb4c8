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

#ifndef HIRO_RANDOM_H_
#define HIRO_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace hiro {

using Engine = std::mt19937_64;

// Mixes a base seed with a list of tags (trial index, replicate index,
// purpose code, ...) into a new 64-bit seed. Distinct tag lists give
// statistically independent streams; the mapping is a pure function.
std::uint64_t DeriveSeed(std::uint64_t base,
                         std::initializer_list<std::uint64_t> tags);

// Engine for replicate `stream` of the experiment keyed by `seed`.
// Replicates can be generated in any order or in parallel.
Engine SubstreamEngine(std::uint64_t seed, std::uint64_t stream);

// Uniform double in [0, 1).
inline double UniformUnit(Engine& engine) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(engine);
}

// Uniform integer in [0, bound).
inline std::int64_t UniformIndex(Engine& engine, std::int64_t bound) {
  return std::uniform_int_distribution<std::int64_t>(0, bound - 1)(engine);
}

// Purpose codes keep the streams of different pipeline stages apart.
namespace stream {
inline constexpr std::uint64_t kTopology = 1;
inline constexpr std::uint64_t kFeatures = 2;
inline constexpr std::uint64_t kCover = 3;
inline constexpr std::uint64_t kTrainPools = 4;
inline constexpr std::uint64_t kEvalPools = 5;
inline constexpr std::uint64_t kBaseline = 6;
inline constexpr std::uint64_t kValidationCover = 7;
inline constexpr std::uint64_t kTrial = 8;
inline constexpr std::uint64_t kDraw = 9;
}  // namespace stream

}  // namespace hiro

#endif  // HIRO_RANDOM_H_
