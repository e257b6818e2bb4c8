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

#ifndef HIRO_PARALLEL_H_
#define HIRO_PARALLEL_H_

#include <cstdint>
#include <functional>

namespace hiro {

// Number of worker threads used by ParallelFor. Defaults to the hardware
// concurrency. Values < 1 reset to the default.
void SetWorkerCount(int workers);
int WorkerCount();

// Runs body(i) for every i in [0, count). Work is split into contiguous
// index blocks; callers must make each body(i) write only to slot i, which
// keeps results independent of the worker count. Calls nested inside a
// running ParallelFor execute serially on the calling thread. The first
// exception thrown by any body is rethrown after all workers join.
void ParallelFor(std::int64_t count,
                 const std::function<void(std::int64_t)>& body);

}  // namespace hiro

#endif  // HIRO_PARALLEL_H_
