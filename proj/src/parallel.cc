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

#include "hiro/parallel.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hiro {
namespace {

std::atomic<int> g_workers{0};
thread_local bool t_inside_parallel = false;

int DefaultWorkers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

void SetWorkerCount(int workers) { g_workers = workers < 1 ? 0 : workers; }

int WorkerCount() {
  const int w = g_workers.load();
  return w > 0 ? w : DefaultWorkers();
}

void ParallelFor(std::int64_t count,
                 const std::function<void(std::int64_t)>& body) {
  if (count <= 0) return;
  const std::int64_t workers =
      std::min<std::int64_t>(WorkerCount(), count);
  if (workers <= 1 || t_inside_parallel) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr first_error;
  std::mutex error_mu;
  auto run_block = [&](std::int64_t begin, std::int64_t end) {
    t_inside_parallel = true;
    try {
      for (std::int64_t i = begin; i < end; ++i) body(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!first_error) first_error = std::current_exception();
    }
    t_inside_parallel = false;
  };
  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  const std::int64_t block = (count + workers - 1) / workers;
  for (std::int64_t w = 1; w < workers; ++w) {
    const std::int64_t begin = w * block;
    const std::int64_t end = std::min(count, begin + block);
    if (begin >= end) break;
    threads.emplace_back(run_block, begin, end);
  }
  run_block(0, std::min(count, block));
  for (std::thread& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace hiro
