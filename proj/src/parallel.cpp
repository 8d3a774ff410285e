// Copyright 2026 The BNPG Toolkit Authors
//
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

#include "bnpg/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace bnpg {

int configured_threads() {
  if (const char* env = std::getenv("BNPG_THREADS")) {
    const int requested = std::atoi(env);
    if (requested >= 1) return requested;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void for_chunks(std::uint64_t count,
                const std::function<void(int, std::uint64_t, std::uint64_t)>& fn) {
  const int workers =
      static_cast<int>(std::min<std::uint64_t>(configured_threads(), std::max<std::uint64_t>(count, 1)));
  if (workers <= 1 || count < 2) {
    fn(0, 0, count);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (count + workers - 1) / workers;
  for (int i = 0; i < workers; ++i) {
    const std::uint64_t begin = chunk * static_cast<std::uint64_t>(i);
    const std::uint64_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, i, begin, end] { fn(i, begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace bnpg
