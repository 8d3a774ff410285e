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

#ifndef BNPG_PARALLEL_HPP
#define BNPG_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace bnpg {

/// Worker count for parallel enumeration: BNPG_THREADS when set (minimum 1),
/// otherwise the available hardware parallelism.
int configured_threads();

/// Runs fn(chunk_index, begin, end) over a static partition of [0, count)
/// using up to configured_threads() workers. Chunks are contiguous and
/// ordered, so callers can merge per-chunk results deterministically.
void for_chunks(std::uint64_t count,
                const std::function<void(int, std::uint64_t, std::uint64_t)>& fn);

}  // namespace bnpg

#endif  // BNPG_PARALLEL_HPP
