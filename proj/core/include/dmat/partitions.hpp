// Copyright 2026 The Authors.
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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dmat/set_system.hpp"

namespace dmat {

/// Calls visit(blocks) once for every partition of {1..n} into nonempty
/// blocks, in restricted-growth-string order. Blocks are masks listed by
/// their smallest element. n = 0 yields the single empty partition.
template <typename Visit>
void for_each_set_partition(int n, Visit&& visit) {
  std::vector<int> rgs(n, 0);
  std::vector<int> prefix_max(n, 0);
  std::vector<Mask> blocks;
  while (true) {
    blocks.assign(n == 0 ? 0 : prefix_max[n - 1] + 1, 0);
    for (int i = 0; i < n; ++i) blocks[rgs[i]] |= Mask{1} << i;
    visit(std::span<const Mask>(blocks));
    // Advance the rightmost position that can still grow.
    int i = n - 1;
    while (i > 0 && rgs[i] > prefix_max[i - 1]) --i;
    if (i <= 0) return;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

/// Number of set partitions of an n-set.
std::uint64_t bell_number(int n);

}  // namespace dmat
