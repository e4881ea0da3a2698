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
#include <string>
#include <string_view>
#include <vector>

namespace dmat::cli {

enum class Verdict { Pass, Fail, Info };

struct ReproRow {
  std::string label;
  std::string computed;
  std::string expected;
  Verdict verdict;
};

struct ReproTable {
  std::string target;
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<ReproRow> rows;

  bool passed() const;
};

struct ReproOptions {
  int n = 0;          // 0 picks the target's default
  int samples = -1;   // random instances per size; -1 picks the target's default
  std::uint64_t seed = 1;
};

const std::vector<std::string>& reproduce_targets();

/// Throws PreconditionError for an unknown target, RangeError for a bad size.
ReproTable reproduce(std::string_view target, const ReproOptions& options);

}  // namespace dmat::cli
