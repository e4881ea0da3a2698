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

#include "dmat/canonical.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "dmat/errors.hpp"

namespace dmat {
namespace {

void check_bound(const SetSystem& s) {
  if (s.size() > kCanonicalBound) {
    throw CapacityError("canonical form needs n <= " + std::to_string(kCanonicalBound) +
                        ", got " + std::to_string(s.size()));
  }
}

// Membership bitset over all 2^8 masks.
using PrefixBits = std::array<std::uint64_t, 4>;

// Sorted sequences of equal length compare like these bitsets under the
// rule "the lowest differing mask wins for the side that contains it".
int compare_prefix(const PrefixBits& a, const PrefixBits& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    const std::uint64_t diff = a[w] ^ b[w];
    if (diff != 0) return (a[w] & diff & (~diff + 1)) != 0 ? -1 : 1;
  }
  return 0;
}

struct Labeling {
  std::vector<Mask> family;  // sorted, under the current labels
  std::vector<int> label_of;  // original element (0-based) -> current label (0-based)
};

// Moves label j down to position k and shifts labels k..j-1 up by one.
Mask rotate(Mask m, int k, int j) {
  const Mask low = (Mask{1} << k) - 1;
  const Mask upto_j = (Mask{2} << j) - 1;
  const Mask mid = upto_j & ~low & ~(Mask{1} << j);
  return (m & low) | (m & ~upto_j) | (((m >> j) & 1) << k) | ((m & mid) << 1);
}

}  // namespace

Canonical canonicalize(const SetSystem& s) {
  check_bound(s);
  const int n = s.size();
  std::vector<Labeling> survivors;
  {
    Labeling start{{s.feasible().begin(), s.feasible().end()}, std::vector<int>(n)};
    std::iota(start.label_of.begin(), start.label_of.end(), 0);
    survivors.push_back(std::move(start));
  }
  for (int k = 0; k + 1 < n; ++k) {
    const Mask limit = Mask{2} << k;
    std::vector<Labeling> next;
    std::set<std::vector<Mask>> seen;
    PrefixBits best{};
    bool have_best = false;
    for (const Labeling& state : survivors) {
      for (int j = k; j < n; ++j) {
        std::vector<Mask> family;
        family.reserve(state.family.size());
        PrefixBits bits{};
        for (Mask m : state.family) {
          const Mask r = rotate(m, k, j);
          family.push_back(r);
          if (r < limit) bits[r >> 6] |= std::uint64_t{1} << (r & 63);
        }
        const int cmp = have_best ? compare_prefix(bits, best) : -1;
        if (cmp > 0) continue;
        if (cmp < 0) {
          best = bits;
          have_best = true;
          next.clear();
          seen.clear();
        }
        std::sort(family.begin(), family.end());
        if (!seen.insert(family).second) continue;
        Labeling child{std::move(family), state.label_of};
        for (int& label : child.label_of) {
          if (label == j) {
            label = k;
          } else if (label >= k && label < j) {
            ++label;
          }
        }
        next.push_back(std::move(child));
      }
    }
    survivors = std::move(next);
  }
  // Survivors agree below the top label only; compare them in full.
  Labeling& winner = *std::min_element(survivors.begin(), survivors.end(),
                                       [](const Labeling& a, const Labeling& b) { return a.family < b.family; });
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = winner.label_of[i] + 1;
  return {SetSystem(n, std::move(winner.family)), std::move(perm)};
}

Canonical canonicalize_brute_force(const SetSystem& s) {
  check_bound(s);
  const int n = s.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::optional<Canonical> best;
  do {
    SetSystem candidate = relabel(s, perm);
    if (!best || std::lexicographical_compare(candidate.feasible().begin(), candidate.feasible().end(),
                                              best->form.feasible().begin(),
                                              best->form.feasible().end())) {
      best = Canonical{std::move(candidate), perm};
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::move(*best);
}

namespace {

struct SetSystemHash {
  std::size_t operator()(const SetSystem& s) const {
    std::size_t h = static_cast<std::size_t>(s.size()) * 0x9e3779b97f4a7c15ULL;
    for (Mask m : s.feasible()) h = (h ^ m) * 0x100000001b3ULL;
    return h;
  }
};

class CanonicalCache {
 public:
  SetSystem get(const SetSystem& s) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(s); it != table_.end()) return it->second;
    }
    SetSystem form = canonicalize(s).form;
    std::unique_lock lock(mutex_);
    return table_.try_emplace(s, std::move(form)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<SetSystem, SetSystem, SetSystemHash> table_;
};

CanonicalCache& cache() {
  static CanonicalCache instance;
  return instance;
}

}  // namespace

SetSystem canonical_form(const SetSystem& s) { return cache().get(s); }

DeltaMatroid canonical_form(const DeltaMatroid& d) {
  return DeltaMatroid::trusted(canonical_form(static_cast<const SetSystem&>(d)));
}

}  // namespace dmat
