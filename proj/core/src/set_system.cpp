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

#include "dmat/set_system.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "dmat/errors.hpp"

namespace dmat {
namespace {

void check_element(const SetSystem& s, int e) {
  if (e < 1 || e > s.size()) {
    throw RangeError("element " + std::to_string(e) + " outside ground set of size " +
                     std::to_string(s.size()));
  }
}

void check_subset(const SetSystem& s, Mask x) {
  if ((x & ~s.ground()) != 0) {
    throw RangeError("subset mask " + std::to_string(x) + " outside ground set of size " +
                     std::to_string(s.size()));
  }
}

// Removes bit (e-1) and shifts the higher bits down by one.
Mask drop_element(Mask m, int e) {
  const Mask low = element_bit(e) - 1;
  return (m & low) | ((m >> 1) & ~low);
}

std::vector<std::uint64_t> membership_bits(const SetSystem& s) {
  std::vector<std::uint64_t> bits(((std::size_t{1} << s.size()) + 63) / 64, 0);
  for (Mask f : s.feasible()) bits[f >> 6] |= std::uint64_t{1} << (f & 63);
  return bits;
}

bool test_bit(const std::vector<std::uint64_t>& bits, Mask m) {
  return (bits[m >> 6] >> (m & 63)) & 1;
}

}  // namespace

Mask mask_of(std::initializer_list<int> elements) {
  Mask m = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxGroundSet) throw RangeError("element " + std::to_string(e) + " out of range");
    m |= element_bit(e);
  }
  return m;
}

SetSystem::SetSystem(int n, std::vector<Mask> feasible) : n_(n), feasible_(std::move(feasible)) {
  if (n_ < 0 || n_ > kMaxGroundSet) {
    throw CapacityError("ground set size " + std::to_string(n_) + " not in 0.." +
                        std::to_string(kMaxGroundSet));
  }
  if (feasible_.empty()) throw ImproperSetSystemError("set system has no feasible sets");
  std::sort(feasible_.begin(), feasible_.end());
  feasible_.erase(std::unique(feasible_.begin(), feasible_.end()), feasible_.end());
  if (feasible_.back() > full_mask(n_)) {
    throw RangeError("feasible mask " + std::to_string(feasible_.back()) +
                     " outside ground set of size " + std::to_string(n_));
  }
}

SetSystem SetSystem::unit() { return SetSystem(0, {0}, Normalized{}); }

bool SetSystem::contains(Mask x) const {
  return std::binary_search(feasible_.begin(), feasible_.end(), x);
}

std::strong_ordering operator<=>(const SetSystem& a, const SetSystem& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.feasible_.begin(), a.feasible_.end(),
                                                b.feasible_.begin(), b.feasible_.end());
}

ValidationResult validate(const SetSystem& s) {
  const auto family = s.feasible();
  const auto member = membership_bits(s);
  const int n = s.size();
  // reach[x-1] collects the y for which {x,y} ^ X is feasible.
  std::vector<Mask> reach(n);
  for (Mask x_set : family) {
    for (int x = 1; x <= n; ++x) {
      Mask r = 0;
      const Mask moved = x_set ^ element_bit(x);
      for (int y = 1; y <= n; ++y) {
        const Mask target = y == x ? moved : moved ^ element_bit(y);
        if (test_bit(member, target)) r |= element_bit(y);
      }
      reach[x - 1] = r;
    }
    for (Mask y_set : family) {
      const Mask diff = x_set ^ y_set;
      for (Mask rest = diff; rest != 0; rest &= rest - 1) {
        const int x = std::countr_zero(rest) + 1;
        if ((reach[x - 1] & diff) == 0) return {ExchangeViolation{x_set, y_set, x}};
      }
    }
  }
  return {};
}

DeltaMatroid::DeltaMatroid(SetSystem s) : SetSystem(std::move(s)) {
  if (auto result = validate(*this); !result.valid()) {
    const auto& v = *result.counterexample;
    throw NotDeltaMatroidError("symmetric exchange fails for X=" + std::to_string(v.x_set) +
                               " Y=" + std::to_string(v.y_set) +
                               " x=" + std::to_string(v.element));
  }
}

DeltaMatroid DeltaMatroid::unit() { return trusted(SetSystem::unit()); }

SetSystem twist(const SetSystem& s, Mask x) {
  check_subset(s, x);
  std::vector<Mask> out;
  out.reserve(s.family_size());
  for (Mask f : s.feasible()) out.push_back(f ^ x);
  return SetSystem(s.size(), std::move(out));
}

DeltaMatroid twist(const DeltaMatroid& d, Mask x) {
  return DeltaMatroid::trusted(twist(static_cast<const SetSystem&>(d), x));
}

ElementClass classify(const SetSystem& s, int e) {
  check_element(s, e);
  const Mask bit = element_bit(e);
  bool in_some = false;
  bool in_all = true;
  for (Mask f : s.feasible()) {
    if (f & bit) {
      in_some = true;
    } else {
      in_all = false;
    }
  }
  if (!in_some) return ElementClass::Loop;
  if (in_all) return ElementClass::Coloop;
  return ElementClass::Ordinary;
}

SetSystem reduce(const SetSystem& s, int e, Reduction mode) {
  if (s.size() == 0) throw RangeError("cannot reduce a set system on the empty ground set");
  const ElementClass cls = classify(s, e);
  if (cls == ElementClass::Loop) mode = Reduction::Delete;
  if (cls == ElementClass::Coloop) mode = Reduction::Contract;
  const Mask bit = element_bit(e);
  const bool keep_with_e = mode == Reduction::Contract;
  std::vector<Mask> out;
  for (Mask f : s.feasible()) {
    if (((f & bit) != 0) == keep_with_e) out.push_back(drop_element(f, e));
  }
  return SetSystem(s.size() - 1, std::move(out));
}

DeltaMatroid reduce(const DeltaMatroid& d, int e, Reduction mode) {
  return DeltaMatroid::trusted(reduce(static_cast<const SetSystem&>(d), e, mode));
}

SetSystem restriction(const SetSystem& s, Mask keep) {
  check_subset(s, keep);
  SetSystem out = s;
  // Highest label first, so the labels still to be removed stay valid.
  for (int e = s.size(); e >= 1; --e) {
    if (!has_element(keep, e)) out = reduce(out, e, Reduction::Delete);
  }
  return out;
}

DeltaMatroid restriction(const DeltaMatroid& d, Mask keep) {
  return DeltaMatroid::trusted(restriction(static_cast<const SetSystem&>(d), keep));
}

SetSystem product(const SetSystem& a, const SetSystem& b) {
  const int n = a.size() + b.size();
  if (n > kMaxGroundSet) {
    throw CapacityError("product ground set " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxGroundSet));
  }
  std::vector<Mask> out;
  out.reserve(a.family_size() * b.family_size());
  for (Mask fb : b.feasible()) {
    for (Mask fa : a.feasible()) out.push_back(fa | (fb << a.size()));
  }
  return SetSystem(n, std::move(out));
}

DeltaMatroid product(const DeltaMatroid& a, const DeltaMatroid& b) {
  return DeltaMatroid::trusted(
      product(static_cast<const SetSystem&>(a), static_cast<const SetSystem&>(b)));
}

int distance(const SetSystem& s, Mask x) {
  check_subset(s, x);
  int best = s.size();
  for (Mask f : s.feasible()) best = std::min(best, std::popcount(f ^ x));
  return best;
}

std::vector<std::uint8_t> distance_table(const SetSystem& s) {
  const std::size_t count = std::size_t{1} << s.size();
  constexpr std::uint8_t kUnseen = 0xff;
  std::vector<std::uint8_t> dist(count, kUnseen);
  std::vector<Mask> frontier(s.feasible().begin(), s.feasible().end());
  for (Mask f : frontier) dist[f] = 0;
  std::vector<Mask> next;
  for (std::uint8_t level = 1; !frontier.empty(); ++level) {
    next.clear();
    for (Mask m : frontier) {
      for (int i = 0; i < s.size(); ++i) {
        const Mask nb = m ^ (Mask{1} << i);
        if (dist[nb] == kUnseen) {
          dist[nb] = level;
          next.push_back(nb);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

SetSystem relabel(const SetSystem& s, std::span<const int> perm) {
  const int n = s.size();
  if (static_cast<int>(perm.size()) != n) throw PreconditionError("permutation has wrong length");
  Mask seen = 0;
  for (int p : perm) {
    if (p < 1 || p > n || has_element(seen, p)) throw PreconditionError("not a permutation");
    seen |= element_bit(p);
  }
  std::vector<Mask> out;
  out.reserve(s.family_size());
  for (Mask f : s.feasible()) {
    Mask g = 0;
    for (Mask rest = f; rest != 0; rest &= rest - 1) g |= element_bit(perm[std::countr_zero(rest)]);
    out.push_back(g);
  }
  return SetSystem(n, std::move(out));
}

}  // namespace dmat
