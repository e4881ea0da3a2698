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

#include "dmat/gf2.hpp"

#include <bit>
#include <string>

#include "dmat/errors.hpp"

namespace dmat {
namespace {

void check_capacity(int n) {
  if (n < 0 || n > kMaxGroundSet) {
    throw CapacityError("matrix size " + std::to_string(n) + " not in 0.." +
                        std::to_string(kMaxGroundSet));
  }
}

// Packs the bits of `m` selected by `select` into the low bits, in order.
Mask compress(Mask m, Mask select) {
  Mask out = 0;
  int pos = 0;
  for (Mask rest = select; rest != 0; rest &= rest - 1, ++pos) {
    if (m & rest & (~rest + 1)) out |= Mask{1} << pos;
  }
  return out;
}

}  // namespace

Gf2SymMatrix::Gf2SymMatrix(int n) {
  check_capacity(n);
  rows_.assign(n, 0);
}

Gf2SymMatrix Gf2SymMatrix::from_rows(std::vector<Mask> rows) {
  const int n = static_cast<int>(rows.size());
  check_capacity(n);
  for (int i = 0; i < n; ++i) {
    if ((rows[i] & ~full_mask(n)) != 0) throw RangeError("row " + std::to_string(i + 1) + " too wide");
    for (int j = 0; j < n; ++j) {
      if (((rows[i] >> j) & 1) != ((rows[j] >> i) & 1)) {
        throw PreconditionError("matrix not symmetric at (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ")");
      }
    }
  }
  Gf2SymMatrix out;
  out.rows_ = std::move(rows);
  return out;
}

Gf2SymMatrix Gf2SymMatrix::all_ones(int n) {
  Gf2SymMatrix out(n);
  for (Mask& r : out.rows_) r = full_mask(n);
  return out;
}

void Gf2SymMatrix::set(int i, int j, bool value) {
  const int n = size();
  if (i < 1 || i > n || j < 1 || j > n) throw RangeError("matrix index out of range");
  if (value) {
    rows_[i - 1] |= element_bit(j);
    rows_[j - 1] |= element_bit(i);
  } else {
    rows_[i - 1] &= ~element_bit(j);
    rows_[j - 1] &= ~element_bit(i);
  }
}

Gf2SymMatrix Gf2SymMatrix::principal(Mask x) const {
  if ((x & ~full_mask(size())) != 0) throw RangeError("principal index set out of range");
  std::vector<Mask> rows;
  for (Mask rest = x; rest != 0; rest &= rest - 1) {
    rows.push_back(compress(rows_[std::countr_zero(rest)], x));
  }
  Gf2SymMatrix out;
  out.rows_ = std::move(rows);
  return out;
}

int gf2_rank(std::vector<Mask> rows) {
  int rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Mask pivot_row = rows[i];
    if (pivot_row == 0) continue;
    ++rank;
    const Mask pivot = pivot_row & (~pivot_row + 1);
    for (std::size_t r = i + 1; r < rows.size(); ++r) {
      if (rows[r] & pivot) rows[r] ^= pivot_row;
    }
  }
  return rank;
}

bool gf2_nondegenerate(const Gf2SymMatrix& a) {
  return gf2_rank({a.rows().begin(), a.rows().end()}) == a.size();
}

bool principal_nondegenerate(const Gf2SymMatrix& a, Mask x) {
  return gf2_nondegenerate(a.principal(x));
}

DeltaMatroid matrix_delta_matroid(const Gf2SymMatrix& a) {
  const int n = a.size();
  std::vector<Mask> feasible;
  const Mask count = Mask{1} << n;
  for (Mask x = 0; x < count; ++x) {
    if (principal_nondegenerate(a, x)) feasible.push_back(x);
  }
  return DeltaMatroid::trusted(SetSystem(n, std::move(feasible)));
}

Gf2SymMatrix extend_matrix(const Gf2SymMatrix& a) {
  const int n = a.size();
  if (n < 1) throw PreconditionError("extend_matrix needs n >= 1");
  check_capacity(n + 1);
  std::vector<Mask> rows(a.rows().begin(), a.rows().end());
  rows.push_back(element_bit(1));
  rows[0] |= element_bit(n + 1);
  return Gf2SymMatrix::from_rows(std::move(rows));
}

Gf2SymMatrix random_symmetric(int n, std::mt19937_64& rng) {
  Gf2SymMatrix a(n);
  std::bernoulli_distribution coin(0.5);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) a.set(i, j, coin(rng));
  }
  return a;
}

std::optional<BinaryWitness> is_binary(const SetSystem& s) {
  const int n = s.size();
  const Mask shift = s.feasible().front();
  const SetSystem t = twist(s, shift);
  Gf2SymMatrix a(n);
  for (int i = 1; i <= n; ++i) a.set(i, i, t.contains(element_bit(i)));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const bool pair = t.contains(element_bit(i) | element_bit(j));
      a.set(i, j, pair != (a.at(i, i) && a.at(j, j)));
    }
  }
  if (static_cast<const SetSystem&>(matrix_delta_matroid(a)) != t) return std::nullopt;
  return BinaryWitness{std::move(a), shift};
}

std::optional<BinaryWitness> is_binary_brute_force(const SetSystem& s) {
  const int n = s.size();
  if (n > kBinaryOracleBound) {
    throw CapacityError("brute-force binarity needs n <= " + std::to_string(kBinaryOracleBound));
  }
  // Entries of the upper triangle (diagonal included), one bit each.
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) cells.emplace_back(i, j);
  }
  const std::uint64_t matrices = std::uint64_t{1} << cells.size();
  for (std::uint64_t code = 0; code < matrices; ++code) {
    Gf2SymMatrix a(n);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if ((code >> c) & 1) a.set(cells[c].first, cells[c].second, true);
    }
    const DeltaMatroid m = matrix_delta_matroid(a);
    if (m.family_size() != s.family_size()) continue;
    for (Mask x : s.feasible()) {
      if (static_cast<const SetSystem&>(twist(m, x)) == s) return BinaryWitness{std::move(a), x};
    }
  }
  return std::nullopt;
}

}  // namespace dmat
