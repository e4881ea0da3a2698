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

#include "dmat/hopf.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

#include "dmat/canonical.hpp"
#include "dmat/errors.hpp"
#include "dmat/graph.hpp"
#include "dmat/partitions.hpp"

namespace dmat {
namespace {

// (-1)^(k-1) (k-1)!
Coeff partition_weight(int blocks) {
  Coeff w = 1;
  for (int i = 2; i < blocks; ++i) w = checked_mul(w, i);
  return blocks % 2 == 1 ? w : -w;
}

template <typename Map, typename Key>
void accumulate(Map& terms, const Key& key, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms.erase(it);
}

void check_projection_size(int n) {
  if (n < 1 || n > kProjectionBound) {
    throw CapacityError("partition expansion needs 1 <= n <= " + std::to_string(kProjectionBound) + ", got " +
                        std::to_string(n));
  }
}

// Canonical restriction to every subset, numbered by first appearance.
struct RestrictionTable {
  std::vector<int> id_of_subset;
  std::vector<SetSystem> forms;

  explicit RestrictionTable(const DeltaMatroid& d) {
    std::map<SetSystem, int> ids;
    const Mask count = Mask{1} << d.size();
    id_of_subset.resize(count);
    for (Mask sub = 0; sub < count; ++sub) {
      SetSystem form = canonical_form(restriction(static_cast<const SetSystem&>(d), sub));
      auto [it, inserted] = ids.try_emplace(form, static_cast<int>(forms.size()));
      if (inserted) forms.push_back(std::move(form));
      id_of_subset[sub] = it->second;
    }
  }

  const SetSystem& of(Mask sub) const { return forms[id_of_subset[sub]]; }
};

// Multiplies the restrictions named by `factors` and adds the canonical
// product to `out`.
void add_product(DmCombination& out, const RestrictionTable& table, const std::vector<int>& factors, Coeff c) {
  SetSystem prod = SetSystem::unit();
  for (int id : factors) prod = product(prod, table.forms[id]);
  out.add_canonical(canonical_form(prod), c);
}

}  // namespace

DmCombination DmCombination::of(const DeltaMatroid& d, Coeff c) {
  DmCombination out(d.size());
  out.add(d, c);
  return out;
}

Coeff DmCombination::coefficient(const DeltaMatroid& d) const {
  auto it = terms_.find(canonical_form(static_cast<const SetSystem&>(d)));
  return it == terms_.end() ? 0 : it->second;
}

void DmCombination::add(const DeltaMatroid& d, Coeff c) {
  if (d.size() != grade_) {
    throw PreconditionError("term of size " + std::to_string(d.size()) + " added to combination of grade " +
                            std::to_string(grade_));
  }
  add_canonical(canonical_form(static_cast<const SetSystem&>(d)), c);
}

void DmCombination::add_canonical(const SetSystem& key, Coeff c) { accumulate(terms_, key, c); }

void DmCombination::check_grade(const DmCombination& other) const {
  if (other.grade_ != grade_) throw PreconditionError("combinations of different grades");
}

DmCombination& DmCombination::operator+=(const DmCombination& other) {
  check_grade(other);
  for (const auto& [key, c] : other.terms_) add_canonical(key, c);
  return *this;
}

DmCombination& DmCombination::operator-=(const DmCombination& other) { return *this += other.scaled(-1); }

DmCombination DmCombination::scaled(Coeff k) const {
  DmCombination out(grade_);
  for (const auto& [key, c] : terms_) out.add_canonical(key, checked_mul(c, k));
  return out;
}

DmCombination operator*(const DmCombination& a, const DmCombination& b) {
  DmCombination out(a.grade_ + b.grade_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_canonical(canonical_form(product(ka, kb)), checked_mul(ca, cb));
  }
  return out;
}

void TensorCombination::add(const DeltaMatroid& left, const DeltaMatroid& right, Coeff c) {
  add_canonical({canonical_form(static_cast<const SetSystem&>(left)),
                 canonical_form(static_cast<const SetSystem&>(right))},
                c);
}

void TensorCombination::add_canonical(const Key& key, Coeff c) { accumulate(terms_, key, c); }

TensorCombination& TensorCombination::operator+=(const TensorCombination& other) {
  for (const auto& [key, c] : other.terms_) add_canonical(key, c);
  return *this;
}

TensorCombination& TensorCombination::operator-=(const TensorCombination& other) {
  for (const auto& [key, c] : other.terms_) add_canonical(key, checked_mul(c, -1));
  return *this;
}

TensorCombination TensorCombination::swapped() const {
  TensorCombination out;
  for (const auto& [key, c] : terms_) out.add_canonical({key.second, key.first}, c);
  return out;
}

TensorCombination coproduct(const DeltaMatroid& d) {
  TensorCombination out;
  const Mask ground = d.ground();
  for (Mask left = 0; left <= ground; ++left) {
    out.add(restriction(d, left), restriction(d, ground & ~left), 1);
  }
  return out;
}

TensorCombination coproduct(const DmCombination& c) {
  TensorCombination out;
  for (const auto& [key, coeff] : c.terms()) {
    const TensorCombination inner_terms = coproduct(DeltaMatroid::trusted(key));
    for (const auto& [pair, inner] : inner_terms.terms()) {
      out.add_canonical(pair, checked_mul(coeff, inner));
    }
  }
  return out;
}

TensorCombination primitive_coproduct(const DmCombination& c) {
  TensorCombination out;
  const SetSystem unit = SetSystem::unit();
  for (const auto& [key, coeff] : c.terms()) {
    out.add_canonical({unit, key}, coeff);
    out.add_canonical({key, unit}, coeff);
  }
  return out;
}

bool is_primitive(const DmCombination& c) {
  TensorCombination diff = coproduct(c);
  diff -= primitive_coproduct(c);
  return diff.is_zero();
}

DmCombination project_primitive(const DeltaMatroid& d) {
  const int n = d.size();
  check_projection_size(n);
  const RestrictionTable table(d);
  // Partitions with the same multiset of restriction types give the same
  // product, so they are merged before any product is formed.
  std::map<std::vector<int>, Coeff> grouped;
  std::vector<int> factors;
  for_each_set_partition(n, [&](std::span<const Mask> blocks) {
    factors.clear();
    for (Mask block : blocks) factors.push_back(table.id_of_subset[block]);
    std::sort(factors.begin(), factors.end());
    accumulate(grouped, factors, partition_weight(static_cast<int>(blocks.size())));
  });
  DmCombination out(n);
  for (const auto& [ids, c] : grouped) add_product(out, table, ids, c);
  return out;
}

DmCombination project_primitive(const DmCombination& c) {
  DmCombination out(c.grade());
  for (const auto& [key, coeff] : c.terms()) out += project_primitive(DeltaMatroid::trusted(key)).scaled(coeff);
  return out;
}

IntPolynomial q_of_combination(const DmCombination& c) {
  IntPolynomial out;
  for (const auto& [key, coeff] : c.terms()) out += interlace_poly(key).scaled(coeff);
  return out;
}

DmCombination element_one_telescope(const DeltaMatroid& d) {
  const int n = d.size();
  check_projection_size(n);
  const RestrictionTable table(d);
  std::map<std::vector<int>, Coeff> grouped;
  std::vector<int> factors;
  for_each_set_partition(n, [&](std::span<const Mask> blocks) {
    factors.clear();
    // blocks[0] holds element 1: partitions list blocks by smallest element.
    factors.push_back(table.id_of_subset[blocks[0] & ~Mask{1}]);
    for (std::size_t i = 1; i < blocks.size(); ++i) factors.push_back(table.id_of_subset[blocks[i]]);
    std::sort(factors.begin(), factors.end());
    accumulate(grouped, factors, partition_weight(static_cast<int>(blocks.size())));
  });
  DmCombination out(n - 1);
  for (const auto& [ids, c] : grouped) add_product(out, table, ids, c);
  return out;
}

Gf2SymMatrix family_matrix(Family kind, int n, int k) {
  switch (kind) {
    case Family::AllOnes:
      if (n < 1) throw RangeError("all-ones family needs n >= 1");
      return Gf2SymMatrix::all_ones(n);
    case Family::Tower: {
      if (n < 2 || k < 0) throw RangeError("tower family needs n >= 2 and k >= 0");
      if (n + k > kMaxGroundSet) throw CapacityError("tower ground set too large");
      Gf2SymMatrix a = Gf2SymMatrix::all_ones(n);
      for (int i = 0; i < k; ++i) a = extend_matrix(a);
      return a;
    }
    case Family::Complete:
      if (n < 1) throw RangeError("complete-graph family needs n >= 1");
      return SimpleGraph::complete(n).adjacency();
  }
  throw PreconditionError("unknown family");
}

DeltaMatroid build_family(Family kind, int n, int k) { return matrix_delta_matroid(family_matrix(kind, n, k)); }

PrimitiveValueMatrix primitive_value_matrix(int n) {
  if (n < 2 || n > kProjectionBound) {
    throw CapacityError("primitive value matrix needs 2 <= n <= " + std::to_string(kProjectionBound));
  }
  PrimitiveValueMatrix out;
  out.n = n;
  auto push = [&](std::string label, const DeltaMatroid& d) {
    out.labels.push_back(std::move(label));
    out.polynomials.push_back(q_of_combination(project_primitive(d)));
  };
  push("allones(" + std::to_string(n) + ")", build_family(Family::AllOnes, n));
  for (int k = 1; k <= n - 2; ++k) {
    push("tower(" + std::to_string(n - k) + "," + std::to_string(k) + ")", build_family(Family::Tower, n - k, k));
  }
  push("complete(" + std::to_string(n) + ")", build_family(Family::Complete, n));
  for (const IntPolynomial& p : out.polynomials) {
    std::vector<Coeff> row(n + 1, 0);
    for (int d = 0; d <= n; ++d) row[d] = p.coeff(d);
    out.coefficients.push_back(std::move(row));
  }
  out.rank = rational_rank(out.coefficients);
  return out;
}

int rational_rank(const std::vector<std::vector<Coeff>>& rows) {
  using boost::multiprecision::cpp_rational;
  std::vector<std::vector<cpp_rational>> m;
  for (const auto& row : rows) m.emplace_back(row.begin(), row.end());
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      const cpp_rational factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

std::uint64_t bell_number(int n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace dmat
