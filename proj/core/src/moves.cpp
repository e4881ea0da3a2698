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

#include "dmat/moves.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <unordered_set>

#include "dmat/canonical.hpp"
#include "dmat/errors.hpp"
#include "dmat/gf2.hpp"

namespace dmat {
namespace {

void check_pair(const SetSystem& s, int a, int b) {
  const int n = s.size();
  if (a < 1 || a > n || b < 1 || b > n) {
    throw RangeError("move elements " + std::to_string(a) + "," + std::to_string(b) + " outside 1.." +
                     std::to_string(n));
  }
  if (a == b) throw PreconditionError("moves need distinct elements");
}

SetSystem toggle(const SetSystem& s, const std::vector<Mask>& toggled) {
  std::vector<Mask> out;
  std::set_symmetric_difference(s.feasible().begin(), s.feasible().end(), toggled.begin(), toggled.end(),
                                std::back_inserter(out));
  return SetSystem(s.size(), std::move(out));
}

FeasibilityCase feasibility_case(bool d, bool e, bool s, bool b) {
  const int code = d << 3 | e << 2 | s << 1 | b;
  switch (code) {
    case 0b1111: return FeasibilityCase::AllFeasible;
    case 0b1100:
    case 0b0011: return FeasibilityCase::ExchangePair;
    case 0b1010:
    case 0b0101: return FeasibilityCase::SlidePair;
    case 0b0000: return FeasibilityCase::NoneFeasible;
    default: return FeasibilityCase::Other;
  }
}

DistancePattern distance_pattern(int d, int e, int s, int b) {
  if (d == e && e == s && s == b) return DistancePattern::AllEqual;
  if (d == e && s == b) return DistancePattern::ExchangePairs;
  if (d == s && e == b) return DistancePattern::SlidePairs;
  return DistancePattern::Broken;
}

const char* member_name(int i) {
  static constexpr const char* kNames[] = {"base", "exchanged", "slid", "both"};
  return kNames[i];
}

FourTermSummary verify_chunk(std::span<const DeltaMatroid> instances, const FourTermOptions& options) {
  FourTermSummary summary;
  for (const DeltaMatroid& d : instances) {
    ++summary.checked;
    for (int a = 1; a <= d.size(); ++a) {
      for (int b = 1; b <= d.size(); ++b) {
        if (a == b) continue;
        ++summary.pairs;
        const FourTermReport report = analyze_four_term(d, a, b);
        for (std::size_t i = 0; i < 5; ++i) summary.feasibility_cases[i] += report.feasibility_cases[i];
        for (std::size_t i = 0; i < 4; ++i) summary.distance_patterns[i] += report.distance_patterns[i];
        std::string reason;
        if (!report.defect.is_zero()) {
          reason = "defect " + report.defect.to_string();
        } else if (report.first_broken_subset) {
          reason = "pointwise identity fails at subset " + std::to_string(*report.first_broken_subset);
        } else if (report.feasibility_cases[static_cast<int>(FeasibilityCase::Other)] != 0) {
          reason = "unexpected feasibility pattern";
        } else if (options.check_binary_closure) {
          const SetSystem* members[] = {&report.quadruple.base, &report.quadruple.exchanged,
                                        &report.quadruple.slid, &report.quadruple.both};
          for (int i = 0; i < 4 && reason.empty(); ++i) {
            if (!is_binary(*members[i])) reason = std::string(member_name(i)) + " member is not binary";
          }
        }
        if (!reason.empty()) summary.failures.push_back({d, a, b, std::move(reason)});
      }
    }
  }
  return summary;
}

}  // namespace

SetSystem handle_slide(const SetSystem& s, int a, int b) {
  check_pair(s, a, b);
  const Mask bit_a = element_bit(a);
  const Mask bit_b = element_bit(b);
  std::vector<Mask> toggled;
  for (Mask f : s.feasible()) {
    if ((f & bit_b) && !(f & bit_a)) toggled.push_back((f & ~bit_b) | bit_a);
  }
  std::sort(toggled.begin(), toggled.end());
  return toggle(s, toggled);
}

SetSystem exchange_ends(const SetSystem& s, int a, int b) {
  check_pair(s, a, b);
  const Mask ends = element_bit(a) | element_bit(b);
  std::vector<Mask> toggled;
  for (Mask f : s.feasible()) {
    if ((f & ends) == 0) toggled.push_back(f | ends);
  }
  std::sort(toggled.begin(), toggled.end());
  return toggle(s, toggled);
}

FourTermQuadruple four_term_quadruple(const SetSystem& s, int a, int b) {
  SetSystem exchanged = exchange_ends(s, a, b);
  SetSystem slid = handle_slide(s, a, b);
  SetSystem both = exchange_ends(slid, a, b);
  if (handle_slide(exchanged, a, b) != both) {
    throw InternalError("handle slide and end exchange do not commute");
  }
  return {s, std::move(exchanged), std::move(slid), std::move(both)};
}

FourTermReport analyze_four_term(const SetSystem& s, int a, int b) {
  FourTermReport report{four_term_quadruple(s, a, b), {}, IntPolynomial(), {}, {}, std::nullopt};
  const SetSystem* members[] = {&report.quadruple.base, &report.quadruple.exchanged, &report.quadruple.slid,
                                &report.quadruple.both};
  std::array<std::vector<std::uint8_t>, 4> dist;
  for (int i = 0; i < 4; ++i) {
    report.member_valid[i] = validate(*members[i]).valid();
    dist[i] = distance_table(*members[i]);
  }
  std::vector<Coeff> defect(s.size() + 1, 0);
  for (std::size_t x = 0; x < dist[0].size(); ++x) {
    const int d0 = dist[0][x], d1 = dist[1][x], d2 = dist[2][x], d3 = dist[3][x];
    ++defect[d0];
    --defect[d1];
    --defect[d2];
    ++defect[d3];
    ++report.feasibility_cases[static_cast<int>(feasibility_case(d0 == 0, d1 == 0, d2 == 0, d3 == 0))];
    const DistancePattern pattern = distance_pattern(d0, d1, d2, d3);
    ++report.distance_patterns[static_cast<int>(pattern)];
    if (pattern == DistancePattern::Broken && !report.first_broken_subset) {
      report.first_broken_subset = static_cast<Mask>(x);
    }
  }
  report.defect = IntPolynomial(std::move(defect));
  return report;
}

IntPolynomial four_term_defect(const DeltaMatroid& d, int a, int b) {
  FourTermReport report = analyze_four_term(d, a, b);
  for (int i = 0; i < 4; ++i) {
    if (!report.member_valid[i]) {
      throw NotDeltaMatroidError(std::string("four-term member '") + member_name(i) +
                                 "' is not a delta-matroid");
    }
  }
  return std::move(report.defect);
}

std::vector<DeltaMatroid> enumerate_binary(int n) {
  if (n < 0 || n > kEnumerateBound) {
    throw CapacityError("enumerate_binary needs 0 <= n <= " + std::to_string(kEnumerateBound));
  }
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) cells.emplace_back(i, j);
  }
  // Labeled families first, as bitsets over the 2^n <= 32 subsets.
  std::unordered_set<std::uint32_t> labeled;
  const Mask subsets = Mask{1} << n;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells.size()); ++code) {
    Gf2SymMatrix a(n);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if ((code >> c) & 1) a.set(cells[c].first, cells[c].second, true);
    }
    const DeltaMatroid m = matrix_delta_matroid(a);
    for (Mask x = 0; x < subsets; ++x) {
      std::uint32_t bits = 0;
      for (Mask f : m.feasible()) bits |= std::uint32_t{1} << (f ^ x);
      labeled.insert(bits);
    }
  }
  std::set<SetSystem> forms;
  for (std::uint32_t bits : labeled) {
    std::vector<Mask> family;
    for (Mask f = 0; f < subsets; ++f) {
      if ((bits >> f) & 1) family.push_back(f);
    }
    forms.insert(canonicalize(SetSystem(n, std::move(family))).form);
  }
  std::vector<DeltaMatroid> out;
  out.reserve(forms.size());
  for (const SetSystem& s : forms) out.push_back(DeltaMatroid::trusted(s));
  return out;
}

DeltaMatroid random_binary(int n, std::mt19937_64& rng) {
  const Gf2SymMatrix a = random_symmetric(n, rng);
  std::uniform_int_distribution<Mask> pick(0, full_mask(n));
  return twist(matrix_delta_matroid(a), pick(rng));
}

void FourTermSummary::merge(const FourTermSummary& other) {
  checked += other.checked;
  pairs += other.pairs;
  for (std::size_t i = 0; i < feasibility_cases.size(); ++i) feasibility_cases[i] += other.feasibility_cases[i];
  for (std::size_t i = 0; i < distance_patterns.size(); ++i) distance_patterns[i] += other.distance_patterns[i];
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

FourTermSummary verify_four_term(std::span<const DeltaMatroid> instances, const FourTermOptions& options) {
  const std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(options.threads, instances.size()));
  if (threads == 1) return verify_chunk(instances, options);
  std::vector<std::future<FourTermSummary>> parts;
  const std::size_t chunk = (instances.size() + threads - 1) / threads;
  for (std::size_t begin = 0; begin < instances.size(); begin += chunk) {
    const auto part = instances.subspan(begin, std::min(chunk, instances.size() - begin));
    parts.push_back(std::async(std::launch::async, verify_chunk, part, std::cref(options)));
  }
  FourTermSummary summary;
  for (auto& part : parts) summary.merge(part.get());
  return summary;
}

}  // namespace dmat
