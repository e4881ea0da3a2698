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

#include "dmat/polynomial.hpp"

#include <sstream>

#include "dmat/errors.hpp"

namespace dmat {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("coefficient overflow in addition");
  return out;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("coefficient overflow in multiplication");
  return out;
}

IntPolynomial::IntPolynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial IntPolynomial::monomial(Coeff c, int degree) {
  if (degree < 0) throw PreconditionError("negative degree");
  std::vector<Coeff> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Coeff IntPolynomial::coeff(int d) const {
  return d >= 0 && d < static_cast<int>(coeffs_.size()) ? coeffs_[d] : 0;
}

Coeff IntPolynomial::evaluate(Coeff at) const {
  Coeff acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked_add(checked_mul(acc, at), *it);
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) { return *this += other.scaled(-1); }

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Coeff> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(coeffs_[i], other.coeffs_[j]));
    }
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPolynomial IntPolynomial::scaled(Coeff k) const {
  std::vector<Coeff> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = checked_mul(coeffs_[i], k);
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const Coeff c = coeffs_[d];
    if (c == 0) continue;
    // Magnitude as unsigned so INT64_MIN prints correctly.
    const auto magnitude = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0 || magnitude != 1) out << magnitude;
    if (d >= 1) out << 'x';
    if (d >= 2) out << '^' << d;
  }
  return out.str();
}

IntPolynomial shift_variable(const IntPolynomial& p, Coeff c) {
  // Horner in the ring: p(x+c) = (...(a_d (x+c) + a_{d-1})(x+c) + ...).
  const IntPolynomial step({c, 1});
  IntPolynomial acc;
  for (int d = p.degree(); d >= 0; --d) {
    acc *= step;
    acc += IntPolynomial::constant(p.coeff(d));
  }
  return acc;
}

IntPolynomial interlace_poly(const SetSystem& s) {
  const auto dist = distance_table(s);
  std::vector<Coeff> coeffs(s.size() + 1, 0);
  for (std::uint8_t d : dist) ++coeffs[d];
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial interlace_poly_recursive(const DeltaMatroid& d) {
  for (int e = 1; e <= d.size(); ++e) {
    if (classify(d, e) != ElementClass::Ordinary) continue;
    return interlace_poly_recursive(reduce(d, e, Reduction::Delete)) +
           interlace_poly_recursive(reduce(twist(d, element_bit(e)), e, Reduction::Delete));
  }
  return interlace_poly(d);
}

}  // namespace dmat
