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
#include <string>
#include <vector>

#include "dmat/set_system.hpp"

namespace dmat {

using Coeff = std::int64_t;

/// Univariate polynomial with exact int64 coefficients, lowest degree first.
/// Arithmetic is checked: leaving the int64 range throws OverflowError.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Coeff> coeffs);

  static IntPolynomial constant(Coeff c) { return IntPolynomial({c}); }
  static IntPolynomial monomial(Coeff c, int degree);
  /// The polynomial x.
  static IntPolynomial x() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Coeff coeff(int d) const;
  Coeff leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  std::span<const Coeff> coeffs() const { return coeffs_; }

  Coeff evaluate(Coeff at) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);
  IntPolynomial scaled(Coeff k) const;
  IntPolynomial operator-() const { return scaled(-1); }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Lowest degree first, e.g. "2 - 3x + x^2"; "0" for zero.
  std::string to_string() const;

 private:
  void normalize();

  std::vector<Coeff> coeffs_;
};

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

/// p(x + c).
IntPolynomial shift_variable(const IntPolynomial& p, Coeff c);

/// Largest ground set for the interlace polynomial computations.
inline constexpr int kInterlaceBound = kMaxGroundSet;

/// Sum over all subsets X of x^distance(X).
IntPolynomial interlace_poly(const SetSystem& s);

/// Deletes the smallest ordinary element e and recurses on D\e and (D*e)\e;
/// falls back to the direct sum when every element is a loop or coloop.
IntPolynomial interlace_poly_recursive(const DeltaMatroid& d);

}  // namespace dmat
