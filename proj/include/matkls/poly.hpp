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

#ifndef MATKLS_POLY_HPP
#define MATKLS_POLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace matkls {

using BigInt = mpz_class;

std::string to_string(const BigInt& x);

// Univariate polynomial with arbitrary-precision integer coefficients,
// coefficient i multiplying t^i. The zero polynomial has no coefficients;
// otherwise the last stored coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, int degree);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  // Zero for indices outside the stored range.
  BigInt coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt evaluate(const BigInt& t) const;
  // Multiplies by t^k, k >= 0.
  IntPoly shifted(int k) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const BigInt& c);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& c) { return a *= c; }

  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // "1 + 2*t - t^3" style.
  std::string to_string() const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

// t^r p(1/t). Throws DegreeExceedsRank when deg p > r.
IntPoly reverse(const IntPoly& p, int r);

IntPoly pow(const IntPoly& p, int e);

// Bivariate polynomial; coefficient (i, j) multiplies x^i y^j. Stored as a
// rectangle trimmed so that neither the last row nor the last column is all
// zero (the zero polynomial is the empty rectangle).
class IntPoly2 {
 public:
  IntPoly2() = default;
  explicit IntPoly2(std::vector<std::vector<BigInt>> coeffs);

  int x_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int y_degree() const {
    return coeffs_.empty() ? -1 : static_cast<int>(coeffs_[0].size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coeff(int i, int j) const;
  const std::vector<std::vector<BigInt>>& coeffs() const { return coeffs_; }

  void add_term(const BigInt& c, int i, int j);
  IntPoly2& operator+=(const IntPoly2& o);

  BigInt evaluate(const BigInt& x, const BigInt& y) const;
  // p(q(t), y0) as a univariate polynomial in t.
  IntPoly substitute(const IntPoly& x_of_t, const BigInt& y0) const;

  friend bool operator==(const IntPoly2& a, const IntPoly2& b);

  std::string to_string() const;

 private:
  void normalize();

  std::vector<std::vector<BigInt>> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly2& p);

}  // namespace matkls

#endif  // MATKLS_POLY_HPP
