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

#include "matkls/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "matkls/error.hpp"

namespace matkls {

std::string to_string(const BigInt& x) { return x.get_str(); }

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly({c}); }

IntPoly IntPoly::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

BigInt IntPoly::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

IntPoly IntPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigInt> v(static_cast<std::size_t>(k));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 't';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
  return os << p.to_string();
}

IntPoly reverse(const IntPoly& p, int r) {
  if (p.degree() > r) {
    throw Error(ErrorCode::DegreeExceedsRank,
                "degree " + std::to_string(p.degree()) + " exceeds " +
                    std::to_string(r));
  }
  if (p.is_zero()) return {};
  std::vector<BigInt> v(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i <= p.degree(); ++i) {
    v[static_cast<std::size_t>(r - i)] = p.coeff(i);
  }
  return IntPoly(std::move(v));
}

IntPoly pow(const IntPoly& p, int e) {
  IntPoly out{1};
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

// ---------------------------------------------------------------------------
// IntPoly2

IntPoly2::IntPoly2(std::vector<std::vector<BigInt>> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

void IntPoly2::normalize() {
  std::size_t width = 0;
  std::size_t height = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < coeffs_[i].size(); ++j) {
      if (coeffs_[i][j] != 0) {
        height = std::max(height, i + 1);
        width = std::max(width, j + 1);
      }
    }
  }
  coeffs_.resize(height);
  for (auto& row : coeffs_) row.resize(width);
}

BigInt IntPoly2::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i > x_degree() || j > y_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

void IntPoly2::add_term(const BigInt& c, int i, int j) {
  const auto ui = static_cast<std::size_t>(i);
  const auto uj = static_cast<std::size_t>(j);
  if (ui >= coeffs_.size()) coeffs_.resize(ui + 1);
  const std::size_t width =
      std::max(uj + 1, coeffs_.empty() ? 0 : coeffs_[0].size());
  for (auto& row : coeffs_) row.resize(std::max(row.size(), width));
  coeffs_[ui][uj] += c;
  normalize();
}

IntPoly2& IntPoly2::operator+=(const IntPoly2& o) {
  for (int i = 0; i <= o.x_degree(); ++i) {
    for (int j = 0; j <= o.y_degree(); ++j) {
      const BigInt c = o.coeff(i, j);
      if (c != 0) add_term(c, i, j);
    }
  }
  return *this;
}

BigInt IntPoly2::evaluate(const BigInt& x, const BigInt& y) const {
  BigInt acc = 0;
  for (auto row = coeffs_.rbegin(); row != coeffs_.rend(); ++row) {
    BigInt inner = 0;
    for (auto it = row->rbegin(); it != row->rend(); ++it) inner = inner * y + *it;
    acc = acc * x + inner;
  }
  return acc;
}

IntPoly IntPoly2::substitute(const IntPoly& x_of_t, const BigInt& y0) const {
  IntPoly acc;
  for (auto row = coeffs_.rbegin(); row != coeffs_.rend(); ++row) {
    BigInt inner = 0;
    for (auto it = row->rbegin(); it != row->rend(); ++it) inner = inner * y0 + *it;
    acc = acc * x_of_t + IntPoly::constant(inner);
  }
  return acc;
}

bool operator==(const IntPoly2& a, const IntPoly2& b) {
  return a.coeffs_ == b.coeffs_;
}

std::string IntPoly2::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = x_degree(); i >= 0; --i) {
    for (int j = y_degree(); j >= 0; --j) {
      const BigInt c = coeff(i, j);
      if (c == 0) continue;
      BigInt mag = abs(c);
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      std::string mono;
      if (i > 0) mono += i > 1 ? "x^" + std::to_string(i) : "x";
      if (j > 0) {
        if (!mono.empty()) mono += '*';
        mono += j > 1 ? "y^" + std::to_string(j) : "y";
      }
      if (mono.empty()) {
        os << mag.get_str();
      } else {
        if (mag != 1) os << mag.get_str() << '*';
        os << mono;
      }
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly2& p) {
  return os << p.to_string();
}

}  // namespace matkls
