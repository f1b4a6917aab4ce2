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

#include "matkls/kls.hpp"

#include <cstdint>

#include "matkls/error.hpp"

namespace matkls {

using Index = FlatLattice::Index;

KLSMemo::KLSMemo(const FlatLattice& l) : lattice_(&l) {
  const auto cells = static_cast<std::size_t>(l.size()) * l.size();
  chi_.resize(cells);
  p_.resize(cells);
  q_.resize(cells);
  q_conv_.resize(cells);
}

class KLSAccess {
 public:
  static std::optional<IntPoly>& chi(KLSMemo& m, Index a, Index b) {
    return m.slot(m.chi_, a, b);
  }
  static std::optional<IntPoly>& p(KLSMemo& m, Index a, Index b) {
    return m.slot(m.p_, a, b);
  }
  static std::optional<IntPoly>& q(KLSMemo& m, Index a, Index b) {
    return m.slot(m.q_, a, b);
  }
  static std::optional<IntPoly>& q_conv(KLSMemo& m, Index a, Index b) {
    return m.slot(m.q_conv_, a, b);
  }
};

namespace {

void require_same_lattice(const FlatLattice& l, const KLSMemo& memo) {
  if (&memo.lattice() != &l) {
    throw Error(ErrorCode::InvalidElement, "memo belongs to another lattice");
  }
}

void require_comparable(const FlatLattice& l, Index a, Index b) {
  if (a < 0 || b < 0 || a >= l.size() || b >= l.size() || !l.leq(a, b)) {
    throw Error(ErrorCode::NotComparable,
                "interval [" + std::to_string(a) + ", " + std::to_string(b) +
                    "] is empty");
  }
}

BigInt sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

IntPoly interval_characteristic(const FlatLattice& l, Index a, Index b,
                                KLSMemo& memo) {
  require_same_lattice(l, memo);
  auto& slot = KLSAccess::chi(memo, a, b);
  if (!slot) slot = characteristic_polynomial(l, a, b);
  return *slot;
}

IntPoly kl_polynomial(const FlatLattice& l, Index a, Index b, KLSMemo& memo) {
  require_same_lattice(l, memo);
  require_comparable(l, a, b);
  auto& slot = KLSAccess::p(memo, a, b);
  if (slot) return *slot;

  const int rho = l.rank_of(b) - l.rank_of(a);
  if (rho == 0) {
    slot = IntPoly{1};
    return *slot;
  }
  // t^rho P(1/t) - P(t) = sum_{a < h <= b} chi_[a,h] P_[h,b]; the left side
  // has coefficient P_i at degree rho - i and nothing else up there.
  IntPoly rest;
  for (Index h : l.interval(a, b)) {
    if (h == a) continue;
    rest += interval_characteristic(l, a, h, memo) * kl_polynomial(l, h, b, memo);
  }
  std::vector<BigInt> coeffs;
  for (int i = 0; 2 * i < rho; ++i) coeffs.push_back(rest.coeff(rho - i));
  slot = IntPoly(std::move(coeffs));
  return *slot;
}

IntPoly kl_polynomial(const FlatLattice& l, KLSMemo& memo) {
  return kl_polynomial(l, l.bottom(), l.top(), memo);
}

IntPoly inverse_kl_polynomial(const FlatLattice& l, Index a, Index b,
                              KLSMemo& memo) {
  require_same_lattice(l, memo);
  require_comparable(l, a, b);
  auto& slot = KLSAccess::q(memo, a, b);
  if (slot) return *slot;

  const int rho = l.rank_of(b) - l.rank_of(a);
  if (rho == 0) {
    slot = IntPoly{1};
    return *slot;
  }
  IntPoly rest;
  for (Index h : l.interval(a, b)) {
    if (h == b) continue;
    const int rho_h = l.rank_of(h) - l.rank_of(a);
    IntPoly term = reverse(inverse_kl_polynomial(l, a, h, memo), rho_h) *
                   interval_characteristic(l, h, b, memo);
    term *= sign(rho_h);
    rest += term;
  }
  rest *= sign(rho);
  std::vector<BigInt> coeffs;
  for (int i = 0; 2 * i < rho; ++i) coeffs.push_back(rest.coeff(i));
  slot = IntPoly(std::move(coeffs));
  return *slot;
}

IntPoly inverse_kl_polynomial(const FlatLattice& l, KLSMemo& memo) {
  return inverse_kl_polynomial(l, l.bottom(), l.top(), memo);
}

IntPoly inverse_kl_via_convolution(const FlatLattice& l, Index a, Index b,
                                   KLSMemo& memo) {
  require_same_lattice(l, memo);
  require_comparable(l, a, b);
  auto& slot = KLSAccess::q_conv(memo, a, b);
  if (slot) return *slot;

  const int rho = l.rank_of(b) - l.rank_of(a);
  if (rho == 0) {
    slot = IntPoly{1};
    return *slot;
  }
  // (-1)^rho Q_[a,b] = -sum_{a < h <= b} P_[a,h] (-1)^{rank [h,b]} Q_[h,b].
  IntPoly rest;
  for (Index h : l.interval(a, b)) {
    if (h == a) continue;
    IntPoly term = kl_polynomial(l, a, h, memo) *
                   inverse_kl_via_convolution(l, h, b, memo);
    term *= sign(l.rank_of(b) - l.rank_of(h));
    rest += term;
  }
  rest *= -sign(rho);
  slot = std::move(rest);
  return *slot;
}

IntPoly inverse_kl_via_convolution(const FlatLattice& l, KLSMemo& memo) {
  return inverse_kl_via_convolution(l, l.bottom(), l.top(), memo);
}

IntPoly2 tutte_polynomial(const Matroid& m) {
  const int n = m.size();
  if (n > 20) {
    throw Error(ErrorCode::TooLarge,
                "Tutte expansion over 2^" + std::to_string(n) + " subsets");
  }
  const int r = m.rank();
  // counts[i][j]: number of subsets with corank i and nullity j.
  std::vector<std::vector<std::uint64_t>> counts(
      static_cast<std::size_t>(r) + 1, std::vector<std::uint64_t>(n + 1, 0));
  const std::uint32_t end = std::uint32_t{1} << n;
  for (std::uint32_t bits = 0; bits < end; ++bits) {
    const ElementSet s(bits, n);
    const int rk = m.rank(s);
    ++counts[r - rk][s.size() - rk];
  }
  // Expand (x-1)^i (y-1)^j into the monomial basis.
  IntPoly2 out;
  for (int i = 0; i <= r; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (counts[i][j] == 0) continue;
      const BigInt c(static_cast<unsigned long>(counts[i][j]));
      BigInt bx = 1;  // C(i, k)
      for (int k = 0; k <= i; ++k) {
        BigInt by = 1;  // C(j, l)
        for (int l = 0; l <= j; ++l) {
          out.add_term(c * bx * by * sign(i - k + j - l), k, l);
          by = by * (j - l) / (l + 1);
        }
        bx = bx * (i - k) / (k + 1);
      }
    }
  }
  return out;
}

IntPoly char_from_tutte(const Matroid& m) {
  for (int e = 0; e < m.size(); ++e) {
    if (m.is_loop(e)) return {};
  }
  IntPoly chi = tutte_polynomial(m).substitute(IntPoly{1, -1}, 0);
  chi *= sign(m.rank());
  return chi;
}

BigInt q_constant_term(const FlatLattice& l) {
  return abs(l.mobius(l.bottom(), l.top()));
}

BigInt q_linear_coefficient(const FlatLattice& l) {
  const int r = l.rank();
  if (r < 1) throw Error(ErrorCode::RankZero, "lattice has rank 0");
  if (!l.flat(l.bottom()).is_empty()) {
    throw Error(ErrorCode::NotSimple, "bottom flat contains loops");
  }
  for (Index a : l.of_rank(1)) {
    if (l.flat(a).size() != 1) {
      throw Error(ErrorCode::NotSimple,
                  "atom " + l.flat(a).to_string() + " has parallel elements");
    }
  }
  const WhitneyTable t = whitney_table(l);
  return abs(t.w[1][r]) - abs(t.w[0][r - 1]);
}

}  // namespace matkls
