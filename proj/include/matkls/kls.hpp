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

#ifndef MATKLS_KLS_HPP
#define MATKLS_KLS_HPP

#include <optional>
#include <vector>

#include "matkls/lattice.hpp"
#include "matkls/matroid.hpp"
#include "matkls/poly.hpp"

namespace matkls {

// Interval-indexed cache of characteristic, Kazhdan-Lusztig and inverse
// Kazhdan-Lusztig polynomials for one lattice.
//
// An interval [F, G] of the lattice of flats of M is the lattice of flats of
// the minor M_G / F, so P and Q of every minor live here keyed by indices.
// Each slot is written at most once; recomputing a slot always yields the same
// value. Not safe for concurrent writers: fill it from one thread, then share
// it read-only.
class KLSMemo {
 public:
  explicit KLSMemo(const FlatLattice& l);

  const FlatLattice& lattice() const { return *lattice_; }

 private:
  friend class KLSAccess;

  using Slot = std::optional<IntPoly>;
  Slot& slot(std::vector<Slot>& table, FlatLattice::Index a,
             FlatLattice::Index b) {
    return table[static_cast<std::size_t>(a) * lattice_->size() + b];
  }

  const FlatLattice* lattice_;
  std::vector<Slot> chi_;
  std::vector<Slot> p_;
  std::vector<Slot> q_;
  std::vector<Slot> q_conv_;
};

// chi of [a, b], cached.
IntPoly interval_characteristic(const FlatLattice& l, FlatLattice::Index a,
                                FlatLattice::Index b, KLSMemo& memo);

// P of [a, b]: the unique polynomial of degree < rho/2 (rho the rank of the
// interval) with t^rho P(1/t) = sum_{a <= h <= b} chi_[a,h](t) P_[h,b](t).
// Throws NotComparable when a is not below b.
IntPoly kl_polynomial(const FlatLattice& l, FlatLattice::Index a,
                      FlatLattice::Index b, KLSMemo& memo);
IntPoly kl_polynomial(const FlatLattice& l, KLSMemo& memo);

// Q of [a, b] from
//   Q(t) = (-1)^rho sum_{a <= h <= b} (-1)^{rho_h} t^{rho_h} Q_[a,h](1/t)
//          chi_[h,b](t),
// with rho_h the rank of [a, h]; the h = b term is t^rho Q(1/t) and only
// contributes above degree rho/2.
IntPoly inverse_kl_polynomial(const FlatLattice& l, FlatLattice::Index a,
                              FlatLattice::Index b, KLSMemo& memo);
IntPoly inverse_kl_polynomial(const FlatLattice& l, KLSMemo& memo);

// Q of [a, b] computed independently as the convolution inverse of P:
// sum_{a <= h <= b} P_[a,h] (-1)^{rank [h,b]} Q_[h,b] = 0 for a < b, solved
// for the h = a term. Uses its own cache of Q values.
IntPoly inverse_kl_via_convolution(const FlatLattice& l, FlatLattice::Index a,
                                   FlatLattice::Index b, KLSMemo& memo);
IntPoly inverse_kl_via_convolution(const FlatLattice& l, KLSMemo& memo);

// T(x, y) = sum_{A subset E} (x-1)^{r - rk A} (y-1)^{|A| - rk A}.
// Throws TooLarge for more than 20 elements.
IntPoly2 tutte_polynomial(const Matroid& m);

// (-1)^r T(1 - t, 0); the zero polynomial when m has a loop.
IntPoly char_from_tutte(const Matroid& m);

// |mu(bottom, top)|.
BigInt q_constant_term(const FlatLattice& l);

// |w_{1,r}| - |w_{0,r-1}|. The lattice must come from a simple matroid
// (empty bottom, singleton atoms; throws NotSimple otherwise) of rank >= 1
// (throws RankZero).
BigInt q_linear_coefficient(const FlatLattice& l);

}  // namespace matkls

#endif  // MATKLS_KLS_HPP
