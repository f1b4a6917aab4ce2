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

#ifndef MATKLS_MATROID_HPP
#define MATKLS_MATROID_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matkls/element_set.hpp"

namespace matkls {

// Upper bound on the size of any basis family we are willing to materialize.
inline constexpr std::size_t kMaxBases = std::size_t{1} << 22;

// A matroid on {0, ..., n-1} given by its family of bases. Immutable.
//
// Bases are kept sorted by bitmask so membership is a binary search. The
// rank of an arbitrary set is max |B & S| over bases; nothing is cached, so
// every query is a pure function of the stored family.
class Matroid {
 public:
  // The empty matroid: no elements, rank 0, one (empty) basis.
  Matroid();

  // Skips the exchange-axiom check. Callers must pass a genuine basis
  // family (all builders in this library produce one by construction).
  // Sorts and deduplicates.
  static Matroid from_trusted_bases(int n, std::vector<ElementSet> bases,
                                    std::string label = {});

  int size() const { return n_; }
  int rank() const { return r_; }
  ElementSet ground() const { return ElementSet::full(n_); }
  std::span<const ElementSet> bases() const { return bases_; }
  const std::string& label() const { return label_; }
  Matroid with_label(std::string label) const;

  int rank(ElementSet s) const;
  ElementSet closure(ElementSet s) const;
  bool is_basis(ElementSet s) const;
  bool is_independent(ElementSet s) const;
  bool is_flat(ElementSet s) const { return closure(s) == s; }

  bool is_loop(int e) const;
  bool is_coloop(int e) const;
  bool is_simple() const;

  // Equality of ground size and basis family; labels are ignored.
  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.bases_ == b.bases_;
  }

 private:
  Matroid(int n, int r, std::vector<ElementSet> bases, std::string label);

  int n_ = 0;
  int r_ = 0;
  std::vector<ElementSet> bases_;
  std::string label_;
};

// Validating constructor. Throws EmptyBases, UnequalBasisSizes,
// InvalidElement, CapacityExceeded or ExchangeAxiomViolated (the message
// names the offending pair and element).
Matroid matroid_from_bases(int n, const std::vector<std::vector<int>>& bases,
                           std::string label = {});
Matroid matroid_from_basis_sets(int n, std::vector<ElementSet> bases,
                                std::string label = {});

// Tracks element identity through delete / contract / simplify. `relabel`
// has one entry per old element: its new index, or -1 if it was removed.
struct MinorMap {
  ElementSet kept;
  std::vector<int> relabel;

  static MinorMap keeping(ElementSet kept);
  // Image of a subset of `kept` on the new ground set.
  ElementSet apply(ElementSet s) const;
};

struct Minor {
  Matroid matroid;
  MinorMap map;
};

Minor delete_elements(const Matroid& m, ElementSet s);
Minor contract(const Matroid& m, ElementSet s);
// Drops loops and keeps the lowest index of each parallel class.
Minor simplify(const Matroid& m);

Matroid dual(const Matroid& m);
Matroid direct_sum(const Matroid& a, const Matroid& b);
// The restriction of `m` to `kept`, relabelled onto {0..|kept|-1}.
Matroid restrict_to(const Matroid& m, ElementSet kept);

// Flats grouped by rank 0..r, each group sorted by bitmask.
std::vector<std::vector<ElementSet>> flats_by_rank(const Matroid& m);

bool is_connected(const Matroid& m);
// Connected components, each a set of elements, ordered by lowest member.
std::vector<ElementSet> components(const Matroid& m);

// A bijection phi with phi(B) a basis of `b` for every basis B of `a`.
std::optional<std::vector<int>> find_isomorphism(const Matroid& a,
                                                 const Matroid& b);
bool are_isomorphic(const Matroid& a, const Matroid& b);

bool has_minor(const Matroid& m, const Matroid& n);
// No minor isomorphic to U(2,4), the Fano plane, or its dual.
bool is_regular(const Matroid& m);

// Smallest element i such that simplify(m / i) is connected. Throws
// NotSimple / NotConnected when the preconditions fail and RankZero for the
// empty matroid.
int find_connected_contraction_element(const Matroid& m);

}  // namespace matkls

#endif  // MATKLS_MATROID_HPP
