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

#ifndef MATKLS_LATTICE_HPP
#define MATKLS_LATTICE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matkls/element_set.hpp"
#include "matkls/matroid.hpp"
#include "matkls/poly.hpp"

namespace matkls {

// A finite lattice of subsets of a ground set, ordered by inclusion.
//
// Elements are indexed 0..size()-1 in order of (rank, bitmask), so the
// elements of each rank occupy a contiguous index range and every index
// precedes the indices of the elements strictly above it. Join, meet and the
// Moebius function are tabulated once at construction; afterwards the object
// is immutable and all queries are read-only.
class FlatLattice {
 public:
  using Index = int;

  // Builds the lattice on a family of subsets. The family must contain a
  // least and a greatest member and every pair must have a join and a meet
  // within the family (throws NotALattice otherwise). Ranks are heights:
  // the length of the longest chain down to the bottom.
  static FlatLattice from_sets(int n, std::vector<ElementSet> sets);

  int size() const { return static_cast<int>(sets_.size()); }
  int rank() const { return rank_of_.empty() ? 0 : rank_of_.back(); }
  int ground_size() const { return n_; }
  Index bottom() const { return 0; }
  Index top() const { return size() - 1; }

  ElementSet flat(Index i) const { return sets_[i]; }
  int rank_of(Index i) const { return rank_of_[i]; }
  // Indices of all elements of rank k, as a contiguous range.
  std::span<const Index> of_rank(int k) const;
  std::span<const Index> upper_covers(Index i) const { return covers_[i]; }
  std::optional<Index> index_of(ElementSet s) const;

  bool leq(Index a, Index b) const { return sets_[a].is_subset_of(sets_[b]); }
  Index join(Index a, Index b) const { return join_[a * size() + b]; }
  Index meet(Index a, Index b) const { return meet_[a * size() + b]; }
  // Elements H with lo <= H <= hi, in index order (so by rank). Empty when
  // lo is not below hi.
  std::vector<Index> interval(Index lo, Index hi) const;

  // mu(a, b); zero when a is not below b.
  const BigInt& mobius(Index a, Index b) const { return mobius_[a * size() + b]; }

 private:
  FlatLattice() = default;
  void tabulate();

  int n_ = 0;
  std::vector<ElementSet> sets_;
  std::vector<int> rank_of_;
  std::vector<Index> order_;  // identity permutation; backs of_rank spans
  std::vector<int> rank_start_;
  std::vector<std::vector<Index>> covers_;
  std::vector<Index> join_;
  std::vector<Index> meet_;
  std::vector<BigInt> mobius_;
};

// Flats are closed sets of the original ground set, so loops sit in the
// bottom flat and parallel elements share every flat.
FlatLattice lattice_of_flats(const Matroid& m);

// chi_[a,b](t) = sum over a <= h <= b of mu(a, h) t^{rank b - rank h}.
// Throws NotComparable when a is not below b.
IntPoly characteristic_polynomial(const FlatLattice& l, FlatLattice::Index a,
                                  FlatLattice::Index b);
IntPoly characteristic_polynomial(const FlatLattice& l);

// Doubly-indexed Whitney numbers. w[i][j] sums mu(F, G) and W[i][j] counts
// pairs F <= G over flats of ranks i and j. Row 0 gives the Whitney numbers
// of the first (w1) and second (W1) kind.
struct WhitneyTable {
  std::vector<std::vector<BigInt>> w;
  std::vector<std::vector<BigInt>> W;
  std::vector<BigInt> w1;
  std::vector<BigInt> W1;
};

WhitneyTable whitney_table(const FlatLattice& l);

// rank(F) + rank(G) == rank(F v G) + rank(F ^ G) for all pairs. Cross-checks
// the answer against W_1 == W_{r-1} and throws InconsistentModularityChecks if
// the two disagree.
bool is_modular_lattice(const FlatLattice& l);

// Every rank-2 flat covers at least three atoms and every hyperplane meets
// every rank-2 flat above the bottom.
bool is_projective_geometry(const FlatLattice& l);

struct LatticeViolation {
  enum class Kind { NotAtomic, NotSemimodular } kind;
  FlatLattice::Index first;
  FlatLattice::Index second;  // equals `first` for atomicity violations
  std::string describe() const;
};

// Exhaustive atomicity and semimodularity check; empty for geometric
// lattices.
std::vector<LatticeViolation> check_geometric(const FlatLattice& l);

}  // namespace matkls

#endif  // MATKLS_LATTICE_HPP
