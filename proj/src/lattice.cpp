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

#include "matkls/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "matkls/error.hpp"

namespace matkls {

using Index = FlatLattice::Index;

FlatLattice FlatLattice::from_sets(int n, std::vector<ElementSet> sets) {
  if (sets.empty()) throw Error(ErrorCode::NotALattice, "empty family");
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  for (const auto& s : sets) {
    if (s.ground_size() != n) {
      throw Error(ErrorCode::InvalidElement, "set on wrong ground set");
    }
  }

  // Heights by increasing cardinality: a strict subset is always smaller.
  std::vector<std::size_t> by_size(sets.size());
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(), [&](auto x, auto y) {
    return sets[x].size() < sets[y].size();
  });
  std::vector<int> height(sets.size(), 0);
  for (std::size_t i = 0; i < by_size.size(); ++i) {
    const auto x = by_size[i];
    for (std::size_t j = 0; j < i; ++j) {
      const auto y = by_size[j];
      if (sets[y] != sets[x] && sets[y].is_subset_of(sets[x])) {
        height[x] = std::max(height[x], height[y] + 1);
      }
    }
  }

  std::vector<std::size_t> order(sets.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto x, auto y) {
    if (height[x] != height[y]) return height[x] < height[y];
    return sets[x] < sets[y];
  });

  FlatLattice l;
  l.n_ = n;
  for (auto x : order) {
    l.sets_.push_back(sets[x]);
    l.rank_of_.push_back(height[x]);
  }
  const int f = l.size();
  for (Index i = 0; i < f; ++i) {
    if (!l.leq(0, i) || !l.leq(i, f - 1)) {
      throw Error(ErrorCode::NotALattice, "family has no bottom or no top");
    }
  }
  l.tabulate();
  return l;
}

void FlatLattice::tabulate() {
  const int f = size();
  order_.resize(f);
  std::iota(order_.begin(), order_.end(), 0);
  rank_start_.assign(rank() + 2, f);
  for (Index i = f - 1; i >= 0; --i) rank_start_[rank_of_[i]] = i;
  for (int k = rank(); k >= 0; --k) {
    rank_start_[k] = std::min(rank_start_[k], rank_start_[k + 1]);
  }

  covers_.assign(f, {});
  for (Index a = 0; a < f; ++a) {
    for (Index b = a + 1; b < f; ++b) {
      if (!leq(a, b)) continue;
      bool covered = true;
      for (Index h = a + 1; h < b && covered; ++h) {
        covered = !(leq(a, h) && leq(h, b));
      }
      if (covered) covers_[a].push_back(b);
    }
  }

  join_.assign(static_cast<std::size_t>(f) * f, -1);
  meet_.assign(static_cast<std::size_t>(f) * f, -1);
  for (Index a = 0; a < f; ++a) {
    for (Index b = a; b < f; ++b) {
      const ElementSet both = sets_[a] | sets_[b];
      Index j = -1;
      for (Index u = b; u < f; ++u) {
        if (!both.is_subset_of(sets_[u])) continue;
        if (j < 0) {
          j = u;
        } else if (!leq(j, u)) {
          throw Error(ErrorCode::NotALattice,
                      "no least upper bound for " + sets_[a].to_string() +
                          " and " + sets_[b].to_string());
        }
      }
      const ElementSet common = sets_[a] & sets_[b];
      Index m = -1;
      for (Index d = a; d >= 0; --d) {
        if (!sets_[d].is_subset_of(common)) continue;
        if (m < 0) {
          m = d;
        } else if (!leq(d, m)) {
          throw Error(ErrorCode::NotALattice,
                      "no greatest lower bound for " + sets_[a].to_string() +
                          " and " + sets_[b].to_string());
        }
      }
      join_[a * f + b] = join_[b * f + a] = j;
      meet_[a * f + b] = meet_[b * f + a] = m;
    }
  }

  // mu(a, a) = 1 and mu(a, b) = -sum_{a <= h < b} mu(a, h).
  mobius_.assign(static_cast<std::size_t>(f) * f, BigInt(0));
  for (Index a = 0; a < f; ++a) {
    std::vector<Index> up;
    for (Index b = a; b < f; ++b) {
      if (!leq(a, b)) continue;
      BigInt value = 0;
      if (b == a) {
        value = 1;
      } else {
        for (Index h : up) {
          if (leq(h, b)) value -= mobius_[a * f + h];
        }
      }
      mobius_[a * f + b] = value;
      up.push_back(b);
    }
  }
}

std::span<const Index> FlatLattice::of_rank(int k) const {
  if (k < 0 || k > rank()) return {};
  return std::span<const Index>(order_).subspan(
      rank_start_[k], rank_start_[k + 1] - rank_start_[k]);
}

std::optional<Index> FlatLattice::index_of(ElementSet s) const {
  for (Index i = 0; i < size(); ++i) {
    if (sets_[i] == s) return i;
  }
  return std::nullopt;
}

std::vector<Index> FlatLattice::interval(Index lo, Index hi) const {
  std::vector<Index> out;
  if (!leq(lo, hi)) return out;
  for (Index h = lo; h <= hi; ++h) {
    if (leq(lo, h) && leq(h, hi)) out.push_back(h);
  }
  return out;
}

FlatLattice lattice_of_flats(const Matroid& m) {
  std::vector<ElementSet> flats;
  for (auto& level : flats_by_rank(m)) {
    flats.insert(flats.end(), level.begin(), level.end());
  }
  return FlatLattice::from_sets(m.size(), std::move(flats));
}

IntPoly characteristic_polynomial(const FlatLattice& l, Index a, Index b) {
  if (!l.leq(a, b)) {
    throw Error(ErrorCode::NotComparable,
                l.flat(a).to_string() + " is not below " + l.flat(b).to_string());
  }
  const int top = l.rank_of(b);
  std::vector<BigInt> coeffs(static_cast<std::size_t>(top - l.rank_of(a)) + 1);
  for (Index h : l.interval(a, b)) {
    coeffs[static_cast<std::size_t>(top - l.rank_of(h))] += l.mobius(a, h);
  }
  return IntPoly(std::move(coeffs));
}

IntPoly characteristic_polynomial(const FlatLattice& l) {
  return characteristic_polynomial(l, l.bottom(), l.top());
}

WhitneyTable whitney_table(const FlatLattice& l) {
  const int r = l.rank();
  const auto dim = static_cast<std::size_t>(r) + 1;
  WhitneyTable t;
  t.w.assign(dim, std::vector<BigInt>(dim, BigInt(0)));
  t.W.assign(dim, std::vector<BigInt>(dim, BigInt(0)));
  for (Index a = 0; a < l.size(); ++a) {
    for (Index b = a; b < l.size(); ++b) {
      if (!l.leq(a, b)) continue;
      const int i = l.rank_of(a);
      const int j = l.rank_of(b);
      t.w[i][j] += l.mobius(a, b);
      t.W[i][j] += 1;
    }
  }
  t.w1 = t.w[0];
  t.W1 = t.W[0];
  return t;
}

bool is_modular_lattice(const FlatLattice& l) {
  bool pairwise = true;
  for (Index a = 0; a < l.size() && pairwise; ++a) {
    for (Index b = a + 1; b < l.size() && pairwise; ++b) {
      pairwise = l.rank_of(a) + l.rank_of(b) ==
                 l.rank_of(l.join(a, b)) + l.rank_of(l.meet(a, b));
    }
  }
  const int r = l.rank();
  const bool hyperplane =
      r < 2 || l.of_rank(1).size() == l.of_rank(r - 1).size();
  if (pairwise != hyperplane) {
    throw Error(ErrorCode::InconsistentModularityChecks,
                "pairwise rank identity says " +
                    std::string(pairwise ? "modular" : "not modular") +
                    " but W_1 = " + std::to_string(l.of_rank(1).size()) +
                    ", W_{r-1} = " + std::to_string(l.of_rank(r - 1).size()));
  }
  return pairwise;
}

bool is_projective_geometry(const FlatLattice& l) {
  const int r = l.rank();
  if (r < 2) return true;
  for (Index line : l.of_rank(2)) {
    int atoms = 0;
    for (Index a : l.of_rank(1)) atoms += l.leq(a, line) ? 1 : 0;
    if (atoms < 3) return false;
    for (Index h : l.of_rank(r - 1)) {
      if (l.meet(h, line) == l.bottom()) return false;
    }
  }
  return true;
}

std::string LatticeViolation::describe() const {
  if (kind == Kind::NotAtomic) {
    return "element " + std::to_string(first) + " is not a join of atoms";
  }
  return "elements " + std::to_string(first) + " and " +
         std::to_string(second) + " violate semimodularity";
}

std::vector<LatticeViolation> check_geometric(const FlatLattice& l) {
  std::vector<LatticeViolation> out;
  for (Index x = 1; x < l.size(); ++x) {
    Index acc = l.bottom();
    for (Index a = 1; a < l.size(); ++a) {
      if (l.rank_of(a) == 1 && l.leq(a, x)) acc = l.join(acc, a);
    }
    if (acc != x) {
      out.push_back({LatticeViolation::Kind::NotAtomic, x, x});
    }
  }
  for (Index a = 0; a < l.size(); ++a) {
    for (Index b = a + 1; b < l.size(); ++b) {
      if (l.rank_of(a) + l.rank_of(b) <
          l.rank_of(l.join(a, b)) + l.rank_of(l.meet(a, b))) {
        out.push_back({LatticeViolation::Kind::NotSemimodular, a, b});
      }
    }
  }
  return out;
}

}  // namespace matkls
