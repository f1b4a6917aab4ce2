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

#include "matkls/matroid.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>

#include "matkls/error.hpp"

namespace matkls {

namespace {

using Bits = std::uint32_t;

Bits bit(int e) { return Bits{1} << e; }

// Packs the members of `bits` that lie in `kept` onto consecutive positions.
Bits compress(Bits bits, Bits kept) {
  Bits out = 0;
  int pos = 0;
  for (Bits k = kept; k != 0; k &= k - 1) {
    if (bits & (k & -k)) out |= bit(pos);
    ++pos;
  }
  return out;
}

void sort_unique(std::vector<ElementSet>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

// ---------------------------------------------------------------------------
// Matroid

Matroid::Matroid() : bases_{ElementSet::empty(0)} {}

Matroid::Matroid(int n, int r, std::vector<ElementSet> bases,
                 std::string label)
    : n_(n), r_(r), bases_(std::move(bases)), label_(std::move(label)) {}

Matroid Matroid::from_trusted_bases(int n, std::vector<ElementSet> bases,
                                    std::string label) {
  if (n < 0 || n > ElementSet::kCapacity) {
    throw Error(ErrorCode::CapacityExceeded,
                "ground set of " + std::to_string(n) + " elements");
  }
  if (bases.empty()) throw Error(ErrorCode::EmptyBases, "no bases given");
  for (const auto& b : bases) {
    if (b.ground_size() != n) {
      throw Error(ErrorCode::InvalidElement,
                  "basis " + b.to_string() + " on wrong ground set");
    }
  }
  sort_unique(bases);
  const int r = bases.front().size();
  for (const auto& b : bases) {
    if (b.size() != r) {
      throw Error(ErrorCode::UnequalBasisSizes,
                  bases.front().to_string() + " has size " +
                      std::to_string(r) + " but " + b.to_string() +
                      " has size " + std::to_string(b.size()));
    }
  }
  return Matroid(n, r, std::move(bases), std::move(label));
}

Matroid Matroid::with_label(std::string label) const {
  Matroid copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

int Matroid::rank(ElementSet s) const {
  const Bits bits = s.bits();
  const int cap = std::min(s.size(), r_);
  int best = 0;
  for (const auto& b : bases_) {
    best = std::max(best, std::popcount(b.bits() & bits));
    if (best == cap) break;
  }
  return best;
}

ElementSet Matroid::closure(ElementSet s) const {
  // e lies outside cl(S) iff some basis meets S maximally and contains e.
  const int k = rank(s);
  const Bits bits = s.bits();
  Bits outside = 0;
  for (const auto& b : bases_) {
    if (std::popcount(b.bits() & bits) == k) outside |= b.bits() & ~bits;
  }
  return ElementSet(ElementSet::mask(n_) & ~outside, n_);
}

bool Matroid::is_basis(ElementSet s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s);
}

bool Matroid::is_independent(ElementSet s) const {
  return rank(s) == s.size();
}

bool Matroid::is_loop(int e) const {
  return rank(ElementSet::of(n_, {e})) == 0;
}

bool Matroid::is_coloop(int e) const {
  return std::all_of(bases_.begin(), bases_.end(),
                     [e](ElementSet b) { return b.contains(e); });
}

bool Matroid::is_simple() const {
  for (int e = 0; e < n_; ++e) {
    if (is_loop(e)) return false;
    for (int f = e + 1; f < n_; ++f) {
      if (rank(ElementSet::of(n_, {e, f})) < 2) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Validated construction

Matroid matroid_from_bases(int n, const std::vector<std::vector<int>>& bases,
                           std::string label) {
  if (n < 0 || n > ElementSet::kCapacity) {
    throw Error(ErrorCode::CapacityExceeded,
                "ground set of " + std::to_string(n) + " elements");
  }
  std::vector<ElementSet> sets;
  sets.reserve(bases.size());
  for (const auto& b : bases) {
    const ElementSet s = ElementSet::of(n, b);
    if (static_cast<std::size_t>(s.size()) != b.size()) {
      throw Error(ErrorCode::InvalidElement, "repeated element in basis");
    }
    sets.push_back(s);
  }
  return matroid_from_basis_sets(n, std::move(sets), std::move(label));
}

Matroid matroid_from_basis_sets(int n, std::vector<ElementSet> bases,
                                std::string label) {
  Matroid m = Matroid::from_trusted_bases(n, std::move(bases), std::move(label));
  const auto family = m.bases();
  for (const auto& b1 : family) {
    for (const auto& b2 : family) {
      if (b1 == b2) continue;
      const Bits only1 = b1.bits() & ~b2.bits();
      const Bits only2 = b2.bits() & ~b1.bits();
      for (Bits e = only1; e != 0; e &= e - 1) {
        const Bits drop = b1.bits() & ~(e & -e);
        bool ok = false;
        for (Bits f = only2; f != 0 && !ok; f &= f - 1) {
          ok = m.is_basis(ElementSet(drop | (f & -f), n));
        }
        if (!ok) {
          throw Error(ErrorCode::ExchangeAxiomViolated,
                      "B1=" + b1.to_string() + " B2=" + b2.to_string() +
                          " e=" + std::to_string(std::countr_zero(e)));
        }
      }
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Minors

MinorMap MinorMap::keeping(ElementSet kept) {
  MinorMap map{kept, std::vector<int>(kept.ground_size(), -1)};
  int next = 0;
  kept.for_each([&](int e) { map.relabel[e] = next++; });
  return map;
}

ElementSet MinorMap::apply(ElementSet s) const {
  if (!s.is_subset_of(kept)) {
    throw Error(ErrorCode::InvalidElement,
                s.to_string() + " not contained in " + kept.to_string());
  }
  return ElementSet(compress(s.bits(), kept.bits()), kept.size());
}

namespace {

// Bases of the minor on `kept` are the given restricted bases, relabelled.
Minor relabelled(ElementSet kept, const std::vector<Bits>& restricted) {
  MinorMap map = MinorMap::keeping(kept);
  std::vector<ElementSet> bases;
  bases.reserve(restricted.size());
  for (Bits b : restricted) {
    bases.emplace_back(compress(b, kept.bits()), kept.size());
  }
  return {Matroid::from_trusted_bases(kept.size(), std::move(bases)),
          std::move(map)};
}

}  // namespace

Minor delete_elements(const Matroid& m, ElementSet s) {
  if (s.ground_size() != m.size()) {
    throw Error(ErrorCode::InvalidElement, "deletion set on wrong ground set");
  }
  if (m.size() > 0 && s == m.ground()) {
    throw Error(ErrorCode::DeletesEverything, "cannot delete every element");
  }
  const ElementSet kept = m.ground() - s;
  const int k = m.rank(kept);
  std::vector<Bits> restricted;
  for (const auto& b : m.bases()) {
    const Bits inside = b.bits() & kept.bits();
    if (std::popcount(inside) == k) restricted.push_back(inside);
  }
  return relabelled(kept, restricted);
}

Minor contract(const Matroid& m, ElementSet s) {
  if (s.ground_size() != m.size()) {
    throw Error(ErrorCode::InvalidElement,
                "contraction set on wrong ground set");
  }
  if (m.size() > 0 && s == m.ground()) {
    throw Error(ErrorCode::ContractsEverything,
                "cannot contract every element");
  }
  const ElementSet kept = m.ground() - s;
  const int k = m.rank(s);
  std::vector<Bits> restricted;
  for (const auto& b : m.bases()) {
    if (std::popcount(b.bits() & s.bits()) == k) {
      restricted.push_back(b.bits() & kept.bits());
    }
  }
  return relabelled(kept, restricted);
}

Minor simplify(const Matroid& m) {
  const int n = m.size();
  Bits kept = 0;
  for (int e = 0; e < n; ++e) {
    if (m.is_loop(e)) continue;
    bool parallel = false;
    for (Bits k = kept; k != 0 && !parallel; k &= k - 1) {
      const int f = std::countr_zero(k);
      parallel = m.rank(ElementSet::of(n, {e, f})) == 1;
    }
    if (!parallel) kept |= bit(e);
  }
  if (kept == 0) {
    return {Matroid(), MinorMap::keeping(ElementSet::empty(n))};
  }
  Minor out = delete_elements(m, ElementSet(ElementSet::mask(n) & ~kept, n));
  out.matroid = out.matroid.with_label(m.label());
  return out;
}

Matroid restrict_to(const Matroid& m, ElementSet kept) {
  if (kept.is_empty()) return Matroid();
  return delete_elements(m, m.ground() - kept).matroid;
}

Matroid dual(const Matroid& m) {
  std::vector<ElementSet> bases;
  bases.reserve(m.bases().size());
  for (const auto& b : m.bases()) bases.push_back(b.complement());
  return Matroid::from_trusted_bases(m.size(), std::move(bases));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  const int n = a.size() + b.size();
  if (n > ElementSet::kCapacity) {
    throw Error(ErrorCode::CapacityExceeded,
                "direct sum has " + std::to_string(n) + " elements");
  }
  if (a.bases().size() * b.bases().size() > kMaxBases) {
    throw Error(ErrorCode::TooManyBases, "direct sum basis family too large");
  }
  std::vector<ElementSet> bases;
  bases.reserve(a.bases().size() * b.bases().size());
  for (const auto& x : a.bases()) {
    for (const auto& y : b.bases()) {
      bases.emplace_back(x.bits() | (y.bits() << a.size()), n);
    }
  }
  std::string label;
  if (!a.label().empty() || !b.label().empty()) {
    label = a.label() + "+" + b.label();
  }
  return Matroid::from_trusted_bases(n, std::move(bases), std::move(label));
}

// ---------------------------------------------------------------------------
// Flats and connectivity

std::vector<std::vector<ElementSet>> flats_by_rank(const Matroid& m) {
  std::vector<std::vector<ElementSet>> levels(m.rank() + 1);
  levels[0].push_back(m.closure(ElementSet::empty(m.size())));
  for (int k = 0; k < m.rank(); ++k) {
    std::vector<ElementSet> next;
    for (const auto& f : levels[k]) {
      for (int a = 0; a < m.size(); ++a) {
        if (!f.contains(a)) next.push_back(m.closure(f.with(a)));
      }
    }
    sort_unique(next);
    levels[k + 1] = std::move(next);
  }
  return levels;
}

std::vector<ElementSet> components(const Matroid& m) {
  // Components of the fundamental graph with respect to one basis.
  const int n = m.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const ElementSet basis = m.bases().front();
  for (int e = 0; e < n; ++e) {
    if (basis.contains(e)) continue;
    basis.for_each([&](int b) {
      if (m.is_basis(basis.without(b).with(e))) parent[find(e)] = find(b);
    });
  }
  std::vector<Bits> groups(n, 0);
  for (int e = 0; e < n; ++e) groups[find(e)] |= bit(e);
  std::vector<ElementSet> out;
  for (Bits g : groups) {
    if (g != 0) out.emplace_back(g, n);
  }
  std::sort(out.begin(), out.end(), [](ElementSet x, ElementSet y) {
    return x.first() < y.first();
  });
  return out;
}

bool is_connected(const Matroid& m) {
  return m.size() <= 1 || components(m).size() == 1;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

struct IsoData {
  explicit IsoData(const Matroid& m) : n(m.size()), pair_rank(n * n, 0) {
    const auto levels = flats_by_rank(m);
    for (const auto& level : levels) flat_counts.push_back(level.size());
    signature.assign(n, {});
    for (int e = 0; e < n; ++e) {
      auto& sig = signature[e];
      sig.push_back(static_cast<long>(std::count_if(
          m.bases().begin(), m.bases().end(),
          [e](ElementSet b) { return b.contains(e); })));
      for (const auto& level : levels) {
        sig.push_back(static_cast<long>(std::count_if(
            level.begin(), level.end(),
            [e](ElementSet f) { return f.contains(e); })));
      }
    }
    sorted_signatures = signature;
    std::sort(sorted_signatures.begin(), sorted_signatures.end());
    for (int e = 0; e < n; ++e) {
      for (int f = 0; f < n; ++f) {
        pair_rank[e * n + f] =
            m.rank(ElementSet(bit(e) | bit(f), n));
      }
    }
    by_top.assign(n, {});
    for (const auto& b : m.bases()) {
      if (!b.is_empty()) by_top[31 - std::countl_zero(b.bits())].push_back(b);
    }
  }

  int n;
  std::vector<std::size_t> flat_counts;
  std::vector<std::vector<long>> signature;
  std::vector<std::vector<long>> sorted_signatures;
  std::vector<int> pair_rank;
  // Bases grouped by their highest element.
  std::vector<std::vector<ElementSet>> by_top;
};

bool cheap_invariants_match(const Matroid& a, const Matroid& b) {
  return a.size() == b.size() && a.rank() == b.rank() &&
         a.bases().size() == b.bases().size();
}

class IsoSearch {
 public:
  IsoSearch(const Matroid& a, const Matroid& b, const IsoData& da,
            const IsoData& db)
      : a_(a), b_(b), da_(da), db_(db), phi_(a.size(), -1),
        used_(b.size(), false) {}

  bool run() { return extend(0); }
  const std::vector<int>& mapping() const { return phi_; }

 private:
  bool extend(int e) {
    const int n = a_.size();
    if (e == n) return true;
    for (int img = 0; img < n; ++img) {
      if (used_[img] || da_.signature[e] != db_.signature[img]) continue;
      if (!consistent(e, img)) continue;
      phi_[e] = img;
      used_[img] = true;
      if (extend(e + 1)) return true;
      used_[img] = false;
      phi_[e] = -1;
    }
    return false;
  }

  bool consistent(int e, int img) {
    const int n = a_.size();
    for (int p = 0; p < e; ++p) {
      if (da_.pair_rank[p * n + e] != db_.pair_rank[phi_[p] * n + img]) {
        return false;
      }
    }
    phi_[e] = img;
    bool ok = true;
    for (const auto& basis : da_.by_top[e]) {
      Bits image = 0;
      basis.for_each([&](int x) { image |= bit(phi_[x]); });
      if (!b_.is_basis(ElementSet(image, n))) {
        ok = false;
        break;
      }
    }
    phi_[e] = -1;
    return ok;
  }

  const Matroid& a_;
  const Matroid& b_;
  const IsoData& da_;
  const IsoData& db_;
  std::vector<int> phi_;
  std::vector<bool> used_;
};

std::optional<std::vector<int>> isomorphism_with(const Matroid& a,
                                                 const Matroid& b,
                                                 const IsoData& db) {
  if (!cheap_invariants_match(a, b)) return std::nullopt;
  const IsoData da(a);
  if (da.flat_counts != db.flat_counts ||
      da.sorted_signatures != db.sorted_signatures) {
    return std::nullopt;
  }
  IsoSearch search(a, b, da, db);
  if (!search.run()) return std::nullopt;
  return search.mapping();
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Matroid& a,
                                                 const Matroid& b) {
  if (!cheap_invariants_match(a, b)) return std::nullopt;
  return isomorphism_with(a, b, IsoData(b));
}

bool are_isomorphic(const Matroid& a, const Matroid& b) {
  return find_isomorphism(a, b).has_value();
}

// ---------------------------------------------------------------------------
// Minors and regularity

namespace {

// Calls f(bits) for every subset of `pool` with exactly k members, in
// lexicographic order of member positions; stops when f returns true.
template <class F>
bool for_each_subset(Bits pool, int k, F&& f) {
  std::vector<int> members;
  for (Bits p = pool; p != 0; p &= p - 1) members.push_back(std::countr_zero(p));
  const int m = static_cast<int>(members.size());
  if (k < 0 || k > m) return false;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Bits s = 0;
    for (int i : idx) s |= bit(members[i]);
    if (f(s)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Matroid fano_plane() {
  // Points are the nonzero vectors of GF(2)^3; lines are triples XOR-ing to 0.
  std::vector<ElementSet> bases;
  for (int a = 0; a < 7; ++a) {
    for (int b = a + 1; b < 7; ++b) {
      for (int c = b + 1; c < 7; ++c) {
        if (((a + 1) ^ (b + 1) ^ (c + 1)) != 0) {
          bases.push_back(ElementSet::of(7, {a, b, c}));
        }
      }
    }
  }
  return Matroid::from_trusted_bases(7, std::move(bases), "fano");
}

Matroid u24() {
  std::vector<ElementSet> bases;
  for_each_subset(0xFu, 2, [&](Bits s) {
    bases.emplace_back(s, 4);
    return false;
  });
  return Matroid::from_trusted_bases(4, std::move(bases), "uniform:2,4");
}

bool has_minor_with(const Matroid& m, const Matroid& n, const IsoData& dn) {
  const int corank_m = m.size() - m.rank();
  const int corank_n = n.size() - n.rank();
  if (n.size() > m.size() || n.rank() > m.rank() || corank_n > corank_m) {
    return false;
  }
  const int contract_size = m.rank() - n.rank();
  const int keep_size = n.size();
  const Bits all = ElementSet::mask(m.size());
  return for_each_subset(all, contract_size, [&](Bits c) {
    const ElementSet cset(c, m.size());
    if (!m.is_independent(cset)) return false;
    return for_each_subset(all & ~c, keep_size, [&](Bits k) {
      if (m.rank(ElementSet(c | k, m.size())) != m.rank()) return false;
      // Bases of M/C|K are B \ C for bases B with C <= B <= C u K.
      std::vector<ElementSet> bases;
      for (const auto& b : m.bases()) {
        const Bits bb = b.bits();
        if ((bb & c) == c && (bb & ~(c | k)) == 0) {
          bases.emplace_back(compress(bb & ~c, k), keep_size);
        }
      }
      if (bases.size() != n.bases().size()) return false;
      const Matroid minor =
          Matroid::from_trusted_bases(keep_size, std::move(bases));
      return isomorphism_with(minor, n, dn).has_value();
    });
  });
}

}  // namespace

bool has_minor(const Matroid& m, const Matroid& n) {
  return has_minor_with(m, n, IsoData(n));
}

bool is_regular(const Matroid& m) {
  static const Matroid kU24 = u24();
  static const Matroid kFano = fano_plane();
  static const Matroid kFanoDual = dual(kFano);
  static const IsoData kU24Data(kU24);
  static const IsoData kFanoData(kFano);
  static const IsoData kFanoDualData(kFanoDual);
  return !has_minor_with(m, kU24, kU24Data) &&
         !has_minor_with(m, kFano, kFanoData) &&
         !has_minor_with(m, kFanoDual, kFanoDualData);
}

int find_connected_contraction_element(const Matroid& m) {
  if (m.rank() == 0) {
    throw Error(ErrorCode::RankZero, "matroid has rank 0");
  }
  if (!m.is_simple()) throw Error(ErrorCode::NotSimple, "matroid not simple");
  if (!is_connected(m)) {
    throw Error(ErrorCode::NotConnected, "matroid not connected");
  }
  if (m.size() == 1) return 0;
  for (int i = 0; i < m.size(); ++i) {
    const Minor c = contract(m, ElementSet::of(m.size(), {i}));
    if (is_connected(simplify(c.matroid).matroid)) return i;
  }
  throw Error(ErrorCode::NotConnected,
              "no element has a connected simplified contraction");
}

}  // namespace matkls
