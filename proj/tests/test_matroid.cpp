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

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "matkls/builders.hpp"
#include "matkls/matroid.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace matkls;
using testing::code_of;

namespace {

Matroid permuted(const Matroid& m, const std::vector<int>& perm) {
  std::vector<ElementSet> bases;
  for (auto b : m.bases()) {
    std::uint32_t bits = 0;
    b.for_each([&](int e) { bits |= std::uint32_t{1} << perm[e]; });
    bases.emplace_back(bits, m.size());
  }
  return Matroid::from_trusted_bases(m.size(), bases);
}

bool same_bases(const Matroid& m, const oracle::M& o) {
  if (m.size() != o.n || m.bases().size() != o.bases.size()) return false;
  for (std::size_t i = 0; i < o.bases.size(); ++i) {
    if (m.bases()[i].bits() != o.bases[i]) return false;
  }
  return true;
}

// N is a minor of M if some disjoint contraction set C and deletion set D
// leave a matroid isomorphic to N.
bool brute_has_minor(const oracle::M& m, const oracle::M& n) {
  const oracle::Mask e = oracle::full(m.n);
  for (oracle::Mask c = 0; c <= e; ++c) {
    const oracle::Mask rest = e & ~c;
    for (oracle::Mask d = rest;; d = (d - 1) & rest) {
      if (oracle::pc(e & ~(c | d)) == n.n) {
        const auto con = oracle::contraction(m, c);
        const auto kept = oracle::squeeze(e & ~(c | d), rest);
        const auto minor = oracle::restriction(con, kept);
        if (oracle::rank(minor) == oracle::rank(n) && oracle::isomorphic(minor, n)) {
          return true;
        }
      }
      if (d == 0) break;
    }
  }
  return false;
}

}  // namespace

TEST_SUITE("matroid") {

TEST_CASE("matroid_from_bases accepts valid families") {
  const auto u23 = matroid_from_bases(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(u23.rank() == 2);
  CHECK(u23 == uniform_matroid(2, 3));
  const auto u12 = matroid_from_bases(2, {{0}, {1}});
  CHECK(u12.rank() == 1);
  CHECK(u12 == uniform_matroid(1, 2));
  // {0,1} and {1,2}: element 1 is a coloop and 0, 2 are parallel. The
  // exchange axiom holds for every pair, so this is a matroid.
  const auto coloop = matroid_from_bases(3, {{0, 1}, {1, 2}});
  CHECK(coloop.is_coloop(1));
  CHECK(coloop.closure(ElementSet::of(3, {0})) == ElementSet::of(3, {0, 2}));
}

TEST_CASE("matroid_from_bases rejects invalid families") {
  CHECK(code_of([] { matroid_from_bases(4, {{0, 1}, {2, 3}}); }) ==
        ErrorCode::ExchangeAxiomViolated);
  CHECK(code_of([] { matroid_from_bases(3, std::vector<std::vector<int>>{}); }) ==
        ErrorCode::EmptyBases);
  CHECK(code_of([] { matroid_from_bases(3, {{0, 1}, {2}}); }) ==
        ErrorCode::UnequalBasisSizes);
  CHECK(code_of([] { matroid_from_bases(3, {{0, 3}}); }) == ErrorCode::InvalidElement);
  CHECK(code_of([] { matroid_from_bases(3, {{0, 0}}); }) == ErrorCode::InvalidElement);
  CHECK(code_of([] { matroid_from_bases(33, {{0}}); }) == ErrorCode::CapacityExceeded);
  try {
    matroid_from_bases(4, {{0, 1}, {2, 3}});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("B1=") != std::string::npos);
  }
}

TEST_CASE("exchange validation agrees with brute force on all small families") {
  // Every family of 2-subsets of a 4-set.
  std::vector<std::vector<int>> pairs;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) pairs.push_back({a, b});
  }
  for (int mask = 1; mask < 64; ++mask) {
    std::vector<std::vector<int>> family;
    std::vector<std::uint32_t> bits;
    for (int i = 0; i < 6; ++i) {
      if ((mask >> i) & 1) {
        family.push_back(pairs[i]);
        bits.push_back((1u << pairs[i][0]) | (1u << pairs[i][1]));
      }
    }
    bool valid = true;
    for (auto b1 : bits) {
      for (auto b2 : bits) {
        for (int e = 0; e < 4; ++e) {
          if (!((b1 >> e) & 1) || ((b2 >> e) & 1)) continue;
          bool found = false;
          for (int f = 0; f < 4; ++f) {
            if (!((b2 >> f) & 1) || ((b1 >> f) & 1)) continue;
            const auto swapped = (b1 & ~(1u << e)) | (1u << f);
            found |= std::find(bits.begin(), bits.end(), swapped) != bits.end();
          }
          valid &= found;
        }
      }
    }
    bool accepted = true;
    try {
      matroid_from_bases(4, family);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ExchangeAxiomViolated);
      accepted = false;
    }
    CHECK(accepted == valid);
  }
}

TEST_CASE("rank and closure agree with the oracle on every subset") {
  for (const auto& m : testing::small_matroids(10)) {
    CAPTURE(m.label());
    const auto o = oracle::from(m);
    for (std::uint32_t s = 0; s <= oracle::full(m.size()); ++s) {
      const ElementSet set(s, m.size());
      REQUIRE(m.rank(set) == oracle::rank(o, s));
      REQUIRE(m.closure(set).bits() == oracle::closure(o, s));
      REQUIRE(m.is_independent(set) == oracle::independent(o, s));
    }
  }
}

TEST_CASE("rank is submodular, monotone and unit-increasing") {
  for (const auto& m : testing::small_matroids(7)) {
    CAPTURE(m.label());
    const int n = m.size();
    for (std::uint32_t a = 0; a <= oracle::full(n); ++a) {
      const ElementSet x(a, n);
      for (int e = 0; e < n; ++e) {
        const int up = m.rank(x.with(e)) - m.rank(x);
        REQUIRE((up == 0 || up == 1));
      }
      for (std::uint32_t b = 0; b <= oracle::full(n); ++b) {
        const ElementSet y(b, n);
        REQUIRE(m.rank(x | y) + m.rank(x & y) <= m.rank(x) + m.rank(y));
      }
    }
  }
}

TEST_CASE("closure is extensive, idempotent and monotone") {
  for (const auto& m : testing::small_matroids(8)) {
    CAPTURE(m.label());
    const int n = m.size();
    for (std::uint32_t a = 0; a <= oracle::full(n); ++a) {
      const ElementSet x(a, n);
      const ElementSet c = m.closure(x);
      REQUIRE(x.is_subset_of(c));
      REQUIRE(m.closure(c) == c);
      REQUIRE(m.rank(c) == m.rank(x));
      for (int e = 0; e < n; ++e) REQUIRE(c.is_subset_of(m.closure(x.with(e))));
    }
  }
}

TEST_CASE("rank and closure examples") {
  const auto u24 = uniform_matroid(2, 4);
  CHECK(u24.rank(ElementSet::of(4, {0, 1, 2})) == 2);
  CHECK(u24.rank(ElementSet::empty(4)) == 0);
  CHECK(u24.closure(ElementSet::of(4, {0, 1})) == ElementSet::full(4));
  const auto f = fano();
  int lines = 0;
  for (std::uint32_t s = 0; s < 128; ++s) {
    const ElementSet x(s, 7);
    if (x.size() == 2) {
      const auto c = f.closure(x);
      CHECK(c.size() == 3);
      CHECK(f.rank(c) == 2);
    }
    if (x.size() == 3 && f.rank(x) == 2) ++lines;
  }
  CHECK(lines == 7);
  const auto b4 = boolean_matroid(4);
  for (std::uint32_t s = 0; s < 16; ++s) {
    CHECK(b4.closure(ElementSet(s, 4)) == ElementSet(s, 4));
  }
}

TEST_CASE("deletion and contraction match the oracle minors") {
  for (const auto& m : testing::small_matroids(7)) {
    CAPTURE(m.label());
    const auto o = oracle::from(m);
    const int n = m.size();
    for (std::uint32_t s = 0; s < oracle::full(n); ++s) {
      const ElementSet set(s, n);
      const auto del = delete_elements(m, set);
      REQUIRE(same_bases(del.matroid, oracle::restriction(o, oracle::full(n) & ~s)));
      const auto con = contract(m, set);
      REQUIRE(same_bases(con.matroid, oracle::contraction(o, s)));
      REQUIRE(con.map.kept == set.complement());
      std::uint32_t image = 0;
      set.complement().for_each([&](int e) { image |= 1u << con.map.relabel[e]; });
      REQUIRE(image == oracle::full(n - set.size()));
    }
  }
}

TEST_CASE("minor examples and errors") {
  const auto u24 = uniform_matroid(2, 4);
  CHECK(delete_elements(u24, ElementSet::of(4, {3})).matroid == uniform_matroid(2, 3));
  const auto f = fano();
  const auto f6 = delete_elements(f, ElementSet::of(7, {0})).matroid;
  CHECK(f6.size() == 6);
  CHECK(f6.rank() == 3);
  for (int e = 0; e < 6; ++e) CHECK_FALSE(f6.is_coloop(e));
  CHECK(delete_elements(f, ElementSet::empty(7)).matroid == f);
  const auto c = contract(uniform_matroid(3, 4), ElementSet::of(4, {0}));
  CHECK(c.matroid == uniform_matroid(2, 3));
  CHECK(c.map.apply(ElementSet::of(4, {1, 3})) == ElementSet::of(3, {0, 2}));
  const auto p = contract(u24, ElementSet::of(4, {0})).matroid;
  CHECK(p.rank() == 1);
  CHECK(p.size() == 3);
  CHECK(p.closure(ElementSet::of(3, {0})) == ElementSet::full(3));
  CHECK(contract(f, ElementSet::empty(7)).matroid == f);
  CHECK(code_of([&] { delete_elements(f, ElementSet::full(7)); }) ==
        ErrorCode::DeletesEverything);
  CHECK(code_of([&] { contract(f, ElementSet::full(7)); }) ==
        ErrorCode::ContractsEverything);
  CHECK(code_of([&] { contract(f, ElementSet::empty(6)); }) ==
        ErrorCode::InvalidElement);
}

TEST_CASE("simplify") {
  const auto parallel = contract(uniform_matroid(2, 4), ElementSet::of(4, {0}));
  const auto s = simplify(parallel.matroid);
  CHECK(s.matroid == boolean_matroid(1));
  CHECK(simplify(fano()).matroid == fano());
  const auto loop_coloop = matroid_from_bases(2, {{1}});
  CHECK(simplify(loop_coloop).matroid == boolean_matroid(1));
  for (const auto& m : testing::small_matroids(9)) {
    CAPTURE(m.label());
    const auto si = simplify(m).matroid;
    CHECK(si.is_simple());
    CHECK(si.rank() == m.rank());
    CHECK(flats_by_rank(si).size() == flats_by_rank(m).size());
    for (std::size_t k = 0; k < flats_by_rank(m).size(); ++k) {
      CHECK(flats_by_rank(si)[k].size() == flats_by_rank(m)[k].size());
    }
  }
}

TEST_CASE("dual and direct sum") {
  for (const auto& m : testing::small_matroids(9)) {
    CAPTURE(m.label());
    const auto d = dual(m);
    CHECK(d.rank() == m.size() - m.rank());
    CHECK(dual(d) == m);
    CHECK(same_bases(d, oracle::dual(oracle::from(m))));
  }
  CHECK(direct_sum(boolean_matroid(1), boolean_matroid(1)) == boolean_matroid(2));
  const auto s = direct_sum(boolean_matroid(1), uniform_matroid(2, 3));
  CHECK(s.rank() == 3);
  CHECK(s.size() == 4);
  CHECK_FALSE(is_connected(s));
  CHECK(build_named("sum:boolean:1+uniform:2,3") == s);
}

TEST_CASE("connectivity agrees with the separator oracle") {
  for (const auto& m : testing::small_matroids(10)) {
    CAPTURE(m.label());
    const auto o = oracle::from(m);
    CHECK(is_connected(m) == oracle::connected(o));
    const auto comps = components(m);
    std::uint32_t seen = 0;
    for (auto c : comps) {
      CHECK((seen & c.bits()) == 0);
      seen |= c.bits();
      CHECK(oracle::connected(oracle::restriction(o, c.bits())));
      CHECK(m.rank(c) + m.rank(m.ground() - c) == m.rank());
    }
    CHECK(seen == oracle::full(m.size()));
  }
  CHECK_FALSE(is_connected(boolean_matroid(2)));
  CHECK(is_connected(uniform_matroid(2, 3)));
}

TEST_CASE("isomorphism examples") {
  CHECK(are_isomorphic(boolean_matroid(2), uniform_matroid(2, 2)));
  CHECK_FALSE(are_isomorphic(fano(), fano_dual()));
  const auto pg = build_named("pg:2,2");
  const auto witness = find_isomorphism(pg, fano());
  REQUIRE(witness.has_value());
  CHECK(permuted(pg, *witness) == fano());
  CHECK_FALSE(are_isomorphic(uniform_matroid(2, 4), build_named("graphic:0-1,0-1,1-2,1-2")));
}

TEST_CASE("isomorphism is invariant under random relabelling") {
  std::mt19937 rng(42);
  for (const auto& m : testing::small_matroids(12)) {
    CAPTURE(m.label());
    std::vector<int> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto p = permuted(m, perm);
      const auto w = find_isomorphism(m, p);
      REQUIRE(w.has_value());
      CHECK(permuted(m, *w) == p);
    }
  }
}

TEST_CASE("isomorphism agrees with brute force on small pairs") {
  std::vector<Matroid> ms;
  for (auto& m : testing::small_matroids(6)) ms.push_back(m);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i; j < ms.size(); ++j) {
      CAPTURE(ms[i].label());
      CAPTURE(ms[j].label());
      CHECK(are_isomorphic(ms[i], ms[j]) ==
            oracle::isomorphic(oracle::from(ms[i]), oracle::from(ms[j])));
    }
  }
}

TEST_CASE("has_minor examples") {
  const auto u24 = uniform_matroid(2, 4);
  CHECK(has_minor(u24, u24));
  CHECK_FALSE(has_minor(fano(), u24));
  CHECK_FALSE(has_minor(boolean_matroid(3), uniform_matroid(2, 3)));
  CHECK(has_minor(uniform_matroid(3, 5), u24));
  CHECK(has_minor(fano_dual(), fano_dual()));
}

TEST_CASE("has_minor agrees with exhaustive minor search") {
  const auto u24 = oracle::from(uniform_matroid(2, 4));
  const auto u23 = oracle::from(uniform_matroid(2, 3));
  for (const auto& m : testing::small_matroids(7)) {
    CAPTURE(m.label());
    const auto o = oracle::from(m);
    CHECK(has_minor(m, uniform_matroid(2, 4)) == brute_has_minor(o, u24));
    CHECK(has_minor(m, uniform_matroid(2, 3)) == brute_has_minor(o, u23));
  }
}

TEST_CASE("regularity") {
  CHECK_FALSE(is_regular(fano()));
  CHECK_FALSE(is_regular(fano_dual()));
  CHECK_FALSE(is_regular(uniform_matroid(2, 4)));
  CHECK(is_regular(build_named("graphic:0-1,0-2,0-3,1-2,1-3,2-3")));
  for (const auto& m : builtin_corpus()) {
    if (m.label().starts_with("graphic:")) CHECK(is_regular(m));
    if (m.label().starts_with("boolean:")) CHECK(is_regular(m));
  }
  CHECK(is_regular(uniform_matroid(1, 5)));
  CHECK(is_regular(uniform_matroid(4, 5)));
  CHECK_FALSE(is_regular(uniform_matroid(3, 6)));
}

TEST_CASE("find_connected_contraction_element") {
  CHECK(find_connected_contraction_element(uniform_matroid(3, 4)) == 0);
  CHECK(code_of([] { find_connected_contraction_element(boolean_matroid(2)); }) ==
        ErrorCode::NotConnected);
  CHECK(code_of([] {
          find_connected_contraction_element(build_named("graphic:0-1,0-1,1-2,0-2"));
        }) == ErrorCode::NotSimple);
  for (const auto& m : builtin_corpus()) {
    if (!m.is_simple() || !is_connected(m) || m.rank() < 1 || m.size() > 12) continue;
    CAPTURE(m.label());
    const int i = find_connected_contraction_element(m);
    if (m.size() == 1) continue;
    const auto c = simplify(contract(m, ElementSet::of(m.size(), {i})).matroid).matroid;
    CHECK(oracle::connected(oracle::from(c)));
  }
}

}  // TEST_SUITE
