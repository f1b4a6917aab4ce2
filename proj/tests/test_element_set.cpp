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

#include <vector>

#include "doctest.h"
#include "matkls/element_set.hpp"
#include "matkls/error.hpp"

using matkls::ElementSet;
using matkls::Error;
using matkls::ErrorCode;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_SUITE("element_set") {

TEST_CASE("construction and membership") {
  const auto s = ElementSet::of(5, {0, 3});
  CHECK(s.bits() == 0b01001u);
  CHECK(s.size() == 2);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(1));
  CHECK_FALSE(s.contains(7));
  CHECK(s.first() == 0);
  CHECK(s.to_string() == "{0,3}");
  CHECK(ElementSet::empty(4).is_empty());
  CHECK(ElementSet::empty(4).first() == -1);
  CHECK(ElementSet::full(4).bits() == 0xFu);
  CHECK(ElementSet::full(32).size() == 32);
}

TEST_CASE("invalid input is rejected") {
  CHECK(code_of([] { ElementSet(0b100, 2); }) == ErrorCode::InvalidElement);
  CHECK(code_of([] { ElementSet(0, 33); }) == ErrorCode::CapacityExceeded);
  CHECK(code_of([] { (void)ElementSet::of(3, {3}); }) == ErrorCode::InvalidElement);
  CHECK(code_of([] { (void)ElementSet::of(3, {-1}); }) == ErrorCode::InvalidElement);
  CHECK(code_of([] { (void)ElementSet::empty(3).with(5); }) ==
        ErrorCode::InvalidElement);
  CHECK(code_of([] { (void)(ElementSet::empty(3) | ElementSet::empty(4)); }) ==
        ErrorCode::InvalidElement);
}

TEST_CASE("set algebra agrees with bit arithmetic") {
  const int n = 6;
  for (std::uint32_t a = 0; a < 64; ++a) {
    for (std::uint32_t b = 0; b < 64; b += 5) {
      const ElementSet x(a, n), y(b, n);
      CHECK((x | y).bits() == (a | b));
      CHECK((x & y).bits() == (a & b));
      CHECK((x - y).bits() == (a & ~b));
      CHECK(x.complement().bits() == (~a & 63u));
      CHECK(x.is_subset_of(y) == ((a & ~b) == 0));
    }
  }
}

TEST_CASE("elements and for_each enumerate in increasing order") {
  const auto s = ElementSet::of(10, {7, 2, 9});
  CHECK(s.elements() == std::vector<int>{2, 7, 9});
  std::vector<int> seen;
  s.for_each([&](int e) { seen.push_back(e); });
  CHECK(seen == s.elements());
  CHECK(s.with(4).without(7).elements() == std::vector<int>{2, 4, 9});
}

TEST_CASE("ordering compares ground size first") {
  CHECK(ElementSet(0b11, 3) < ElementSet(0b01, 4));
  CHECK(ElementSet(0b01, 3) < ElementSet(0b10, 3));
  CHECK(ElementSet(0b01, 3) != ElementSet(0b01, 4));
}

}  // TEST_SUITE
