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

#ifndef MATKLS_ELEMENT_SET_HPP
#define MATKLS_ELEMENT_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace matkls {

// A subset of the ground set {0, ..., n-1}, n <= 32, stored as a bitmask.
// Binary operations require both operands to live on the same ground set.
class ElementSet {
 public:
  static constexpr int kCapacity = 32;

  constexpr ElementSet() = default;
  // Throws InvalidElement if a bit at position >= n is set.
  explicit ElementSet(std::uint32_t bits, int n);

  static ElementSet empty(int n) { return ElementSet(0, n); }
  static ElementSet full(int n) { return ElementSet(mask(n), n); }
  static ElementSet of(int n, std::initializer_list<int> elements);
  static ElementSet of(int n, std::span<const int> elements);

  static constexpr std::uint32_t mask(int n) {
    return n >= 32 ? 0xFFFFFFFFu : ((std::uint32_t{1} << n) - 1u);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int ground_size() const { return n_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const {
    return e >= 0 && e < n_ && ((bits_ >> e) & 1u) != 0;
  }
  constexpr bool is_subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  // Lowest member, or -1 when empty.
  constexpr int first() const {
    return bits_ == 0 ? -1 : std::countr_zero(bits_);
  }

  ElementSet with(int e) const;
  ElementSet without(int e) const;
  ElementSet complement() const { return ElementSet(~bits_ & mask(n_), n_); }

  ElementSet operator|(ElementSet o) const;
  ElementSet operator&(ElementSet o) const;
  ElementSet operator-(ElementSet o) const;

  std::vector<int> elements() const;
  std::string to_string() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  // Orders by ground size, then by the bitmask read as an integer.
  friend constexpr std::strong_ordering operator<=>(ElementSet a,
                                                    ElementSet b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint32_t bits_ = 0;
  int n_ = 0;
};

}  // namespace matkls

#endif  // MATKLS_ELEMENT_SET_HPP
