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

#include "matkls/element_set.hpp"

#include <sstream>

#include "matkls/error.hpp"

namespace matkls {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::TooManyBases: return "TooManyBases";
    case ErrorCode::EmptyBases: return "EmptyBases";
    case ErrorCode::UnequalBasisSizes: return "UnequalBasisSizes";
    case ErrorCode::ExchangeAxiomViolated: return "ExchangeAxiomViolated";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::TooManyColumns: return "TooManyColumns";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DeletesEverything: return "DeletesEverything";
    case ErrorCode::ContractsEverything: return "ContractsEverything";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::InconsistentModularityChecks:
      return "InconsistentModularityChecks";
    case ErrorCode::DegreeExceedsRank: return "DegreeExceedsRank";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::RankZero: return "RankZero";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::MalformedFile: return "MalformedFile";
  }
  return "Unknown";
}

ElementSet::ElementSet(std::uint32_t bits, int n) : bits_(bits), n_(n) {
  if (n < 0 || n > kCapacity) {
    throw Error(ErrorCode::CapacityExceeded,
                "ground set size " + std::to_string(n) + " outside [0, 32]");
  }
  if ((bits & ~mask(n)) != 0) {
    throw Error(ErrorCode::InvalidElement,
                "element outside ground set of size " + std::to_string(n));
  }
}

ElementSet ElementSet::of(int n, std::initializer_list<int> elements) {
  return of(n, std::span<const int>(elements.begin(), elements.size()));
}

ElementSet ElementSet::of(int n, std::span<const int> elements) {
  std::uint32_t bits = 0;
  for (int e : elements) {
    if (e < 0 || e >= n) {
      throw Error(ErrorCode::InvalidElement,
                  "element " + std::to_string(e) + " not in [0, " +
                      std::to_string(n) + ")");
    }
    bits |= std::uint32_t{1} << e;
  }
  return ElementSet(bits, n);
}

ElementSet ElementSet::with(int e) const {
  if (e < 0 || e >= n_) {
    throw Error(ErrorCode::InvalidElement, "element " + std::to_string(e));
  }
  return ElementSet(bits_ | (std::uint32_t{1} << e), n_);
}

ElementSet ElementSet::without(int e) const {
  if (e < 0 || e >= n_) {
    throw Error(ErrorCode::InvalidElement, "element " + std::to_string(e));
  }
  return ElementSet(bits_ & ~(std::uint32_t{1} << e), n_);
}

namespace {
void require_same_ground(const ElementSet& a, const ElementSet& b) {
  if (a.ground_size() != b.ground_size()) {
    throw Error(ErrorCode::InvalidElement,
                "set operation across ground sets of size " +
                    std::to_string(a.ground_size()) + " and " +
                    std::to_string(b.ground_size()));
  }
}
}  // namespace

ElementSet ElementSet::operator|(ElementSet o) const {
  require_same_ground(*this, o);
  return ElementSet(bits_ | o.bits_, n_);
}

ElementSet ElementSet::operator&(ElementSet o) const {
  require_same_ground(*this, o);
  return ElementSet(bits_ & o.bits_, n_);
}

ElementSet ElementSet::operator-(ElementSet o) const {
  require_same_ground(*this, o);
  return ElementSet(bits_ & ~o.bits_, n_);
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int e) { out.push_back(e); });
  return out;
}

std::string ElementSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first_elem = true;
  for_each([&](int e) {
    if (!first_elem) os << ',';
    os << e;
    first_elem = false;
  });
  os << '}';
  return os.str();
}

}  // namespace matkls
