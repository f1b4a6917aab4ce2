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

#ifndef MATKLS_BUILDERS_HPP
#define MATKLS_BUILDERS_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matkls/matroid.hpp"

namespace matkls {

// Column matroid of a rows x cols matrix over GF(p), p in {2, 3, 5, 7}.
// Entries are reduced mod p (negative values allowed). Throws NotPrime,
// UnsupportedField, TooManyColumns (cols > 32) or ParseError on a shape
// mismatch.
Matroid matroid_from_matrix(int p, int rows, int cols,
                            const std::vector<std::vector<long>>& entries,
                            std::string label = {});

Matroid uniform_matroid(int k, int n);
Matroid boolean_matroid(int n);
// PG(d, q): the (q^{d+1}-1)/(q-1) points of GF(q)^{d+1}, rank d+1.
Matroid projective_geometry(int d, int q);
Matroid fano();
Matroid fano_dual();
// Cycle matroid of a multigraph; edge (u, u) is a loop.
Matroid graphic_matroid(const std::vector<std::pair<int, int>>& edges,
                        std::string label = {});

// Named-matroid grammar:
//   uniform:k,n | boolean:n | pg:d,q | fano | fano-dual
//   | graphic:u-v,u-v,... | sum:<spec>+<spec>[+<spec>...]
// The returned matroid is labelled with `spec`.
Matroid build_named(std::string_view spec);

}  // namespace matkls

#endif  // MATKLS_BUILDERS_HPP
