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

#ifndef MATKLS_TESTS_SUPPORT_HPP
#define MATKLS_TESTS_SUPPORT_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "matkls/analysis.hpp"
#include "matkls/builders.hpp"
#include "matkls/error.hpp"
#include "matkls/matroid.hpp"

namespace testing {

template <class F>
matkls::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const matkls::Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return matkls::ErrorCode::ParseError;
}

// Built-in corpus members with at most max_n elements, plus matroids with
// loops and parallel classes that the corpus avoids.
inline std::vector<matkls::Matroid> small_matroids(int max_n) {
  std::vector<matkls::Matroid> out;
  for (auto& m : matkls::builtin_corpus()) {
    if (m.size() <= max_n) out.push_back(m);
  }
  auto extra = [&](const char* spec) {
    auto m = matkls::build_named(spec);
    if (m.size() <= max_n) out.push_back(m);
  };
  extra("graphic:0-0,0-1,1-2,0-2,0-2");      // loop, parallel pair
  extra("graphic:0-1,0-1,1-2,2-3,1-3");      // triangle plus a parallel edge
  extra("graphic:0-1,1-2,2-0,3-4");          // triangle and a coloop
  extra("sum:uniform:2,4+uniform:1,2");
  out.push_back(matkls::matroid_from_matrix(
      3, 2, 5, {{1, 0, 1, 1, 0}, {0, 1, 1, 2, 0}}, "gf3-with-zero"));
  return out;
}

}  // namespace testing

#endif  // MATKLS_TESTS_SUPPORT_HPP
