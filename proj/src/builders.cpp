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

#include "matkls/builders.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>

#include "matkls/error.hpp"

namespace matkls {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int inverse_mod(int a, int p) {
  int result = 1;
  for (int e = p - 2, base = a; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

// Incremental row echelon form over GF(p) used to test independence while
// growing a set of column vectors.
class Echelon {
 public:
  Echelon(int p, int dim) : p_(p), dim_(dim) {}

  // Reduces v against the stored rows; on success stores it and returns
  // true, otherwise returns false (v depends on the stored rows).
  bool try_add(std::vector<int> v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const int piv = pivots_[i];
      if (v[piv] == 0) continue;
      const int factor = v[piv];
      for (int j = 0; j < dim_; ++j) {
        v[j] = ((v[j] - factor * rows_[i][j]) % p_ + p_) % p_;
      }
    }
    const auto it = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
    if (it == v.end()) return false;
    const int piv = static_cast<int>(it - v.begin());
    const int inv = inverse_mod(v[piv], p_);
    for (int& x : v) x = x * inv % p_;
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  void pop() {
    rows_.pop_back();
    pivots_.pop_back();
  }

  int size() const { return static_cast<int>(rows_.size()); }

 private:
  int p_;
  int dim_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> pivots_;
};

struct BasisSearch {
  const std::vector<std::vector<int>>& columns;
  int target;
  Echelon echelon;
  std::uint32_t chosen = 0;
  std::vector<ElementSet> bases;

  void run(int next) {
    const int cols = static_cast<int>(columns.size());
    if (echelon.size() == target) {
      bases.emplace_back(chosen, cols);
      if (bases.size() > kMaxBases) {
        throw Error(ErrorCode::TooManyBases, "matrix has too many bases");
      }
      return;
    }
    if (cols - next < target - echelon.size()) return;
    if (echelon.try_add(columns[next])) {
      chosen |= std::uint32_t{1} << next;
      run(next + 1);
      chosen &= ~(std::uint32_t{1} << next);
      echelon.pop();
    }
    run(next + 1);
  }
};

int parse_int(std::string_view text, std::string_view context) {
  int value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::ParseError,
                "expected an integer in '" + std::string(context) + "', got '" +
                    std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::pair<int, int> parse_pair(std::string_view args, std::string_view spec) {
  const auto parts = split(args, ',');
  if (parts.size() != 2) {
    throw Error(ErrorCode::ParseError,
                "expected two comma-separated integers in '" +
                    std::string(spec) + "'");
  }
  return {parse_int(parts[0], spec), parse_int(parts[1], spec)};
}

std::vector<std::vector<long>> transpose(
    const std::vector<std::vector<long>>& columns, int rows) {
  std::vector<std::vector<long>> out(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    for (const auto& c : columns) out[i].push_back(c[i]);
  }
  return out;
}

}  // namespace

Matroid matroid_from_matrix(int p, int rows, int cols,
                            const std::vector<std::vector<long>>& entries,
                            std::string label) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  }
  if (p > 7) {
    throw Error(ErrorCode::UnsupportedField,
                "GF(" + std::to_string(p) + ") not supported");
  }
  if (cols > ElementSet::kCapacity) {
    throw Error(ErrorCode::TooManyColumns,
                std::to_string(cols) + " columns exceed capacity 32");
  }
  if (rows < 0 || cols < 0 || static_cast<int>(entries.size()) != rows) {
    throw Error(ErrorCode::ParseError, "matrix row count mismatch");
  }
  std::vector<std::vector<int>> columns(static_cast<std::size_t>(cols),
                                        std::vector<int>(rows));
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(entries[i].size()) != cols) {
      throw Error(ErrorCode::ParseError,
                  "row " + std::to_string(i) + " has wrong length");
    }
    for (int j = 0; j < cols; ++j) {
      columns[j][i] = static_cast<int>(((entries[i][j] % p) + p) % p);
    }
  }
  Echelon full(p, rows);
  for (const auto& c : columns) full.try_add(c);
  BasisSearch search{columns, full.size(), Echelon(p, rows), 0, {}};
  search.run(0);
  return Matroid::from_trusted_bases(cols, std::move(search.bases),
                                     std::move(label));
}

Matroid uniform_matroid(int k, int n) {
  if (n > ElementSet::kCapacity) {
    throw Error(ErrorCode::CapacityExceeded,
                "uniform matroid on " + std::to_string(n) + " elements");
  }
  if (n < 0 || k < 0 || k > n) {
    throw Error(ErrorCode::ParseError, "uniform rank " + std::to_string(k) +
                                           " outside [0, " +
                                           std::to_string(n) + "]");
  }
  std::vector<ElementSet> bases;
  const std::uint32_t top = ElementSet::mask(n);
  if (k == 0) {
    bases.push_back(ElementSet::empty(n));
  } else {
    // Gosper's hack over k-subsets of an n-set.
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    while (s <= top) {
      bases.emplace_back(static_cast<std::uint32_t>(s), n);
      if (bases.size() > kMaxBases) {
        throw Error(ErrorCode::TooManyBases,
                    "U(" + std::to_string(k) + "," + std::to_string(n) + ")");
      }
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return Matroid::from_trusted_bases(
      n, std::move(bases),
      "uniform:" + std::to_string(k) + "," + std::to_string(n));
}

Matroid boolean_matroid(int n) {
  return uniform_matroid(n, n).with_label("boolean:" + std::to_string(n));
}

Matroid projective_geometry(int d, int q) {
  if (!is_prime(q) || q > 7) {
    throw Error(ErrorCode::UnsupportedField,
                "pg field size " + std::to_string(q) + " not in {2,3,5,7}");
  }
  if (d < 0) throw Error(ErrorCode::ParseError, "negative pg dimension");
  const int dim = d + 1;
  long count = 0;
  for (long power = 1, i = 0; i < dim; ++i, power *= q) {
    count += power;
    if (count > ElementSet::kCapacity) {
      throw Error(ErrorCode::CapacityExceeded,
                  "PG(" + std::to_string(d) + "," + std::to_string(q) +
                      ") has more than 32 points");
    }
  }
  // Normalized representatives: the first nonzero coordinate is 1.
  std::vector<std::vector<long>> points;
  std::vector<long> v(static_cast<std::size_t>(dim), 0);
  const auto enumerate = [&](auto&& self, int pos, bool leading) -> void {
    if (pos == dim) {
      if (!leading) points.push_back(v);
      return;
    }
    if (leading) {
      v[pos] = 0;
      self(self, pos + 1, true);
      v[pos] = 1;
      self(self, pos + 1, false);
    } else {
      for (int x = 0; x < q; ++x) {
        v[pos] = x;
        self(self, pos + 1, false);
      }
    }
  };
  enumerate(enumerate, 0, true);
  const int n = static_cast<int>(points.size());
  return matroid_from_matrix(
      q, dim, n, transpose(points, dim),
      "pg:" + std::to_string(d) + "," + std::to_string(q));
}

Matroid fano() {
  std::vector<std::vector<long>> points;
  for (long x = 1; x < 8; ++x) points.push_back({x & 1, (x >> 1) & 1, (x >> 2) & 1});
  return matroid_from_matrix(2, 3, 7, transpose(points, 3), "fano");
}

Matroid fano_dual() { return dual(fano()).with_label("fano-dual"); }

Matroid graphic_matroid(const std::vector<std::pair<int, int>>& edges,
                        std::string label) {
  if (edges.size() > static_cast<std::size_t>(ElementSet::kCapacity)) {
    throw Error(ErrorCode::CapacityExceeded,
                std::to_string(edges.size()) + " edges exceed capacity 32");
  }
  int vertices = 0;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0) throw Error(ErrorCode::ParseError, "negative vertex");
    vertices = std::max({vertices, u + 1, v + 1});
  }
  // Vertex-edge incidence over GF(2) represents the cycle matroid.
  const int cols = static_cast<int>(edges.size());
  std::vector<std::vector<long>> m(static_cast<std::size_t>(vertices),
                                   std::vector<long>(cols, 0));
  for (int j = 0; j < cols; ++j) {
    const auto [u, v] = edges[j];
    if (u != v) {
      m[u][j] = 1;
      m[v][j] = 1;
    }
  }
  return matroid_from_matrix(2, vertices, cols, m, std::move(label));
}

Matroid build_named(std::string_view spec) {
  const std::string label(spec);
  if (spec == "fano") return fano();
  if (spec == "fano-dual") return fano_dual();
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "unknown matroid spec '" + label + "'");
  }
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view args = spec.substr(colon + 1);
  if (kind == "uniform") {
    const auto [k, n] = parse_pair(args, spec);
    return uniform_matroid(k, n).with_label(label);
  }
  if (kind == "boolean") {
    return boolean_matroid(parse_int(args, spec)).with_label(label);
  }
  if (kind == "pg") {
    const auto [d, q] = parse_pair(args, spec);
    return projective_geometry(d, q).with_label(label);
  }
  if (kind == "graphic") {
    std::vector<std::pair<int, int>> edges;
    if (!args.empty()) {
      for (auto edge : split(args, ',')) {
        const auto ends = split(edge, '-');
        if (ends.size() != 2) {
          throw Error(ErrorCode::ParseError,
                      "bad edge '" + std::string(edge) + "' in '" + label + "'");
        }
        edges.emplace_back(parse_int(ends[0], spec), parse_int(ends[1], spec));
      }
    }
    return graphic_matroid(edges, label);
  }
  if (kind == "sum") {
    const auto parts = split(args, '+');
    std::optional<Matroid> acc;
    for (auto part : parts) {
      if (part.starts_with("sum:")) part.remove_prefix(4);
      Matroid next = build_named(part);
      acc = acc ? direct_sum(*acc, next) : std::move(next);
    }
    return acc->with_label(label);
  }
  throw Error(ErrorCode::ParseError, "unknown matroid kind '" +
                                         std::string(kind) + "' in '" + label +
                                         "'");
}

}  // namespace matkls
