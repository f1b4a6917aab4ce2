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

#ifndef MATKLS_ANALYSIS_HPP
#define MATKLS_ANALYSIS_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matkls/kls.hpp"
#include "matkls/lattice.hpp"
#include "matkls/matroid.hpp"
#include "matkls/poly.hpp"

namespace matkls {

// Theorem checks either pass or fail (a failure is a bug in this library);
// finding checks test conjectures and empirical properties and report a
// Finding instead of failing. NotApplicable means the hypothesis of the
// statement does not hold for the matroid.
enum class CheckStatus { Pass, Fail, Finding, NotApplicable };

std::string_view to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string details;
};

// Names accepted by check_theorem / MatroidAnalysis::check.
const std::vector<std::string>& theorem_check_names();
const std::vector<std::string>& finding_check_names();

struct MatroidReport {
  std::string label;
  int n = 0;
  int r = 0;
  bool simple = false;
  bool connected = false;
  bool modular = false;
  bool projective_geometry = false;
  bool regular = false;
  bool degenerate = false;
  IntPoly char_poly;
  IntPoly P;
  IntPoly Q;
  WhitneyTable whitney;
  std::vector<CheckResult> checks;
};

// Everything known about one matroid, computed on demand and cached.
// Lattice-level invariants are taken from the lattice of flats of the
// matroid as given (which equals that of its simplification).
class MatroidAnalysis {
 public:
  explicit MatroidAnalysis(Matroid m);

  const Matroid& matroid() const { return matroid_; }
  const Matroid& simplified() const { return simple_; }
  const FlatLattice& lattice() const { return *lattice_; }
  KLSMemo& memo() { return *memo_; }

  const IntPoly& P();
  const IntPoly& Q();
  bool modular();
  bool connected();
  bool regular();
  bool degenerate();

  // Throws UnknownCheck for names outside theorem_check_names() and
  // finding_check_names(). Any other exception raised while checking is
  // reported as a Fail.
  CheckResult check(std::string_view name);

  // Populates every field and runs `checks` (all theorem and finding checks
  // when empty).
  MatroidReport report(const std::vector<std::string>& checks = {});

 private:
  Matroid matroid_;
  Matroid simple_;
  std::unique_ptr<FlatLattice> lattice_;
  std::unique_ptr<KLSMemo> memo_;
  std::optional<IntPoly> p_;
  std::optional<IntPoly> q_;
  std::optional<bool> modular_;
  std::optional<bool> connected_;
  std::optional<bool> regular_;
};

// deg P < floor((r-1)/2). Throws RankZero for rank 0.
bool is_degenerate(const Matroid& m);

MatroidReport classify(const Matroid& m);

CheckResult check_theorem(const Matroid& m, std::string_view which);

// Compares (t-1)(t-2)(t-n+3) with
// t^3 - n t^2 + n(n-3)/2 t - (n^2-5n+2)/2 coefficientwise.
bool rank3_modular_charpoly_identity(int n);

// Log-concave (a_i^2 >= a_{i-1} a_{i+1}) with no internal zeros.
bool is_log_concave_without_internal_zeros(const IntPoly& p);

struct ScanEntry {
  MatroidReport report;
  std::optional<std::string> error;
  double seconds = 0;
};

struct Counterexample {
  std::string label;
  std::string claim;
  CheckStatus kind = CheckStatus::Fail;
  std::string details;
};

struct ScanReport {
  std::size_t corpus_size = 0;
  std::vector<ScanEntry> entries;
  std::vector<Counterexample> counterexamples;
  double seconds = 0;

  std::size_t theorem_failures() const;
  std::size_t findings() const;
};

// Worker count: MATKLS_THREADS if set to a positive integer, otherwise the
// number of hardware threads.
int default_scan_threads();

// Runs report(checks) on every matroid, in parallel over `threads` workers
// (default_scan_threads() when <= 0). Finding checks always run. Entries and
// counterexamples are ordered by label, ties by corpus position.
ScanReport scan(const std::vector<Matroid>& corpus,
                const std::vector<std::string>& checks = {}, int threads = 0);

// Uniform matroids U(k,n) for 1 <= k <= n <= 8 (U(n,n) labelled boolean:n),
// fano, fano-dual, pg:2,3, pg:3,2, graphic K4, K5, K3,3, the prism, cycles and
// wheels on up to 6 vertices, and B1 + U(2,k) for 2 <= k <= 6.
std::vector<Matroid> builtin_corpus();

}  // namespace matkls

#endif  // MATKLS_ANALYSIS_HPP
