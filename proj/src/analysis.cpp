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

#include "matkls/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <thread>
#include <utility>

#include "matkls/builders.hpp"
#include "matkls/error.hpp"

namespace matkls {

using Index = FlatLattice::Index;

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Finding: return "finding";
    case CheckStatus::NotApplicable: return "n/a";
  }
  return "unknown";
}

const std::vector<std::string>& theorem_check_names() {
  static const std::vector<std::string> names = {
      "t0",          "tq",          "oddrank",  "evenrank",   "modularity",
      "convolution", "topheavy",    "lemma_mi", "modregular", "degree_bounds",
      "defining"};
  return names;
}

const std::vector<std::string>& finding_check_names() {
  static const std::vector<std::string> names = {"conjecture", "nonnegativity",
                                                 "logconcavity"};
  return names;
}

namespace {

BigInt sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

CheckResult result(std::string_view name, bool ok, std::string details) {
  return {std::string(name), ok ? CheckStatus::Pass : CheckStatus::Fail,
          std::move(details)};
}

CheckResult not_applicable(std::string_view name, std::string details) {
  return {std::string(name), CheckStatus::NotApplicable, std::move(details)};
}

bool nonnegative(const IntPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const BigInt& c) { return c >= 0; });
}

}  // namespace

bool is_log_concave_without_internal_zeros(const IntPoly& p) {
  const int d = p.degree();
  if (d < 0) return true;
  int lo = 0;
  while (p.coeff(lo) == 0) ++lo;
  for (int i = lo; i <= d; ++i) {
    if (p.coeff(i) == 0) return false;
  }
  for (int i = 1; i < d; ++i) {
    if (p.coeff(i) * p.coeff(i) < p.coeff(i - 1) * p.coeff(i + 1)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// MatroidAnalysis

MatroidAnalysis::MatroidAnalysis(Matroid m)
    : matroid_(std::move(m)),
      simple_(simplify(matroid_).matroid),
      lattice_(std::make_unique<FlatLattice>(lattice_of_flats(matroid_))),
      memo_(std::make_unique<KLSMemo>(*lattice_)) {}

const IntPoly& MatroidAnalysis::P() {
  if (!p_) p_ = kl_polynomial(*lattice_, *memo_);
  return *p_;
}

const IntPoly& MatroidAnalysis::Q() {
  if (!q_) q_ = inverse_kl_polynomial(*lattice_, *memo_);
  return *q_;
}

bool MatroidAnalysis::modular() {
  if (!modular_) modular_ = is_modular_lattice(*lattice_);
  return *modular_;
}

bool MatroidAnalysis::connected() {
  if (!connected_) connected_ = is_connected(matroid_);
  return *connected_;
}

bool MatroidAnalysis::regular() {
  if (!regular_) regular_ = is_regular(matroid_);
  return *regular_;
}

bool MatroidAnalysis::degenerate() {
  const int r = matroid_.rank();
  if (r < 1) return false;
  return P().degree() < (r - 1) / 2;
}

CheckResult MatroidAnalysis::check(std::string_view name) {
  const auto& theorems = theorem_check_names();
  const auto& findings = finding_check_names();
  if (std::find(theorems.begin(), theorems.end(), name) == theorems.end() &&
      std::find(findings.begin(), findings.end(), name) == findings.end()) {
    throw Error(ErrorCode::UnknownCheck, "no check named '" +
                                             std::string(name) + "'");
  }
  const FlatLattice& l = *lattice_;
  const Index bot = l.bottom();
  const Index top = l.top();
  const int r = l.rank();

  try {
    if (name == "t0") {
      const BigInt q0 = Q().coeff(0);
      const BigInt mu = q_constant_term(l);
      return result(name, q0 == mu,
                    "[t^0]Q = " + to_string(q0) + ", |mu| = " + to_string(mu));
    }

    if (name == "tq") {
      if (simple_.rank() < 1) return not_applicable(name, "rank 0");
      const FlatLattice ls = lattice_of_flats(simple_);
      KLSMemo ms(ls);
      const BigInt formula = q_linear_coefficient(ls);
      const BigInt q1 = inverse_kl_polynomial(ls, ms).coeff(1);
      const bool ok = formula == q1 && Q().coeff(1) == q1;
      return result(name, ok,
                    "|w_{1,r}| - |w_{0,r-1}| = " + to_string(formula) +
                        ", [t^1]Q = " + to_string(q1));
    }

    if (name == "oddrank") {
      if (r % 2 == 0) return not_applicable(name, "even rank");
      const int k = (r - 1) / 2;
      const BigInt p = P().coeff(k);
      const BigInt q = Q().coeff(k);
      return result(name, p == q,
                    "[t^" + std::to_string(k) + "]P = " + to_string(p) +
                        ", [t^" + std::to_string(k) + "]Q = " + to_string(q));
    }

    if (name == "evenrank") {
      if (r % 2 != 0 || r == 0) {
        return not_applicable(name, r == 0 ? "rank 0" : "odd rank");
      }
      const int k = r / 2;
      const BigInt lhs = P().coeff(k - 1) + Q().coeff(k - 1);
      BigInt rhs = 0;
      for (Index f = 0; f < l.size(); ++f) {
        if (l.rank_of(f) % 2 == 0) continue;
        rhs += (kl_polynomial(l, f, top, *memo_) *
                inverse_kl_polynomial(l, bot, f, *memo_))
                   .coeff(k - 1);
      }
      const BigInt diff = Q().coeff(k - 1) - P().coeff(k - 1);
      const char* direction = diff > 0 ? "Q>P" : (diff < 0 ? "Q<P" : "Q=P");
      return result(name, lhs == rhs,
                    "[t^" + std::to_string(k - 1) + "](P+Q) = " +
                        to_string(lhs) + ", odd-rank flat sum = " +
                        to_string(rhs) + ", " + direction);
    }

    if (name == "modularity") {
      const bool mod = modular();
      const bool p_one = P() == IntPoly{1};
      const bool p_lin = P().coeff(1) == 0;
      const bool q_const = Q().degree() == 0;
      const bool ok = mod == p_one && p_one == p_lin && p_lin == q_const;
      auto yn = [](bool b) { return b ? std::string("yes") : std::string("no"); };
      return result(name, ok,
                    "modular=" + yn(mod) + " P=1:" + yn(p_one) +
                        " [t]P=0:" + yn(p_lin) + " degQ=0:" + yn(q_const));
    }

    if (name == "convolution") {
      if (r == 0) return not_applicable(name, "rank 0");
      IntPoly left;
      IntPoly right;
      for (Index h : l.interval(bot, top)) {
        IntPoly a = kl_polynomial(l, bot, h, *memo_) *
                    inverse_kl_polynomial(l, h, top, *memo_);
        a *= sign(r - l.rank_of(h));
        left += a;
        IntPoly b = kl_polynomial(l, h, top, *memo_) *
                    inverse_kl_polynomial(l, bot, h, *memo_);
        b *= sign(l.rank_of(h));
        right += b;
      }
      const IntPoly q_conv = inverse_kl_via_convolution(l, *memo_);
      const bool ok = left.is_zero() && right.is_zero() && q_conv == Q();
      return result(name, ok,
                    "sum P_{M_F}(-1)^rk Q_{M^F} = " + left.to_string() +
                        ", mirrored = " + right.to_string() +
                        ", convolution-route Q = " + q_conv.to_string());
    }

    if (name == "topheavy") {
      if (!modular()) return not_applicable(name, "not modular");
      std::string seq;
      bool ok = true;
      for (int k = 0; k <= r; ++k) {
        ok = ok && l.of_rank(k).size() == l.of_rank(r - k).size();
        seq += (k ? "," : "") + std::to_string(l.of_rank(k).size());
      }
      return result(name, ok, "W = (" + seq + ")");
    }

    if (name == "lemma_mi") {
      if (simple_.rank() < 1 || !is_connected(simple_)) {
        return not_applicable(name, "simplification not connected or rank 0");
      }
      const int i = find_connected_contraction_element(simple_);
      return result(name, true, "element " + std::to_string(i));
    }

    if (name == "modregular") {
      if (r < 3 || !modular() || !is_connected(simple_)) {
        return not_applicable(name, "not a connected modular matroid of rank >= 3");
      }
      const bool reg = is_regular(simple_);
      return result(name, !reg, reg ? "regular" : "not regular");
    }

    if (name == "degree_bounds") {
      std::string witness;
      for (Index a = 0; a < l.size() && witness.empty(); ++a) {
        for (Index b = a + 1; b < l.size() && witness.empty(); ++b) {
          if (!l.leq(a, b)) continue;
          const int rho = l.rank_of(b) - l.rank_of(a);
          const int dp = kl_polynomial(l, a, b, *memo_).degree();
          const int dq = inverse_kl_polynomial(l, a, b, *memo_).degree();
          const int dc = inverse_kl_via_convolution(l, a, b, *memo_).degree();
          if (2 * dp >= rho || 2 * dq >= rho || 2 * dc >= rho) {
            witness = "interval " + l.flat(a).to_string() + " .. " +
                      l.flat(b).to_string();
          }
        }
      }
      return result(name, witness.empty(),
                    witness.empty() ? "all intervals within bound" : witness);
    }

    if (name == "defining") {
      IntPoly p_rhs;
      IntPoly q_rhs;
      for (Index f : l.interval(bot, top)) {
        const int rf = l.rank_of(f);
        p_rhs += interval_characteristic(l, bot, f, *memo_) *
                 kl_polynomial(l, f, top, *memo_);
        IntPoly term = inverse_kl_polynomial(l, bot, f, *memo_) *
                       reverse(interval_characteristic(l, f, top, *memo_), r - rf);
        term *= sign(rf);
        q_rhs += term;
      }
      IntPoly q_lhs = reverse(Q(), r);
      q_lhs *= sign(r);
      const IntPoly p_res = reverse(P(), r) - p_rhs;
      const IntPoly q_res = q_lhs - q_rhs;
      return result(name, p_res.is_zero() && q_res.is_zero(),
                    "P residual = " + p_res.to_string() +
                        ", Q residual = " + q_res.to_string());
    }

    if (name == "conjecture") {
      if (r < 1 || !connected() || !regular()) {
        return not_applicable(name, "not a connected regular matroid");
      }
      const bool deg = degenerate();
      return {std::string(name), deg ? CheckStatus::Finding : CheckStatus::Pass,
              deg ? "connected, regular and degenerate"
                  : "connected, regular, non-degenerate"};
    }

    if (name == "nonnegativity") {
      const bool ok = nonnegative(P()) && nonnegative(Q());
      return {std::string(name), ok ? CheckStatus::Pass : CheckStatus::Finding,
              "P = " + P().to_string() + ", Q = " + Q().to_string()};
    }

    // logconcavity
    const bool ok = is_log_concave_without_internal_zeros(P()) &&
                    is_log_concave_without_internal_zeros(Q());
    return {std::string(name), ok ? CheckStatus::Pass : CheckStatus::Finding,
            "P = " + P().to_string() + ", Q = " + Q().to_string()};
  } catch (const std::exception& e) {
    return {std::string(name), CheckStatus::Fail, e.what()};
  }
}

MatroidReport MatroidAnalysis::report(const std::vector<std::string>& checks) {
  MatroidReport rep;
  rep.label = matroid_.label();
  rep.n = matroid_.size();
  rep.r = matroid_.rank();
  rep.simple = matroid_.is_simple();
  rep.connected = connected();
  rep.modular = modular();
  rep.projective_geometry = is_projective_geometry(*lattice_);
  rep.regular = regular();
  rep.degenerate = degenerate();
  rep.char_poly = characteristic_polynomial(*lattice_);
  rep.P = P();
  rep.Q = Q();
  rep.whitney = whitney_table(*lattice_);
  std::vector<std::string> names = checks;
  if (names.empty()) {
    names = theorem_check_names();
    const auto& f = finding_check_names();
    names.insert(names.end(), f.begin(), f.end());
  }
  for (const auto& name : names) rep.checks.push_back(check(name));
  return rep;
}

// ---------------------------------------------------------------------------
// Free functions

bool is_degenerate(const Matroid& m) {
  if (m.rank() < 1) throw Error(ErrorCode::RankZero, "degeneracy needs r >= 1");
  return MatroidAnalysis(m).degenerate();
}

MatroidReport classify(const Matroid& m) { return MatroidAnalysis(m).report(); }

CheckResult check_theorem(const Matroid& m, std::string_view which) {
  return MatroidAnalysis(m).check(which);
}

bool rank3_modular_charpoly_identity(int n) {
  const BigInt bn = n;
  const IntPoly product =
      IntPoly{-1, 1} * IntPoly{-2, 1} * IntPoly({BigInt(3 - n), BigInt(1)});
  const BigInt linear = bn * (bn - 3) / 2;
  const BigInt constant = -(bn * bn - 5 * bn + 2) / 2;
  const IntPoly tutte_route({constant, linear, BigInt(-bn), BigInt(1)});
  return product == tutte_route;
}

std::size_t ScanReport::theorem_failures() const {
  return static_cast<std::size_t>(
      std::count_if(counterexamples.begin(), counterexamples.end(),
                    [](const Counterexample& c) {
                      return c.kind == CheckStatus::Fail;
                    }));
}

std::size_t ScanReport::findings() const {
  return static_cast<std::size_t>(
      std::count_if(counterexamples.begin(), counterexamples.end(),
                    [](const Counterexample& c) {
                      return c.kind == CheckStatus::Finding;
                    }));
}

int default_scan_threads() {
  if (const char* env = std::getenv("MATKLS_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ScanReport scan(const std::vector<Matroid>& corpus,
                const std::vector<std::string>& checks, int threads) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();

  std::vector<std::string> names = checks;
  if (names.empty()) names = theorem_check_names();
  for (const auto& f : finding_check_names()) {
    if (std::find(names.begin(), names.end(), f) == names.end()) {
      names.push_back(f);
    }
  }
  // Reject unknown names before spending any time.
  {
    const auto& t = theorem_check_names();
    const auto& f = finding_check_names();
    for (const auto& n : names) {
      if (std::find(t.begin(), t.end(), n) == t.end() &&
          std::find(f.begin(), f.end(), n) == f.end()) {
        throw Error(ErrorCode::UnknownCheck, "no check named '" + n + "'");
      }
    }
  }

  ScanReport out;
  out.corpus_size = corpus.size();
  out.entries.resize(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      const auto t0 = Clock::now();
      ScanEntry& entry = out.entries[i];
      try {
        entry.report = MatroidAnalysis(corpus[i]).report(names);
      } catch (const std::exception& e) {
        entry.report.label = corpus[i].label();
        entry.report.n = corpus[i].size();
        entry.report.r = corpus[i].rank();
        entry.error = e.what();
      }
      entry.seconds =
          std::chrono::duration<double>(Clock::now() - t0).count();
    }
  };
  if (threads <= 0) threads = default_scan_threads();
  threads = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(threads),
                            std::max<std::size_t>(corpus.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::stable_sort(out.entries.begin(), out.entries.end(),
                   [](const ScanEntry& a, const ScanEntry& b) {
                     return a.report.label < b.report.label;
                   });
  for (const auto& entry : out.entries) {
    if (entry.error) {
      out.counterexamples.push_back(
          {entry.report.label, "analysis", CheckStatus::Fail, *entry.error});
      continue;
    }
    for (const auto& c : entry.report.checks) {
      if (c.status == CheckStatus::Fail || c.status == CheckStatus::Finding) {
        out.counterexamples.push_back(
            {entry.report.label, c.name, c.status, c.details});
      }
    }
  }
  out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

// ---------------------------------------------------------------------------
// Corpus

namespace {

std::string edge_spec(const std::vector<std::pair<int, int>>& edges) {
  std::string spec = "graphic:";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) spec += ',';
    spec += std::to_string(edges[i].first) + "-" +
            std::to_string(edges[i].second);
  }
  return spec;
}

std::vector<std::pair<int, int>> complete_graph(int v) {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) e.emplace_back(a, b);
  }
  return e;
}

std::vector<std::pair<int, int>> cycle_graph(int v) {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a + 1 < v; ++a) e.emplace_back(a, a + 1);
  e.emplace_back(0, v - 1);
  return e;
}

// Hub 0, rim 1..k.
std::vector<std::pair<int, int>> wheel_graph(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
  for (int i = 1; i < k; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, k);
  return e;
}

}  // namespace

std::vector<Matroid> builtin_corpus() {
  std::vector<std::string> specs;
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      specs.push_back("uniform:" + std::to_string(k) + "," + std::to_string(n));
    }
    specs.push_back("boolean:" + std::to_string(n));
  }
  specs.insert(specs.end(), {"fano", "fano-dual", "pg:2,3", "pg:3,2"});
  specs.push_back(edge_spec(complete_graph(4)));
  specs.push_back(edge_spec(complete_graph(5)));
  specs.push_back(edge_spec({{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4},
                             {1, 5}, {2, 3}, {2, 4}, {2, 5}}));
  specs.push_back(edge_spec(
      {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}));
  for (int v = 3; v <= 6; ++v) specs.push_back(edge_spec(cycle_graph(v)));
  for (int k = 4; k <= 5; ++k) specs.push_back(edge_spec(wheel_graph(k)));
  for (int k = 2; k <= 6; ++k) {
    specs.push_back("sum:boolean:1+uniform:2," + std::to_string(k));
  }
  std::vector<Matroid> corpus;
  corpus.reserve(specs.size());
  for (const auto& s : specs) corpus.push_back(build_named(s));
  return corpus;
}

}  // namespace matkls
