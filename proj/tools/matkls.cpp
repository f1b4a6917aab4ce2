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

// matkls: matroid invariants and Kazhdan-Lusztig polynomials.
//
// Exit status: 0 success, 1 usage or input error, 2 a check failed (for
// scan: some theorem check failed; findings do not count).

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "matkls/analysis.hpp"
#include "matkls/error.hpp"
#include "matkls/io.hpp"
#include "matkls/kls.hpp"

namespace {

using namespace matkls;

int run_info(const std::string& source, OutputFormat format) {
  const Matroid m = parse_matroid_source(source);
  std::cout << emit_report(classify(m), format);
  return 0;
}

int run_compute(const std::string& poly, const std::string& source,
                OutputFormat format) {
  const Matroid m = parse_matroid_source(source);
  if (poly == "tutte") {
    std::cout << emit_polynomial(tutte_polynomial(m), format);
    return 0;
  }
  MatroidAnalysis a(m);
  if (poly == "char") {
    std::cout << emit_polynomial(characteristic_polynomial(a.lattice()), format);
  } else if (poly == "kl") {
    std::cout << emit_polynomial(a.P(), format);
  } else {
    std::cout << emit_polynomial(a.Q(), format);
  }
  return 0;
}

int run_check(const std::string& theorem, const std::string& source,
              OutputFormat format) {
  const Matroid m = parse_matroid_source(source);
  const CheckResult r = check_theorem(m, theorem);
  std::cout << emit_report(r, m.label(), format);
  return exit_status(r);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int run_scan(const std::string& dir, const std::string& checks,
             OutputFormat format) {
  const std::vector<Matroid> corpus =
      dir.empty() ? builtin_corpus() : load_matroid_directory(dir);
  const ScanReport report = scan(corpus, split_list(checks));
  std::cout << emit_report(report, format);
  return exit_status(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid invariants and Kazhdan-Lusztig polynomials"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> formats = {
      {"json", OutputFormat::Json}, {"table", OutputFormat::Table}};
  OutputFormat format = OutputFormat::Json;

  std::string source;
  std::string poly;
  std::string theorem;
  std::string dir;
  std::string checks;

  auto* info = app.add_subcommand("info", "Classify a matroid and run all checks");
  info->add_option("source", source, "Named spec or matroid file")->required();

  auto* compute = app.add_subcommand("compute", "Print one polynomial");
  compute->add_option("--poly", poly, "char, tutte, kl or invkl")
      ->required()
      ->check(CLI::IsMember({"char", "tutte", "kl", "invkl"}));
  compute->add_option("source", source, "Named spec or matroid file")->required();

  std::vector<std::string> check_names = theorem_check_names();
  for (const auto& n : finding_check_names()) check_names.push_back(n);
  auto* check = app.add_subcommand("check", "Run one check");
  check->add_option("--theorem", theorem, "Check name")
      ->required()
      ->check(CLI::IsMember(check_names));
  check->add_option("source", source, "Named spec or matroid file")->required();

  auto* scan_cmd = app.add_subcommand("scan", "Analyse a corpus");
  scan_cmd->add_option("--dir", dir, "Directory of matroid files (default: built-in corpus)");
  scan_cmd->add_option("--checks", checks, "Comma-separated check names (default: all)");

  for (auto* sub : {info, compute, check, scan_cmd}) {
    sub->add_option("--format", format, "Output format: json or table")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*info) return run_info(source, format);
    if (*compute) return run_compute(poly, source, format);
    if (*check) return run_check(theorem, source, format);
    return run_scan(dir, checks, format);
  } catch (const matkls::Error& e) {
    std::cerr << "matkls: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "matkls: " << e.what() << '\n';
    return 1;
  }
}
