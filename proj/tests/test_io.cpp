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

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "matkls/builders.hpp"
#include "matkls/io.hpp"
#include "support.hpp"

using namespace matkls;
using testing::code_of;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const std::filesystem::path dir = MATKLS_TEST_TMP;
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path;
}

std::string error_text(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("parse a matroid file") {
  const auto path = write_temp(
      "triangle.json", R"({"name":"triangle","n":3,"bases":[[0,1],[0,2],[1,2]]})");
  const auto m = parse_matroid_source(path.string());
  CHECK(m == uniform_matroid(2, 3));
  CHECK(m.label() == "triangle");
}

TEST_CASE("named sources") {
  CHECK(parse_matroid_source("uniform:3,4") == uniform_matroid(3, 4));
  CHECK(parse_matroid_source("fano") == fano());
  CHECK(code_of([] { parse_matroid_source("no/such/file.json"); }) ==
        ErrorCode::FileNotFound);
  CHECK(code_of([] { parse_matroid_source("missing.json"); }) ==
        ErrorCode::FileNotFound);
  CHECK(code_of([] { parse_matroid_source("uniform:9,3"); }) == ErrorCode::ParseError);
}

TEST_CASE("validation errors carry the file path") {
  const auto path =
      write_temp("bad_exchange.json", R"({"name":"x","n":4,"bases":[[0,1],[2,3]]})");
  CHECK(code_of([&] { parse_matroid_source(path.string()); }) ==
        ErrorCode::ExchangeAxiomViolated);
  CHECK(error_text([&] { parse_matroid_source(path.string()); })
            .find("bad_exchange.json") != std::string::npos);
  const auto coloop =
      write_temp("coloop.json", R"({"name":"c","n":3,"bases":[[0,1],[1,2]]})");
  CHECK(parse_matroid_source(coloop.string()).is_coloop(1));
}

TEST_CASE("malformed files") {
  const std::vector<std::pair<std::string, std::string>> bad = {
      {"{\"name\":\"x\",\"n\":3,", "syntax error"},
      {R"([1,2])", "top level"},
      {R"({"name":"x","n":3,"bases":[[0,1]],"extra":1})", "unknown field 'extra'"},
      {R"({"name":"x","bases":[[0,1]]})", "missing field 'n'"},
      {R"({"name":7,"n":3,"bases":[[0,1]]})", "name"},
      {R"({"name":"x","n":"3","bases":[[0,1]]})", "n: expected an integer"},
      {R"({"name":"x","n":40,"bases":[[0,1]]})", "n: exceeds 32"},
      {R"({"name":"x","n":3,"bases":[[0,"a"]]})", "bases[0][1]"},
      {R"({"name":"x","n":3,"bases":[[0,1],[5,1]]})", "bases[1][0]"},
      {R"({"name":"x","n":3,"bases":{}})", "bases: expected an array"},
  };
  for (const auto& [text, needle] : bad) {
    CAPTURE(text);
    CHECK(code_of([&] { parse_matroid_file(text, "f.json"); }) ==
          ErrorCode::MalformedFile);
    const auto msg = error_text([&] { parse_matroid_file(text, "f.json"); });
    CHECK(msg.find(needle) != std::string::npos);
    CHECK(msg.find("f.json") != std::string::npos);
  }
}

TEST_CASE("serialization round-trips every corpus matroid") {
  for (const auto& m : builtin_corpus()) {
    CAPTURE(m.label());
    const auto text = serialize_matroid_file(m);
    const auto back = to_matroid(parse_matroid_file(text));
    CHECK(back == m);
    CHECK(back.label() == m.label());
    CHECK(serialize_matroid_file(back) == text);
  }
}

TEST_CASE("directory loading is sorted by file name") {
  const std::filesystem::path dir = std::filesystem::path(MATKLS_TEST_TMP) / "corpus";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "b.json") << serialize_matroid_file(fano());
  std::ofstream(dir / "a.json") << serialize_matroid_file(uniform_matroid(2, 4));
  std::ofstream(dir / "notes.txt") << "ignored";
  const auto ms = load_matroid_directory(dir);
  REQUIRE(ms.size() == 2);
  CHECK(ms[0] == uniform_matroid(2, 4));
  CHECK(ms[1] == fano());
  CHECK(code_of([&] { load_matroid_directory(dir / "nope"); }) == ErrorCode::FileNotFound);
}

TEST_CASE("report emission is deterministic and well formed") {
  const auto r = classify(fano());
  const auto a = emit_report(r, OutputFormat::Json);
  CHECK(a == emit_report(classify(fano()), OutputFormat::Json));
  const auto j = nlohmann::json::parse(a);
  CHECK(j["label"] == "fano");
  CHECK(j["char_poly"] == nlohmann::json::parse("[-8,14,-7,1]"));
  CHECK(j["modular"] == true);
  CHECK(j["regular"] == false);
  CHECK(j["degenerate"] == true);
  const auto table = emit_report(r, OutputFormat::Table);
  CHECK(table.find("modular              yes") != std::string::npos);
  CHECK(table.find("regular              no") != std::string::npos);
  CHECK(table.find("degenerate           yes") != std::string::npos);
}

TEST_CASE("big coefficients are emitted as decimal strings") {
  const IntPoly p({BigInt(1), BigInt("123456789012345678901234567890")});
  const auto j = nlohmann::json::parse(emit_polynomial(p, OutputFormat::Json));
  CHECK(j[0] == 1);
  CHECK(j[1] == "123456789012345678901234567890");
}

TEST_CASE("empty scan report") {
  const auto s = scan({}, {}, 1);
  const auto table = emit_report(s, OutputFormat::Table);
  CHECK(table.find("corpus 0") != std::string::npos);
  CHECK(table.find("label") != std::string::npos);
  const auto j = nlohmann::json::parse(emit_report(s, OutputFormat::Json));
  CHECK(j["entries"].empty());
  CHECK(j["theorem_failures"] == 0);
}

TEST_CASE("exit status mapping") {
  CHECK(exit_status(CheckResult{"t0", CheckStatus::Pass, ""}) == 0);
  CHECK(exit_status(CheckResult{"t0", CheckStatus::NotApplicable, ""}) == 0);
  CHECK(exit_status(CheckResult{"conjecture", CheckStatus::Finding, ""}) == 0);
  CHECK(exit_status(CheckResult{"t0", CheckStatus::Fail, ""}) == 2);
  ScanReport s;
  CHECK(exit_status(s) == 0);
  s.counterexamples.push_back({"m", "logconcavity", CheckStatus::Finding, ""});
  CHECK(exit_status(s) == 0);
  s.counterexamples.push_back({"m", "t0", CheckStatus::Fail, ""});
  CHECK(exit_status(s) == 2);
}

}  // TEST_SUITE
