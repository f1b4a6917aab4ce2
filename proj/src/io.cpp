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

#include "matkls/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "matkls/builders.hpp"
#include "matkls/error.hpp"

namespace matkls {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void malformed(std::string_view context, const std::string& what) {
  throw Error(ErrorCode::MalformedFile, std::string(context) + ": " + what);
}

int as_int(const Json& v, std::string_view context, const std::string& field) {
  if (!v.is_number_integer()) malformed(context, field + ": expected an integer");
  const auto x = v.get<long long>();
  if (x < 0 || x > 1'000'000) malformed(context, field + ": out of range");
  return static_cast<int>(x);
}

Json big_json(const BigInt& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json poly_json(const IntPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(big_json(c));
  return arr;
}

Json poly2_json(const IntPoly2& p) {
  Json rows = Json::array();
  for (const auto& row : p.coeffs()) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(big_json(c));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json vector_json(const std::vector<BigInt>& v) {
  Json arr = Json::array();
  for (const auto& c : v) arr.push_back(big_json(c));
  return arr;
}

Json matrix_json(const std::vector<std::vector<BigInt>>& m) {
  Json arr = Json::array();
  for (const auto& row : m) arr.push_back(vector_json(row));
  return arr;
}

std::string list_text(const std::vector<BigInt>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + "]";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json check_json(const CheckResult& c) {
  Json j;
  j["name"] = c.name;
  j["status"] = std::string(to_string(c.status));
  j["details"] = c.details;
  return j;
}

Json report_json(const MatroidReport& r) {
  Json j;
  j["label"] = r.label;
  j["n"] = r.n;
  j["r"] = r.r;
  j["simple"] = r.simple;
  j["connected"] = r.connected;
  j["modular"] = r.modular;
  j["projective_geometry"] = r.projective_geometry;
  j["regular"] = r.regular;
  j["degenerate"] = r.degenerate;
  j["char_poly"] = poly_json(r.char_poly);
  j["P"] = poly_json(r.P);
  j["Q"] = poly_json(r.Q);
  Json w;
  w["first_kind"] = vector_json(r.whitney.w1);
  w["second_kind"] = vector_json(r.whitney.W1);
  w["doubly_first_kind"] = matrix_json(r.whitney.w);
  w["doubly_second_kind"] = matrix_json(r.whitney.W);
  j["whitney"] = std::move(w);
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  j["checks"] = std::move(checks);
  return j;
}

std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size(), ' ');
    }
    os << line << '\n';
  }
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Matroid files

MatroidFile parse_matroid_file(std::string_view text, std::string_view context) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(context, "syntax error at byte " + std::to_string(e.byte));
  }
  if (!doc.is_object()) malformed(context, "top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "name" && key != "n" && key != "bases") {
      malformed(context, "unknown field '" + key + "'");
    }
  }
  for (const char* field : {"name", "n", "bases"}) {
    if (!doc.contains(field)) {
      malformed(context, std::string("missing field '") + field + "'");
    }
  }
  MatroidFile file;
  if (!doc["name"].is_string()) malformed(context, "name: expected a string");
  file.name = doc["name"].get<std::string>();
  file.n = as_int(doc["n"], context, "n");
  if (file.n > ElementSet::kCapacity) malformed(context, "n: exceeds 32");
  const Json& bases = doc["bases"];
  if (!bases.is_array()) malformed(context, "bases: expected an array");
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const std::string where = "bases[" + std::to_string(i) + "]";
    if (!bases[i].is_array()) malformed(context, where + ": expected an array");
    std::vector<int> basis;
    for (std::size_t k = 0; k < bases[i].size(); ++k) {
      const std::string elem = where + "[" + std::to_string(k) + "]";
      const int e = as_int(bases[i][k], context, elem);
      if (e >= file.n) {
        malformed(context, elem + ": element " + std::to_string(e) +
                               " not in [0, " + std::to_string(file.n) + ")");
      }
      basis.push_back(e);
    }
    file.bases.push_back(std::move(basis));
  }
  return file;
}

std::string serialize_matroid_file(const Matroid& m) {
  std::ostringstream os;
  os << "{\"name\": " << Json(m.label()).dump() << ", \"n\": " << m.size()
     << ", \"bases\": [";
  for (std::size_t i = 0; i < m.bases().size(); ++i) {
    if (i) os << ", ";
    os << '[';
    const auto elems = m.bases()[i].elements();
    for (std::size_t k = 0; k < elems.size(); ++k) {
      if (k) os << ", ";
      os << elems[k];
    }
    os << ']';
  }
  os << "]}\n";
  return os.str();
}

Matroid to_matroid(const MatroidFile& file, std::string_view context) {
  try {
    return matroid_from_bases(file.n, file.bases, file.name);
  } catch (const Error& e) {
    throw Error(e.code(), std::string(context) + ": " + e.what());
  }
}

Matroid load_matroid_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FileNotFound, path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string context = path.string();
  Matroid m = to_matroid(parse_matroid_file(buffer.str(), context), context);
  if (m.label().empty()) m = m.with_label(path.stem().string());
  return m;
}

std::vector<Matroid> load_matroid_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(ErrorCode::FileNotFound, dir.string() + " is not a directory");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<Matroid> out;
  for (const auto& f : files) out.push_back(load_matroid_file(f));
  return out;
}

Matroid parse_matroid_source(std::string_view arg) {
  const std::filesystem::path path{std::string(arg)};
  std::error_code ec;
  if (std::filesystem::is_regular_file(path, ec)) return load_matroid_file(path);
  const bool named = arg == "fano" || arg == "fano-dual" ||
                     (arg.find(':') != std::string_view::npos &&
                      arg.find('/') == std::string_view::npos);
  if (!named) throw Error(ErrorCode::FileNotFound, std::string(arg));
  return build_named(arg);
}

// ---------------------------------------------------------------------------
// Reports

std::string emit_polynomial(const IntPoly& p, OutputFormat format) {
  if (format == OutputFormat::Json) return poly_json(p).dump() + "\n";
  return list_text(p.coeffs()) + "  (" + p.to_string() + ")\n";
}

std::string emit_polynomial(const IntPoly2& p, OutputFormat format) {
  if (format == OutputFormat::Json) return poly2_json(p).dump() + "\n";
  std::ostringstream os;
  for (const auto& row : p.coeffs()) os << list_text(row) << '\n';
  os << "(" << p.to_string() << ")\n";
  return os.str();
}

std::string emit_report(const MatroidReport& r, OutputFormat format) {
  if (format == OutputFormat::Json) return report_json(r).dump(2) + "\n";
  std::vector<std::vector<std::string>> rows = {
      {"label", r.label},
      {"n", std::to_string(r.n)},
      {"r", std::to_string(r.r)},
      {"simple", yes_no(r.simple)},
      {"connected", yes_no(r.connected)},
      {"modular", yes_no(r.modular)},
      {"projective_geometry", yes_no(r.projective_geometry)},
      {"regular", yes_no(r.regular)},
      {"degenerate", yes_no(r.degenerate)},
      {"char_poly", list_text(r.char_poly.coeffs())},
      {"P", list_text(r.P.coeffs())},
      {"Q", list_text(r.Q.coeffs())},
      {"whitney_first", list_text(r.whitney.w1)},
      {"whitney_second", list_text(r.whitney.W1)},
  };
  for (const auto& c : r.checks) {
    rows.push_back({"check " + c.name,
                    std::string(to_string(c.status)) + "  " + c.details});
  }
  return table(rows);
}

std::string emit_report(const CheckResult& c, const std::string& label,
                        OutputFormat format) {
  if (format == OutputFormat::Json) {
    Json j;
    j["label"] = label;
    j["check"] = check_json(c);
    return j.dump(2) + "\n";
  }
  return table({{"label", label},
                {"check", c.name},
                {"status", std::string(to_string(c.status))},
                {"details", c.details}});
}

std::string emit_report(const ScanReport& s, OutputFormat format) {
  if (format == OutputFormat::Json) {
    Json j;
    j["corpus_size"] = s.corpus_size;
    j["theorem_failures"] = s.theorem_failures();
    j["findings"] = s.findings();
    j["seconds"] = s.seconds;
    Json entries = Json::array();
    for (const auto& e : s.entries) {
      Json x;
      x["label"] = e.report.label;
      x["n"] = e.report.n;
      x["r"] = e.report.r;
      if (e.error) {
        x["error"] = *e.error;
      } else {
        x["connected"] = e.report.connected;
        x["modular"] = e.report.modular;
        x["regular"] = e.report.regular;
        x["degenerate"] = e.report.degenerate;
        x["P"] = poly_json(e.report.P);
        x["Q"] = poly_json(e.report.Q);
        Json checks;
        for (const auto& c : e.report.checks) {
          checks[c.name] = std::string(to_string(c.status));
        }
        x["checks"] = std::move(checks);
      }
      x["seconds"] = e.seconds;
      entries.push_back(std::move(x));
    }
    j["entries"] = std::move(entries);
    Json cx = Json::array();
    for (const auto& c : s.counterexamples) {
      Json x;
      x["label"] = c.label;
      x["claim"] = c.claim;
      x["kind"] = std::string(to_string(c.kind));
      x["details"] = c.details;
      cx.push_back(std::move(x));
    }
    j["counterexamples"] = std::move(cx);
    return j.dump(2) + "\n";
  }

  std::vector<std::vector<std::string>> rows = {
      {"label", "n", "r", "conn", "mod", "reg", "degen", "P", "Q", "status"}};
  for (const auto& e : s.entries) {
    std::string status = "ok";
    if (e.error) {
      status = "error";
    } else {
      for (const auto& c : e.report.checks) {
        if (c.status == CheckStatus::Fail) status = "FAIL";
        if (c.status == CheckStatus::Finding && status == "ok") status = "finding";
      }
    }
    rows.push_back({e.report.label, std::to_string(e.report.n),
                    std::to_string(e.report.r), yes_no(e.report.connected),
                    yes_no(e.report.modular), yes_no(e.report.regular),
                    yes_no(e.report.degenerate), list_text(e.report.P.coeffs()),
                    list_text(e.report.Q.coeffs()), status});
  }
  std::ostringstream os;
  os << "corpus " << s.corpus_size << ", theorem failures "
     << s.theorem_failures() << ", findings " << s.findings() << '\n';
  os << table(rows);
  for (const auto& c : s.counterexamples) {
    os << to_string(c.kind) << ": " << c.label << " " << c.claim << "  "
       << c.details << '\n';
  }
  return os.str();
}

int exit_status(const CheckResult& check) {
  return check.status == CheckStatus::Fail ? 2 : 0;
}

int exit_status(const ScanReport& report) {
  return report.theorem_failures() == 0 ? 0 : 2;
}

}  // namespace matkls
