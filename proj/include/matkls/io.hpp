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

#ifndef MATKLS_IO_HPP
#define MATKLS_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "matkls/analysis.hpp"
#include "matkls/matroid.hpp"
#include "matkls/poly.hpp"

namespace matkls {

// On-disk matroid: a JSON object with exactly the fields
//   {"name": string, "n": integer <= 32, "bases": [[int, ...], ...]}
struct MatroidFile {
  std::string name;
  int n = 0;
  std::vector<std::vector<int>> bases;
};

// Throws MalformedFile naming the offending field (or the byte offset of a
// syntax error). `context` prefixes every message, typically a path.
MatroidFile parse_matroid_file(std::string_view text,
                               std::string_view context = "<input>");
// Canonical text: sorted bases, ascending elements, trailing newline.
std::string serialize_matroid_file(const Matroid& m);
// Validates through matroid_from_bases; validation errors keep their code
// and gain `context` in the message.
Matroid to_matroid(const MatroidFile& file, std::string_view context = "<input>");

Matroid load_matroid_file(const std::filesystem::path& path);
// Every *.json file in `dir`, sorted by file name.
std::vector<Matroid> load_matroid_directory(const std::filesystem::path& dir);

// An existing file path is loaded as a matroid file; anything else is read
// as a named spec (see build_named). Throws FileNotFound for a path-like
// argument that names no file.
Matroid parse_matroid_source(std::string_view arg);

enum class OutputFormat { Json, Table };

// Both formats are deterministic: fixed field order, polynomials as ascending
// coefficient lists. In JSON, coefficients that fit in 64 bits are numbers
// and larger ones are decimal strings.
std::string emit_polynomial(const IntPoly& p, OutputFormat format);
std::string emit_polynomial(const IntPoly2& p, OutputFormat format);
std::string emit_report(const MatroidReport& report, OutputFormat format);
std::string emit_report(const CheckResult& check, const std::string& label,
                        OutputFormat format);
std::string emit_report(const ScanReport& report, OutputFormat format);

// CLI exit status: 2 for a failed check (for scans, any theorem failure;
// findings do not count), 0 otherwise.
int exit_status(const CheckResult& check);
int exit_status(const ScanReport& report);

}  // namespace matkls

#endif  // MATKLS_IO_HPP
