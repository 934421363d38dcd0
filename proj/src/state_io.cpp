// Copyright 2026 The abslocal Authors
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

#include "abslocal/state_io.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace abslocal {

namespace {

using json = nlohmann::json;

double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  return j.get<double>();
}

const json& array_of(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n)
    throw ParseError(where + ": expected an array of length " +
                     std::to_string(n));
  return j;
}

Vec3 vec3(const json& j, const std::string& where) {
  array_of(j, 3, where);
  return Vec3(number(j[0], where), number(j[1], where), number(j[2], where));
}

Mat4 parse_matrix(const json& j) {
  array_of(j, 4, "matrix");
  Mat4 m;
  for (int r = 0; r < 4; ++r) {
    const std::string row = "matrix[" + std::to_string(r) + "]";
    array_of(j[r], 4, row);
    for (int c = 0; c < 4; ++c) {
      const std::string cell = row + "[" + std::to_string(c) + "]";
      array_of(j[r][c], 2, cell);
      m(r, c) = Complex(number(j[r][c][0], cell), number(j[r][c][1], cell));
    }
  }
  return m;
}

BlochForm parse_bloch(const json& j) {
  if (!j.is_object()) throw ParseError("bloch: expected an object");
  for (const char* key : {"u", "v", "T"})
    if (!j.contains(key))
      throw ParseError(std::string("bloch: missing key '") + key + "'");
  BlochForm b;
  b.u = vec3(j["u"], "bloch.u");
  b.v = vec3(j["v"], "bloch.v");
  array_of(j["T"], 3, "bloch.T");
  for (int r = 0; r < 3; ++r)
    b.T.row(r) = vec3(j["T"][r], "bloch.T[" + std::to_string(r) + "]");
  return b;
}

}  // namespace

DensityMatrix parse_state_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("state file must be a JSON object");
  const bool has_matrix = doc.contains("matrix");
  const bool has_bloch = doc.contains("bloch");
  if (has_matrix == has_bloch)
    throw ParseError("state file needs exactly one of 'matrix' or 'bloch'");
  if (has_matrix) return DensityMatrix::validate(parse_matrix(doc["matrix"]));
  return from_bloch(parse_bloch(doc["bloch"]));
}

DensityMatrix load_state_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str());
}

std::string state_to_json(const DensityMatrix& sigma) {
  json rows = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c)
      row.push_back({sigma(r, c).real(), sigma(r, c).imag()});
    rows.push_back(row);
  }
  return json{{"matrix", rows}}.dump();
}

std::string bloch_to_json(const BlochForm& b) {
  json t = json::array();
  for (int r = 0; r < 3; ++r) t.push_back({b.T(r, 0), b.T(r, 1), b.T(r, 2)});
  return json{{"bloch",
               {{"u", {b.u(0), b.u(1), b.u(2)}},
                {"v", {b.v(0), b.v(1), b.v(2)}},
                {"T", t}}}}
      .dump();
}

std::string format_number(double x) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

}  // namespace abslocal
