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

#pragma once

// State files are JSON objects with exactly one of
//
//   {"matrix": [[[re, im], x4], x4]}
//   {"bloch": {"u": [3], "v": [3], "T": [[3], x3]}}

#include "abslocal/qmat.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace abslocal {

/// Malformed JSON or a document that does not follow the schema.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

DensityMatrix parse_state_json(std::string_view text);
DensityMatrix load_state_file(const std::string& path);

std::string state_to_json(const DensityMatrix& sigma);
std::string bloch_to_json(const BlochForm& b);

/// Locale-independent, 9 significant digits.
std::string format_number(double x);

}  // namespace abslocal
