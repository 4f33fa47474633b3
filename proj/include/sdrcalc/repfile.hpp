// Copyright 2026 The sdrcalc Authors
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

#include <filesystem>
#include <stdexcept>
#include <string>

#include "sdrcalc/sdrep.hpp"

namespace sdrcalc {

// Parse failure with file/line/field context in what().
class RepFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kRepFormatVersion = 1;

// Reads a .rep file (format documented in docs/repfile-format.md).
// Matrices are symmetrized on load; asymmetry beyond 1e-12 max-norm,
// dimension inconsistencies, and unknown format versions raise
// RepFileError naming the offending field and line.
SDRep load_rep(const std::filesystem::path& path);

// Parses .rep content from a string; `name` is used in error messages.
SDRep parse_rep(const std::string& text, const std::string& name = "<string>");

// Writes the canonical textual form: 17 significant digits, so
// save -> load reproduces every entry bit-exactly.
void save_rep(const SDRep& rep, const std::filesystem::path& path);
std::string format_rep(const SDRep& rep);

}  // namespace sdrcalc
