// Copyright 2026 The globalgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gg/state.hpp"

namespace gg {

/// Shortest decimal text that round-trips the double, locale independent.
/// NaN and infinities print as nan, inf, -inf.
std::string format_double(double value);

/// qsv1 state dump: a "qsv1 <N>" header line, then 2^N lines "re,im" in
/// index order.
void write_state(std::ostream& out, const StateVector& state);
void write_state(const std::filesystem::path& path, const StateVector& state);
/// Throws FormatError on a malformed dump.
StateVector read_state(std::istream& in);
StateVector read_state(const std::filesystem::path& path);

/// Writes `j` with two-space indentation and a trailing newline.
void write_json(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json read_json(const std::filesystem::path& path);

/// Writes the whole text to a file, replacing it.
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace gg
