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

#include "gg/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "gg/error.hpp"

namespace gg {

namespace {

double parse_double(std::string_view text, std::size_t line) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw FormatError("line " + std::to_string(line) + ": bad number '" + std::string(text) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void write_state(std::ostream& out, const StateVector& state) {
  out << "qsv1 " << state.qubit_count() << '\n';
  char buf[64];
  for (const Complex& a : state.amplitudes()) {
    auto r = std::to_chars(buf, buf + sizeof buf, a.real(), std::chars_format::scientific, 16);
    *r.ptr++ = ',';
    r = std::to_chars(r.ptr, buf + sizeof buf, a.imag(), std::chars_format::scientific, 16);
    *r.ptr++ = '\n';
    out.write(buf, r.ptr - buf);
  }
}

void write_state(const std::filesystem::path& path, const StateVector& state) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  write_state(out, state);
  if (!out) throw Error("write to '" + path.string() + "' failed");
}

StateVector read_state(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty state file");
  const std::string_view head = trim(line);
  if (head.substr(0, 5) != "qsv1 ") throw FormatError("missing 'qsv1 <N>' header");
  int n = 0;
  {
    const std::string_view num = head.substr(5);
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
    if (ec != std::errc{} || ptr != num.data() + num.size() || n < 1 || n > kMaxQubits) {
      throw FormatError("bad qubit count in header '" + std::string(head) + "'");
    }
  }
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Complex> amps;
  amps.reserve(dim);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    if (amps.size() == dim) throw FormatError("more than 2^" + std::to_string(n) + " amplitude lines");
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) throw FormatError("line " + std::to_string(lineno) + ": expected 're,im'");
    amps.emplace_back(parse_double(trim(body.substr(0, comma)), lineno), parse_double(trim(body.substr(comma + 1)), lineno));
  }
  if (amps.size() != dim) {
    throw FormatError("expected " + std::to_string(dim) + " amplitudes, found " + std::to_string(amps.size()));
  }
  return StateVector::from_amplitudes(std::move(amps));
}

StateVector read_state(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  return read_state(in);
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) { write_text(path, j.dump(2) + "\n"); }

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("write to '" + path.string() + "' failed");
}

}  // namespace gg
