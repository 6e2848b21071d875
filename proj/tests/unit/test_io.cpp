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

#include <cmath>
#include <filesystem>
#include <limits>
#include <sstream>

#include <gtest/gtest.h>

#include "gg/error.hpp"
#include "gg/io.hpp"
#include "oracles.hpp"

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(gg::format_double(0.1), "0.1");
  EXPECT_EQ(gg::format_double(-13.0), "-13");
  EXPECT_EQ(gg::format_double(std::numeric_limits<double>::quiet_NaN()), "nan");
  EXPECT_EQ(gg::format_double(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(gg::format_double(-std::numeric_limits<double>::infinity()), "-inf");
  for (double x : {std::log(2.0), 1e-300, -6.02214076e23, 0.30000000000000004})
    EXPECT_EQ(std::stod(gg::format_double(x)), x);
}

TEST(StateDump, RoundTripIsExact) {
  const gg::StateVector s = oracle::random_state(5, 61);
  std::stringstream buf;
  gg::write_state(buf, s);
  const std::string text = buf.str();
  EXPECT_EQ(text.rfind("qsv1 5\n", 0), 0u);
  const gg::StateVector back = gg::read_state(buf);
  ASSERT_EQ(back.qubit_count(), 5);
  EXPECT_EQ(oracle::max_diff(s, back), 0.0);
}

TEST(StateDump, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "gg_io_test.qsv";
  const gg::StateVector s = gg::StateVector::basis(3, 5);
  gg::write_state(path, s);
  EXPECT_EQ(oracle::max_diff(gg::read_state(path), s), 0.0);
  std::filesystem::remove(path);
}

TEST(StateDump, RejectsMalformedInput) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return gg::read_state(in);
  };
  EXPECT_THROW(parse(""), gg::FormatError);
  EXPECT_THROW(parse("qsv2 1\n1,0\n0,0\n"), gg::FormatError);
  EXPECT_THROW(parse("qsv1 x\n"), gg::FormatError);
  EXPECT_THROW(parse("qsv1 1\n1,0\n"), gg::FormatError);
  EXPECT_THROW(parse("qsv1 1\n1,0\n0,0\n0,0\n"), gg::FormatError);
  EXPECT_THROW(parse("qsv1 1\n1;0\n0,0\n"), gg::FormatError);
  EXPECT_THROW(parse("qsv1 1\n1,abc\n0,0\n"), gg::FormatError);
  EXPECT_NO_THROW(parse("qsv1 1\n1,0\n0,0\n"));
}

TEST(Json, WriteAndRead) {
  const auto path = std::filesystem::temp_directory_path() / "gg_io_test.json";
  const nlohmann::json j{{"a", 1}, {"b", {1.5, 2.5}}};
  gg::write_json(path, j);
  EXPECT_EQ(gg::read_json(path), j);
  gg::write_text(path, "{not json");
  EXPECT_THROW(gg::read_json(path), gg::FormatError);
  std::filesystem::remove(path);
}
