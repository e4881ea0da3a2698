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

#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "dmat/errors.hpp"
#include "dmat/io.hpp"
#include "oracles.hpp"

namespace dmat {
namespace {

int parse_error_line(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(DmFormat, RoundTrip) {
  const SetSystem s(2, {0, 1, 3});
  EXPECT_EQ(format_dm(s), "dm v1\nn 2\nfeasible 0 1 3\n");
  EXPECT_EQ(parse_dm(format_dm(s)), s);
  EXPECT_EQ(parse_dm("dm v1\r\nn 2\r\nfeasible   3 0\r\n\r\n"), SetSystem(2, {0, 3}));
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    const SetSystem r = oracle::from_bits(4, rng() & 0xffff ? rng() & 0xffff : 1);
    ASSERT_EQ(parse_dm(format_dm(r)), r);
  }
}

TEST(DmFormat, ErrorsNameTheLine) {
  EXPECT_EQ(parse_error_line([] { parse_dm("dm v2\nn 2\nfeasible 0\n"); }), 1);
  EXPECT_EQ(parse_error_line([] { parse_dm("dm v1\nn x\nfeasible 0\n"); }), 2);
  EXPECT_EQ(parse_error_line([] { parse_dm("dm v1\nn 17\nfeasible 0\n"); }), 2);
  EXPECT_EQ(parse_error_line([] { parse_dm("dm v1\nn 2\nfeasible\n"); }), 3);
  EXPECT_EQ(parse_error_line([] { parse_dm("dm v1\nn 2\nfeasible 0 4\n"); }), 3);
  EXPECT_EQ(parse_error_line([] { parse_dm("dm v1\nn 2\nfeasible 0 0\n"); }), 3);
  EXPECT_EQ(parse_error_line([] { parse_dm("dm v1\nn 2\nfeasible 0 -1\n"); }), 3);
  EXPECT_EQ(parse_error_line([] { parse_dm("dm v1\nn 2\nfeasible 0\nextra\n"); }), 4);
  EXPECT_EQ(parse_error_line([] { parse_dm("dm v1\nn 2\n"); }), 3);
  EXPECT_EQ(parse_error_line([] { parse_dm(""); }), 1);
}

TEST(Gf2Format, RoundTrip) {
  const Gf2SymMatrix a = Gf2SymMatrix::from_rows({7, 3, 1});
  EXPECT_EQ(format_gf2(a), "gf2 v1\nn 3\n111\n110\n100\n");
  EXPECT_EQ(parse_gf2(format_gf2(a)), a);
  EXPECT_EQ(parse_gf2("gf2 v1\nn 0\n"), Gf2SymMatrix(0));
}

TEST(Gf2Format, Errors) {
  EXPECT_EQ(parse_error_line([] { parse_gf2("gf2 v1\nn 2\n11\n00\n"); }), 4);
  EXPECT_EQ(parse_error_line([] { parse_gf2("gf2 v1\nn 2\n12\n00\n"); }), 3);
  EXPECT_EQ(parse_error_line([] { parse_gf2("gf2 v1\nn 2\n1\n00\n"); }), 3);
  EXPECT_EQ(parse_error_line([] { parse_gf2("gf2 v1\nn 2\n10\n"); }), 4);
}

TEST(GraphFormat, RoundTrip) {
  const SimpleGraph g = SimpleGraph::from_edges(3, {{1, 2}, {2, 3}});
  EXPECT_EQ(format_graph(g), "graph v1\nn 3\nedge 1 2\nedge 2 3\n");
  EXPECT_EQ(parse_graph(format_graph(g)), g);
}

TEST(GraphFormat, Errors) {
  EXPECT_EQ(parse_error_line([] { parse_graph("graph v1\nn 3\nedge 1 1\n"); }), 3);
  EXPECT_EQ(parse_error_line([] { parse_graph("graph v1\nn 3\nedge 1 2\nedge 2 1\n"); }), 4);
  EXPECT_EQ(parse_error_line([] { parse_graph("graph v1\nn 3\nedge 1 4\n"); }), 3);
  EXPECT_EQ(parse_error_line([] { parse_graph("graph v1\nn 3\nvertex 1\n"); }), 3);
}

TEST(Subsets, ParseAndFormat) {
  EXPECT_EQ(parse_subset("1,3", 3), mask_of({1, 3}));
  EXPECT_EQ(parse_subset("{1, 3}", 3), mask_of({1, 3}));
  EXPECT_EQ(parse_subset("{}", 3), 0u);
  EXPECT_EQ(parse_subset("", 3), 0u);
  EXPECT_THROW(parse_subset("4", 3), RangeError);
  EXPECT_THROW(parse_subset("1,,2", 3), PreconditionError);
  EXPECT_EQ(format_subset(mask_of({1, 3})), "{1,3}");
  EXPECT_EQ(format_subset(0), "{}");
  EXPECT_EQ(dm_literal(SetSystem(2, {0, 1, 3})), "2:0,1,3");
}

}  // namespace
}  // namespace dmat
