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

#include "dmat/io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>
#include <vector>

#include "dmat/errors.hpp"

namespace dmat {
namespace {

struct Line {
  int number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Lines with their 1-based numbers; trailing blank lines are dropped.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 1;
  while (!text.empty()) {
    const auto end = text.find('\n');
    lines.push_back({number++, trim(text.substr(0, end))});
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  while (!lines.empty() && lines.back().text.empty()) lines.pop_back();
  return lines;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    s = trim(s);
    if (s.empty()) return out;
    const auto end = s.find_first_of(" \t");
    out.push_back(s.substr(0, end));
    if (end == std::string_view::npos) return out;
    s.remove_prefix(end);
  }
}

long long parse_int(std::string_view token, int line, const char* what) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(token) + "'");
  }
  return value;
}

const Line& require_line(const std::vector<Line>& lines, std::size_t index, const char* what) {
  if (index >= lines.size()) {
    throw ParseError(static_cast<int>(index) + 1, std::string("missing ") + what);
  }
  return lines[index];
}

void expect_header(const std::vector<Line>& lines, std::string_view header) {
  const Line& line = require_line(lines, 0, "header");
  if (line.text != header) {
    throw ParseError(line.number, "expected '" + std::string(header) + "', got '" + std::string(line.text) + "'");
  }
}

int parse_size_line(const std::vector<Line>& lines) {
  const Line& line = require_line(lines, 1, "size line");
  const auto parts = tokens(line.text);
  if (parts.size() != 2 || parts[0] != "n") throw ParseError(line.number, "expected 'n <int>'");
  const long long n = parse_int(parts[1], line.number, "size");
  if (n < 0 || n > kMaxGroundSet) {
    throw ParseError(line.number, "size " + std::to_string(n) + " not in 0.." + std::to_string(kMaxGroundSet));
  }
  return static_cast<int>(n);
}

void reject_trailing(const std::vector<Line>& lines, std::size_t from) {
  if (from < lines.size()) throw ParseError(lines[from].number, "unexpected content '" + std::string(lines[from].text) + "'");
}

}  // namespace

std::string format_dm(const SetSystem& s) {
  std::ostringstream out;
  out << "dm v1\nn " << s.size() << "\nfeasible";
  for (Mask m : s.feasible()) out << ' ' << m;
  out << '\n';
  return out.str();
}

SetSystem parse_dm(std::string_view text) {
  const auto lines = split_lines(text);
  expect_header(lines, "dm v1");
  const int n = parse_size_line(lines);
  const Line& line = require_line(lines, 2, "feasible line");
  const auto parts = tokens(line.text);
  if (parts.empty() || parts[0] != "feasible") throw ParseError(line.number, "expected 'feasible <masks>'");
  if (parts.size() == 1) throw ParseError(line.number, "set system has no feasible sets");
  std::vector<Mask> masks;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const long long m = parse_int(parts[i], line.number, "mask");
    if (m < 0 || m > static_cast<long long>(full_mask(n))) {
      throw ParseError(line.number, "mask " + std::to_string(m) + " outside ground set of size " + std::to_string(n));
    }
    masks.push_back(static_cast<Mask>(m));
  }
  std::vector<Mask> sorted = masks;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw ParseError(line.number, "duplicate mask " + std::to_string(*dup));
  }
  reject_trailing(lines, 3);
  return SetSystem(n, std::move(masks));
}

std::string format_gf2(const Gf2SymMatrix& a) {
  std::ostringstream out;
  out << "gf2 v1\nn " << a.size() << '\n';
  for (int i = 1; i <= a.size(); ++i) {
    for (int j = 1; j <= a.size(); ++j) out << (a.at(i, j) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

Gf2SymMatrix parse_gf2(std::string_view text) {
  const auto lines = split_lines(text);
  expect_header(lines, "gf2 v1");
  const int n = parse_size_line(lines);
  std::vector<Mask> rows(n, 0);
  for (int i = 0; i < n; ++i) {
    const Line& line = require_line(lines, 2 + i, "matrix row");
    if (static_cast<int>(line.text.size()) != n) {
      throw ParseError(line.number, "expected " + std::to_string(n) + " entries, got " +
                                        std::to_string(line.text.size()));
    }
    for (int j = 0; j < n; ++j) {
      const char c = line.text[j];
      if (c != '0' && c != '1') throw ParseError(line.number, std::string("entry must be 0 or 1, got '") + c + "'");
      if (c == '1') rows[i] |= Mask{1} << j;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (((rows[i] >> j) & 1) != ((rows[j] >> i) & 1)) {
        throw ParseError(lines[2 + i].number, "matrix not symmetric at (" + std::to_string(i + 1) + "," +
                                                  std::to_string(j + 1) + ")");
      }
    }
  }
  reject_trailing(lines, 2 + n);
  return Gf2SymMatrix::from_rows(std::move(rows));
}

std::string format_graph(const SimpleGraph& g) {
  std::ostringstream out;
  out << "graph v1\nn " << g.order() << '\n';
  for (auto [a, b] : g.edges()) out << "edge " << a << ' ' << b << '\n';
  return out.str();
}

SimpleGraph parse_graph(std::string_view text) {
  const auto lines = split_lines(text);
  expect_header(lines, "graph v1");
  const int n = parse_size_line(lines);
  SimpleGraph g(n);
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.text.empty()) continue;
    const auto parts = tokens(line.text);
    if (parts.size() != 3 || parts[0] != "edge") throw ParseError(line.number, "expected 'edge <i> <j>'");
    const long long a = parse_int(parts[1], line.number, "vertex");
    const long long b = parse_int(parts[2], line.number, "vertex");
    if (a < 1 || a > n || b < 1 || b > n) throw ParseError(line.number, "vertex outside 1.." + std::to_string(n));
    if (a == b) throw ParseError(line.number, "loop at vertex " + std::to_string(a));
    if (g.adjacent(static_cast<int>(a), static_cast<int>(b))) throw ParseError(line.number, "repeated edge");
    g.toggle_edge(static_cast<int>(a), static_cast<int>(b));
  }
  return g;
}

std::string dm_literal(const SetSystem& s) {
  std::ostringstream out;
  out << s.size() << ':';
  bool first = true;
  for (Mask m : s.feasible()) {
    if (!first) out << ',';
    out << m;
    first = false;
  }
  return out.str();
}

Mask parse_subset(std::string_view text, int n) {
  text = trim(text);
  if (text.empty() || text == "{}") return 0;
  if (text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
  Mask out = 0;
  while (true) {
    const auto end = text.find(',');
    const std::string_view token = trim(text.substr(0, end));
    int e = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), e);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      throw PreconditionError("malformed subset element '" + std::string(token) + "'");
    }
    if (e < 1 || e > n) throw RangeError("element " + std::to_string(e) + " outside 1.." + std::to_string(n));
    out |= element_bit(e);
    if (end == std::string_view::npos) return out;
    text.remove_prefix(end + 1);
  }
}

std::string format_subset(Mask m) {
  std::string out = "{";
  for (Mask rest = m; rest != 0; rest &= rest - 1) {
    if (out.size() > 1) out += ',';
    out += std::to_string(std::countr_zero(rest) + 1);
  }
  return out + "}";
}

}  // namespace dmat
