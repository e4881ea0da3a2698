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

#pragma once

#include <string>
#include <string_view>

#include "dmat/gf2.hpp"
#include "dmat/graph.hpp"
#include "dmat/set_system.hpp"

namespace dmat {

// Text formats. Parsers throw ParseError naming the offending line.
//
//   dm v1            gf2 v1         graph v1
//   n 2              n 2            n 3
//   feasible 0 1 3   11             edge 1 2
//                    10             edge 2 3

std::string format_dm(const SetSystem& s);
SetSystem parse_dm(std::string_view text);

std::string format_gf2(const Gf2SymMatrix& a);
Gf2SymMatrix parse_gf2(std::string_view text);

std::string format_graph(const SimpleGraph& g);
SimpleGraph parse_graph(std::string_view text);

/// One-line form "n:m1,m2,...", e.g. "2:0,1,3".
std::string dm_literal(const SetSystem& s);

/// Parses a subset given as comma-separated 1-based labels ("1,3"); "{}" or
/// the empty string is the empty set. Throws RangeError for labels outside
/// 1..n and PreconditionError for malformed input.
Mask parse_subset(std::string_view text, int n);

/// "{1,3}" style rendering.
std::string format_subset(Mask m);

}  // namespace dmat
