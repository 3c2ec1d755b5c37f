// Copyright 2026 The symqaoa Authors
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

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace symqaoa {

enum class ShapeKind { symmetric, product };

/// S_n (n1 = n, n2 = 0) or S_{n1} x S_{n2}. Group 1 holds variables 1..n1.
struct Shape {
  ShapeKind kind = ShapeKind::symmetric;
  int n1 = 0;
  int n2 = 0;

  static Shape symmetric(int n) { return {ShapeKind::symmetric, n, 0}; }
  static Shape product(int n1, int n2) { return {ShapeKind::product, n1, n2}; }
  int n() const { return n1 + n2; }
  bool operator==(const Shape&) const = default;
};

/// Which variables an lNm family ranges over.
enum class Scope {
  whole,        ///< all n variables
  group1,       ///< first n1 variables only
  group2,       ///< last n2 variables only
  both_groups,  ///< group-local copy in each group (product shapes)
};

/// All l-variable disjunctions with m negated literals over y = x XOR s.
/// Ordered index tuples when 0 < m < l, unordered subsets otherwise.
struct LnmFamily {
  int ell = 1;
  int m = 0;
  Scope scope = Scope::whole;
  bool operator==(const LnmFamily&) const = default;
};

/// (l1,l2)N(m1,m2): an l1-tuple from group 1 joined with an l2-tuple from group 2.
/// When symmetrized the copy with the groups swapped is added.
struct ProdFamily {
  int ell1 = 0;
  int ell2 = 0;
  int m1 = 0;
  int m2 = 0;
  bool symmetrized = true;
  bool operator==(const ProdFamily&) const = default;
};

using Family = std::variant<LnmFamily, ProdFamily>;

/// Total clause width.
int locality(const Family& family);

/// Throws ConfigError when the descriptor breaks its invariants or does not fit the shape.
void validate(const Family& family, ShapeKind shape);

/// True when any token only makes sense for a product shape (g1:, g2:, (l1,l2)N(..), !sym).
bool needs_product_shape(std::string_view text);

/// Parses the comma separated family grammar, e.g. "1N1,3N1", "4N1,3N31,2N0",
/// "(3,2)N(1,0),5N1", "g1:5N1", "(3,2)N(1,0)!sym".
std::vector<Family> parse_families(std::string_view text, ShapeKind shape);

/// Canonical token for one family; parse_families(to_string(f)) round-trips.
std::string to_string(const Family& family, ShapeKind shape);
std::string to_string(const std::vector<Family>& families, ShapeKind shape);

}  // namespace symqaoa
