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

#include <optional>
#include <utility>
#include <vector>

#include "symqaoa/family.hpp"
#include "symqaoa/types.hpp"

namespace symqaoa {

/// A symmetric cost function c(k) or c(k1, k2) with the families that built it.
///
/// For product shapes the table is row-major: entry (k1, k2) lives at
/// k1 * (n2 + 1) + k2.
struct CostSpec {
  Shape shape;
  std::vector<Family> families;
  std::vector<Cost> table;

  Cost at(int k) const;
  Cost at(int k1, int k2) const;

  /// Wraps an explicit S_n table (no provenance), e.g. the hill-climbing trap.
  static CostSpec from_table(std::vector<Cost> table);
};

/// One term kappa * xi1^a (1-xi1)^b xi2^c (1-xi2)^d.
struct Monomial {
  double kappa = 0.0;
  int a = 0, b = 0, c = 0, d = 0;
};

/// Leading-order polynomial f with c(k1,k2) = n^ell f(k1/n1, k2/n2) + O(n^{ell-1}).
struct MonomialPoly {
  std::vector<Monomial> terms;
  int ell = 0;
  double alpha1 = 0.5;
  double alpha2 = 0.5;

  /// Throws ConfigError on a term whose degree is not ell or on bad group fractions.
  void validate() const;
  double operator()(double xi1, double xi2) const;
};

/// Violated unit clauses of one lNm family at Hamming weight k out of n.
Cost cost_sn_lnm(const LnmFamily& family, int n, int k);

/// Violated unit clauses of one family at group weights (k1, k2) in a product shape.
/// Accepts both ProdFamily and group-scoped LnmFamily descriptors.
Cost cost_prod_lnm(const Family& family, int n1, int n2, int k1, int k2);

/// Sum of per-family costs over every Hamming sector of the shape.
CostSpec build_cost_table(const std::vector<Family>& families, const Shape& shape);

/// Leading-order monomials of a product-shape family list. Families below the
/// maximal locality are dropped.
MonomialPoly to_monomials(const std::vector<Family>& families, double alpha1, double alpha2);

struct DistinctCheck {
  bool pass = true;
  /// First colliding pair (k < l) in sorted-value order when the check fails.
  std::optional<std::pair<int, int>> collision;
};

/// All n+1 values of an S_n table pairwise distinct.
DistinctCheck distinct_values_check(const CostSpec& spec);

/// Pr_{x,y}[c(|x|) = c(|y|) and |x| != |y|] for uniform x, y.
double collision_probability(const CostSpec& spec);

}  // namespace symqaoa
