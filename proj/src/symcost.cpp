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

#include "symqaoa/symcost.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace symqaoa {

namespace {

// Ordered tuples when 0 < m < l, unordered subsets when m is 0 or l.
Cost group_count(int ell, int m, int n, int k) {
  if (m == 0) return binomial(n - k, ell);
  if (m == ell) return binomial(k, ell);
  return falling_factorial(k, m) * falling_factorial(n - k, ell - m);
}

// The 1/l! that unordered families carry relative to the leading k^m (n-k)^{l-m}.
double unordered_divisor(int ell, int m) {
  if (m == 0 || m == ell) return static_cast<double>(factorial(ell));
  return 1.0;
}

void check_weight(int k, int n) {
  if (k < 0 || k > n) throw std::domain_error("Hamming weight out of range");
}

}  // namespace

Cost CostSpec::at(int k) const {
  if (shape.kind != ShapeKind::symmetric) throw std::logic_error("single-index lookup on a product table");
  check_weight(k, shape.n1);
  return table[static_cast<std::size_t>(k)];
}

Cost CostSpec::at(int k1, int k2) const {
  if (shape.kind != ShapeKind::product) throw std::logic_error("two-index lookup on an S_n table");
  check_weight(k1, shape.n1);
  check_weight(k2, shape.n2);
  return table[static_cast<std::size_t>(k1) * (shape.n2 + 1) + k2];
}

CostSpec CostSpec::from_table(std::vector<Cost> table) {
  if (table.empty()) throw ConfigError("cost table needs at least one entry");
  CostSpec spec;
  spec.shape = Shape::symmetric(static_cast<int>(table.size()) - 1);
  spec.table = std::move(table);
  return spec;
}

void MonomialPoly::validate() const {
  if (!(alpha1 > 0.0) || !(alpha2 > 0.0) || std::abs(alpha1 + alpha2 - 1.0) > 1e-12)
    throw ConfigError("group fractions must be positive and sum to 1");
  for (const auto& t : terms) {
    if (t.a < 0 || t.b < 0 || t.c < 0 || t.d < 0 || t.a + t.b + t.c + t.d != ell)
      throw ConfigError("monomial degree differs from ell");
  }
}

double MonomialPoly::operator()(double xi1, double xi2) const {
  double sum = 0.0;
  for (const auto& t : terms) {
    sum += t.kappa * std::pow(xi1, t.a) * std::pow(1.0 - xi1, t.b) * std::pow(xi2, t.c) * std::pow(1.0 - xi2, t.d);
  }
  return sum;
}

Cost cost_sn_lnm(const LnmFamily& family, int n, int k) {
  validate(Family{family}, ShapeKind::symmetric);
  check_weight(k, n);
  return group_count(family.ell, family.m, n, k);
}

Cost cost_prod_lnm(const Family& family, int n1, int n2, int k1, int k2) {
  validate(family, ShapeKind::product);
  check_weight(k1, n1);
  check_weight(k2, n2);
  if (const auto* f = std::get_if<LnmFamily>(&family)) {
    switch (f->scope) {
      case Scope::whole: return group_count(f->ell, f->m, n1 + n2, k1 + k2);
      case Scope::group1: return group_count(f->ell, f->m, n1, k1);
      case Scope::group2: return group_count(f->ell, f->m, n2, k2);
      case Scope::both_groups: return group_count(f->ell, f->m, n1, k1) + group_count(f->ell, f->m, n2, k2);
    }
  }
  const auto& p = std::get<ProdFamily>(family);
  Cost c = group_count(p.ell1, p.m1, n1, k1) * group_count(p.ell2, p.m2, n2, k2);
  if (p.symmetrized) c += group_count(p.ell1, p.m1, n2, k2) * group_count(p.ell2, p.m2, n1, k1);
  return c;
}

CostSpec build_cost_table(const std::vector<Family>& families, const Shape& shape) {
  if (shape.n1 < 0 || shape.n2 < 0 || (shape.kind == ShapeKind::symmetric && shape.n2 != 0))
    throw ConfigError("bad shape");
  for (const auto& f : families) validate(f, shape.kind);

  CostSpec spec;
  spec.shape = shape;
  spec.families = families;
  if (shape.kind == ShapeKind::symmetric) {
    spec.table.assign(static_cast<std::size_t>(shape.n1) + 1, 0);
    for (const auto& f : families) {
      const auto& lnm = std::get<LnmFamily>(f);
      for (int k = 0; k <= shape.n1; ++k) spec.table[k] += cost_sn_lnm(lnm, shape.n1, k);
    }
    return spec;
  }
  const std::size_t cols = static_cast<std::size_t>(shape.n2) + 1;
  spec.table.assign((static_cast<std::size_t>(shape.n1) + 1) * cols, 0);
  for (const auto& f : families) {
    for (int k1 = 0; k1 <= shape.n1; ++k1)
      for (int k2 = 0; k2 <= shape.n2; ++k2) spec.table[k1 * cols + k2] += cost_prod_lnm(f, shape.n1, shape.n2, k1, k2);
  }
  return spec;
}

MonomialPoly to_monomials(const std::vector<Family>& families, double alpha1, double alpha2) {
  MonomialPoly poly;
  poly.alpha1 = alpha1;
  poly.alpha2 = alpha2;
  for (const auto& f : families) {
    validate(f, ShapeKind::product);
    poly.ell = std::max(poly.ell, locality(f));
  }

  for (const auto& f : families) {
    if (locality(f) < poly.ell) continue;
    if (const auto* lnm = std::get_if<LnmFamily>(&f)) {
      const double div = unordered_divisor(lnm->ell, lnm->m);
      const int ell = lnm->ell, m = lnm->m;
      if (lnm->scope == Scope::whole) throw ConfigError("whole-register family has no product monomial form");
      if (lnm->scope == Scope::group1 || lnm->scope == Scope::both_groups)
        poly.terms.push_back({std::pow(alpha1, ell) / div, m, ell - m, 0, 0});
      if (lnm->scope == Scope::group2 || lnm->scope == Scope::both_groups)
        poly.terms.push_back({std::pow(alpha2, ell) / div, 0, 0, m, ell - m});
      continue;
    }
    const auto& p = std::get<ProdFamily>(f);
    const double div = unordered_divisor(p.ell1, p.m1) * unordered_divisor(p.ell2, p.m2);
    poly.terms.push_back(
        {std::pow(alpha1, p.ell1) * std::pow(alpha2, p.ell2) / div, p.m1, p.ell1 - p.m1, p.m2, p.ell2 - p.m2});
    if (p.symmetrized)
      poly.terms.push_back(
          {std::pow(alpha1, p.ell2) * std::pow(alpha2, p.ell1) / div, p.m2, p.ell2 - p.m2, p.m1, p.ell1 - p.m1});
  }
  poly.validate();
  return poly;
}

DistinctCheck distinct_values_check(const CostSpec& spec) {
  if (spec.shape.kind != ShapeKind::symmetric) throw ConfigError("distinct-values check needs an S_n table");
  std::vector<int> order(spec.table.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return spec.table[x] < spec.table[y]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (spec.table[order[i]] == spec.table[order[i - 1]]) {
      return {false, std::pair{std::min(order[i - 1], order[i]), std::max(order[i - 1], order[i])}};
    }
  }
  return {};
}

double collision_probability(const CostSpec& spec) {
  if (spec.shape.kind != ShapeKind::symmetric) throw ConfigError("collision probability needs an S_n table");
  const int n = spec.shape.n1;
  std::map<Cost, std::vector<int>> groups;
  for (int k = 0; k <= n; ++k) groups[spec.table[k]].push_back(k);
  const double log4n = 2.0 * n * std::log(2.0);
  double p = 0.0;
  for (const auto& [value, ks] : groups) {
    for (int k : ks)
      for (int l : ks)
        if (k != l) p += std::exp(log_binomial(n, k) + log_binomial(n, l) - log4n);
  }
  return p;
}

}  // namespace symqaoa
