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

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "symqaoa/family.hpp"
#include "symqaoa/types.hpp"

namespace symqaoa {

/// A literal over the x variables after planting. var is 1-based.
struct Literal {
  std::uint32_t var = 1;
  bool negated = false;

  int dimacs() const { return negated ? -static_cast<int>(var) : static_cast<int>(var); }
  auto operator<=>(const Literal&) const = default;
};

/// Disjunction of literals sorted by variable; weight counts merged unit clauses.
struct Clause {
  std::vector<Literal> literals;
  std::uint64_t weight = 1;

  /// True when every literal is false under x, i.e. the clause is violated.
  bool violated_by(std::span<const std::uint8_t> x) const;
  bool operator==(const Clause&) const = default;
};

struct InstanceMeta {
  std::vector<Family> families;
  Shape shape;
  double f = 1.0;
  std::uint64_t seed = 0;
  bool external = false;  ///< parsed from a file, provenance unknown
  bool empty = false;     ///< sparsification removed every clause
  std::uint64_t unit_clauses_total = 0;
  std::uint64_t unit_clauses_kept = 0;
  /// var_perm[i] is the new 1-based index of original variable i+1. Empty when unshuffled.
  std::vector<std::uint32_t> var_perm;
};

struct PlantedInstance {
  int n = 0;
  Bits s;  ///< hidden string; empty for external instances
  std::vector<Clause> clauses;
  InstanceMeta meta;

  std::uint64_t total_weight() const;
};

struct GenerateOptions {
  /// Upper bound on enumerated unit clauses before sparsification.
  std::uint64_t clause_budget = 200'000'000;
};

/// Unit clauses a family contributes before sparsification.
std::uint64_t unit_clause_count(const Family& family, const Shape& shape);

/// Enumerates every unit clause of the families, plants s, keeps each unit
/// clause with probability f and merges identical literal sets.
/// f = 1 is deterministic and never touches the RNG.
PlantedInstance generate(const std::vector<Family>& families, const Shape& shape, const Bits& s, double f,
                         std::uint64_t seed, const GenerateOptions& options = {});

/// Total weight of violated clauses.
Cost eval_cost(const PlantedInstance& inst, std::span<const std::uint8_t> x);

/// Resamples every unit clause of an f = 1 instance with keep probability f:
/// a clause of weight w gets weight Binomial(w, f).
PlantedInstance resparsify(const PlantedInstance& full, double f, std::mt19937_64& rng);

/// Applies a random variable relabelling; s and var_perm follow it.
PlantedInstance shuffle_variables(const PlantedInstance& inst, std::uint64_t seed);

/// E_x C(x) = sum over clauses of weight * 2^{-width}.
double expected_cost_uniform(const PlantedInstance& inst);

struct SparsifyIdentityStat {
  Bits x;                  ///< the fixed random probe string
  double exact = 0.0;      ///< C(x) on the full instance
  double mean = 0.0;       ///< mean of C~_w(x) / f over trials
  double stderr_mean = 0.0;
  double sample_variance = 0.0;  ///< of C~_w(x) over trials
};

/// Empirical check of E_w[C~_w(x) / f] = C(x) at one random x.
SparsifyIdentityStat expected_sparsified_cost_identity(const PlantedInstance& full, double f, std::uint64_t seed,
                                                       int trials);

}  // namespace symqaoa
