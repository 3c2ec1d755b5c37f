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
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "symqaoa/cost_model.hpp"

namespace symqaoa {

/// Black-box access to a cost function. Every counted evaluation bumps the counter by one.
class QueryOracle {
 public:
  explicit QueryOracle(std::shared_ptr<const CostModel> model);

  int num_vars() const { return model_->num_vars(); }
  Cost query(std::span<const std::uint8_t> x);
  /// Uncounted evaluation for post-hoc checks outside a run.
  Cost peek(std::span<const std::uint8_t> x) const { return model_->evaluate(x); }
  std::uint64_t queries() const { return queries_; }

  /// Installs the cost value -> Hamming distance map of a known S_n table.
  /// Throws UnsupportedInput when two distances share a value.
  void set_remap(const CostSpec& spec);
  bool has_remap() const { return !remap_.empty(); }
  /// One counted query, answered as the Hamming distance |x XOR s|.
  int query_distance(std::span<const std::uint8_t> x);

 private:
  std::shared_ptr<const CostModel> model_;
  std::uint64_t queries_ = 0;
  std::map<Cost, int> remap_;
};

enum class Decay { geometric, linear };

struct AnnealSchedule {
  double T0 = 1.0;
  double Tf = 0.1;
  int steps = 10'000;  ///< sweeps; one sweep is n Metropolis steps
  Decay decay = Decay::geometric;

  /// T0 = n^2, Tf = 0.1, 10^4 geometric sweeps.
  static AnnealSchedule defaults(int n);
  /// Throws ConfigError unless T0 >= Tf > 0 and steps >= 1.
  void validate() const;
  /// Temperature of sweep t in [0, steps).
  double temperature(int t) const;
};

enum class ClimbPolicy { steepest, first, random };
ClimbPolicy parse_climb_policy(std::string_view name);
std::string to_string(ClimbPolicy p);

struct ClimbResult {
  Bits x;
  Cost cost = 0;
  std::uint64_t steps = 0;
  std::uint64_t queries = 0;
};

/// Single-bit moves that strictly lower the cost until none exists.
/// steepest takes the lowest-index best neighbour, first scans bits in order,
/// random scans them in a fresh random order each move.
ClimbResult hill_climb(QueryOracle& oracle, Bits x0, ClimbPolicy policy, std::uint64_t seed);

/// True when no single-bit neighbour of x has strictly lower cost (uncounted).
bool is_local_minimum(const QueryOracle& oracle, const Bits& x);

struct AnnealResult {
  Bits best_x;
  Cost best_cost = 0;
  std::uint64_t queries = 0;
};

/// Metropolis chain from a uniform random start with uniform single-bit proposals.
AnnealResult simulated_annealing(QueryOracle& oracle, const AnnealSchedule& schedule, std::uint64_t seed);

struct WalkSatResult {
  bool success = false;
  Bits assignment;  ///< final assignment, satisfying when success
  Cost cost = 0;    ///< violated weight of the final assignment
  std::uint64_t flips = 0;
};

/// Focused local search. A violated clause is drawn uniformly; with probability
/// noise a uniform variable of it is flipped, otherwise one with the least
/// violated weight created (break count), ties uniform.
WalkSatResult walksat(const PlantedInstance& inst, double noise, std::uint64_t max_flips, std::uint64_t seed,
                      std::optional<Bits> initial = std::nullopt);

struct LearnResult {
  Bits s;
  std::uint64_t queries = 0;
};

/// Queries 0^n and every e_i through the remapped oracle; n + 1 queries.
LearnResult one_hot_learn(QueryOracle& oracle);

/// ceil(n / log2(n+1)).
std::uint64_t query_lower_bound(std::uint64_t n);

}  // namespace symqaoa
