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

#include "symqaoa/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace symqaoa {

namespace {

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t uniform_index(std::mt19937_64& rng, std::size_t size) {
  return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

Bits random_bits(std::mt19937_64& rng, int n) {
  Bits x(static_cast<std::size_t>(n));
  for (auto& b : x) b = rng() & 1u;
  return x;
}

}  // namespace

QueryOracle::QueryOracle(std::shared_ptr<const CostModel> model) : model_(std::move(model)) {
  if (!model_) throw std::invalid_argument("oracle needs a cost model");
}

Cost QueryOracle::query(std::span<const std::uint8_t> x) {
  ++queries_;
  return model_->evaluate(x);
}

void QueryOracle::set_remap(const CostSpec& spec) {
  if (spec.shape.kind != ShapeKind::symmetric) throw UnsupportedInput("remap needs an S_n table");
  if (spec.shape.n1 != num_vars()) throw std::invalid_argument("remap table size differs from n");
  std::map<Cost, int> remap;
  for (int k = 0; k <= spec.shape.n1; ++k) {
    const auto [it, fresh] = remap.emplace(spec.table[k], k);
    if (!fresh)
      throw UnsupportedInput("cost value " + to_string(spec.table[k]) + " is shared by distances " +
                             std::to_string(it->second) + " and " + std::to_string(k));
  }
  remap_ = std::move(remap);
}

int QueryOracle::query_distance(std::span<const std::uint8_t> x) {
  if (remap_.empty()) throw UnsupportedInput("oracle has no remap table");
  const auto it = remap_.find(query(x));
  if (it == remap_.end()) throw UnsupportedInput("cost value outside the remap table");
  return it->second;
}

AnnealSchedule AnnealSchedule::defaults(int n) {
  AnnealSchedule s;
  s.T0 = static_cast<double>(n) * n;
  return s;
}

void AnnealSchedule::validate() const {
  if (!(Tf > 0.0) || T0 < Tf) throw ConfigError("annealing needs T0 >= Tf > 0");
  if (steps < 1) throw ConfigError("annealing needs at least one sweep");
}

double AnnealSchedule::temperature(int t) const {
  if (steps == 1) return T0;
  const double u = static_cast<double>(t) / (steps - 1);
  return decay == Decay::geometric ? T0 * std::pow(Tf / T0, u) : T0 + (Tf - T0) * u;
}

ClimbPolicy parse_climb_policy(std::string_view name) {
  if (name == "steepest") return ClimbPolicy::steepest;
  if (name == "first") return ClimbPolicy::first;
  if (name == "random") return ClimbPolicy::random;
  throw ConfigError("unknown hill-climb policy '" + std::string(name) + "' (steepest, first, random)");
}

std::string to_string(ClimbPolicy p) {
  switch (p) {
    case ClimbPolicy::steepest: return "steepest";
    case ClimbPolicy::first: return "first";
    case ClimbPolicy::random: return "random";
  }
  return "?";
}

ClimbResult hill_climb(QueryOracle& oracle, Bits x0, ClimbPolicy policy, std::uint64_t seed) {
  const int n = oracle.num_vars();
  if (static_cast<int>(x0.size()) != n) throw std::invalid_argument("start length differs from n");
  std::mt19937_64 rng(seed);
  const std::uint64_t before = oracle.queries();
  ClimbResult r;
  r.x = std::move(x0);
  r.cost = oracle.query(r.x);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (;;) {
    if (policy == ClimbPolicy::random) std::shuffle(order.begin(), order.end(), rng);
    int move = -1;
    Cost best = r.cost;
    for (const int i : order) {
      r.x[i] ^= 1u;
      const Cost c = oracle.query(r.x);
      r.x[i] ^= 1u;
      if (c < best) {
        best = c;
        move = i;
        if (policy != ClimbPolicy::steepest) break;
      }
    }
    if (move < 0) break;
    r.x[move] ^= 1u;
    r.cost = best;
    ++r.steps;
  }
  r.queries = oracle.queries() - before;
  return r;
}

bool is_local_minimum(const QueryOracle& oracle, const Bits& x) {
  Bits y = x;
  const Cost c = oracle.peek(y);
  for (auto& b : y) {
    b ^= 1u;
    const bool better = oracle.peek(y) < c;
    b ^= 1u;
    if (better) return false;
  }
  return true;
}

AnnealResult simulated_annealing(QueryOracle& oracle, const AnnealSchedule& schedule, std::uint64_t seed) {
  schedule.validate();
  const int n = oracle.num_vars();
  std::mt19937_64 rng(seed);
  const std::uint64_t before = oracle.queries();
  Bits x = random_bits(rng, n);
  Cost cost = oracle.query(x);
  AnnealResult r{x, cost, 0};
  for (int t = 0; t < schedule.steps; ++t) {
    const double T = schedule.temperature(t);
    for (int step = 0; step < n; ++step) {
      const std::size_t i = uniform_index(rng, static_cast<std::size_t>(n));
      x[i] ^= 1u;
      const Cost proposed = oracle.query(x);
      const double dE = static_cast<double>(proposed - cost);
      if (dE <= 0.0 || uniform01(rng) < std::exp(-dE / T)) {
        cost = proposed;
        if (cost < r.best_cost) {
          r.best_cost = cost;
          r.best_x = x;
        }
      } else {
        x[i] ^= 1u;
      }
    }
  }
  r.queries = oracle.queries() - before;
  return r;
}

WalkSatResult walksat(const PlantedInstance& inst, double noise, std::uint64_t max_flips, std::uint64_t seed,
                      std::optional<Bits> initial) {
  if (inst.clauses.empty()) throw ConfigError("walksat needs a non-empty clause list");
  if (noise < 0.0 || noise > 1.0) throw ConfigError("noise must lie in [0, 1]");
  const int n = inst.n;
  const std::size_t m = inst.clauses.size();
  std::mt19937_64 rng(seed);

  WalkSatResult r;
  r.assignment = initial ? std::move(*initial) : random_bits(rng, n);
  if (static_cast<int>(r.assignment.size()) != n) throw std::invalid_argument("initial assignment length differs from n");
  Bits& x = r.assignment;

  struct Occurrence {
    std::size_t clause;
    bool negated;
  };
  std::vector<std::vector<Occurrence>> occ(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < m; ++c)
    for (const auto& lit : inst.clauses[c].literals) occ[lit.var - 1].push_back({c, lit.negated});

  // true_count[c] literals of c are true; violated holds every c with none, pos[c] its slot.
  std::vector<int> true_count(m, 0);
  std::vector<std::size_t> violated, pos(m, SIZE_MAX);
  for (int v = 0; v < n; ++v)
    for (const auto& o : occ[v])
      if ((x[v] != 0) != o.negated) ++true_count[o.clause];
  for (std::size_t c = 0; c < m; ++c)
    if (true_count[c] == 0) {
      pos[c] = violated.size();
      violated.push_back(c);
    }

  auto flip = [&](int v) {
    x[v] ^= 1u;
    for (const auto& o : occ[v]) {
      const std::size_t c = o.clause;
      if ((x[v] != 0) != o.negated) {
        if (true_count[c]++ == 0) {
          violated[pos[c]] = violated.back();
          pos[violated.back()] = pos[c];
          violated.pop_back();
          pos[c] = SIZE_MAX;
        }
      } else if (--true_count[c] == 0) {
        pos[c] = violated.size();
        violated.push_back(c);
      }
    }
  };

  auto break_weight = [&](int v) {
    std::uint64_t w = 0;
    for (const auto& o : occ[v])
      if (true_count[o.clause] == 1 && (x[v] != 0) != o.negated) w += inst.clauses[o.clause].weight;
    return w;
  };

  std::vector<int> ties;
  while (!violated.empty() && r.flips < max_flips) {
    const auto& clause = inst.clauses[violated[uniform_index(rng, violated.size())]];
    int pick;
    if (uniform01(rng) < noise) {
      pick = static_cast<int>(clause.literals[uniform_index(rng, clause.literals.size())].var) - 1;
    } else {
      std::uint64_t best = UINT64_MAX;
      ties.clear();
      for (const auto& lit : clause.literals) {
        const int v = static_cast<int>(lit.var) - 1;
        const std::uint64_t b = break_weight(v);
        if (b < best) {
          best = b;
          ties.assign(1, v);
        } else if (b == best) {
          ties.push_back(v);
        }
      }
      pick = ties[uniform_index(rng, ties.size())];
    }
    flip(pick);
    ++r.flips;
  }
  r.success = violated.empty();
  r.cost = eval_cost(inst, x);
  if (r.success && r.cost != 0) throw std::logic_error("walksat bookkeeping diverged from eval_cost");
  return r;
}

LearnResult one_hot_learn(QueryOracle& oracle) {
  const int n = oracle.num_vars();
  if (!oracle.has_remap()) throw UnsupportedInput("one_hot_learn needs a remapped oracle");
  const std::uint64_t before = oracle.queries();
  Bits x(static_cast<std::size_t>(n), 0);
  const int weight = oracle.query_distance(x);
  LearnResult r;
  r.s.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    x[i] = 1;
    r.s[i] = oracle.query_distance(x) < weight ? 1 : 0;
    x[i] = 0;
  }
  r.queries = oracle.queries() - before;
  return r;
}

std::uint64_t query_lower_bound(std::uint64_t n) {
  if (n < 1) throw ConfigError("n must be positive");
  return static_cast<std::uint64_t>(std::ceil(static_cast<double>(n) / std::log2(static_cast<double>(n) + 1.0)));
}

}  // namespace symqaoa
