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

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "symqaoa/instance.hpp"
#include "symqaoa/symcost.hpp"

namespace symqaoa {

/// Incremental cost along a walk that flips one bit at a time (Gray-code order).
class CostWalker {
 public:
  virtual ~CostWalker() = default;
  virtual void reset(std::uint64_t mask) = 0;
  virtual void flip(int bit) = 0;
  virtual Cost value() const = 0;
};

/// Cost function over {0,1}^n usable by brute force, Monte Carlo and the classical oracles.
class CostModel {
 public:
  virtual ~CostModel() = default;
  virtual int num_vars() const = 0;
  virtual Cost evaluate(std::span<const std::uint8_t> x) const = 0;
  /// Needs num_vars() <= 64.
  virtual std::unique_ptr<CostWalker> walker() const = 0;
};

/// C(x) = c(|x XOR s|) or c(d1, d2) from a tabulated symmetric cost.
class SymmetricCostModel final : public CostModel {
 public:
  SymmetricCostModel(CostSpec spec, Bits s);
  int num_vars() const override { return spec_.shape.n(); }
  Cost evaluate(std::span<const std::uint8_t> x) const override;
  std::unique_ptr<CostWalker> walker() const override;
  const CostSpec& spec() const { return spec_; }
  const Bits& hidden() const { return s_; }

 private:
  CostSpec spec_;
  Bits s_;
};

/// C(x) = total weight of violated clauses of an explicit instance.
class ClauseCostModel final : public CostModel {
 public:
  explicit ClauseCostModel(PlantedInstance inst);
  int num_vars() const override { return inst_.n; }
  Cost evaluate(std::span<const std::uint8_t> x) const override { return eval_cost(inst_, x); }
  std::unique_ptr<CostWalker> walker() const override;
  const PlantedInstance& instance() const { return inst_; }

 private:
  PlantedInstance inst_;
};

/// Tracks the violated weight of a clause list under single-bit flips, for
/// `Channels` independent weight vectors over the same clauses at once.
template <typename Scalar, int Channels = 1>
class ClauseWalker {
 public:
  using Value = std::array<Scalar, Channels>;

  ClauseWalker(const std::vector<Clause>& clauses, std::vector<Value> weights, int n)
      : weights_(std::move(weights)), occurrences_(static_cast<std::size_t>(n)), true_count_(clauses.size(), 0) {
    for (std::size_t c = 0; c < clauses.size(); ++c) {
      for (const auto& lit : clauses[c].literals) occurrences_[lit.var - 1].push_back({c, lit.negated});
    }
  }

  void reset(std::uint64_t mask) {
    mask_ = mask;
    value_.fill(Scalar{0});
    std::fill(true_count_.begin(), true_count_.end(), 0);
    for (std::size_t v = 0; v < occurrences_.size(); ++v) {
      const bool x = (mask >> v) & 1u;
      for (const auto& occ : occurrences_[v])
        if (x != occ.negated) ++true_count_[occ.clause];
    }
    for (std::size_t c = 0; c < true_count_.size(); ++c)
      if (true_count_[c] == 0) add(c, +1);
  }

  void flip(int bit) {
    const bool now = !((mask_ >> bit) & 1u);
    mask_ ^= std::uint64_t{1} << bit;
    for (const auto& occ : occurrences_[bit]) {
      if (now != occ.negated) {
        if (true_count_[occ.clause]++ == 0) add(occ.clause, -1);
      } else {
        if (--true_count_[occ.clause] == 0) add(occ.clause, +1);
      }
    }
  }

  const Value& value() const { return value_; }

 private:
  struct Occurrence {
    std::size_t clause;
    bool negated;
  };

  void add(std::size_t c, int sign) {
    for (int k = 0; k < Channels; ++k) value_[k] += sign > 0 ? weights_[c][k] : -weights_[c][k];
  }

  std::vector<Value> weights_;
  std::vector<std::vector<Occurrence>> occurrences_;
  std::vector<int> true_count_;
  std::uint64_t mask_ = 0;
  Value value_{};
};

/// Gray code of i; consecutive codes differ in bit countr_zero(i + 1).
inline std::uint64_t gray(std::uint64_t i) { return i ^ (i >> 1); }

}  // namespace symqaoa
