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

#include "symqaoa/cost_model.hpp"

#include <bit>

namespace symqaoa {

namespace {

class SymmetricWalker final : public CostWalker {
 public:
  SymmetricWalker(const CostSpec& spec, std::uint64_t s_mask) : spec_(spec), s_mask_(s_mask) {}

  void reset(std::uint64_t mask) override {
    mask_ = mask;
    const std::uint64_t diff = mask ^ s_mask_;
    const int n1 = spec_.shape.n1;
    const std::uint64_t g1 = n1 >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n1) - 1;
    d1_ = std::popcount(diff & g1);
    d2_ = std::popcount(diff & ~g1);
  }

  void flip(int bit) override {
    const bool differs_now = !(((mask_ ^ s_mask_) >> bit) & 1u);
    mask_ ^= std::uint64_t{1} << bit;
    int& d = bit < spec_.shape.n1 ? d1_ : d2_;
    d += differs_now ? 1 : -1;
  }

  Cost value() const override {
    return spec_.shape.kind == ShapeKind::symmetric ? spec_.table[d1_] : spec_.at(d1_, d2_);
  }

 private:
  const CostSpec& spec_;
  std::uint64_t s_mask_;
  std::uint64_t mask_ = 0;
  int d1_ = 0, d2_ = 0;
};

class InstanceWalker final : public CostWalker {
 public:
  explicit InstanceWalker(const PlantedInstance& inst) : walker_(inst.clauses, weights(inst), inst.n) {}
  void reset(std::uint64_t mask) override { walker_.reset(mask); }
  void flip(int bit) override { walker_.flip(bit); }
  Cost value() const override { return walker_.value()[0]; }

 private:
  static std::vector<std::array<Cost, 1>> weights(const PlantedInstance& inst) {
    std::vector<std::array<Cost, 1>> w;
    w.reserve(inst.clauses.size());
    for (const auto& c : inst.clauses) w.push_back({static_cast<Cost>(c.weight)});
    return w;
  }
  ClauseWalker<Cost, 1> walker_;
};

}  // namespace

SymmetricCostModel::SymmetricCostModel(CostSpec spec, Bits s) : spec_(std::move(spec)), s_(std::move(s)) {
  if (static_cast<int>(s_.size()) != spec_.shape.n()) throw std::invalid_argument("hidden string length differs from n");
}

Cost SymmetricCostModel::evaluate(std::span<const std::uint8_t> x) const {
  if (x.size() != s_.size()) throw std::invalid_argument("bit string length differs from n");
  const int n1 = spec_.shape.n1;
  int d1 = 0, d2 = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if ((x[i] != 0) == (s_[i] != 0)) continue;
    (static_cast<int>(i) < n1 ? d1 : d2)++;
  }
  return spec_.shape.kind == ShapeKind::symmetric ? spec_.table[d1] : spec_.at(d1, d2);
}

std::unique_ptr<CostWalker> SymmetricCostModel::walker() const {
  return std::make_unique<SymmetricWalker>(spec_, mask_from_bits(s_));
}

ClauseCostModel::ClauseCostModel(PlantedInstance inst) : inst_(std::move(inst)) {}

std::unique_ptr<CostWalker> ClauseCostModel::walker() const {
  if (inst_.n > 64) throw std::invalid_argument("walkers need n <= 64");
  return std::make_unique<InstanceWalker>(inst_);
}

}  // namespace symqaoa
