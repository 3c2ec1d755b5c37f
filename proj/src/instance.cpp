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

#include "symqaoa/instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace symqaoa {

namespace {

// One tuple slot of a unit clause: `ell` distinct variables from [first, first+size),
// the leading `m` of them negated in y.
struct Component {
  int first = 0;
  int size = 0;
  int ell = 0;
  int m = 0;
  bool ordered() const { return m != 0 && m != ell; }
};

using Copy = std::vector<Component>;

// Every family expands into one or two copies (group swap / both groups).
std::vector<Copy> expand(const Family& family, const Shape& shape) {
  const int n = shape.n();
  const Component g1{0, shape.n1, 0, 0}, g2{shape.n1, shape.n2, 0, 0};
  auto with = [](Component c, int ell, int m) {
    c.ell = ell;
    c.m = m;
    return c;
  };
  std::vector<Copy> copies;
  if (const auto* f = std::get_if<LnmFamily>(&family)) {
    switch (f->scope) {
      case Scope::whole: copies.push_back({with(Component{0, n, 0, 0}, f->ell, f->m)}); break;
      case Scope::group1: copies.push_back({with(g1, f->ell, f->m)}); break;
      case Scope::group2: copies.push_back({with(g2, f->ell, f->m)}); break;
      case Scope::both_groups:
        copies.push_back({with(g1, f->ell, f->m)});
        copies.push_back({with(g2, f->ell, f->m)});
        break;
    }
    return copies;
  }
  const auto& p = std::get<ProdFamily>(family);
  copies.push_back({with(g1, p.ell1, p.m1), with(g2, p.ell2, p.m2)});
  if (p.symmetrized) copies.push_back({with(g2, p.ell1, p.m1), with(g1, p.ell2, p.m2)});
  for (auto& copy : copies)
    std::erase_if(copy, [](const Component& c) { return c.ell == 0; });
  return copies;
}

std::uint64_t component_count(const Component& c) {
  const Cost v = c.ordered() ? falling_factorial(c.size, c.ell) : binomial(c.size, c.ell);
  if (v > static_cast<Cost>(UINT64_MAX)) return UINT64_MAX;
  return static_cast<std::uint64_t>(v);
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) { return b > UINT64_MAX - a ? UINT64_MAX : a + b; }

// Clause literal sets are packed 16 bits per literal, first literal most significant,
// so integer order on keys equals lexicographic order on sorted literal lists.
using Key = unsigned __int128;
constexpr int kMaxWidth = 8;
constexpr int kMaxVars = 32767;

struct KeyHash {
  std::size_t operator()(Key k) const noexcept {
    std::uint64_t lo = static_cast<std::uint64_t>(k), hi = static_cast<std::uint64_t>(k >> 64);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ull ^ (hi + 0x632BE59BD9B4E019ull + (lo << 6) + (lo >> 2));
    h ^= h >> 31;
    return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ull);
  }
};

Key pack(std::vector<std::uint32_t>& codes) {
  std::sort(codes.begin(), codes.end());
  Key k = 0;
  for (int i = 0; i < kMaxWidth; ++i) {
    k <<= 16;
    if (i < static_cast<int>(codes.size())) k |= codes[i];
  }
  return k;
}

Clause unpack(Key k, std::uint64_t weight) {
  Clause c;
  c.weight = weight;
  for (int i = kMaxWidth - 1; i >= 0; --i) {
    const auto code = static_cast<std::uint32_t>((k >> (16 * i)) & 0xFFFF);
    if (code == 0) break;
    c.literals.push_back({code >> 1, (code & 1u) != 0});
  }
  return c;
}

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t family, std::uint64_t copy, std::uint64_t first) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(family), static_cast<std::uint32_t>(copy),
                    static_cast<std::uint32_t>(first)};
  return std::mt19937_64(seq);
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t binomial_draw(std::uint64_t trials, double f, std::mt19937_64& rng) {
  std::uint64_t kept = 0;
  for (std::uint64_t t = 0; t < trials; ++t) kept += uniform01(rng) < f;
  return kept;
}

class Enumerator {
 public:
  Enumerator(const Copy& copy, const Bits& s, double f, std::uint64_t seed, std::uint64_t family_id,
             std::uint64_t copy_id, std::unordered_map<Key, std::uint64_t, KeyHash>& merged)
      : copy_(copy), s_(s), f_(f), seed_(seed), family_id_(family_id), copy_id_(copy_id), merged_(merged) {
    int width = 0;
    for (const auto& c : copy_) width += c.ell;
    vars_.resize(width);
    used_.assign(s.size(), 0);
  }

  void run() { recurse(0, 0, 0); }
  std::uint64_t kept() const { return kept_; }

 private:
  // slot: position in vars_; comp: component index; lower: smallest admissible
  // offset for unordered components.
  void recurse(int slot, std::size_t comp, int lower) {
    if (comp == copy_.size()) {
      emit();
      return;
    }
    const Component& c = copy_[comp];
    int begin_slot = 0;
    for (std::size_t i = 0; i < comp; ++i) begin_slot += copy_[i].ell;
    const int pos = slot - begin_slot;
    if (pos == c.ell) {
      recurse(slot, comp + 1, 0);
      return;
    }
    for (int off = c.ordered() ? 0 : lower; off < c.size; ++off) {
      const int v = c.first + off;
      if (used_[v]) continue;
      if (slot == 0 && f_ < 1.0) rng_ = stream(seed_, family_id_, copy_id_, static_cast<std::uint64_t>(v));
      used_[v] = 1;
      vars_[slot] = v;
      recurse(slot + 1, comp, off + 1);
      used_[v] = 0;
    }
  }

  void emit() {
    if (f_ < 1.0 && !(uniform01(rng_) < f_)) return;
    ++kept_;
    codes_.clear();
    int slot = 0;
    for (const auto& c : copy_) {
      for (int i = 0; i < c.ell; ++i, ++slot) {
        const int v = vars_[slot];
        const bool negated_y = i < c.m;
        const bool negated_x = negated_y != (s_[v] != 0);
        codes_.push_back((static_cast<std::uint32_t>(v + 1) << 1) | (negated_x ? 1u : 0u));
      }
    }
    ++merged_[pack(codes_)];
  }

  const Copy& copy_;
  const Bits& s_;
  double f_;
  std::uint64_t seed_, family_id_, copy_id_;
  std::unordered_map<Key, std::uint64_t, KeyHash>& merged_;
  std::vector<int> vars_;
  std::vector<std::uint8_t> used_;
  std::vector<std::uint32_t> codes_;
  std::mt19937_64 rng_;
  std::uint64_t kept_ = 0;
};

}  // namespace

bool Clause::violated_by(std::span<const std::uint8_t> x) const {
  for (const auto& lit : literals) {
    const bool value = x[lit.var - 1] != 0;
    if (value != lit.negated) return false;
  }
  return true;
}

std::uint64_t PlantedInstance::total_weight() const {
  std::uint64_t w = 0;
  for (const auto& c : clauses) w += c.weight;
  return w;
}

std::uint64_t unit_clause_count(const Family& family, const Shape& shape) {
  validate(family, shape.kind);
  std::uint64_t total = 0;
  for (const auto& copy : expand(family, shape)) {
    std::uint64_t count = 1;
    for (const auto& c : copy) count = saturating_mul(count, component_count(c));
    total = saturating_add(total, count);
  }
  return total;
}

PlantedInstance generate(const std::vector<Family>& families, const Shape& shape, const Bits& s, double f,
                         std::uint64_t seed, const GenerateOptions& options) {
  const int n = shape.n();
  if (static_cast<int>(s.size()) != n) throw ConfigError("hidden string length differs from n");
  if (!(f > 0.0) || f > 1.0) throw ConfigError("sparsification fraction must lie in (0, 1]");
  if (n > kMaxVars) throw ConfigError("generation supports at most 32767 variables");

  std::uint64_t total = 0;
  for (const auto& family : families) {
    if (locality(family) > kMaxWidth) throw ConfigError("generation supports clause width <= 8");
    for (const auto& copy : expand(family, shape))
      for (const auto& c : copy)
        if (c.size < c.ell)
          throw ConfigError("family " + to_string(family, shape.kind) + " needs at least " + std::to_string(c.ell) +
                            " variables per group");
    total = saturating_add(total, unit_clause_count(family, shape));
  }
  if (total > options.clause_budget)
    throw ConfigError("instance needs " + std::to_string(total) + " unit clauses, budget is " +
                      std::to_string(options.clause_budget));

  std::unordered_map<Key, std::uint64_t, KeyHash> merged;
  std::uint64_t kept = 0;
  for (std::size_t fid = 0; fid < families.size(); ++fid) {
    const auto copies = expand(families[fid], shape);
    for (std::size_t cid = 0; cid < copies.size(); ++cid) {
      Enumerator e(copies[cid], s, f, seed, fid, cid, merged);
      e.run();
      kept += e.kept();
    }
  }

  std::vector<std::pair<Key, std::uint64_t>> sorted(merged.begin(), merged.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  PlantedInstance inst;
  inst.n = n;
  inst.s = s;
  inst.clauses.reserve(sorted.size());
  for (const auto& [key, w] : sorted) inst.clauses.push_back(unpack(key, w));
  inst.meta.families = families;
  inst.meta.shape = shape;
  inst.meta.f = f;
  inst.meta.seed = seed;
  inst.meta.unit_clauses_total = total;
  inst.meta.unit_clauses_kept = kept;
  inst.meta.empty = inst.clauses.empty();
  return inst;
}

Cost eval_cost(const PlantedInstance& inst, std::span<const std::uint8_t> x) {
  if (static_cast<int>(x.size()) != inst.n) throw std::invalid_argument("bit string length differs from n");
  Cost c = 0;
  for (const auto& clause : inst.clauses)
    if (clause.violated_by(x)) c += clause.weight;
  return c;
}

PlantedInstance resparsify(const PlantedInstance& full, double f, std::mt19937_64& rng) {
  if (full.meta.f != 1.0) throw ConfigError("resparsify needs an unsparsified (f = 1) instance");
  if (!(f > 0.0) || f > 1.0) throw ConfigError("sparsification fraction must lie in (0, 1]");
  PlantedInstance out;
  out.n = full.n;
  out.s = full.s;
  out.meta = full.meta;
  out.meta.f = f;
  out.meta.unit_clauses_kept = 0;
  for (const auto& c : full.clauses) {
    const std::uint64_t w = f == 1.0 ? c.weight : binomial_draw(c.weight, f, rng);
    if (w == 0) continue;
    out.clauses.push_back({c.literals, w});
    out.meta.unit_clauses_kept += w;
  }
  out.meta.empty = out.clauses.empty();
  return out;
}

PlantedInstance shuffle_variables(const PlantedInstance& inst, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> perm(static_cast<std::size_t>(inst.n));
  std::iota(perm.begin(), perm.end(), 1u);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);

  PlantedInstance out = inst;
  if (!inst.s.empty()) {
    out.s.assign(inst.s.size(), 0);
    for (std::size_t v = 0; v < perm.size(); ++v) out.s[perm[v] - 1] = inst.s[v];
  }
  for (auto& c : out.clauses) {
    for (auto& lit : c.literals) lit.var = perm[lit.var - 1];
    std::sort(c.literals.begin(), c.literals.end());
  }
  std::sort(out.clauses.begin(), out.clauses.end(),
            [](const Clause& a, const Clause& b) { return a.literals < b.literals; });
  // Compose with any earlier relabelling.
  if (inst.meta.var_perm.empty()) {
    out.meta.var_perm = perm;
  } else {
    for (auto& p : out.meta.var_perm) p = perm[p - 1];
  }
  return out;
}

double expected_cost_uniform(const PlantedInstance& inst) {
  double e = 0.0;
  for (const auto& c : inst.clauses) e += static_cast<double>(c.weight) * std::ldexp(1.0, -static_cast<int>(c.literals.size()));
  return e;
}

SparsifyIdentityStat expected_sparsified_cost_identity(const PlantedInstance& full, double f, std::uint64_t seed,
                                                       int trials) {
  if (full.meta.f != 1.0) throw ConfigError("identity check needs an unsparsified (f = 1) instance");
  if (!(f > 0.0) || f > 1.0) throw ConfigError("sparsification fraction must lie in (0, 1]");
  if (trials < 2) throw ConfigError("need at least two trials");
  std::mt19937_64 rng(seed);
  SparsifyIdentityStat stat;
  stat.x.resize(static_cast<std::size_t>(full.n));
  for (auto& b : stat.x) b = rng() & 1u;

  std::vector<std::uint64_t> violated;
  for (const auto& c : full.clauses)
    if (c.violated_by(stat.x)) violated.push_back(c.weight);
  stat.exact = 0.0;
  for (auto w : violated) stat.exact += static_cast<double>(w);

  double sum = 0.0, sumsq = 0.0;
  for (int t = 0; t < trials; ++t) {
    double sparse = 0.0;
    for (auto w : violated) sparse += static_cast<double>(f == 1.0 ? w : binomial_draw(w, f, rng));
    sum += sparse;
    sumsq += sparse * sparse;
  }
  const double mean = sum / trials;
  stat.sample_variance = std::max(0.0, (sumsq - trials * mean * mean) / (trials - 1));
  stat.mean = mean / f;
  stat.stderr_mean = std::sqrt(stat.sample_variance / trials) / f;
  return stat;
}

}  // namespace symqaoa
