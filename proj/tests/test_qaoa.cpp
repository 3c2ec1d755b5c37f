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

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "symqaoa/bench.hpp"
#include "symqaoa/qaoa.hpp"

using namespace symqaoa;

namespace {

constexpr double kPi = std::numbers::pi;

CostSpec random_table(std::mt19937_64& rng, int n, Cost range) {
  std::vector<Cost> t(n + 1);
  for (auto& c : t) c = static_cast<Cost>(rng() % static_cast<std::uint64_t>(range));
  return CostSpec::from_table(std::move(t));
}

// Dense reference: H^n-free formula  <s|e^{i b B}|x> = cos(b)^{n-h} (i sin b)^h applied to every x.
std::complex<double> dense_overlap(const CostModel& model, double beta, double gamma, const Bits& s) {
  const int n = model.num_vars();
  std::complex<double> sum = 0;
  for (std::uint64_t m = 0; m < (1u << n); ++m) {
    const Bits x = bits_from_mask(m, n);
    const int h = hamming_distance(x, s);
    const auto mix = std::pow(std::complex<double>(std::cos(beta), 0), n - h) *
                     std::pow(std::complex<double>(0, std::sin(beta)), h);
    sum += mix * std::polar(1.0, gamma * static_cast<double>(model.evaluate(x)));
  }
  return sum * std::pow(2.0, -0.5 * n);
}

}  // namespace

TEST(Sector, MatchesBruteForceOnRandomTables) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + t % 11;
    const auto spec = random_table(rng, n, 1000);
    const double gamma = std::uniform_real_distribution<double>(-1, 1)(rng);
    Bits s(n);
    for (auto& b : s) b = rng() & 1u;
    const SymmetricCostModel model(spec, s);
    const auto brute = statevector_prob(model, {-kPi / 4, gamma, Convention::paper_sector}, s);
    const auto sector = overlap_sector(spec, gamma);
    ASSERT_NEAR(std::abs(brute.amplitude.overlap - sector.overlap), 0.0, 1e-12);
    const auto sv = statevector_prob(model, {-kPi / 4, gamma, Convention::statevector}, s);
    ASSERT_NEAR(sv.amplitude.prob, overlap_sector(spec, -gamma).prob, 1e-12);
  }
}

TEST(Sector, ProductMatchesBruteForce) {
  std::mt19937_64 rng(2);
  for (const char* text : {"5N1", "(3,2)N(1,0),5N1", "(2,1)N(1,0)!sym,g2:3N2"}) {
    const auto fam = parse_families(text, ShapeKind::product);
    for (int n : {10, 12}) {
      const Shape shape = shape_for(ShapeKind::product, n);
      const auto spec = build_cost_table(fam, shape);
      const double gamma = std::uniform_real_distribution<double>(0, 0.05)(rng);
      const Bits s = hidden_string(n, rng());
      const SymmetricCostModel model(spec, s);
      const auto brute = statevector_prob(model, {-kPi / 4, gamma, Convention::paper_sector}, s);
      ASSERT_NEAR(std::abs(brute.amplitude.overlap - overlap_sector(spec, gamma).overlap), 0.0, 1e-12) << text;
    }
  }
}

TEST(Statevector, AgreesWithDenseReferenceAtAnyBeta) {
  std::mt19937_64 rng(3);
  const auto inst = generate(parse_families("3N1,2N2", ShapeKind::symmetric), Shape::symmetric(8), hidden_string(8, 1),
                             0.6, 1);
  const ClauseCostModel model(inst);
  for (double beta : {-kPi / 4, 0.3, 1.1}) {
    const double gamma = 0.07;
    const auto sv = statevector_prob(model, {beta, gamma, Convention::statevector}, inst.s);
    ASSERT_NEAR(std::abs(sv.amplitude.overlap - dense_overlap(model, beta, gamma, inst.s)), 0.0, 1e-12);
    const auto sector = statevector_prob(model, {-beta, gamma, Convention::paper_sector}, inst.s);
    ASSERT_NEAR(std::abs(sector.amplitude.overlap - sv.amplitude.overlap), 0.0, 1e-12);
  }
}

TEST(Statevector, DistributionIsNormalised) {
  const auto fam = parse_families("1N1,3N1", ShapeKind::symmetric);
  const auto spec = build_cost_table(fam, Shape::symmetric(10));
  const Bits s = hidden_string(10, 4);
  const SymmetricCostModel model(spec, s);
  StatevectorOptions opts;
  opts.distribution = true;
  for (double beta : {-kPi / 4, 0.4}) {
    const auto r = statevector_prob(model, {beta, 0.2, Convention::statevector}, s, opts);
    ASSERT_TRUE(r.distribution.has_value());
    ASSERT_LT(r.norm_deviation, 1e-12);
    ASSERT_NEAR((*r.distribution)[mask_from_bits(s)], r.amplitude.prob, 1e-12);
  }
}

TEST(Statevector, GammaZeroIsUniform) {
  for (int n : {1, 5, 12}) {
    const SymmetricCostModel model(CostSpec::from_table(std::vector<Cost>(n + 1, 7)), Bits(n, 1));
    ASSERT_NEAR(statevector_prob(model, {-kPi / 4, 0.0}, Bits(n, 1)).amplitude.prob, std::ldexp(1.0, -n), 1e-15);
  }
}

TEST(Statevector, ClauseAndTableModelsAgree) {
  const auto fam = parse_families("4N1,3N31,2N0", ShapeKind::symmetric);
  const Bits s = hidden_string(11, 9);
  const auto inst = generate(fam, Shape::symmetric(11), s, 1.0, 0);
  const SymmetricCostModel table(build_cost_table(fam, Shape::symmetric(11)), s);
  const ClauseCostModel clauses(inst);
  const QaoaParams p{-kPi / 4, 0.013};
  ASSERT_NEAR(statevector_prob(table, p, s).amplitude.prob, statevector_prob(clauses, p, s).amplitude.prob, 1e-13);
}

TEST(Statevector, Caps) {
  const SymmetricCostModel model(CostSpec::from_table(std::vector<Cost>(28, 0)), Bits(27, 0));
  ASSERT_THROW(statevector_prob(model, {}, Bits(27, 0)), ConfigError);
  StatevectorOptions opts;
  opts.distribution = true;
  const SymmetricCostModel small(CostSpec::from_table(std::vector<Cost>(4, 0)), Bits(3, 0));
  opts.max_distribution_qubits = 2;
  ASSERT_THROW(statevector_prob(small, {}, Bits(3, 0), opts), ConfigError);
  ASSERT_THROW(statevector_prob(small, {}, Bits(4, 0)), std::invalid_argument);
}

TEST(MonteCarlo, UnbiasedWithinErrorBars) {
  const auto fam = parse_families("1N1,3N1", ShapeKind::symmetric);
  const auto spec = build_cost_table(fam, Shape::symmetric(10));
  const Bits s = hidden_string(10, 2);
  const SymmetricCostModel model(spec, s);
  const double gamma = 2 * kPi / 100;
  for (auto conv : {Convention::paper_sector, Convention::statevector}) {
    const auto exact = statevector_prob(model, {-kPi / 4, gamma, conv}, s).amplitude;
    const auto mc = mc_overlap(model, gamma, s, 200'000, 5, conv);
    ASSERT_GT(mc.stderr_re, 0.0);
    ASSERT_LE(std::abs(mc.overlap.real() - exact.overlap.real()), 4 * mc.stderr_re);
    ASSERT_LE(std::abs(mc.overlap.imag() - exact.overlap.imag()), 4 * mc.stderr_im);
    ASSERT_LE(std::abs(mc.prob - exact.prob), 4 * mc.stderr_prob);
  }
  ASSERT_EQ(mc_overlap(model, gamma, s, 1000, 5).overlap, mc_overlap(model, gamma, s, 1000, 5).overlap);
  ASSERT_THROW(mc_overlap(model, gamma, s, 10, 5), ConfigError);
}

TEST(RandomGamma, CentralBinomialForDistinctTables) {
  const auto fam = parse_families("1N1,3N1", ShapeKind::symmetric);
  ASSERT_NEAR(expected_prob_random_gamma(build_cost_table(fam, Shape::symmetric(8))), 0.196381, 5e-7);
  for (int n = 1; n <= 64; ++n) {
    std::vector<Cost> t(n + 1);
    for (int k = 0; k <= n; ++k) t[k] = Cost{k} * k * 3 + (k % 2);
    const double expect = std::exp(log_binomial(2 * n, n) - 2 * n * std::log(2.0));
    ASSERT_NEAR(expected_prob_random_gamma(CostSpec::from_table(t)) / expect, 1.0, 1e-12) << n;
  }
}

TEST(RandomGamma, GridAverageMatches) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 10; ++t) {
    const int n = 3 + t;
    const auto spec = random_table(rng, n, 40);
    // A trigonometric polynomial of degree < 128 averages exactly on 128 equispaced points.
    double avg = 0.0;
    for (int j = 0; j < 128; ++j) avg += overlap_sector(spec, 2 * kPi * j / 128).prob;
    ASSERT_NEAR(expected_prob_random_gamma(spec), avg / 128, 1e-12);
  }
}

TEST(SparsifyDeviation, FullInstanceHasNoDeviation) {
  const auto full = generate(parse_families("3N1,2N2", ShapeKind::symmetric), Shape::symmetric(8), Bits(8, 0), 1.0, 0);
  const auto r = lemma2_deviation(full, 1.0, 0.1, 4, 1);
  ASSERT_EQ(r.estimate, 0.0);
  ASSERT_EQ(r.bound, 0.0);
  ASSERT_NEAR(*r.exact, 0.0, 1e-15);
}

TEST(SparsifyDeviation, ExactAgreesWithSamplingAndBound) {
  const int n = 10;
  const auto full = generate(parse_families("3N1,2N2", ShapeKind::symmetric), Shape::symmetric(n), hidden_string(n, 1),
                             1.0, 0);
  const double gamma = 2 * kPi / (n * n);
  for (double f : {0.5, 0.9}) {
    const auto r = lemma2_deviation(full, f, gamma, 100, 3);
    ASSERT_LE(*r.exact, r.bound);
    ASSERT_LE(std::abs(r.estimate - *r.exact), 4 * r.estimate_stderr);
    ASSERT_LE(std::abs(r.second_moment - r.bound), 4 * r.second_moment_stderr);
    ASSERT_LE(r.estimate_cv, r.bound);
    ASSERT_NEAR(r.bound, gamma * gamma * (1 - f) / f * expected_cost_uniform(full), 1e-15);
  }
}

TEST(SparsifyDeviation, SampledXMode) {
  const int n = 10;
  const auto full = generate(parse_families("3N1,2N2", ShapeKind::symmetric), Shape::symmetric(n), hidden_string(n, 1),
                             1.0, 0);
  DeviationOptions opts;
  opts.max_brute_n = 8;
  opts.x_samples = 2048;
  const auto r = lemma2_deviation(full, 0.5, 2 * kPi / 100, 50, 3, opts);
  const auto exact = lemma2_deviation(full, 0.5, 2 * kPi / 100, 2, 3);
  ASSERT_TRUE(r.sampled_x);
  ASSERT_FALSE(r.exact.has_value());
  ASSERT_LE(std::abs(r.estimate - *exact.exact), 4 * r.estimate_stderr + 0.02 * *exact.exact);
  ASSERT_THROW(lemma2_deviation(full, 0.5, 0.1, 1, 3), ConfigError);
}
