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

#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "symqaoa/cost_model.hpp"
#include "symqaoa/instance.hpp"
#include "symqaoa/symcost.hpp"

namespace symqaoa {

/// Sign convention for the mixer angle.
///
/// statevector applies exp(i beta sum_j X_j) literally, so beta = -pi/4 gives a
/// factor (-i)/sqrt(2) per bit that differs from s. paper_sector is the expansion
/// with +i per differing bit at beta = -pi/4; it equals statevector with beta -> -beta.
/// Success probabilities agree under gamma -> -gamma.
enum class Convention { paper_sector, statevector };

struct QaoaParams {
  double beta = -std::numbers::pi / 4;
  double gamma = 0.0;
  Convention convention = Convention::paper_sector;
};

enum class Method { sector, brute, mc };
std::string to_string(Method m);
Method parse_method(std::string_view name);

struct AmplitudeResult {
  std::complex<double> overlap;
  double prob = 0.0;
  Method method = Method::sector;
  double stderr_prob = 0.0;  ///< 0 for exact methods
  double stderr_re = 0.0;
  double stderr_im = 0.0;
  std::uint64_t samples = 0;
};

/// 2^{-n} sum_k i^k exp(i gamma c(k)) C(n,k), summed in log domain. O(n).
AmplitudeResult overlap_sector_sn(const CostSpec& spec, double gamma);

/// 2^{-n} sum_{k1,k2} i^{k1+k2} exp(i gamma c(k1,k2)) C(n1,k1) C(n2,k2). O(n1 n2).
AmplitudeResult overlap_sector_prod(const CostSpec& spec, double gamma);

/// Dispatches on the spec's shape.
AmplitudeResult overlap_sector(const CostSpec& spec, double gamma);

struct StatevectorOptions {
  int max_qubits = 26;
  bool distribution = false;
  int max_distribution_qubits = 24;
};

struct StatevectorResult {
  AmplitudeResult amplitude;
  /// |<x|psi>|^2 indexed by the bit mask of x (bit i = variable i+1).
  std::optional<Eigen::VectorXd> distribution;
  /// |sum_x p(x) - 1| when the distribution was requested.
  double norm_deviation = 0.0;
};

/// Exact <s| exp(i beta B) exp(i gamma C) |+>^n by enumerating every x in Gray-code order.
StatevectorResult statevector_prob(const CostModel& model, const QaoaParams& params, const Bits& target,
                                   const StatevectorOptions& options = {});

/// Unbiased Monte-Carlo estimate of the beta = -pi/4 overlap: the mean of the
/// unit-modulus summand (+-i)^{|x XOR s|} exp(i gamma C(x)) over uniform x.
AmplitudeResult mc_overlap(const CostModel& model, double gamma, const Bits& target, std::uint64_t samples,
                           std::uint64_t seed, Convention convention = Convention::paper_sector);

/// E over gamma ~ U[0, 2 pi) of the success probability for an integer-valued S_n table.
double expected_prob_random_gamma(const CostSpec& spec);

struct DeviationOptions {
  int max_brute_n = 24;    ///< above this, x is sampled
  int x_samples = 4096;    ///< per trial, sampled mode only
};

struct DeviationResult {
  /// Mean over trials of ||(e^{i gamma C} - e^{i (gamma/f) C~_w}) |+>^n||^2.
  double estimate = 0.0;
  double estimate_stderr = 0.0;
  /// estimate - (second_moment - bound): unbiased for the same quantity, with the
  /// sampling noise shared with second_moment removed.
  double estimate_cv = 0.0;
  /// E_w ||...||^2 without sampling w: E_x[2 - 2 Re z^{C(x)}] with
  /// z = e^{i gamma} (1 - f + f e^{-i gamma / f}). Brute-force mode only.
  std::optional<double> exact;
  /// Mean over trials of gamma^2 E_x[(C - C~_w/f)^2]; its expectation equals the bound.
  double second_moment = 0.0;
  double second_moment_stderr = 0.0;
  /// gamma^2 (1-f)/f E_x C(x).
  double bound = 0.0;
  double expected_cost = 0.0;
  int trials = 0;
  bool sampled_x = false;
};

/// Sparsification deviation estimate alongside its closed-form bound.
DeviationResult lemma2_deviation(const PlantedInstance& full, double f, double gamma, int trials, std::uint64_t seed,
                              const DeviationOptions& options = {});

}  // namespace symqaoa
