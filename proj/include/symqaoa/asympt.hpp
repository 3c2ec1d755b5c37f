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
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "json.hpp"
#include "symqaoa/symcost.hpp"

namespace symqaoa {

/// Saddle point of S(xi) at xi* = 1/2 (S_n) or (1/2, 1/2) (product), with gamma = Gamma pi / n^{l-1}.
struct SaddleReport {
  double Gamma = 0.0;
  double gamma = 0.0;  ///< 0 when no n was supplied
  std::optional<double> limit_prob;
  /// The (l-2)^2-denominator closed form, present for S_n reports when it differs from limit_prob.
  std::optional<double> limit_prob_displayed;
  /// S''(xi0) in entry (0,0) for S_n; the full 2x2 Hessian H_S(xi*) otherwise.
  Eigen::Matrix2cd hessian = Eigen::Matrix2cd::Zero();
  bool grad_cond = false;
  bool hess_cond = false;
  double grad_lhs = 0.0;  ///< sum kappa (a-b) / alpha1
  double grad_rhs = 0.0;  ///< sum kappa (c-d) / alpha2
  std::string failure;    ///< empty when every condition passed
};

/// Gamma = 2^{l-2} / ((l-2a) kappa). kappa = 1 for ordered-tuple clause counts.
double optimal_Gamma_sn(int ell, int a, double kappa = 1.0);

/// gamma = Gamma pi / n^{l-1}. Throws UnsupportedInput when l = 2a.
double optimal_gamma_sn(int ell, int a, int n, double kappa = 1.0);

/// |4 / S''(xi0)| = (1 + pi^2 [(l-2a)^2 - l]^2 / (16 (l-2a)^2))^{-1/2}.
double limit_prob_sn(int ell, int a);

/// Same display with (l-2)^2 in the denominator; nullopt when l = 2.
std::optional<double> limit_prob_sn_displayed(int ell, int a);

/// Full S_n report; n = 0 leaves gamma unset.
SaddleReport saddle_sn(int ell, int a, int n = 0, double kappa = 1.0);

/// Gradient and Hessian-determinant conditions; failures are reported, never thrown.
SaddleReport check_assumption_prod(const MonomialPoly& poly);

/// (Gamma, gamma). Throws ConfigError when the gradient condition fails.
std::pair<double, double> optimal_gamma_prod(const MonomialPoly& poly, int n);

/// 16 alpha1 alpha2 / |det H_S(xi*)| when both conditions hold.
SaddleReport limit_prob_prod(const MonomialPoly& poly, int n = 0);

/// {Gamma, gamma, limit_prob, hessian_re[4], hessian_im[4], grad_cond, hess_cond}; row-major Hessian.
nlohmann::ordered_json to_json(const SaddleReport& report);

}  // namespace symqaoa
