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

#include "symqaoa/asympt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace symqaoa {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTol = 1e-12;

void check_ell_a(int ell, int a) {
  if (ell < 1 || a < 0 || a > ell) throw ConfigError("need l >= 1 and 0 <= a <= l");
  if (ell == 2 * a) throw UnsupportedInput("l = 2a: no stationary Gamma exists");
}

double closed_form(int ell, int a, double denom) {
  const double num = static_cast<double>((ell - 2 * a) * (ell - 2 * a) - ell);
  return 1.0 / std::sqrt(1.0 + kPi * kPi * num * num / (16.0 * denom * denom));
}

bool relative_equal(double x, double y) {
  return std::abs(x - y) <= kTol * std::max({1.0, std::abs(x), std::abs(y)});
}

struct Sums {
  double a_minus_b = 0, c_minus_d = 0, h11 = 0, h22 = 0, h12 = 0;
};

Sums monomial_sums(const MonomialPoly& poly) {
  Sums s;
  for (const auto& t : poly.terms) {
    const double ab = t.a - t.b, cd = t.c - t.d;
    s.a_minus_b += t.kappa * ab;
    s.c_minus_d += t.kappa * cd;
    s.h11 += t.kappa * (ab * ab - (t.a + t.b));
    s.h22 += t.kappa * (cd * cd - (t.c + t.d));
    s.h12 += t.kappa * ab * cd;
  }
  return s;
}

}  // namespace

double optimal_Gamma_sn(int ell, int a, double kappa) {
  check_ell_a(ell, a);
  if (kappa == 0.0) throw ConfigError("leading coefficient kappa must be nonzero");
  return std::ldexp(1.0, ell - 2) / ((ell - 2 * a) * kappa);
}

double optimal_gamma_sn(int ell, int a, int n, double kappa) {
  if (n < 1) throw ConfigError("n must be positive");
  return optimal_Gamma_sn(ell, a, kappa) * kPi / std::pow(static_cast<double>(n), ell - 1);
}

double limit_prob_sn(int ell, int a) {
  check_ell_a(ell, a);
  return closed_form(ell, a, ell - 2 * a);
}

std::optional<double> limit_prob_sn_displayed(int ell, int a) {
  check_ell_a(ell, a);
  if (ell == 2) return std::nullopt;
  return closed_form(ell, a, ell - 2);
}

SaddleReport saddle_sn(int ell, int a, int n, double kappa) {
  SaddleReport r;
  r.Gamma = optimal_Gamma_sn(ell, a, kappa);
  if (n > 0) r.gamma = optimal_gamma_sn(ell, a, n, kappa);
  // S''(xi0) = -4 + i pi Gamma kappa 2^{2-l} [(l-2a)^2 - l]; the real part is exactly -4.
  const double im = kPi * r.Gamma * kappa * std::ldexp(1.0, 2 - ell) * ((ell - 2 * a) * (ell - 2 * a) - ell);
  r.hessian(0, 0) = {-4.0, im};
  r.grad_cond = true;
  r.hess_cond = true;
  r.grad_lhs = r.grad_rhs = kappa * (2 * a - ell);
  r.limit_prob = limit_prob_sn(ell, a);
  const auto shown = limit_prob_sn_displayed(ell, a);
  if (shown && std::abs(*shown - *r.limit_prob) > kTol) r.limit_prob_displayed = shown;
  return r;
}

SaddleReport check_assumption_prod(const MonomialPoly& poly) {
  poly.validate();
  SaddleReport r;
  const Sums s = monomial_sums(poly);
  r.grad_lhs = s.a_minus_b / poly.alpha1;
  r.grad_rhs = s.c_minus_d / poly.alpha2;
  r.grad_cond = relative_equal(r.grad_lhs, r.grad_rhs) && std::abs(r.grad_lhs) > kTol;
  if (!r.grad_cond) {
    r.failure = "gradient condition fails: " + std::to_string(r.grad_lhs) + " vs " + std::to_string(r.grad_rhs);
    return r;
  }
  r.Gamma = -std::ldexp(1.0, poly.ell - 2) * poly.alpha1 / s.a_minus_b;
  const double scale = kPi * r.Gamma * std::ldexp(1.0, 2 - poly.ell);
  r.hessian(0, 0) = {-4.0 * poly.alpha1, scale * s.h11};
  r.hessian(1, 1) = {-4.0 * poly.alpha2, scale * s.h22};
  r.hessian(0, 1) = r.hessian(1, 0) = {0.0, scale * s.h12};
  r.hess_cond = std::abs(r.hessian.determinant()) >= kTol;
  if (!r.hess_cond) r.failure = "degenerate Hessian at the saddle point";
  return r;
}

std::pair<double, double> optimal_gamma_prod(const MonomialPoly& poly, int n) {
  if (n < 1) throw ConfigError("n must be positive");
  const SaddleReport r = check_assumption_prod(poly);
  if (!r.grad_cond) throw ConfigError(r.failure);
  return {r.Gamma, r.Gamma * kPi / std::pow(static_cast<double>(n), poly.ell - 1)};
}

SaddleReport limit_prob_prod(const MonomialPoly& poly, int n) {
  SaddleReport r = check_assumption_prod(poly);
  if (r.grad_cond && n > 0) r.gamma = r.Gamma * kPi / std::pow(static_cast<double>(n), poly.ell - 1);
  if (r.grad_cond && r.hess_cond)
    r.limit_prob = 16.0 * poly.alpha1 * poly.alpha2 / std::abs(r.hessian.determinant());
  return r;
}

nlohmann::ordered_json to_json(const SaddleReport& report) {
  nlohmann::ordered_json j;
  j["Gamma"] = report.Gamma;
  j["gamma"] = report.gamma;
  j["limit_prob"] = report.limit_prob ? nlohmann::ordered_json(*report.limit_prob) : nlohmann::ordered_json();
  auto re = nlohmann::ordered_json::array(), im = nlohmann::ordered_json::array();
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      re.push_back(report.hessian(i, k).real());
      im.push_back(report.hessian(i, k).imag());
    }
  j["hessian_re"] = re;
  j["hessian_im"] = im;
  j["grad_cond"] = report.grad_cond;
  j["hess_cond"] = report.hess_cond;
  if (report.limit_prob_displayed) j["limit_prob_displayed"] = *report.limit_prob_displayed;
  if (!report.failure.empty()) j["failure"] = report.failure;
  return j;
}

}  // namespace symqaoa
