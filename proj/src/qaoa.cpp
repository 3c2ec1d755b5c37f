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

#include "symqaoa/qaoa.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>

#include "symqaoa/parallel.hpp"

namespace symqaoa {

namespace {

constexpr long double kTwoPi = 6.283185307179586476925286766559005768L;

// i^quarter * exp(i gamma c), with gamma * c reduced modulo 2 pi in extended precision.
std::complex<double> sector_phase(long double gamma, Cost c, int quarter) {
  const long double theta = std::fmod(gamma * to_long_double(c), kTwoPi);
  const std::complex<double> z = std::polar(1.0, static_cast<double>(theta));
  switch (quarter & 3) {
    case 0: return z;
    case 1: return {-z.imag(), z.real()};
    case 2: return -z;
    default: return {z.imag(), -z.real()};
  }
}

std::vector<double> log_weights(int n) {
  std::vector<double> lw(static_cast<std::size_t>(n) + 1);
  const double shift = n * std::log(2.0);
  for (int k = 0; k <= n; ++k) lw[k] = log_binomial(n, k) - shift;
  return lw;
}

AmplitudeResult exact_result(std::complex<double> overlap, Method method) {
  AmplitudeResult r;
  r.overlap = overlap;
  r.prob = std::norm(overlap);
  r.method = method;
  return r;
}

// Per-qubit factor of <s| exp(i beta X) |x>: `same` when x_j = s_j, `flip` otherwise.
struct MixerFactors {
  std::complex<double> same, flip;
};

MixerFactors mixer_factors(const QaoaParams& p) {
  const double beta = p.convention == Convention::paper_sector ? -p.beta : p.beta;
  return {{std::cos(beta), 0.0}, {0.0, std::sin(beta)}};
}

std::mt19937_64 chunk_stream(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), 0x51u};
  return std::mt19937_64(seq);
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::sector: return "sector";
    case Method::brute: return "brute";
    case Method::mc: return "mc";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "sector") return Method::sector;
  if (name == "brute") return Method::brute;
  if (name == "mc") return Method::mc;
  throw ConfigError("unknown method '" + std::string(name) + "' (sector, brute, mc)");
}

AmplitudeResult overlap_sector_sn(const CostSpec& spec, double gamma) {
  if (spec.shape.kind != ShapeKind::symmetric) throw ConfigError("overlap_sector_sn needs an S_n table");
  const int n = spec.shape.n1;
  const auto lw = log_weights(n);
  const double top = *std::max_element(lw.begin(), lw.end());
  std::complex<double> sum{0.0, 0.0};
  for (int k = 0; k <= n; ++k) sum += std::exp(lw[k] - top) * sector_phase(gamma, spec.table[k], k);
  return exact_result(sum * std::exp(top), Method::sector);
}

AmplitudeResult overlap_sector_prod(const CostSpec& spec, double gamma) {
  if (spec.shape.kind != ShapeKind::product) throw ConfigError("overlap_sector_prod needs a product table");
  const int n1 = spec.shape.n1, n2 = spec.shape.n2;
  const auto lw1 = log_weights(n1), lw2 = log_weights(n2);
  const double top = *std::max_element(lw1.begin(), lw1.end()) + *std::max_element(lw2.begin(), lw2.end());
  std::complex<double> sum{0.0, 0.0};
  for (int k1 = 0; k1 <= n1; ++k1) {
    std::complex<double> row{0.0, 0.0};
    for (int k2 = 0; k2 <= n2; ++k2)
      row += std::exp(lw1[k1] + lw2[k2] - top) * sector_phase(gamma, spec.at(k1, k2), k1 + k2);
    sum += row;
  }
  return exact_result(sum * std::exp(top), Method::sector);
}

AmplitudeResult overlap_sector(const CostSpec& spec, double gamma) {
  return spec.shape.kind == ShapeKind::symmetric ? overlap_sector_sn(spec, gamma) : overlap_sector_prod(spec, gamma);
}

StatevectorResult statevector_prob(const CostModel& model, const QaoaParams& params, const Bits& target,
                                   const StatevectorOptions& options) {
  const int n = model.num_vars();
  if (n > options.max_qubits || n > 62)
    throw ConfigError("brute force capped at " + std::to_string(options.max_qubits) + " qubits, got " + std::to_string(n));
  if (options.distribution && n > options.max_distribution_qubits)
    throw ConfigError("full distribution capped at " + std::to_string(options.max_distribution_qubits) + " qubits");
  if (static_cast<int>(target.size()) != n) throw std::invalid_argument("target length differs from n");

  const auto mix = mixer_factors(params);
  std::vector<std::complex<double>> factor(static_cast<std::size_t>(n) + 1);
  for (int h = 0; h <= n; ++h) factor[h] = std::pow(mix.same, n - h) * std::pow(mix.flip, h);
  const double amp0 = std::pow(2.0, -0.5 * n);  // <x|+>^n
  const std::uint64_t s_mask = mask_from_bits(target);

  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t chunks = std::min<std::uint64_t>(total, 256);
  const std::uint64_t per = total / chunks;
  std::vector<std::complex<double>> partial(chunks);

  StatevectorResult result;
  Eigen::VectorXcd psi;
  if (options.distribution) psi.resize(static_cast<Eigen::Index>(total));

  parallel_for(chunks, [&](std::size_t ch) {
    auto walker = model.walker();
    const std::uint64_t begin = ch * per, end = begin + per;
    walker->reset(gray(begin));
    std::complex<double> acc{0.0, 0.0};
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::uint64_t x = gray(i);
      const auto phase = std::polar(1.0, static_cast<double>(std::fmod(params.gamma * to_long_double(walker->value()), kTwoPi)));
      acc += factor[std::popcount(x ^ s_mask)] * phase;
      if (options.distribution) psi[static_cast<Eigen::Index>(x)] = amp0 * phase;
      if (i + 1 < end) walker->flip(std::countr_zero(i + 1));
    }
    partial[ch] = acc;
  });

  std::complex<double> overlap{0.0, 0.0};
  for (const auto& p : partial) overlap += p;
  result.amplitude = exact_result(overlap * amp0, Method::brute);

  if (options.distribution) {
    const std::complex<double> a = mix.same, b = mix.flip;
    for (int j = 0; j < n; ++j) {
      const std::uint64_t stride = std::uint64_t{1} << j;
      for (std::uint64_t x = 0; x < total; ++x) {
        if (x & stride) continue;
        const auto lo = psi[static_cast<Eigen::Index>(x)], hi = psi[static_cast<Eigen::Index>(x | stride)];
        psi[static_cast<Eigen::Index>(x)] = a * lo + b * hi;
        psi[static_cast<Eigen::Index>(x | stride)] = b * lo + a * hi;
      }
    }
    Eigen::VectorXd dist = psi.cwiseAbs2();
    result.norm_deviation = std::abs(dist.sum() - 1.0);
    result.distribution = std::move(dist);
  }
  return result;
}

AmplitudeResult mc_overlap(const CostModel& model, double gamma, const Bits& target, std::uint64_t samples,
                           std::uint64_t seed, Convention convention) {
  if (samples < 100) throw ConfigError("Monte Carlo needs at least 100 samples");
  const int n = model.num_vars();
  if (static_cast<int>(target.size()) != n) throw std::invalid_argument("target length differs from n");
  // (+i)^h for the sector expansion, (-i)^h for the literal statevector at beta = -pi/4.
  const std::complex<double> unit = convention == Convention::paper_sector ? std::complex<double>{0, 1}
                                                                           : std::complex<double>{0, -1};
  constexpr std::uint64_t kChunks = 64;
  struct Sums {
    double re = 0, im = 0, re2 = 0, im2 = 0;
  };
  std::vector<Sums> partial(kChunks);
  parallel_for(kChunks, [&](std::size_t ch) {
    const std::uint64_t count = samples / kChunks + (ch < samples % kChunks ? 1 : 0);
    auto rng = chunk_stream(seed, ch);
    Bits x(static_cast<std::size_t>(n));
    Sums s;
    for (std::uint64_t t = 0; t < count; ++t) {
      for (int i = 0; i < n; i += 64) {
        std::uint64_t word = rng();
        for (int j = i; j < std::min(n, i + 64); ++j, word >>= 1) x[j] = word & 1u;
      }
      const int h = hamming_distance(x, target);
      std::complex<double> quarter{1.0, 0.0};
      for (int q = 0; q < (h & 3); ++q) quarter *= unit;
      const auto z = quarter * std::polar(1.0, static_cast<double>(std::fmod(gamma * to_long_double(model.evaluate(x)), kTwoPi)));
      s.re += z.real();
      s.im += z.imag();
      s.re2 += z.real() * z.real();
      s.im2 += z.imag() * z.imag();
    }
    partial[ch] = s;
  });

  Sums tot;
  for (const auto& p : partial) {
    tot.re += p.re;
    tot.im += p.im;
    tot.re2 += p.re2;
    tot.im2 += p.im2;
  }
  const double N = static_cast<double>(samples);
  const double mre = tot.re / N, mim = tot.im / N;
  const double vre = std::max(0.0, (tot.re2 - N * mre * mre) / (N - 1));
  const double vim = std::max(0.0, (tot.im2 - N * mim * mim) / (N - 1));

  AmplitudeResult r;
  r.overlap = {mre, mim};
  r.prob = std::norm(r.overlap);
  r.method = Method::mc;
  r.samples = samples;
  r.stderr_re = std::sqrt(vre / N);
  r.stderr_im = std::sqrt(vim / N);
  // First-order propagation through |z|^2.
  r.stderr_prob = 2.0 * std::hypot(mre * r.stderr_re, mim * r.stderr_im);
  return r;
}

double expected_prob_random_gamma(const CostSpec& spec) {
  if (spec.shape.kind != ShapeKind::symmetric) throw ConfigError("random-gamma expectation needs an S_n table");
  const int n = spec.shape.n1;
  const auto lw = log_weights(n);
  std::map<Cost, std::complex<double>> groups;
  for (int k = 0; k <= n; ++k) {
    static constexpr std::complex<double> kQuarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    groups[spec.table[k]] += std::exp(lw[k]) * kQuarter[k & 3];
  }
  double p = 0.0;
  for (const auto& [value, z] : groups) p += std::norm(z);
  return p;
}

DeviationResult lemma2_deviation(const PlantedInstance& full, double f, double gamma, int trials, std::uint64_t seed,
                              const DeviationOptions& options) {
  if (full.meta.f != 1.0) throw ConfigError("lemma2_deviation needs an unsparsified (f = 1) instance");
  if (!(f > 0.0) || f > 1.0) throw ConfigError("sparsification fraction must lie in (0, 1]");
  if (trials < 2) throw ConfigError("need at least two trials");

  DeviationResult out;
  out.trials = trials;
  out.expected_cost = expected_cost_uniform(full);
  out.bound = gamma * gamma * (1.0 - f) / f * out.expected_cost;
  out.sampled_x = full.n > options.max_brute_n;

  const int n = full.n;
  struct Trial {
    double norm2 = 0, second = 0;
  };
  std::vector<Trial> results(static_cast<std::size_t>(trials));

  parallel_for(results.size(), [&](std::size_t t) {
    auto rng = chunk_stream(seed, t);
    std::vector<std::array<Cost, 2>> weights;
    weights.reserve(full.clauses.size());
    for (const auto& c : full.clauses) {
      std::uint64_t kept = 0;
      if (f == 1.0) {
        kept = c.weight;
      } else {
        for (std::uint64_t u = 0; u < c.weight; ++u) kept += static_cast<double>(rng() >> 11) * 0x1.0p-53 < f;
      }
      weights.push_back({static_cast<Cost>(c.weight), static_cast<Cost>(kept)});
    }
    auto accumulate = [&](Cost c_full, Cost c_sparse, Trial& acc) {
      const double delta = static_cast<double>(c_full) - static_cast<double>(c_sparse) / f;
      acc.norm2 += 2.0 * (1.0 - std::cos(gamma * delta));
      acc.second += gamma * gamma * delta * delta;
    };

    Trial acc;
    if (!out.sampled_x) {
      ClauseWalker<Cost, 2> walker(full.clauses, std::move(weights), n);
      const std::uint64_t total = std::uint64_t{1} << n;
      walker.reset(0);
      for (std::uint64_t i = 0; i < total; ++i) {
        accumulate(walker.value()[0], walker.value()[1], acc);
        if (i + 1 < total) walker.flip(std::countr_zero(i + 1));
      }
      acc.norm2 /= static_cast<double>(total);
      acc.second /= static_cast<double>(total);
    } else {
      Bits x(static_cast<std::size_t>(n));
      for (int s = 0; s < options.x_samples; ++s) {
        for (auto& b : x) b = rng() & 1u;
        Cost c_full = 0, c_sparse = 0;
        for (std::size_t c = 0; c < full.clauses.size(); ++c) {
          if (!full.clauses[c].violated_by(x)) continue;
          c_full += weights[c][0];
          c_sparse += weights[c][1];
        }
        accumulate(c_full, c_sparse, acc);
      }
      acc.norm2 /= options.x_samples;
      acc.second /= options.x_samples;
    }
    results[t] = acc;
  });

  auto mean_stderr = [&](auto field) {
    double sum = 0, sumsq = 0;
    for (const auto& r : results) {
      sum += r.*field;
      sumsq += (r.*field) * (r.*field);
    }
    const double mean = sum / trials;
    const double var = std::max(0.0, (sumsq - trials * mean * mean) / (trials - 1));
    return std::pair{mean, std::sqrt(var / trials)};
  };
  std::tie(out.estimate, out.estimate_stderr) = mean_stderr(&Trial::norm2);
  std::tie(out.second_moment, out.second_moment_stderr) = mean_stderr(&Trial::second);
  out.estimate_cv = out.estimate - (out.second_moment - out.bound);

  if (!out.sampled_x) {
    // Clause weights sparsify independently, so E_w e^{i gamma Delta(x)} = z^{C(x)}.
    const std::complex<double> z =
        std::polar(1.0, gamma) * ((1.0 - f) + f * std::polar(1.0, -gamma / f));
    const double log_r = std::log(std::abs(z)), theta = std::arg(z);
    ClauseCostModel model(full);
    auto walker = model.walker();
    const std::uint64_t total = std::uint64_t{1} << n;
    walker->reset(0);
    double sum = 0.0;
    for (std::uint64_t i = 0; i < total; ++i) {
      const double c = static_cast<double>(walker->value());
      sum += 2.0 - 2.0 * std::exp(c * log_r) * std::cos(c * theta);
      if (i + 1 < total) walker->flip(std::countr_zero(i + 1));
    }
    out.exact = sum / static_cast<double>(total);
  }
  return out;
}

}  // namespace symqaoa
