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

#include "symqaoa/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace symqaoa {

std::string to_string(Cost v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work on the unsigned magnitude so INT128_MIN is representable.
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string out;
  while (mag > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Cost parse_cost(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw std::invalid_argument("bad integer '" + std::string(text) + "'");
  Cost v = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw std::invalid_argument("bad integer '" + std::string(text) + "'");
    v = v * 10 + (c - '0');
  }
  return negative ? -v : v;
}

long double to_long_double(Cost v) { return static_cast<long double>(v); }

Cost binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Cost r = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    // r * (n - i) is divisible by (i + 1) at every step.
    r = r * (n - i) / (i + 1);
  }
  return r;
}

Cost falling_factorial(std::int64_t x, int m) {
  if (m < 0) throw std::domain_error("negative falling-factorial order");
  if (x < m) return 0;
  Cost r = 1;
  for (int t = 0; t < m; ++t) r *= (x - t);
  return r;
}

Cost factorial(int m) { return falling_factorial(m, m); }

double log_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  if (k == 0 || k == n) return 0.0;
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

int hamming_weight(std::span<const std::uint8_t> x) {
  int w = 0;
  for (auto b : x) w += b != 0;
  return w;
}

int hamming_distance(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y) {
  if (x.size() != y.size()) throw std::invalid_argument("bit string length mismatch");
  int d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += (x[i] != 0) != (y[i] != 0);
  return d;
}

std::string bits_to_string(std::span<const std::uint8_t> x) {
  std::string out;
  out.reserve(x.size());
  for (auto b : x) out.push_back(b ? '1' : '0');
  return out;
}

Bits bits_from_string(std::string_view text) {
  Bits out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit string may only contain 0 and 1");
    out.push_back(c == '1');
  }
  return out;
}

Bits bits_from_mask(std::uint64_t mask, int n) {
  Bits out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[i] = (mask >> i) & 1u;
  return out;
}

std::uint64_t mask_from_bits(std::span<const std::uint8_t> x) {
  if (x.size() > 64) throw std::invalid_argument("mask form needs n <= 64");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) m |= std::uint64_t{1} << i;
  return m;
}

}  // namespace symqaoa
