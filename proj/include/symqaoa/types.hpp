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

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symqaoa {

/// Exact clause-violation counts. n^l overflows 64 bits near n = 1e4, l = 6.
using Cost = __int128;

/// One byte per bit, values 0 or 1.
using Bits = std::vector<std::uint8_t>;

/// Invalid family strings, mismatched shapes, impossible generation requests.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed WCNF / metadata text. Carries the offending 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Inputs outside an algorithm's stated precondition (e.g. colliding cost values).
class UnsupportedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_string(Cost v);
Cost parse_cost(std::string_view text);
long double to_long_double(Cost v);

/// Exact binomial coefficient; 0 when k < 0 or k > n.
Cost binomial(std::int64_t n, std::int64_t k);
/// x (x-1) ... (x-m+1); 0 when x < m.
Cost falling_factorial(std::int64_t x, int m);
Cost factorial(int m);
/// ln C(n, k) via lgamma. -inf outside 0 <= k <= n.
double log_binomial(std::int64_t n, std::int64_t k);

int hamming_weight(std::span<const std::uint8_t> x);
int hamming_distance(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y);

std::string bits_to_string(std::span<const std::uint8_t> x);
Bits bits_from_string(std::string_view text);
Bits bits_from_mask(std::uint64_t mask, int n);
std::uint64_t mask_from_bits(std::span<const std::uint8_t> x);

}  // namespace symqaoa
