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
#include <string>
#include <string_view>

#include "symqaoa/instance.hpp"

namespace symqaoa {

enum class WcnfFormat {
  legacy,  ///< "p wcnf <n> <m> <top>" then "<w> <lits> 0"
  wcnf22,  ///< MaxSAT Evaluation 2022+: soft clauses "<w> <lits> 0", no header
  cnf,     ///< "p cnf <n> <m>", each clause repeated weight times
};

WcnfFormat parse_wcnf_format(std::string_view name);
std::string to_string(WcnfFormat format);

struct ExportOptions {
  /// Largest number of clause lines the plain CNF export may write.
  std::uint64_t cnf_line_cap = 10'000'000;
};

/// Clauses are written in lexicographic order of their sorted literals.
std::string export_wcnf(const PlantedInstance& inst, WcnfFormat format, const ExportOptions& options = {});

/// Reads any of the three formats back; identical literal sets in CNF input merge
/// into one weighted clause. The result has meta.external set and no s.
PlantedInstance parse_wcnf(std::string_view text);

/// JSON sidecar holding everything the WCNF must not: s, families, f, seed,
/// shape and the variable permutation.
std::string write_sidecar(const PlantedInstance& inst);
/// Restores s and meta from a sidecar into an instance parsed from WCNF.
void apply_sidecar(PlantedInstance& inst, std::string_view json_text);

}  // namespace symqaoa
