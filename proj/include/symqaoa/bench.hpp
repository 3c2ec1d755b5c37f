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
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symqaoa/asympt.hpp"
#include "symqaoa/classical.hpp"
#include "symqaoa/qaoa.hpp"
#include "symqaoa/wcnf.hpp"

namespace symqaoa {

struct FamilyPreset {
  std::string name;
  std::string families;
  ShapeKind shape;
};

/// Family lists the CLI and the fidelity checks ship with.
const std::vector<FamilyPreset>& family_presets();

/// Product shapes split n as n1 = n / 2, n2 = n - n1.
Shape shape_for(ShapeKind kind, int n);

/// "sn" or "product".
ShapeKind parse_shape_kind(std::string_view name);
std::string to_string(ShapeKind kind);

/// Comma separated integers and inclusive ranges, e.g. "1-100" or "256,512,1024".
std::vector<std::uint64_t> parse_uint_list(std::string_view text);

/// Deterministic hidden string for a seed.
Bits hidden_string(int n, std::uint64_t seed);

enum class GammaMode { auto_saddle, explicit_values, grid };

/// "auto", "0.05,0.1" or "grid(start, stop, points)".
struct GammaSpec {
  GammaMode mode = GammaMode::auto_saddle;
  std::vector<double> values;
  double start = 0.0;
  double stop = 0.0;
  int points = 0;

  static GammaSpec parse(std::string_view text);
  std::string to_string() const;
};

/// Leading-order data behind gamma = auto for one shape.
struct AutoGamma {
  double Gamma = 0.0;
  double gamma = 0.0;
  std::optional<double> limit_prob;
  int ell = 0;
  int a = 0;  ///< S_n only
};

/// Saddle-optimal gamma for the family list at size n. S_n: (l, a) from the
/// leading families, ambiguous a is an error. Product: the two-group saddle conditions via to_monomials.
AutoGamma auto_gamma(const std::vector<Family>& families, const Shape& shape);

enum class OutputFormat { csv, json };
OutputFormat parse_output_format(std::string_view name);

struct ExperimentConfig {
  std::string family = "1N1,3N1";
  ShapeKind shape = ShapeKind::symmetric;
  std::vector<int> n_list{12};
  double f = 1.0;
  std::vector<std::uint64_t> seeds{0};
  GammaSpec gamma;
  Method method = Method::sector;
  Convention convention = Convention::paper_sector;
  double beta = -std::numbers::pi / 4;
  std::uint64_t mc_samples = 100'000;

  /// n-list strictly increasing and positive, f in (0, 1], at least one seed.
  void validate() const;
};

/// A flat table emitted as CSV or JSON with identical values.
class ResultTable {
 public:
  struct Cell {
    enum class Kind { number, text, boolean, null } kind = Kind::null;
    std::string value;
  };

  ResultTable(std::string schema, std::vector<std::string> columns);

  static Cell number(double v);
  static Cell number(std::int64_t v);
  static Cell number(Cost v);
  static Cell text(std::string v);
  static Cell boolean(bool v);
  static Cell null();

  void add_row(std::vector<Cell> row);
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  const std::string& schema() const { return schema_; }

  /// "# <schema>" line, header line, then one line per row.
  std::string to_csv() const;
  /// {"schema": ..., "rows": [{column: value, ...}, ...]}.
  std::string to_json() const;
  std::string render(OutputFormat format) const;

 private:
  std::string schema_;
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

struct GenerateConfig {
  std::string family = "1N1,3N1";
  ShapeKind shape = ShapeKind::symmetric;
  int n = 12;
  double f = 1.0;
  std::uint64_t seed = 0;
  std::optional<Bits> s;  ///< drawn from the seed when absent
  WcnfFormat format = WcnfFormat::legacy;
  bool shuffle = true;
};

struct GeneratedFiles {
  PlantedInstance instance;
  std::string wcnf;
  std::string sidecar;
};

GeneratedFiles cmd_generate(const GenerateConfig& config);

/// One row per (n, gamma, seed), sorted by that key.
ResultTable cmd_qaoa(const ExperimentConfig& config);

enum class ClassicalAlgo { hill, anneal, walksat, learn };
ClassicalAlgo parse_classical_algo(std::string_view name);
std::string to_string(ClassicalAlgo algo);

/// Cost tables the query-model baselines can run on.
enum class TableKind { family, trap, linear };
TableKind parse_table_kind(std::string_view name);
std::string to_string(TableKind kind);

struct ClassicalConfig {
  ClassicalAlgo algo = ClassicalAlgo::hill;
  TableKind table = TableKind::family;
  std::string family = "1N1,3N1";
  int n = 20;
  double f = 1.0;
  std::vector<std::uint64_t> seeds{0};
  ClimbPolicy policy = ClimbPolicy::steepest;
  std::optional<int> start_weight;  ///< hill: start at this distance from s
  std::optional<AnnealSchedule> schedule;  ///< anneal: defaults(n) when absent
  double noise = 0.5;
  std::uint64_t max_flips = 1'000'000;
};

/// The trap table c(0) = 0, c(k) = n - k + 1.
CostSpec trap_table(int n);
/// c(k) = k.
CostSpec linear_table(int n);

/// One row per seed: {algo, n, families, f, seed, success, cost, queries_or_flips, wallclock_s}.
ResultTable cmd_classical(const ClassicalConfig& config);

struct VerifyConfig {
  std::vector<std::string> invariants;  ///< empty runs all
  int distinct_n_max = 200;
  bool inject_corruption = false;
  std::uint64_t seed = 1;
};

struct VerifyEntry {
  std::string invariant;
  bool pass = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;
  bool all_pass() const;
  ResultTable table() const;
};

/// Known invariant names: sector_vs_brute, sparsify_bound, planting, distinct_values.
const std::vector<std::string>& verify_invariants();

VerifyReport cmd_verify(const VerifyConfig& config);

}  // namespace symqaoa
