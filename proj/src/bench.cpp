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

#include "symqaoa/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "symqaoa/parallel.hpp"

namespace symqaoa {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) throw ConfigError("not a number: '" + s + "'");
  return v;
}

std::uint64_t parse_u64(const std::string& s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ConfigError("not a non-negative integer: '" + s + "'");
  return v;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::mt19937_64 stream(std::uint64_t seed, std::uint32_t purpose) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), purpose};
  return std::mt19937_64(seq);
}

/// Cost a run of the query baselines sees, with s drawn from the seed.
CostSpec baseline_table(TableKind kind, const std::vector<Family>& families, int n) {
  switch (kind) {
    case TableKind::trap: return trap_table(n);
    case TableKind::linear: return linear_table(n);
    case TableKind::family: break;
  }
  return build_cost_table(families, Shape::symmetric(n));
}

}  // namespace

const std::vector<FamilyPreset>& family_presets() {
  static const std::vector<FamilyPreset> presets = {
      {"trap3", "1N1,3N1", ShapeKind::symmetric},
      {"sat-mixed", "3N1,2N2", ShapeKind::symmetric},
      {"ell4", "4N1", ShapeKind::symmetric},
      {"ell5", "5N1", ShapeKind::symmetric},
      {"layered", "4N1,3N31,2N0", ShapeKind::symmetric},
      {"prod5", "5N1", ShapeKind::product},
      {"prod-mixed", "(3,2)N(1,0),5N1", ShapeKind::product},
  };
  return presets;
}

Shape shape_for(ShapeKind kind, int n) {
  if (kind == ShapeKind::symmetric) return Shape::symmetric(n);
  return Shape::product(n / 2, n - n / 2);
}

ShapeKind parse_shape_kind(std::string_view name) {
  if (name == "sn") return ShapeKind::symmetric;
  if (name == "product") return ShapeKind::product;
  throw ConfigError("unknown shape '" + std::string(name) + "' (sn, product)");
}

std::string to_string(ShapeKind kind) { return kind == ShapeKind::symmetric ? "sn" : "product"; }

std::vector<std::uint64_t> parse_uint_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  for (const auto& tok : split(text, ',')) {
    const auto dash = tok.find('-');
    if (dash == std::string::npos) {
      out.push_back(parse_u64(tok));
      continue;
    }
    const auto lo = parse_u64(trim(tok.substr(0, dash))), hi = parse_u64(trim(tok.substr(dash + 1)));
    if (hi < lo) throw ConfigError("empty range '" + tok + "'");
    if (hi - lo >= 10'000'000) throw ConfigError("range '" + tok + "' too long");
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

Bits hidden_string(int n, std::uint64_t seed) {
  auto rng = stream(seed, 0x5u);
  Bits s(static_cast<std::size_t>(n));
  for (auto& b : s) b = rng() & 1u;
  return s;
}

GammaSpec GammaSpec::parse(std::string_view text) {
  const std::string t = trim(text);
  GammaSpec g;
  if (t == "auto") return g;
  if (t.rfind("grid(", 0) == 0) {
    if (t.back() != ')') throw ConfigError("grid needs the form grid(start, stop, points)");
    const auto parts = split(std::string_view(t).substr(5, t.size() - 6), ',');
    if (parts.size() != 3) throw ConfigError("grid needs the form grid(start, stop, points)");
    g.mode = GammaMode::grid;
    g.start = parse_double(parts[0]);
    g.stop = parse_double(parts[1]);
    const auto points = parse_u64(parts[2]);
    if (points < 1 || points > 1'000'000) throw ConfigError("grid points must lie in [1, 10^6]");
    g.points = static_cast<int>(points);
    for (int i = 0; i < g.points; ++i)
      g.values.push_back(g.points == 1 ? g.start : g.start + (g.stop - g.start) * i / (g.points - 1));
    return g;
  }
  g.mode = GammaMode::explicit_values;
  for (const auto& tok : split(t, ',')) g.values.push_back(parse_double(tok));
  return g;
}

std::string GammaSpec::to_string() const {
  switch (mode) {
    case GammaMode::auto_saddle: return "auto";
    case GammaMode::grid:
      return "grid(" + format_double(start) + "," + format_double(stop) + "," + std::to_string(points) + ")";
    case GammaMode::explicit_values: {
      std::string out;
      for (const double v : values) out += (out.empty() ? "" : ",") + format_double(v);
      return out;
    }
  }
  return "?";
}

AutoGamma auto_gamma(const std::vector<Family>& families, const Shape& shape) {
  if (families.empty()) throw ConfigError("gamma=auto needs at least one family");
  AutoGamma out;
  const int n = shape.n();
  if (shape.kind == ShapeKind::product) {
    const double alpha1 = static_cast<double>(shape.n1) / n;
    const MonomialPoly poly = to_monomials(families, alpha1, 1.0 - alpha1);
    const SaddleReport r = limit_prob_prod(poly, n);
    if (!r.grad_cond) throw ConfigError("gamma=auto: " + r.failure);
    out.Gamma = r.Gamma;
    out.gamma = r.gamma;
    out.limit_prob = r.limit_prob;
    out.ell = poly.ell;
    return out;
  }
  int ell = 0;
  for (const auto& f : families) ell = std::max(ell, locality(f));
  std::map<int, double> kappa_by_a;
  for (const auto& f : families) {
    const auto* lnm = std::get_if<LnmFamily>(&f);
    if (!lnm || lnm->ell != ell) continue;
    const bool ordered = lnm->m > 0 && lnm->m < lnm->ell;
    kappa_by_a[lnm->m] += ordered ? 1.0 : 1.0 / to_long_double(factorial(lnm->ell));
  }
  if (kappa_by_a.size() != 1)
    throw ConfigError("gamma=auto: leading families disagree on a; pass an explicit gamma");
  const auto [a, kappa] = *kappa_by_a.begin();
  const SaddleReport r = saddle_sn(ell, a, n, kappa);
  out.Gamma = r.Gamma;
  out.gamma = r.gamma;
  out.limit_prob = r.limit_prob;
  out.ell = ell;
  out.a = a;
  return out;
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw ConfigError("unknown output format '" + std::string(name) + "' (csv, json)");
}

void ExperimentConfig::validate() const {
  if (n_list.empty()) throw ConfigError("need at least one n");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 1) throw ConfigError("n must be positive");
    if (i > 0 && n_list[i] <= n_list[i - 1]) throw ConfigError("n-list must be strictly increasing");
  }
  if (!(f > 0.0) || f > 1.0) throw ConfigError("f must lie in (0, 1]");
  if (seeds.empty()) throw ConfigError("need at least one seed");
  if (gamma.mode != GammaMode::auto_saddle && gamma.values.empty()) throw ConfigError("no gamma values");
  if (method == Method::sector && f != 1.0) throw ConfigError("sector sums need f = 1; use brute or mc");
  if (method != Method::brute && std::abs(beta + std::numbers::pi / 4) > 1e-15)
    throw ConfigError("sector and mc fix beta = -pi/4; use brute for other angles");
}

ResultTable::ResultTable(std::string schema, std::vector<std::string> columns)
    : schema_(std::move(schema)), columns_(std::move(columns)) {}

ResultTable::Cell ResultTable::number(double v) {
  if (!std::isfinite(v)) return null();
  return {Cell::Kind::number, format_double(v)};
}
ResultTable::Cell ResultTable::number(std::int64_t v) { return {Cell::Kind::number, std::to_string(v)}; }
ResultTable::Cell ResultTable::number(Cost v) { return {Cell::Kind::number, symqaoa::to_string(v)}; }
ResultTable::Cell ResultTable::text(std::string v) { return {Cell::Kind::text, std::move(v)}; }
ResultTable::Cell ResultTable::boolean(bool v) { return {Cell::Kind::boolean, v ? "true" : "false"}; }
ResultTable::Cell ResultTable::null() { return {Cell::Kind::null, ""}; }

void ResultTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) throw std::logic_error("row width differs from the header");
  rows_.push_back(std::move(row));
}

std::string ResultTable::to_csv() const {
  std::ostringstream out;
  out << "# " << schema_ << '\n';
  for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i].value);
    out << '\n';
  }
  return out.str();
}

std::string ResultTable::to_json() const {
  std::ostringstream out;
  out << "{\"schema\":" << nlohmann::json(schema_).dump() << ",\"rows\":[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    out << (r ? ",\n" : "\n") << '{';
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      out << (i ? "," : "") << nlohmann::json(columns_[i]).dump() << ':';
      const Cell& c = rows_[r][i];
      switch (c.kind) {
        case Cell::Kind::text: out << nlohmann::json(c.value).dump(); break;
        case Cell::Kind::null: out << "null"; break;
        default: out << c.value;
      }
    }
    out << '}';
  }
  out << "\n]}\n";
  return out.str();
}

std::string ResultTable::render(OutputFormat format) const {
  return format == OutputFormat::csv ? to_csv() : to_json();
}

GeneratedFiles cmd_generate(const GenerateConfig& config) {
  const Shape shape = shape_for(config.shape, config.n);
  const auto families = parse_families(config.family, config.shape);
  const Bits s = config.s ? *config.s : hidden_string(config.n, config.seed);
  if (static_cast<int>(s.size()) != config.n) throw ConfigError("hidden string length differs from n");
  GeneratedFiles out;
  out.instance = generate(families, shape, s, config.f, config.seed);
  if (config.shuffle) out.instance = shuffle_variables(out.instance, config.seed);
  out.wcnf = export_wcnf(out.instance, config.format);
  out.sidecar = write_sidecar(out.instance);
  return out;
}

ResultTable cmd_qaoa(const ExperimentConfig& config) {
  config.validate();
  const auto families = parse_families(config.family, config.shape);
  const std::string family_text = to_string(families, config.shape);

  struct Point {
    int n;
    double gamma;
    std::uint64_t seed;
    std::optional<AutoGamma> theory;
  };
  std::vector<Point> points;
  std::map<int, CostSpec> tables;
  for (const int n : config.n_list) {
    const Shape shape = shape_for(config.shape, n);
    for (const auto& fam : families) validate(fam, shape.kind);
    if (config.f == 1.0) tables.emplace(n, build_cost_table(families, shape));
    std::optional<AutoGamma> theory;
    std::vector<double> gammas = config.gamma.values;
    if (config.gamma.mode == GammaMode::auto_saddle) {
      theory = auto_gamma(families, shape);
      gammas = {theory->gamma};
    }
    std::sort(gammas.begin(), gammas.end());
    for (const double g : gammas)
      for (const auto seed : config.seeds) points.push_back({n, g, seed, theory});
  }
  std::stable_sort(points.begin(), points.end(), [](const Point& x, const Point& y) {
    return std::tie(x.n, x.gamma, x.seed) < std::tie(y.n, y.gamma, y.seed);
  });

  std::vector<AmplitudeResult> results(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    const Point& p = points[i];
    const Shape shape = shape_for(config.shape, p.n);
    // Sparsified costs enter with phase gamma / f so E_w[gamma C~/f] matches gamma C.
    const double gamma_eff = p.gamma / config.f;
    if (config.method == Method::sector) {
      const auto& spec = tables.at(p.n);
      if (config.convention == Convention::paper_sector) {
        results[i] = overlap_sector(spec, gamma_eff);
      } else {
        // (-i)^k e^{i g c} = conj(i^k e^{-i g c})
        results[i] = overlap_sector(spec, -gamma_eff);
        results[i].overlap = std::conj(results[i].overlap);
      }
      return;
    }
    const Bits s = hidden_string(p.n, p.seed);
    std::unique_ptr<CostModel> model;
    if (config.f == 1.0)
      model = std::make_unique<SymmetricCostModel>(tables.at(p.n), s);
    else
      model = std::make_unique<ClauseCostModel>(generate(families, shape, s, config.f, p.seed));
    if (config.method == Method::brute) {
      results[i] = statevector_prob(*model, {config.beta, gamma_eff, config.convention}, s).amplitude;
    } else {
      results[i] = mc_overlap(*model, gamma_eff, s, config.mc_samples, p.seed, config.convention);
    }
  });

  ResultTable table("symqaoa.qaoa.v1",
                    {"n", "n1", "n2", "families", "f", "gamma", "gamma_eff", "Gamma", "seed", "method", "convention",
                     "beta", "prob", "overlap_re", "overlap_im", "stderr_prob", "samples", "limit_prob"});
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& p = points[i];
    const Shape shape = shape_for(config.shape, p.n);
    const auto& r = results[i];
    using T = ResultTable;
    table.add_row({T::number(std::int64_t{p.n}), T::number(std::int64_t{shape.n1}), T::number(std::int64_t{shape.n2}),
                   T::text(family_text), T::number(config.f), T::number(p.gamma), T::number(p.gamma / config.f),
                   p.theory ? T::number(p.theory->Gamma) : T::null(), T::number(static_cast<std::int64_t>(p.seed)),
                   T::text(to_string(r.method)),
                   T::text(config.convention == Convention::paper_sector ? "paper_sector" : "statevector"),
                   T::number(config.beta), T::number(r.prob), T::number(r.overlap.real()), T::number(r.overlap.imag()),
                   T::number(r.stderr_prob), T::number(static_cast<std::int64_t>(r.samples)),
                   p.theory && p.theory->limit_prob ? T::number(*p.theory->limit_prob) : T::null()});
  }
  return table;
}

ClassicalAlgo parse_classical_algo(std::string_view name) {
  if (name == "hill") return ClassicalAlgo::hill;
  if (name == "anneal") return ClassicalAlgo::anneal;
  if (name == "walksat") return ClassicalAlgo::walksat;
  if (name == "learn") return ClassicalAlgo::learn;
  throw ConfigError("unknown algorithm '" + std::string(name) + "' (hill, anneal, walksat, learn)");
}

std::string to_string(ClassicalAlgo algo) {
  switch (algo) {
    case ClassicalAlgo::hill: return "hill";
    case ClassicalAlgo::anneal: return "anneal";
    case ClassicalAlgo::walksat: return "walksat";
    case ClassicalAlgo::learn: return "learn";
  }
  return "?";
}

TableKind parse_table_kind(std::string_view name) {
  if (name == "family") return TableKind::family;
  if (name == "trap") return TableKind::trap;
  if (name == "linear") return TableKind::linear;
  throw ConfigError("unknown table '" + std::string(name) + "' (family, trap, linear)");
}

std::string to_string(TableKind kind) {
  switch (kind) {
    case TableKind::family: return "family";
    case TableKind::trap: return "trap";
    case TableKind::linear: return "linear";
  }
  return "?";
}

CostSpec trap_table(int n) {
  std::vector<Cost> t(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) t[k] = n - k + 1;
  return CostSpec::from_table(std::move(t));
}

CostSpec linear_table(int n) {
  std::vector<Cost> t(static_cast<std::size_t>(n) + 1);
  std::iota(t.begin(), t.end(), Cost{0});
  return CostSpec::from_table(std::move(t));
}

ResultTable cmd_classical(const ClassicalConfig& config) {
  if (config.n < 1) throw ConfigError("n must be positive");
  if (config.seeds.empty()) throw ConfigError("need at least one seed");
  if (!(config.f > 0.0) || config.f > 1.0) throw ConfigError("f must lie in (0, 1]");
  if (config.algo == ClassicalAlgo::walksat && config.table != TableKind::family)
    throw ConfigError("walksat runs on generated clauses; use --table family");
  if (config.algo != ClassicalAlgo::walksat && config.f != 1.0)
    throw ConfigError("query baselines run on exact tables; f < 1 applies to walksat only");
  if (config.start_weight && (*config.start_weight < 0 || *config.start_weight > config.n))
    throw ConfigError("start weight must lie in [0, n]");

  const auto families = parse_families(config.family, ShapeKind::symmetric);
  const std::string family_text =
      config.table == TableKind::family ? to_string(families, ShapeKind::symmetric) : to_string(config.table);
  const CostSpec spec = baseline_table(config.table, families, config.n);
  const AnnealSchedule schedule = config.schedule ? *config.schedule : AnnealSchedule::defaults(config.n);

  struct Run {
    bool success = false;
    Cost cost = 0;
    std::uint64_t work = 0;
    std::uint64_t steps = 0;
    double seconds = 0.0;
  };
  std::vector<Run> runs(config.seeds.size());
  parallel_for(runs.size(), [&](std::size_t i) {
    const std::uint64_t seed = config.seeds[i];
    const Bits s = hidden_string(config.n, seed);
    const auto start = Clock::now();
    Run run;
    switch (config.algo) {
      case ClassicalAlgo::hill: {
        QueryOracle oracle(std::make_shared<SymmetricCostModel>(spec, s));
        auto rng = stream(seed, 0x6u);
        Bits x0(static_cast<std::size_t>(config.n));
        if (config.start_weight) {
          std::vector<int> idx(static_cast<std::size_t>(config.n));
          std::iota(idx.begin(), idx.end(), 0);
          std::shuffle(idx.begin(), idx.end(), rng);
          x0 = s;
          for (int j = 0; j < *config.start_weight; ++j) x0[idx[j]] ^= 1u;
        } else {
          for (auto& b : x0) b = rng() & 1u;
        }
        const auto r = hill_climb(oracle, std::move(x0), config.policy, seed);
        run = {r.x == s, r.cost, r.queries, r.steps, 0.0};
        break;
      }
      case ClassicalAlgo::anneal: {
        QueryOracle oracle(std::make_shared<SymmetricCostModel>(spec, s));
        const auto r = simulated_annealing(oracle, schedule, seed);
        run = {r.best_x == s, r.best_cost, r.queries, static_cast<std::uint64_t>(schedule.steps), 0.0};
        break;
      }
      case ClassicalAlgo::walksat: {
        const auto inst = generate(families, Shape::symmetric(config.n), s, config.f, seed);
        const auto r = walksat(inst, config.noise, config.max_flips, seed);
        run = {r.success, r.cost, r.flips, r.flips, 0.0};
        break;
      }
      case ClassicalAlgo::learn: {
        QueryOracle oracle(std::make_shared<SymmetricCostModel>(spec, s));
        oracle.set_remap(spec);
        const auto r = one_hot_learn(oracle);
        run = {r.s == s, oracle.peek(r.s), r.queries, r.queries, 0.0};
        break;
      }
    }
    run.seconds = seconds_since(start);
    runs[i] = run;
  });

  ResultTable table("symqaoa.classical.v1", {"algo", "table", "n", "families", "f", "seed", "success", "cost",
                                             "queries_or_flips", "steps", "wallclock_s"});
  for (std::size_t i = 0; i < runs.size(); ++i) {
    using T = ResultTable;
    const Run& r = runs[i];
    table.add_row({T::text(to_string(config.algo)), T::text(to_string(config.table)),
                   T::number(std::int64_t{config.n}), T::text(family_text), T::number(config.f),
                   T::number(static_cast<std::int64_t>(config.seeds[i])), T::boolean(r.success), T::number(r.cost),
                   T::number(static_cast<std::int64_t>(r.work)), T::number(static_cast<std::int64_t>(r.steps)),
                   T::number(r.seconds)});
  }
  return table;
}

bool VerifyReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const VerifyEntry& e) { return e.pass; });
}

ResultTable VerifyReport::table() const {
  ResultTable t("symqaoa.verify.v1", {"invariant", "pass", "measured", "threshold", "detail"});
  for (const auto& e : entries)
    t.add_row({ResultTable::text(e.invariant), ResultTable::boolean(e.pass), ResultTable::number(e.measured),
               ResultTable::number(e.threshold), ResultTable::text(e.detail)});
  return t;
}

const std::vector<std::string>& verify_invariants() {
  static const std::vector<std::string> names = {"sector_vs_brute", "sparsify_bound", "planting", "distinct_values"};
  return names;
}

namespace {

/// Swaps in the value of c(2) at c(1) so the table has a collision.
CostSpec corrupt(CostSpec spec) {
  if (spec.table.size() > 2) spec.table[1] = spec.table[2];
  return spec;
}

VerifyEntry verify_sector_vs_brute(const VerifyConfig& config) {
  auto rng = stream(config.seed, 0x10u);
  double worst = 0.0;
  int cases = 0;
  for (const auto& preset : family_presets()) {
    const auto families = parse_families(preset.families, preset.shape);
    for (int n = 6; n <= 12; n += 3) {
      const Shape shape = shape_for(preset.shape, n);
      const CostSpec spec = build_cost_table(families, shape);
      const double gamma = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      const SymmetricCostModel model(spec, hidden_string(n, rng()));
      const auto brute = statevector_prob(model, {-std::numbers::pi / 4, gamma, Convention::paper_sector},
                                          model.hidden());
      const auto sector = overlap_sector(config.inject_corruption ? corrupt(spec) : spec, gamma);
      worst = std::max(worst, std::abs(sector.prob - brute.amplitude.prob));
      ++cases;
    }
  }
  const double tol = 1e-10;
  return {"sector_vs_brute", worst <= tol, worst, tol,
          std::to_string(cases) + " (family, n, gamma) cases, max |prob difference|"};
}

VerifyEntry verify_sparsify_bound(const VerifyConfig& config) {
  const int n = 10;
  const double f = 0.8, gamma = 2 * std::numbers::pi / (n * n);
  const auto families = parse_families("3N1,2N2", ShapeKind::symmetric);
  const auto full = generate(families, Shape::symmetric(n), hidden_string(n, config.seed), 1.0, config.seed);
  const auto r = lemma2_deviation(full, f, gamma, 64, config.seed);
  const bool under = r.estimate <= r.bound + 3 * r.estimate_stderr;
  const bool moment = std::abs(r.second_moment - r.bound) <= 4 * r.second_moment_stderr;
  return {"sparsify_bound", under && moment, r.estimate, r.bound,
          "n=10 f=0.8 64 trials; second moment " + format_double(r.second_moment) + " +- " +
              format_double(r.second_moment_stderr)};
}

VerifyEntry verify_planting(const VerifyConfig& config) {
  auto rng = stream(config.seed, 0x11u);
  std::uint64_t mismatches = 0, checks = 0;
  for (const auto& preset : family_presets()) {
    const int n = 10;
    const Shape shape = shape_for(preset.shape, n);
    const auto families = parse_families(preset.families, preset.shape);
    const Bits s = hidden_string(n, rng());
    const auto inst = generate(families, shape, s, 1.0, config.seed);
    const CostSpec table = config.inject_corruption ? corrupt(build_cost_table(families, shape))
                                                    : build_cost_table(families, shape);
    const SymmetricCostModel expected(table, s);
    Bits x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    for (int t = 0; t < 200; ++t) {
      for (auto& b : x) b = rng() & 1u;
      // y = pi(x XOR s) XOR s with pi permuting within each group.
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.begin() + shape.n1, rng);
      std::shuffle(perm.begin() + shape.n1, perm.end(), rng);
      for (int i = 0; i < n; ++i) y[perm[i]] = (x[i] ^ s[i]) ^ s[perm[i]];
      const Cost c = eval_cost(inst, x);
      mismatches += (c != expected.evaluate(x)) + (c != eval_cost(inst, y));
      checks += 2;
    }
    mismatches += eval_cost(inst, s) != table.table.front();
    ++checks;
  }
  return {"planting", mismatches == 0, static_cast<double>(mismatches), 0.0,
          std::to_string(checks) + " cost comparisons against tables and group permutations"};
}

VerifyEntry verify_distinct_values(const VerifyConfig& config) {
  const auto families = parse_families("1N1,3N1", ShapeKind::symmetric);
  int failures = 0, scanned = 0;
  std::string first;
  for (int n = 1; n <= config.distinct_n_max; ++n) {
    if (n % 4 != 0 && n % 4 != 1) continue;
    CostSpec spec = build_cost_table(families, Shape::symmetric(n));
    if (config.inject_corruption) spec = corrupt(std::move(spec));
    ++scanned;
    if (!distinct_values_check(spec).pass) {
      if (failures++ == 0) first = "first failure at n=" + std::to_string(n);
    }
  }
  return {"distinct_values", failures == 0, static_cast<double>(failures), 0.0,
          std::to_string(scanned) + " sizes with n = 0, 1 mod 4 up to " + std::to_string(config.distinct_n_max) +
              (first.empty() ? "" : "; " + first)};
}

}  // namespace

VerifyReport cmd_verify(const VerifyConfig& config) {
  std::vector<std::string> wanted = config.invariants.empty() ? verify_invariants() : config.invariants;
  for (const auto& w : wanted)
    if (std::find(verify_invariants().begin(), verify_invariants().end(), w) == verify_invariants().end())
      throw ConfigError("unknown invariant '" + w + "'");
  VerifyReport report;
  for (const auto& w : wanted) {
    if (w == "sector_vs_brute") report.entries.push_back(verify_sector_vs_brute(config));
    if (w == "sparsify_bound") report.entries.push_back(verify_sparsify_bound(config));
    if (w == "planting") report.entries.push_back(verify_planting(config));
    if (w == "distinct_values") report.entries.push_back(verify_distinct_values(config));
  }
  return report;
}

}  // namespace symqaoa
