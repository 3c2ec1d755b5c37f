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

#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "symqaoa/bench.hpp"

using namespace symqaoa;

namespace {

std::size_t column(const ResultTable& t, const std::string& name) {
  const auto& c = t.columns();
  return static_cast<std::size_t>(std::find(c.begin(), c.end(), name) - c.begin());
}

double num(const ResultTable& t, std::size_t row, const std::string& name) {
  return std::stod(t.rows()[row][column(t, name)].value);
}

}  // namespace

TEST(Bench, ParseHelpers) {
  ASSERT_EQ(parse_uint_list("1-3,7"), (std::vector<std::uint64_t>{1, 2, 3, 7}));
  ASSERT_THROW(parse_uint_list("3-1"), ConfigError);
  ASSERT_THROW(parse_uint_list("x"), ConfigError);
  ASSERT_EQ(parse_shape_kind("product"), ShapeKind::product);
  ASSERT_THROW(parse_shape_kind("ring"), ConfigError);
  ASSERT_EQ(shape_for(ShapeKind::product, 11).n1, 5);
  ASSERT_EQ(shape_for(ShapeKind::product, 11).n2, 6);
  ASSERT_EQ(hidden_string(40, 3), hidden_string(40, 3));
  ASSERT_NE(hidden_string(40, 3), hidden_string(40, 4));
}

TEST(Bench, GammaSpecParse) {
  ASSERT_EQ(GammaSpec::parse("auto").mode, GammaMode::auto_saddle);
  const auto list = GammaSpec::parse("0.05,0.1");
  ASSERT_EQ(list.mode, GammaMode::explicit_values);
  ASSERT_EQ(list.values, (std::vector<double>{0.05, 0.1}));
  const auto grid = GammaSpec::parse("grid(0, 0.2, 81)");
  ASSERT_EQ(grid.mode, GammaMode::grid);
  ASSERT_EQ(grid.points, 81);
  ASSERT_EQ(GammaSpec::parse(grid.to_string()).points, 81);
  ASSERT_THROW(GammaSpec::parse("grid(0, 1)"), ConfigError);
  ASSERT_THROW(GammaSpec::parse("grid(0, 1, 0)"), ConfigError);
  ASSERT_THROW(GammaSpec::parse("fast"), ConfigError);
}

TEST(Bench, AutoGamma) {
  const auto g = auto_gamma(parse_families("1N1,3N1", ShapeKind::symmetric), Shape::symmetric(100));
  ASSERT_EQ(g.ell, 3);
  ASSERT_EQ(g.a, 1);
  ASSERT_NEAR(g.gamma, 2 * std::numbers::pi / 1e4, 1e-15);
  ASSERT_NEAR(*g.limit_prob, 0.53703, 5e-6);
  const auto p = auto_gamma(parse_families("5N1", ShapeKind::product), Shape::product(50, 50));
  ASSERT_NEAR(p.Gamma, 128.0 / 3, 1e-12);
  ASSERT_THROW(auto_gamma(parse_families("3N31", ShapeKind::symmetric), Shape::symmetric(20)), ConfigError);
}

TEST(Bench, ConfigValidation) {
  ExperimentConfig c;
  c.n_list = {64, 32};
  ASSERT_THROW(cmd_qaoa(c), ConfigError);
  c.n_list = {32};
  c.f = 0.0;
  ASSERT_THROW(cmd_qaoa(c), ConfigError);
  c.f = 0.5;
  ASSERT_THROW(cmd_qaoa(c), ConfigError);
  c.f = 1.0;
  c.beta = 0.3;
  ASSERT_THROW(cmd_qaoa(c), ConfigError);
  c.beta = -std::numbers::pi / 4;
  c.seeds.clear();
  ASSERT_THROW(cmd_qaoa(c), ConfigError);
}

TEST(Bench, GridSweep) {
  ExperimentConfig c;
  c.n_list = {64};
  c.gamma = GammaSpec::parse("grid(0, 0.002, 81)");
  const auto t = cmd_qaoa(c);
  ASSERT_EQ(t.rows().size(), 81u);
  for (std::size_t r = 1; r < t.rows().size(); ++r) ASSERT_LT(num(t, r - 1, "gamma"), num(t, r, "gamma"));
  // The sector sum is accurate in absolute terms: terms of size ~0.1 cancel down to 2^-32.
  ASSERT_NEAR(num(t, 0, "prob"), std::ldexp(1.0, -64), 1e-15);
}

TEST(Bench, BruteAtGammaZero) {
  ExperimentConfig c;
  c.n_list = {12};
  c.method = Method::brute;
  c.gamma = GammaSpec::parse("0");
  c.seeds = {0, 1};
  const auto t = cmd_qaoa(c);
  ASSERT_EQ(t.rows().size(), 2u);
  for (std::size_t r = 0; r < 2; ++r) ASSERT_NEAR(num(t, r, "prob"), std::ldexp(1.0, -12), 1e-16);
}

TEST(Bench, CsvAndJsonCarrySameCells) {
  ExperimentConfig c;
  c.family = "(3,2)N(1,0),5N1";
  c.shape = ShapeKind::product;
  c.n_list = {20};
  c.f = 0.8;
  c.method = Method::mc;
  c.mc_samples = 2000;
  c.gamma = GammaSpec::parse("0.001,0.002");
  c.seeds = {1, 2};
  const auto t = cmd_qaoa(c);
  ASSERT_EQ(t.rows().size(), 4u);
  const auto csv = t.to_csv();
  ASSERT_EQ(csv.rfind("# symqaoa.qaoa.v1\n", 0), 0u);
  ASSERT_NE(csv.find("\"(3,2)N(1,0),5N1\""), std::string::npos);
  const auto j = nlohmann::json::parse(t.to_json());
  ASSERT_EQ(j["schema"], "symqaoa.qaoa.v1");
  ASSERT_EQ(j["rows"].size(), 4u);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t k = 0; k < t.columns().size(); ++k) {
      const auto& cell = t.rows()[r][k];
      const auto& v = j["rows"][r][t.columns()[k]];
      switch (cell.kind) {
        case ResultTable::Cell::Kind::text: ASSERT_EQ(v.get<std::string>(), cell.value); break;
        case ResultTable::Cell::Kind::null: ASSERT_TRUE(v.is_null()); break;
        case ResultTable::Cell::Kind::boolean: ASSERT_EQ(v.get<bool>(), cell.value == "true"); break;
        case ResultTable::Cell::Kind::number: ASSERT_EQ(std::stod(cell.value), v.get<double>()); break;
      }
    }
  ASSERT_EQ(t.to_csv(), cmd_qaoa(c).to_csv());
}

TEST(Bench, GenerateIsReproducible) {
  GenerateConfig g;
  g.family = "3N1,2N2";
  g.n = 64;
  g.seed = 7;
  const auto a = cmd_generate(g);
  ASSERT_EQ(a.instance.clauses.size(), 124992u + 2016u);
  ASSERT_EQ(a.wcnf, cmd_generate(g).wcnf);
  ASSERT_EQ(a.sidecar, cmd_generate(g).sidecar);
  const auto meta = nlohmann::json::parse(a.sidecar);
  ASSERT_TRUE(meta.contains("s"));
  g.seed = 8;
  ASSERT_NE(a.wcnf, cmd_generate(g).wcnf);
}

TEST(Bench, VerifyPassesAndCorruptionFails) {
  VerifyConfig v;
  const auto ok = cmd_verify(v);
  ASSERT_EQ(ok.entries.size(), verify_invariants().size());
  for (const auto& e : ok.entries) ASSERT_TRUE(e.pass) << e.invariant << ": " << e.detail;
  ASSERT_TRUE(ok.all_pass());

  v.inject_corruption = true;
  v.invariants = {"sector_vs_brute", "planting", "distinct_values"};
  const auto bad = cmd_verify(v);
  ASSERT_FALSE(bad.all_pass());
  for (const auto& e : bad.entries) ASSERT_FALSE(e.pass) << e.invariant;
  ASSERT_NE(bad.table().to_csv().find("distinct_values"), std::string::npos);

  VerifyConfig scan;
  scan.invariants = {"distinct_values"};
  scan.distinct_n_max = 1000;
  ASSERT_TRUE(cmd_verify(scan).all_pass());
  scan.invariants = {"nonsense"};
  ASSERT_THROW(cmd_verify(scan), ConfigError);
}

TEST(Bench, ClassicalCommand) {
  ClassicalConfig c;
  c.algo = ClassicalAlgo::learn;
  c.n = 64;
  c.seeds = {1, 2, 3};
  const auto t = cmd_classical(c);
  ASSERT_EQ(t.rows().size(), 3u);
  for (std::size_t r = 0; r < 3; ++r) {
    ASSERT_EQ(t.rows()[r][column(t, "success")].value, "true");
    ASSERT_EQ(num(t, r, "queries_or_flips"), 65.0);
  }
  c.algo = ClassicalAlgo::hill;
  c.table = TableKind::trap;
  c.n = 20;
  c.start_weight = 3;
  const auto trap = cmd_classical(c);
  for (std::size_t r = 0; r < 3; ++r) ASSERT_EQ(trap.rows()[r][column(trap, "success")].value, "false");
  c.algo = ClassicalAlgo::walksat;
  ASSERT_THROW(cmd_classical(c), ConfigError);
}
