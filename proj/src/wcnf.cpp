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

#include "symqaoa/wcnf.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace symqaoa {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename Int>
Int to_int(std::string_view tok, std::size_t line, const char* what) {
  Int v{};
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
  return v;
}

std::vector<Literal> parse_literals(std::span<const std::string_view> toks, std::size_t line) {
  if (toks.empty() || toks.back() != "0") throw ParseError(line, "clause must end with 0");
  std::vector<Literal> lits;
  for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
    const int v = to_int<int>(toks[i], line, "literal");
    if (v == 0) throw ParseError(line, "literal 0 before end of clause");
    lits.push_back({static_cast<std::uint32_t>(v < 0 ? -v : v), v < 0});
  }
  if (lits.empty()) throw ParseError(line, "empty clause");
  std::sort(lits.begin(), lits.end());
  for (std::size_t i = 1; i < lits.size(); ++i)
    if (lits[i].var == lits[i - 1].var) throw ParseError(line, "variable repeated within a clause");
  return lits;
}

std::string literal_text(const Clause& c) {
  std::string s;
  for (const auto& lit : c.literals) {
    s += std::to_string(lit.dimacs());
    s += ' ';
  }
  s += '0';
  return s;
}

std::vector<std::size_t> clause_order(const PlantedInstance& inst) {
  std::vector<std::size_t> order(inst.clauses.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return inst.clauses[a].literals < inst.clauses[b].literals;
  });
  return order;
}

}  // namespace

WcnfFormat parse_wcnf_format(std::string_view name) {
  if (name == "legacy") return WcnfFormat::legacy;
  if (name == "wcnf22") return WcnfFormat::wcnf22;
  if (name == "cnf") return WcnfFormat::cnf;
  throw ConfigError("unknown export format '" + std::string(name) + "' (legacy, wcnf22, cnf)");
}

std::string to_string(WcnfFormat format) {
  switch (format) {
    case WcnfFormat::legacy: return "legacy";
    case WcnfFormat::wcnf22: return "wcnf22";
    case WcnfFormat::cnf: return "cnf";
  }
  return "?";
}

std::string export_wcnf(const PlantedInstance& inst, WcnfFormat format, const ExportOptions& options) {
  if (inst.clauses.empty()) throw ConfigError("refusing to export a formula with zero clauses");
  const auto order = clause_order(inst);
  std::string out;
  switch (format) {
    case WcnfFormat::legacy: {
      std::uint64_t top = 0;
      for (const auto& c : inst.clauses) top = std::max(top, c.weight);
      out += "p wcnf " + std::to_string(inst.n) + " " + std::to_string(inst.clauses.size()) + " " +
             std::to_string(top + 1) + "\n";
      for (auto i : order) out += std::to_string(inst.clauses[i].weight) + " " + literal_text(inst.clauses[i]) + "\n";
      break;
    }
    case WcnfFormat::wcnf22: {
      out += "c vars " + std::to_string(inst.n) + "\n";
      for (auto i : order) out += std::to_string(inst.clauses[i].weight) + " " + literal_text(inst.clauses[i]) + "\n";
      break;
    }
    case WcnfFormat::cnf: {
      const std::uint64_t lines = inst.total_weight();
      if (lines > options.cnf_line_cap)
        throw ConfigError("plain CNF would need " + std::to_string(lines) + " clause lines (cap " +
                          std::to_string(options.cnf_line_cap) + ")");
      out += "p cnf " + std::to_string(inst.n) + " " + std::to_string(lines) + "\n";
      for (auto i : order) {
        const std::string text = literal_text(inst.clauses[i]) + "\n";
        for (std::uint64_t r = 0; r < inst.clauses[i].weight; ++r) out += text;
      }
      break;
    }
  }
  return out;
}

PlantedInstance parse_wcnf(std::string_view text) {
  enum class Mode { unknown, legacy, wcnf22, cnf } mode = Mode::unknown;
  PlantedInstance inst;
  inst.meta.external = true;
  std::uint64_t top = 0, declared = 0;
  std::size_t header_line = 0;
  int n_declared = -1;
  std::map<std::vector<Literal>, std::size_t> cnf_index;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    const auto line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    const auto toks = split_ws(line);
    if (toks.empty()) continue;

    if (toks[0] == "c") {
      if (toks.size() == 3 && toks[1] == "vars") n_declared = to_int<int>(toks[2], line_no, "variable count");
      continue;
    }
    if (toks[0] == "p") {
      if (mode != Mode::unknown || !inst.clauses.empty()) throw ParseError(line_no, "unexpected header");
      header_line = line_no;
      if (toks.size() == 5 && toks[1] == "wcnf") {
        mode = Mode::legacy;
        top = to_int<std::uint64_t>(toks[4], line_no, "top weight");
      } else if (toks.size() == 4 && toks[1] == "cnf") {
        mode = Mode::cnf;
      } else {
        throw ParseError(line_no, "malformed header");
      }
      n_declared = to_int<int>(toks[2], line_no, "variable count");
      declared = to_int<std::uint64_t>(toks[3], line_no, "clause count");
      continue;
    }
    if (toks[0] == "h") throw ParseError(line_no, "hard clauses are not supported");
    if (mode == Mode::unknown) mode = Mode::wcnf22;

    if (mode == Mode::cnf) {
      auto lits = parse_literals(toks, line_no);
      auto [it, fresh] = cnf_index.try_emplace(lits, inst.clauses.size());
      if (fresh)
        inst.clauses.push_back({std::move(lits), 1});
      else
        ++inst.clauses[it->second].weight;
      continue;
    }
    const auto weight = to_int<std::uint64_t>(toks[0], line_no, "clause weight");
    if (weight == 0) throw ParseError(line_no, "clause weight must be positive");
    if (mode == Mode::legacy && weight >= top) throw ParseError(line_no, "hard clauses are not supported");
    inst.clauses.push_back({parse_literals(std::span(toks).subspan(1), line_no), weight});
  }

  if (mode == Mode::legacy && declared != inst.clauses.size())
    throw ParseError(header_line, "header declares " + std::to_string(declared) + " clauses, found " +
                                      std::to_string(inst.clauses.size()));
  if (mode == Mode::cnf && declared != inst.total_weight())
    throw ParseError(header_line, "header declares " + std::to_string(declared) + " clauses, found " +
                                      std::to_string(inst.total_weight()));

  std::uint32_t max_var = 0;
  for (const auto& c : inst.clauses)
    for (const auto& lit : c.literals) max_var = std::max(max_var, lit.var);
  inst.n = n_declared >= 0 ? n_declared : static_cast<int>(max_var);
  if (static_cast<int>(max_var) > inst.n)
    throw ParseError(header_line, "literal refers to variable " + std::to_string(max_var) + " beyond n");
  inst.meta.shape = Shape::symmetric(inst.n);
  inst.meta.unit_clauses_kept = inst.total_weight();
  inst.meta.unit_clauses_total = inst.meta.unit_clauses_kept;
  inst.meta.empty = inst.clauses.empty();
  return inst;
}

std::string write_sidecar(const PlantedInstance& inst) {
  nlohmann::ordered_json j;
  j["schema"] = "symqaoa-instance/1";
  j["n"] = inst.n;
  j["s"] = bits_to_string(inst.s);
  j["families"] = to_string(inst.meta.families, inst.meta.shape.kind);
  j["shape"] = {{"kind", inst.meta.shape.kind == ShapeKind::symmetric ? "sn" : "product"},
                {"n1", inst.meta.shape.n1},
                {"n2", inst.meta.shape.n2}};
  j["f"] = inst.meta.f;
  j["seed"] = inst.meta.seed;
  j["unit_clauses_total"] = inst.meta.unit_clauses_total;
  j["unit_clauses_kept"] = inst.meta.unit_clauses_kept;
  j["clauses"] = inst.clauses.size();
  j["empty"] = inst.meta.empty;
  j["var_perm"] = inst.meta.var_perm;
  return j.dump(2) + "\n";
}

void apply_sidecar(PlantedInstance& inst, std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, std::string("sidecar: ") + e.what());
  }
  if (j.value("schema", "") != "symqaoa-instance/1") throw ParseError(1, "sidecar schema mismatch");
  if (j.at("n").get<int>() != inst.n) throw ParseError(1, "sidecar n differs from the formula");
  const auto& shape = j.at("shape");
  inst.meta.shape = shape.at("kind").get<std::string>() == "sn"
                        ? Shape::symmetric(shape.at("n1").get<int>())
                        : Shape::product(shape.at("n1").get<int>(), shape.at("n2").get<int>());
  inst.s = bits_from_string(j.at("s").get<std::string>());
  inst.meta.families = parse_families(j.at("families").get<std::string>(), inst.meta.shape.kind);
  inst.meta.f = j.at("f").get<double>();
  inst.meta.seed = j.at("seed").get<std::uint64_t>();
  inst.meta.unit_clauses_total = j.at("unit_clauses_total").get<std::uint64_t>();
  inst.meta.unit_clauses_kept = j.at("unit_clauses_kept").get<std::uint64_t>();
  inst.meta.empty = j.at("empty").get<bool>();
  inst.meta.var_perm = j.at("var_perm").get<std::vector<std::uint32_t>>();
  inst.meta.external = false;
}

}  // namespace symqaoa
