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

#include "symqaoa/family.hpp"

#include <cctype>
#include <optional>
#include <string>

#include "symqaoa/types.hpp"

namespace symqaoa {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int parse_int(std::string_view s, std::string_view token) {
  if (s.empty()) throw ConfigError("bad family token '" + std::string(token) + "'");
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ConfigError("bad family token '" + std::string(token) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

// "(a,b)" -> {a, b}
std::pair<int, int> parse_pair(std::string_view s, std::string_view token) {
  if (s.size() < 5 || s.front() != '(' || s.back() != ')')
    throw ConfigError("bad product family '" + std::string(token) + "'");
  const auto inner = s.substr(1, s.size() - 2);
  const auto comma = inner.find(',');
  if (comma == std::string_view::npos) throw ConfigError("bad product family '" + std::string(token) + "'");
  return {parse_int(trim(inner.substr(0, comma)), token), parse_int(trim(inner.substr(comma + 1)), token)};
}

// Splits on commas that are not inside parentheses.
std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

}  // namespace

int locality(const Family& family) {
  if (const auto* f = std::get_if<LnmFamily>(&family)) return f->ell;
  const auto& p = std::get<ProdFamily>(family);
  return p.ell1 + p.ell2;
}

void validate(const Family& family, ShapeKind shape) {
  if (const auto* f = std::get_if<LnmFamily>(&family)) {
    if (f->ell < 1 || f->m < 0 || f->m > f->ell)
      throw ConfigError("lNm family needs l >= 1 and 0 <= m <= l");
    if (shape == ShapeKind::symmetric && f->scope != Scope::whole)
      throw ConfigError("group-local family in an S_n shape");
    return;
  }
  const auto& p = std::get<ProdFamily>(family);
  if (p.ell1 < 0 || p.ell2 < 0 || p.ell1 + p.ell2 < 1 || p.m1 < 0 || p.m1 > p.ell1 || p.m2 < 0 || p.m2 > p.ell2)
    throw ConfigError("product family needs 0 <= m_j <= l_j and l1 + l2 >= 1");
  if (shape == ShapeKind::symmetric) throw ConfigError("product family in an S_n shape");
}

bool needs_product_shape(std::string_view text) {
  return text.find("g1:") != std::string_view::npos || text.find("g2:") != std::string_view::npos ||
         text.find("whole:") != std::string_view::npos ||
         text.find('(') != std::string_view::npos || text.find("!sym") != std::string_view::npos;
}

std::vector<Family> parse_families(std::string_view text, ShapeKind shape) {
  std::vector<Family> out;
  if (trim(text).empty()) return out;
  for (const auto& raw : split_tokens(text)) {
    std::string_view tok = raw;
    if (tok.empty()) throw ConfigError("empty family token in '" + std::string(text) + "'");
    bool nosym = false;
    if (tok.size() > 4 && tok.substr(tok.size() - 4) == "!sym") {
      nosym = true;
      tok = tok.substr(0, tok.size() - 4);
    }
    std::optional<Scope> group;
    if (tok.substr(0, 3) == "g1:") group = Scope::group1;
    if (tok.substr(0, 3) == "g2:") group = Scope::group2;
    if (group) tok = tok.substr(3);
    if (!group && tok.substr(0, 6) == "whole:") {
      group = Scope::whole;
      tok = tok.substr(6);
    }

    if (shape == ShapeKind::symmetric && (group || nosym))
      throw ConfigError("token '" + raw + "' only applies to product shapes");

    if (!tok.empty() && tok.front() == '(') {
      if (group) throw ConfigError("product family cannot carry a group prefix: '" + raw + "'");
      const auto n_pos = tok.find(")N(");
      if (n_pos == std::string_view::npos) throw ConfigError("bad product family '" + raw + "'");
      const auto [l1, l2] = parse_pair(tok.substr(0, n_pos + 1), raw);
      const auto [m1, m2] = parse_pair(tok.substr(n_pos + 2), raw);
      Family f = ProdFamily{l1, l2, m1, m2, !nosym};
      validate(f, shape);
      out.push_back(f);
      continue;
    }

    const auto n_pos = tok.find('N');
    if (n_pos == std::string_view::npos || n_pos + 1 >= tok.size())
      throw ConfigError("bad family token '" + raw + "'");
    const int ell = parse_int(tok.substr(0, n_pos), raw);
    Scope scope = Scope::whole;
    if (shape == ShapeKind::product) scope = group ? *group : (nosym ? Scope::group1 : Scope::both_groups);
    // "3N31" is shorthand for "3N3,3N1": each trailing digit is one negation count.
    for (char c : tok.substr(n_pos + 1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ConfigError("bad family token '" + raw + "'");
      Family f = LnmFamily{ell, c - '0', scope};
      validate(f, shape);
      out.push_back(f);
    }
  }
  return out;
}

std::string to_string(const Family& family, ShapeKind shape) {
  if (const auto* f = std::get_if<LnmFamily>(&family)) {
    const std::string core = std::to_string(f->ell) + "N" + std::to_string(f->m);
    if (shape == ShapeKind::symmetric) return core;
    switch (f->scope) {
      case Scope::group1: return "g1:" + core;
      case Scope::group2: return "g2:" + core;
      case Scope::both_groups: return core;
      case Scope::whole: return "whole:" + core;
    }
  }
  const auto& p = std::get<ProdFamily>(family);
  std::string s = "(" + std::to_string(p.ell1) + "," + std::to_string(p.ell2) + ")N(" + std::to_string(p.m1) + "," +
                  std::to_string(p.m2) + ")";
  if (!p.symmetrized) s += "!sym";
  return s;
}

std::string to_string(const std::vector<Family>& families, ShapeKind shape) {
  std::string out;
  for (std::size_t i = 0; i < families.size(); ++i) {
    if (i) out += ",";
    out += to_string(families[i], shape);
  }
  return out;
}

}  // namespace symqaoa
