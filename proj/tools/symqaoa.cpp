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

#include <fstream>
#include <iostream>
#include <numbers>

#include "CLI11.hpp"
#include "symqaoa/bench.hpp"

namespace {

using namespace symqaoa;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::vector<int> to_int_list(const std::vector<std::uint64_t>& values) {
  std::vector<int> out;
  for (const auto v : values) {
    if (v > 1'000'000) throw ConfigError("n too large");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planted symmetric Max-CSP instances, 1-step QAOA success probabilities and classical baselines"};
  app.require_subcommand(1);

  std::string shape = "sn", format = "csv", output;

  // generate
  auto* gen = app.add_subcommand("generate", "Write a planted WCNF instance and its metadata sidecar");
  GenerateConfig gcfg;
  std::string gen_format = "legacy", gen_out = "instance", gen_s;
  bool no_shuffle = false;
  gen->add_option("--family", gcfg.family, "Family list, e.g. 1N1,3N1 or (3,2)N(1,0),5N1")->required();
  gen->add_option("--n", gcfg.n, "Number of variables")->required();
  gen->add_option("--shape", shape, "sn or product")->capture_default_str();
  gen->add_option("--f", gcfg.f, "Keep probability of each unit clause")->capture_default_str();
  gen->add_option("--seed", gcfg.seed, "RNG seed")->capture_default_str();
  gen->add_option("--s", gen_s, "Hidden string as 0/1 text (default: drawn from the seed)");
  gen->add_option("--format", gen_format, "legacy, wcnf22 or cnf")->capture_default_str();
  gen->add_flag("--no-shuffle", no_shuffle, "Keep the generator's variable order");
  gen->add_option("--out", gen_out, "Output prefix; writes <prefix>.wcnf and <prefix>.meta.json")->capture_default_str();

  // qaoa
  auto* qaoa = app.add_subcommand("qaoa", "1-step QAOA success probabilities over an (n, gamma, seed) sweep");
  ExperimentConfig qcfg;
  std::string n_list = "12", seeds = "0", gamma = "auto", method = "sector", convention = "paper_sector";
  qaoa->add_option("--family", qcfg.family, "Family list")->capture_default_str();
  qaoa->add_option("--shape", shape, "sn or product")->capture_default_str();
  qaoa->add_option("--n", n_list, "Strictly increasing list, e.g. 256,512,1024")->capture_default_str();
  qaoa->add_option("--f", qcfg.f, "Sparsification keep probability")->capture_default_str();
  qaoa->add_option("--seeds", seeds, "Seeds, e.g. 0 or 1-50")->capture_default_str();
  qaoa->add_option("--gamma", gamma, "auto, a comma list, or grid(start, stop, points)")->capture_default_str();
  qaoa->add_option("--method", method, "sector, brute or mc")->capture_default_str();
  qaoa->add_option("--convention", convention, "paper_sector or statevector")->capture_default_str();
  qaoa->add_option("--beta", qcfg.beta, "Mixer angle (brute only; others fix -pi/4)");
  qaoa->add_option("--samples", qcfg.mc_samples, "Monte-Carlo samples")->capture_default_str();
  qaoa->add_option("--format", format, "csv or json")->capture_default_str();
  qaoa->add_option("--out", output, "Output file (default stdout)");

  // classical
  auto* cls = app.add_subcommand("classical", "Classical baselines: hill, anneal, walksat, learn");
  ClassicalConfig ccfg;
  std::string algo = "hill", table = "family", policy = "steepest", cseeds = "0";
  std::optional<int> start_weight;
  std::optional<double> T0, Tf;
  std::optional<int> sweeps;
  std::string decay = "geometric";
  cls->add_option("--algo", algo, "hill, anneal, walksat or learn")->capture_default_str();
  cls->add_option("--table", table, "family, trap (c(0)=0, c(k)=n-k+1) or linear (c(k)=k)")->capture_default_str();
  cls->add_option("--family", ccfg.family, "Family list for --table family")->capture_default_str();
  cls->add_option("--n", ccfg.n, "Number of variables")->capture_default_str();
  cls->add_option("--f", ccfg.f, "Keep probability (walksat)")->capture_default_str();
  cls->add_option("--seeds", cseeds, "Seeds, one run each")->capture_default_str();
  cls->add_option("--policy", policy, "steepest, first or random")->capture_default_str();
  cls->add_option("--start-weight", start_weight, "Hill climbing starts at this distance from s");
  cls->add_option("--T0", T0, "Initial temperature (default n^2)");
  cls->add_option("--Tf", Tf, "Final temperature (default 0.1)");
  cls->add_option("--sweeps", sweeps, "Annealing sweeps (default 10000)");
  cls->add_option("--decay", decay, "geometric or linear")->capture_default_str();
  cls->add_option("--noise", ccfg.noise, "WalkSAT noise")->capture_default_str();
  cls->add_option("--max-flips", ccfg.max_flips, "WalkSAT flip budget")->capture_default_str();
  cls->add_option("--format", format, "csv or json")->capture_default_str();
  cls->add_option("--out", output, "Output file (default stdout)");

  // verify
  auto* ver = app.add_subcommand("verify", "Cross-module invariant suite; exit code 1 on any failure");
  VerifyConfig vcfg;
  ver->add_option("--invariant", vcfg.invariants, "sector_vs_brute, sparsify_bound, planting, distinct_values (default all)");
  ver->add_option("--n-max", vcfg.distinct_n_max, "Largest n of the distinct_values scan")->capture_default_str();
  ver->add_flag("--inject-corruption", vcfg.inject_corruption, "Negative control: collide c(1) with c(2)");
  ver->add_option("--seed", vcfg.seed, "RNG seed")->capture_default_str();
  ver->add_option("--format", format, "csv or json")->capture_default_str();
  ver->add_option("--out", output, "Output file (default stdout)");

  // saddle
  auto* sad = app.add_subcommand("saddle", "Saddle-optimal Gamma and asymptotic success probability as JSON");
  std::optional<int> ell, a;
  std::string sad_family;
  int sad_n = 0;
  sad->add_option("--ell", ell, "S_n locality l");
  sad->add_option("--a", a, "S_n exponent a");
  sad->add_option("--family", sad_family, "Family list instead of (l, a)");
  sad->add_option("--shape", shape, "sn or product")->capture_default_str();
  sad->add_option("--n", sad_n, "Size used to report gamma (0: omit)")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      gcfg.shape = parse_shape_kind(shape);
      gcfg.format = parse_wcnf_format(gen_format);
      gcfg.shuffle = !no_shuffle;
      if (!gen_s.empty()) gcfg.s = bits_from_string(gen_s);
      const auto files = cmd_generate(gcfg);
      write_output(gen_out + ".wcnf", files.wcnf);
      write_output(gen_out + ".meta.json", files.sidecar);
      std::cerr << files.instance.clauses.size() << " clauses, total weight " << files.instance.total_weight()
                << (files.instance.meta.empty ? " (empty after sparsification)" : "") << '\n';
      return 0;
    }
    if (*qaoa) {
      qcfg.shape = parse_shape_kind(shape);
      qcfg.n_list = to_int_list(parse_uint_list(n_list));
      qcfg.seeds = parse_uint_list(seeds);
      qcfg.gamma = GammaSpec::parse(gamma);
      qcfg.method = parse_method(method);
      if (convention == "paper_sector") qcfg.convention = Convention::paper_sector;
      else if (convention == "statevector") qcfg.convention = Convention::statevector;
      else throw ConfigError("unknown convention '" + convention + "'");
      write_output(output, cmd_qaoa(qcfg).render(parse_output_format(format)));
      return 0;
    }
    if (*cls) {
      ccfg.algo = parse_classical_algo(algo);
      ccfg.table = parse_table_kind(table);
      ccfg.policy = parse_climb_policy(policy);
      ccfg.seeds = parse_uint_list(cseeds);
      ccfg.start_weight = start_weight;
      if (T0 || Tf || sweeps || decay != "geometric") {
        AnnealSchedule s = AnnealSchedule::defaults(ccfg.n);
        if (T0) s.T0 = *T0;
        if (Tf) s.Tf = *Tf;
        if (sweeps) s.steps = *sweeps;
        if (decay == "linear") s.decay = Decay::linear;
        else if (decay != "geometric") throw ConfigError("unknown decay '" + decay + "'");
        s.validate();
        ccfg.schedule = s;
      }
      write_output(output, cmd_classical(ccfg).render(parse_output_format(format)));
      return 0;
    }
    if (*ver) {
      const auto report = cmd_verify(vcfg);
      write_output(output, report.table().render(parse_output_format(format)));
      return report.all_pass() ? 0 : 1;
    }
    if (*sad) {
      SaddleReport report;
      if (!sad_family.empty()) {
        const auto kind = parse_shape_kind(shape);
        const auto families = parse_families(sad_family, kind);
        const int n = sad_n > 0 ? sad_n : 1000;
        const Shape sh = shape_for(kind, n);
        if (kind == ShapeKind::product) {
          const double alpha1 = static_cast<double>(sh.n1) / n;
          report = limit_prob_prod(to_monomials(families, alpha1, 1.0 - alpha1), sad_n);
        } else {
          const auto g = auto_gamma(families, sh);
          report = saddle_sn(g.ell, g.a, sad_n, 1.0);
          report.Gamma = g.Gamma;
          report.gamma = sad_n > 0 ? g.gamma : 0.0;
        }
      } else {
        if (!ell || !a) throw ConfigError("pass --ell and --a, or --family");
        report = saddle_sn(*ell, *a, sad_n);
      }
      std::cout << to_json(report).dump(2) << '\n';
      return report.limit_prob ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
