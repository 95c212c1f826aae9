// Copyright 2026 The overlap-forge Authors
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

#include "overlap_forge/cli.h"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "overlap_forge/applications.h"
#include "overlap_forge/errors.h"
#include "overlap_forge/protocol_sim.h"
#include "overlap_forge/solve.h"
#include "overlap_forge/sweep.h"
#include "overlap_forge/synthesis.h"

namespace overlap_forge {

namespace {

struct ProblemArgs {
  double alpha_mod = 0.0;
  double beta_mod = 0.0;
  double gamma_mod = 0.0;
  std::string alpha_phase = "0";
  std::string beta_phase = "0";
  std::string gamma_phase = "0";
  double eta1 = 0.5;
  std::optional<double> p1;
};

void add_problem_options(CLI::App* cmd, ProblemArgs& a) {
  cmd->add_option("--alpha-mod", a.alpha_mod, "|alpha|, input overlap modulus")
      ->required();
  cmd->add_option("--alpha-phase", a.alpha_phase,
                  "phase of alpha (radians, or e.g. 0.6pi)");
  cmd->add_option("--beta-mod", a.beta_mod, "|beta|, success-branch overlap")
      ->required();
  cmd->add_option("--beta-phase", a.beta_phase, "phase of beta");
  cmd->add_option("--gamma-mod", a.gamma_mod, "|gamma|, failure-branch overlap")
      ->required();
  cmd->add_option("--gamma-phase", a.gamma_phase, "phase of gamma");
  cmd->add_option("--eta1", a.eta1, "prior of the first input state");
  cmd->add_option("--p1", a.p1,
                  "fix p1 instead of optimising (orthogonal-input and "
                  "real-product regimes)");
}

MappingProblem build_problem(const ProblemArgs& a) {
  return MappingProblem{InnerProduct(a.alpha_mod, parse_phase(a.alpha_phase)),
                        InnerProduct(a.beta_mod, parse_phase(a.beta_phase)),
                        InnerProduct(a.gamma_mod, parse_phase(a.gamma_phase)),
                        PriorPair::from_eta1(a.eta1)};
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_overlap(std::ostream& out, const char* name, const InnerProduct& z) {
  out << name << ": " << format_number(z.modulus()) << " exp(i "
      << format_number(z.phase() / kPi) << " pi)\n";
}

void print_problem(std::ostream& out, const MappingProblem& p) {
  print_overlap(out, "alpha", p.alpha);
  print_overlap(out, "beta", p.beta);
  print_overlap(out, "gamma", p.gamma);
  out << "priors: " << format_number(p.priors.eta1()) << ", "
      << format_number(p.priors.eta2()) << '\n';
  out << "regime: " << regime_name(detect_regime(p)) << '\n';
  out << "ordering: " << ordering_name(check_modulus_ordering(p)) << '\n';
}

void print_solution(std::ostream& out, const MappingProblem& p,
                    const MappingSolution& s) {
  out << "feasible: yes\n";
  if (s.regime == Regime::kGeneral) {
    const XYCoefficients xy = xy_coefficients(p);
    out << "x: " << format_number(xy.x) << '\n';
    out << "y: " << format_number(xy.y) << '\n';
    out << "assignment: "
        << (s.assignment == Assignment::kPlusMinus ? "p+,p-" : "p-,p+")
        << '\n';
  }
  out << "p1: " << format_number(s.p1) << '\n';
  out << "p2: " << format_number(s.p2) << '\n';
  out << "p_beta: " << format_number(s.p_beta) << '\n';
  out << "p_gamma: " << format_number(s.p_gamma) << '\n';
  if (s.posterior) {
    out << "posterior: " << format_number(s.posterior->eta1()) << ", "
        << format_number(s.posterior->eta2()) << '\n';
  } else {
    out << "posterior: undefined\n";
  }
  out << "degenerate_posterior: " << yes_no(s.degenerate_posterior) << '\n';
  out << "sign_flips: beta=" << yes_no(s.sign_flips.beta)
      << " gamma=" << yes_no(s.sign_flips.gamma) << '\n';
  print_overlap(out, "beta_effective", s.beta_effective);
  print_overlap(out, "gamma_effective", s.gamma_effective);
  out << "residual: " << format_number(s.residual) << '\n';
}

MappingSolution solve_args(const MappingProblem& p, const ProblemArgs& a) {
  return a.p1 ? solve_at_p1(p, *a.p1) : solve(p);
}

int report_infeasible(std::ostream& out, const Error& e) {
  out << "feasible: no\n";
  out << "diagnostic: " << e.what() << '\n';
  return kExitInfeasible;
}

int cmd_solve(const ProblemArgs& a, std::ostream& out) {
  const MappingProblem p = build_problem(a);
  print_problem(out, p);
  try {
    print_solution(out, p, solve_args(p, a));
  } catch (const InfeasibleError& e) {
    return report_infeasible(out, e);
  } catch (const RegimeError& e) {
    return report_infeasible(out, e);
  }
  return kExitOk;
}

int cmd_simulate(const ProblemArgs& a, std::uint64_t shots,
                 std::optional<std::uint64_t> seed_flag,
                 const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
  std::uint64_t seed = 0;
  if (seed_flag) {
    seed = *seed_flag;
  } else if (const char* env = std::getenv("OVERLAP_FORGE_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "OVERLAP_FORGE_SEED is not an unsigned integer\n";
      return kExitUsage;
    }
  }
  if (shots == 0) {
    err << "--shots must be at least 1\n";
    return kExitUsage;
  }

  const MappingProblem p = build_problem(a);
  print_problem(out, p);
  MappingSolution s;
  try {
    s = solve_args(p, a);
  } catch (const InfeasibleError& e) {
    return report_infeasible(out, e);
  } catch (const RegimeError& e) {
    return report_infeasible(out, e);
  }
  print_solution(out, p, s);

  const SynthesisResult syn = synthesize(p, s);
  const ActionReport action = verify_action(syn, p, s);
  out << "unitarity_defect: " << format_number(action.unitarity_defect) << '\n';
  out << "action_residual: " << format_number(action.action_residual) << '\n';
  if (!action.passed) {
    err << "exact-algebra check failed for the synthesized unitary\n";
    return kExitCheckFailed;
  }

  const SimulationReport rep = run({p, s, syn, shots, seed});
  out << "shots: " << rep.shots << '\n';
  out << "seed: " << rep.seed << '\n';
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t o = 0; o < 2; ++o) {
      out << "count[input=" << i + 1 << ",outcome=" << o
          << "]: " << rep.counts[i][o] << '\n';
    }
  }
  out << "empirical_p_beta: " << format_number(rep.empirical_p_beta) << '\n';
  out << "exact_p_beta: " << format_number(rep.exact_p_beta) << '\n';
  out << "p_beta_sigma: "
      << format_number(p_beta_sigma(rep.exact_p_beta, rep.shots)) << '\n';
  if (rep.empirical_posterior) {
    out << "empirical_posterior: "
        << format_number(rep.empirical_posterior->eta1()) << ", "
        << format_number(rep.empirical_posterior->eta2()) << '\n';
  } else {
    out << "empirical_posterior: undefined\n";
  }
  if (rep.beta_overlap_residual) {
    out << "beta_overlap_residual: "
        << format_number(*rep.beta_overlap_residual) << '\n';
  }
  if (rep.gamma_overlap_residual) {
    out << "gamma_overlap_residual: "
        << format_number(*rep.gamma_overlap_residual) << '\n';
  }

  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "cannot write " << out_path << '\n';
      return kExitIo;
    }
    f << "input,outcome,count\n";
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t o = 0; o < 2; ++o) {
        f << i + 1 << ',' << o << ',' << rep.counts[i][o] << '\n';
      }
    }
    if (!f) return kExitIo;
  }
  return kExitOk;
}

int cmd_sweep(const SweepSpec& spec, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  const CsvTable table = run_sweep(spec);
  if (out_path.empty()) {
    write_csv(table, out);
    return kExitOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    err << "cannot write " << out_path << '\n';
    return kExitIo;
  }
  write_csv(table, f);
  f.flush();
  if (!f) {
    err << "write to " << out_path << " failed\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace

double parse_phase(const std::string& text) {
  std::string t = text;
  double scale = 1.0;
  if (t.size() >= 2 && t.compare(t.size() - 2, 2, "pi") == 0) {
    t.erase(t.size() - 2);
    scale = kPi;
    if (t.empty() || t == "+") return kPi;
    if (t == "-") return -kPi;
    if (t.back() == '*') t.pop_back();
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw DomainError("malformed phase '" + text + "'");
  }
  if (used != t.size()) throw DomainError("malformed phase '" + text + "'");
  return v * scale;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Conclusive two-state overlap mapping: solve, sweep, simulate"};
  app.name("overlap-forge");
  app.require_subcommand(1);

  ProblemArgs solve_problem;
  auto* solve_cmd = app.add_subcommand("solve", "optimal mapping for one problem");
  add_problem_options(solve_cmd, solve_problem);

  ProblemArgs sim_args;
  std::uint64_t shots = 100000;
  std::optional<std::uint64_t> seed;
  std::string sim_out;
  auto* sim_cmd =
      app.add_subcommand("simulate", "solve, synthesize U and sample shots");
  add_problem_options(sim_cmd, sim_args);
  sim_cmd->add_option("--shots", shots, "number of shots");
  sim_cmd->add_option("--seed", seed,
                      "RNG seed (falls back to OVERLAP_FORGE_SEED, then 0)");
  sim_cmd->add_option("--out", sim_out, "optional CSV of outcome counts");

  std::string figure;
  int resolution = 400;
  std::optional<double> sweep_alpha;
  std::optional<double> sweep_eta1;
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "figure data as CSV");
  sweep_cmd->add_option("--figure", figure, "fig1a|fig1b|fig2|fig3a|fig3b|fig4")
      ->required();
  sweep_cmd->add_option("--resolution", resolution, "grid points per curve");
  sweep_cmd->add_option("--alpha-mod", sweep_alpha,
                        "single |alpha| instead of the figure's list");
  sweep_cmd->add_option("--eta1", sweep_eta1,
                        "single eta1 instead of the figure's list");
  sweep_cmd->add_option("--out", sweep_out, "output CSV path (default stdout)");

  double usd_alpha = 0.0;
  double usd_eta1 = 0.5;
  auto* usd_cmd =
      app.add_subcommand("usd", "unambiguous discrimination success probability");
  usd_cmd->add_option("--alpha-mod", usd_alpha)->required();
  usd_cmd->add_option("--eta1", usd_eta1);

  double bound_alpha = 0.0;
  std::string bound_alpha_phase = "0";
  std::string bound_beta_phase = "0";
  auto* bound_cmd = app.add_subcommand(
      "bound", "minimum |beta| for gamma = +-i e^{i theta_beta}, |gamma| = 1");
  bound_cmd->add_option("--alpha-mod", bound_alpha)->required();
  bound_cmd->add_option("--alpha-phase", bound_alpha_phase);
  bound_cmd->add_option("--beta-phase", bound_beta_phase)->required();

  double clone_alpha = 0.0;
  std::string clone_phase = "0";
  int clone_m = 1;
  double clone_eta1 = 0.5;
  auto* clone_cmd =
      app.add_subcommand("clone", "probabilistic 1 -> m+1 cloning");
  clone_cmd->add_option("--alpha-mod", clone_alpha)->required();
  clone_cmd->add_option("--alpha-phase", clone_phase);
  clone_cmd->add_option("--m", clone_m, "extra copies (>= 1)");
  clone_cmd->add_option("--eta1", clone_eta1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_problem, out);
    if (*sim_cmd) {
      return cmd_simulate(sim_args, shots, seed, sim_out, out, err);
    }
    if (*sweep_cmd) {
      SweepSpec spec;
      spec.figure = parse_figure(figure);
      spec.resolution = resolution;
      spec.alpha_mod = sweep_alpha;
      spec.eta1 = sweep_eta1;
      if (spec.resolution < 2) throw DomainError("resolution must be >= 2");
      return cmd_sweep(spec, sweep_out, out, err);
    }
    if (*usd_cmd) {
      const UsdProbability u = usd_probability(
          InnerProduct(usd_alpha, 0.0), PriorPair::from_eta1(usd_eta1));
      out << "p_usd: " << format_number(u.value) << '\n';
      out << "valid: " << yes_no(u.valid) << '\n';
      return kExitOk;
    }
    if (*bound_cmd) {
      const InnerProduct alpha(bound_alpha, parse_phase(bound_alpha_phase));
      const double tb = parse_phase(bound_beta_phase);
      try {
        const BetaMinPoint m = p_at_beta_min(alpha, tb);
        out << "beta_min: " << format_number(m.beta_min) << '\n';
        out << "physical: " << yes_no(m.physical) << '\n';
        out << "p_at_beta_min: " << format_number(m.probability) << '\n';
        out << "p_usd: "
            << format_number(usd_probability(alpha, PriorPair::equal()).value)
            << '\n';
      } catch (const DomainError& e) {
        out << "beta_min: undefined\n" << "diagnostic: " << e.what() << '\n';
        return kExitInfeasible;
      }
      return kExitOk;
    }
    if (*clone_cmd) {
      const CloningSpec spec{InnerProduct(clone_alpha, parse_phase(clone_phase)),
                             clone_m};
      const CloningProblem c =
          cloning_problem(spec, PriorPair::from_eta1(clone_eta1));
      print_problem(out, c.problem);
      out << "phase_collision: " << yes_no(c.phase_collision) << '\n';
      try {
        print_solution(out, c.problem, solve(c.problem));
      } catch (const InfeasibleError& e) {
        return report_infeasible(out, e);
      } catch (const RegimeError& e) {
        return report_infeasible(out, e);
      }
      return kExitOk;
    }
  } catch (const InconsistentSolutionError& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace overlap_forge
