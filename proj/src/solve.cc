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

#include "overlap_forge/solve.h"

#include <cmath>

#include "overlap_forge/errors.h"

namespace overlap_forge {

namespace {

bool is_zero(const InnerProduct& z) { return z.modulus() <= kEqualityTol; }

// Signed real value of `z` relative to the phase of alpha.
double relative_real(const InnerProduct& z, double reference_phase) {
  if (is_zero(z)) return 0.0;
  const double d = z.phase() - reference_phase;
  if (!near_multiple(d, kPi)) {
    throw RegimeError("relative phase is not a multiple of pi");
  }
  return std::cos(d) > 0.0 ? z.modulus() : -z.modulus();
}

MappingSolution finish(const MappingProblem& problem, double p1, double p2,
                       Regime regime) {
  const SignFlips flips = absorb_signs(problem, p1, p2);
  MappingSolution s = assemble_solution(problem, p1, p2, flips,
                                        Assignment::kNotApplicable, regime);
  if (s.residual > kResidualTol) {
    throw InconsistentSolutionError(
        "branch probabilities do not satisfy the unitarity constraint");
  }
  return s;
}

}  // namespace

Regime detect_regime(const MappingProblem& problem) {
  if (is_zero(problem.alpha)) return Regime::kOrthogonalInputs;
  const double ta = problem.alpha.phase();
  const bool beta_real =
      is_zero(problem.beta) || near_multiple(problem.beta.phase() - ta, kPi);
  const bool gamma_real =
      is_zero(problem.gamma) || near_multiple(problem.gamma.phase() - ta, kPi);
  if (beta_real && gamma_real) return Regime::kRealProducts;
  return Regime::kGeneral;
}

OrthoPrepProblem to_ortho_prep(const MappingProblem& problem) {
  if (!is_zero(problem.alpha)) {
    throw RegimeError("orthogonal-input regime requires alpha = 0");
  }
  if (!near_multiple(problem.gamma.phase() - problem.beta.phase(), kPi)) {
    throw RegimeError(
        "with alpha = 0, gamma must be (anti)parallel to beta: theta_gamma - "
        "theta_beta = +-pi");
  }
  return OrthoPrepProblem(problem.beta.modulus(), problem.gamma.modulus(),
                          problem.priors);
}

RealCaseProblem to_real_case(const MappingProblem& problem) {
  const double ta = problem.alpha.phase();
  return RealCaseProblem(problem.alpha.modulus(),
                         relative_real(problem.beta, ta),
                         relative_real(problem.gamma, ta), problem.priors);
}

MappingSolution solve(const MappingProblem& problem) {
  switch (detect_regime(problem)) {
    case Regime::kGeneral:
      return solve_general(problem).best;
    case Regime::kOrthogonalInputs: {
      const OrthoPrepSolution o = optimal(to_ortho_prep(problem));
      return finish(problem, o.p1, o.p2, Regime::kOrthogonalInputs);
    }
    case Regime::kRealProducts: {
      const RealCaseSolution r = optimize(to_real_case(problem));
      return finish(problem, r.p1_star, r.p2_star, Regime::kRealProducts);
    }
  }
  throw RegimeError("unknown regime");
}

MappingSolution solve_at_p1(const MappingProblem& problem, double p1) {
  switch (detect_regime(problem)) {
    case Regime::kGeneral:
      throw RegimeError(
          "p1 is fixed by the overlaps in the general regime and cannot be "
          "chosen");
    case Regime::kOrthogonalInputs: {
      const OrthoPrepProblem o = to_ortho_prep(problem);
      return finish(problem, p1, p2_of_p1(o, p1), Regime::kOrthogonalInputs);
    }
    case Regime::kRealProducts: {
      const RealCaseProblem r = to_real_case(problem);
      const double p2 = p2_pm(r, p1).plus;
      if (p2 > 1.0 + kEqualityTol) {
        throw InfeasibleError("p2 exceeds 1 at this p1", p2 - 1.0);
      }
      return finish(problem, p1, std::min(p2, 1.0), Regime::kRealProducts);
    }
  }
  throw RegimeError("unknown regime");
}

}  // namespace overlap_forge
