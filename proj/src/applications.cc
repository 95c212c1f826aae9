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

#include "overlap_forge/applications.h"

#include <cmath>

#include "overlap_forge/errors.h"
#include "overlap_forge/solve.h"

namespace overlap_forge {

CloningProblem cloning_problem(const CloningSpec& spec,
                               const PriorPair& priors) {
  if (spec.m < 1) throw DomainError("cloning needs at least one extra copy");
  const double a = spec.alpha.modulus();
  if (a >= 1.0 - kEqualityTol) {
    throw DomainError("identical states cannot be cloned informatively");
  }
  const double copies = static_cast<double>(spec.m + 1);
  const double theta = spec.alpha.phase();
  const InnerProduct beta(std::pow(a, copies), copies * theta);
  const bool collision = near_multiple(spec.m * theta, kPi);

  CloningProblem c{MappingProblem{spec.alpha, beta, InnerProduct(), priors},
                   Regime::kGeneral, collision};
  if (collision) {
    c.problem.gamma = InnerProduct(1.0, copies * theta);
  } else {
    c.problem.gamma = InnerProduct(1.0, copies * theta + 0.5 * kPi);
  }
  c.regime = detect_regime(c.problem);
  return c;
}

double cloning_probability(const CloningSpec& spec, const PriorPair& priors) {
  return solve(cloning_problem(spec, priors).problem).p_beta;
}

DeletingReport deleting_check(const InnerProduct& alpha, DeletingRegime regime,
                              const PriorPair& priors) {
  DeletingReport rep;
  const double a = alpha.modulus();
  const double ta = alpha.phase();

  if (a >= 1.0 - kEqualityTol) {
    MappingProblem p{alpha, alpha, alpha, priors};
    rep.feasible = true;
    rep.trivial = true;
    rep.total_probability = 1.0;
    rep.theta_beta = rep.theta_gamma = ta;
    rep.witness = assemble_solution(p, 1.0, 1.0, SignFlips{},
                                    Assignment::kNotApplicable,
                                    Regime::kRealProducts);
    return rep;
  }

  if (a <= kEqualityTol) {
    MappingProblem p{InnerProduct(), InnerProduct(1.0, 0.0),
                     InnerProduct(1.0, kPi), priors};
    rep.witness = solve(p);
    rep.feasible = true;
    rep.total_probability = rep.witness->p_beta + rep.witness->p_gamma;
    rep.theta_beta = 0.0;
    rep.theta_gamma = kPi;
    return rep;
  }

  if (regime == DeletingRegime::kReal) {
    MappingProblem p{alpha, InnerProduct(1.0, ta), InnerProduct(1.0, ta),
                     priors};
    try {
      rep.witness = solve(p);
    } catch (const InfeasibleError&) {
      return rep;
    }
    rep.feasible = true;
    rep.total_probability = rep.witness->p_beta + rep.witness->p_gamma;
    rep.theta_beta = rep.theta_gamma = ta;
    return rep;
  }

  constexpr int kSteps = 360;
  for (int i = 0; i < kSteps; ++i) {
    for (int j = 0; j < kSteps; ++j) {
      const double tb = ta + 2.0 * kPi * (i + 0.5) / kSteps;
      const double tg = ta + 2.0 * kPi * (j + 0.5) / kSteps;
      MappingProblem p{alpha, InnerProduct(1.0, tb), InnerProduct(1.0, tg),
                       priors};
      if (!is_feasible_general(p)) continue;
      const MappingSolution s = solve_general(p).best;
      if (!rep.witness || s.p_beta > rep.witness->p_beta) {
        rep.witness = s;
        rep.theta_beta = p.beta.phase();
        rep.theta_gamma = p.gamma.phase();
      }
    }
  }
  if (rep.witness) {
    rep.feasible = true;
    rep.total_probability = rep.witness->p_beta + rep.witness->p_gamma;
  }
  return rep;
}

}  // namespace overlap_forge
