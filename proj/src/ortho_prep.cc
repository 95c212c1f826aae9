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

#include "overlap_forge/ortho_prep.h"

#include <cmath>
#include <string>

#include "overlap_forge/errors.h"

namespace overlap_forge {

OrthoPrepProblem::OrthoPrepProblem(double beta_mod, double gamma_mod,
                                   PriorPair priors)
    : beta_mod_(beta_mod), gamma_mod_(gamma_mod), priors_(priors) {
  auto valid = [](double m) { return m > 0.0 && m <= 1.0 + kEqualityTol; };
  if (!valid(beta_mod) || !valid(gamma_mod)) {
    throw DomainError("target moduli must lie in (0, 1] for orthogonal inputs");
  }
}

const char* ortho_regime_name(OrthoPrepRegime regime) {
  switch (regime) {
    case OrthoPrepRegime::kInteriorMax:
      return "interior-max";
    case OrthoPrepRegime::kBoundaryEta1:
      return "boundary-eta1";
    case OrthoPrepRegime::kBoundaryEta2:
      return "boundary-eta2";
    case OrthoPrepRegime::kDegenerateEqualModuli:
      return "degenerate-equal-moduli";
  }
  return "unknown";
}

double p2_of_p1(const OrthoPrepProblem& problem, double p1) {
  if (!(p1 >= 0.0 && p1 <= 1.0)) throw DomainError("p1 must lie in [0, 1]");
  const double b2 = problem.beta_mod() * problem.beta_mod();
  const double g2 = problem.gamma_mod() * problem.gamma_mod();
  return (1.0 - p1) * g2 / (p1 * b2 + (1.0 - p1) * g2);
}

double total_prob(const OrthoPrepProblem& problem, double p1) {
  return problem.priors().eta1() * p1 +
         problem.priors().eta2() * p2_of_p1(problem, p1);
}

double stationary_p1(const OrthoPrepProblem& problem) {
  const double r = problem.ratio();
  if (std::abs(r - 1.0) <= kEqualityTol) {
    throw DegenerateError("|beta| = |gamma|: the success probability is linear "
                          "in p1 and has no stationary point");
  }
  const PriorPair& pr = problem.priors();
  return (1.0 - r * std::sqrt(pr.eta2() / pr.eta1())) / (1.0 - r * r);
}

double stationary_prob(const OrthoPrepProblem& problem) {
  const double r = problem.ratio();
  const PriorPair& pr = problem.priors();
  return (1.0 - 2.0 * r * std::sqrt(pr.eta1() * pr.eta2())) / (1.0 - r * r);
}

OrthoPrepSolution optimal(const OrthoPrepProblem& problem) {
  const PriorPair& pr = problem.priors();
  const double r = problem.ratio();
  const bool equal_moduli = std::abs(r - 1.0) <= kEqualityTol;
  const double threshold = std::sqrt(pr.smaller() / pr.larger());

  OrthoPrepSolution s{};
  s.deterministic_modulus = equal_moduli;
  if (!equal_moduli && r < threshold) {
    s.p1 = stationary_p1(problem);
    s.p2 = p2_of_p1(problem, s.p1);
    s.p_beta = stationary_prob(problem);
    s.regime = OrthoPrepRegime::kInteriorMax;
  } else {
    const bool first = pr.eta1() >= pr.eta2();
    s.p1 = first ? 1.0 : 0.0;
    s.p2 = first ? 0.0 : 1.0;
    s.p_beta = pr.larger();
    s.regime = equal_moduli ? OrthoPrepRegime::kDegenerateEqualModuli
               : first      ? OrthoPrepRegime::kBoundaryEta1
                            : OrthoPrepRegime::kBoundaryEta2;
  }
  s.degenerate_posterior = (pr.eta1() > 0.0 && s.p1 == 0.0) ||
                           (pr.eta2() > 0.0 && s.p2 == 0.0);
  return s;
}

}  // namespace overlap_forge
