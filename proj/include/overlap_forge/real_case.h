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

#ifndef OVERLAP_FORGE_REAL_CASE_H
#define OVERLAP_FORGE_REAL_CASE_H

// Real overlaps (all relative phases multiples of pi). The unitarity
// constraint is a single real equation, so p2 is a two-valued function of
// p1 and the success probability is optimised numerically over p1.

#include "overlap_forge/inner_product.h"

namespace overlap_forge {

/// Lower end used for intervals that are open at p1 = 0.
inline constexpr double kOpenEndpoint = 1e-12;

class RealCaseProblem {
 public:
  /// Throws DomainError for values outside [-1, 1].
  RealCaseProblem(double alpha, double beta, double gamma, PriorPair priors);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  const PriorPair& priors() const { return priors_; }

 private:
  double alpha_;
  double beta_;
  double gamma_;
  PriorPair priors_;
};

struct Interval {
  double lo;
  double hi;
  bool lo_open;  // lo == 0 and excluded
};

/// Values of p1 for which p2 is real: (gamma^2 - beta^2) p1 <= gamma^2 -
/// alpha^2 intersected with (0, 1]. For |beta| <= |gamma| this is
/// (0, min{(gamma^2 - alpha^2)/(gamma^2 - beta^2), 1}]. Throws
/// InfeasibleError when empty, i.e. when both target moduli are below
/// |alpha|.
Interval feasible_interval(const RealCaseProblem& problem);

struct P2Pair {
  double plus;
  double minus;
};

/// Both solutions p2(p1) of the real unitarity constraint. Throws
/// DomainError when p1 is outside the feasible interval.
P2Pair p2_pm(const RealCaseProblem& problem, double p1);

struct RealCaseSolution {
  double p1_star;
  double p2_star;
  double p_beta;
  char branch;  // '+' or '-'
};

/// Maximises eta1 p1 + eta2 p2_plus(p1): a 10^4-point grid over the feasible
/// interval followed by golden-section refinement down to a 1e-10 bracket.
RealCaseSolution optimize(const RealCaseProblem& problem);

/// Objective used by optimize(); -inf where p2_plus exceeds 1.
double real_case_objective(const RealCaseProblem& problem, double p1);

}  // namespace overlap_forge

#endif  // OVERLAP_FORGE_REAL_CASE_H
