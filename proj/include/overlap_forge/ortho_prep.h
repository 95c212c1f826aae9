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

#ifndef OVERLAP_FORGE_ORTHO_PREP_H
#define OVERLAP_FORGE_ORTHO_PREP_H

// Preparation of non-orthogonal pairs from an orthonormal input pair
// (alpha = 0). Only the target moduli matter here; the unitarity
// constraint collapses to sqrt(p1 p2)|beta| = sqrt((1-p1)(1-p2))|gamma|.

#include "overlap_forge/inner_product.h"

namespace overlap_forge {

class OrthoPrepProblem {
 public:
  /// Throws DomainError unless both moduli lie in (0, 1].
  OrthoPrepProblem(double beta_mod, double gamma_mod, PriorPair priors);

  double beta_mod() const { return beta_mod_; }
  double gamma_mod() const { return gamma_mod_; }
  const PriorPair& priors() const { return priors_; }
  double ratio() const { return beta_mod_ / gamma_mod_; }

 private:
  double beta_mod_;
  double gamma_mod_;
  PriorPair priors_;
};

enum class OrthoPrepRegime {
  kInteriorMax,
  kBoundaryEta1,  // p1 = 1
  kBoundaryEta2,  // p1 = 0
  kDegenerateEqualModuli,
};

const char* ortho_regime_name(OrthoPrepRegime regime);

struct OrthoPrepSolution {
  double p1;
  double p2;
  double p_beta;
  OrthoPrepRegime regime;
  /// p1 = 0 or p2 = 0 with a non-zero prior: one target never appears on
  /// success.
  bool degenerate_posterior;
  /// |beta| = |gamma|: every outcome yields the requested modulus.
  bool deterministic_modulus;
};

double p2_of_p1(const OrthoPrepProblem& problem, double p1);

/// eta1 p1 + eta2 p2(p1)
double total_prob(const OrthoPrepProblem& problem, double p1);

/// Stationary point of total_prob; may fall outside [0, 1]. Throws
/// DegenerateError when |beta| = |gamma| (the objective is linear).
double stationary_p1(const OrthoPrepProblem& problem);

/// (1 - 2 r sqrt(eta1 eta2)) / (1 - r^2), the value at the stationary point.
double stationary_prob(const OrthoPrepProblem& problem);

/// Global maximum over p1 in [0, 1]. With r = |beta|/|gamma|, the
/// stationary point is the maximum for r < sqrt(eta_min/eta_max); otherwise
/// the maximum eta_max sits at a boundary (p1 = 1 on ties).
OrthoPrepSolution optimal(const OrthoPrepProblem& problem);

}  // namespace overlap_forge

#endif  // OVERLAP_FORGE_ORTHO_PREP_H
