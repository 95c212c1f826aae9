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

#ifndef OVERLAP_FORGE_APPLICATIONS_H
#define OVERLAP_FORGE_APPLICATIONS_H

// Cloning and deleting expressed as target-overlap choices.

#include <optional>

#include "overlap_forge/inner_product.h"

namespace overlap_forge {

struct CloningSpec {
  InnerProduct alpha;
  int m = 1;  // extra copies
};

struct CloningProblem {
  MappingProblem problem;
  Regime regime;
  /// m theta_alpha is a multiple of pi, so beta is parallel to alpha and
  /// the failure branch is taken parallel as well (real-products regime)
  /// instead of at +-i e^{i(m+1) theta_alpha}.
  bool phase_collision;
};

/// 1 -> m+1 cloning: beta = alpha^{m+1}, |gamma| = 1 with
/// gamma = i e^{i(m+1) theta_alpha} (or parallel to beta on a phase
/// collision). Throws DomainError for m < 1 or |alpha| = 1.
CloningProblem cloning_problem(const CloningSpec& spec,
                               const PriorPair& priors = PriorPair::equal());

/// Optimal success probability of the cloning map. Throws InfeasibleError
/// like solve().
double cloning_probability(const CloningSpec& spec,
                           const PriorPair& priors = PriorPair::equal());

enum class DeletingRegime { kGeneral, kReal };

struct DeletingReport {
  bool feasible = false;
  bool trivial = false;  // |alpha| = 1: inputs already identical
  /// P_beta + P_gamma where both branches carry unit-modulus overlaps.
  double total_probability = 0.0;
  double theta_beta = 0.0;
  double theta_gamma = 0.0;
  std::optional<MappingSolution> witness;
};

/// Whether |beta| = |gamma| = 1 targets are reachable, with witnessing
/// branch probabilities and target phases. The general regime scans target
/// phases on a 360 x 360 grid and reports the feasible point with the
/// largest success probability.
DeletingReport deleting_check(const InnerProduct& alpha, DeletingRegime regime,
                              const PriorPair& priors = PriorPair::equal());

}  // namespace overlap_forge

#endif  // OVERLAP_FORGE_APPLICATIONS_H
