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

#ifndef OVERLAP_FORGE_SOLVE_H
#define OVERLAP_FORGE_SOLVE_H

// Regime detection and a single entry point returning the optimal mapping
// for any problem.

#include "overlap_forge/inner_product.h"
#include "overlap_forge/ortho_prep.h"
#include "overlap_forge/real_case.h"

namespace overlap_forge {

/// alpha = 0 -> orthogonal inputs; a zero target or all relative phases
/// multiples of pi -> real products; otherwise general.
Regime detect_regime(const MappingProblem& problem);

/// Requires alpha = 0. gamma antiparallel to beta is the natural case;
/// parallel gamma is accepted through a sign flip. Throws RegimeError for
/// any other relative phase.
OrthoPrepProblem to_ortho_prep(const MappingProblem& problem);

/// Rotates alpha onto the positive real axis and reads beta and gamma as
/// signed reals. Throws RegimeError when a relative phase is not a multiple
/// of pi.
RealCaseProblem to_real_case(const MappingProblem& problem);

/// Optimal solution in the detected regime. Throws InfeasibleError or
/// RegimeError when no physical mapping exists.
MappingSolution solve(const MappingProblem& problem);

/// Solution of the real-products regime at a caller-chosen p1 (p2 from the
/// '+' branch), or of the orthogonal-input regime at that p1.
MappingSolution solve_at_p1(const MappingProblem& problem, double p1);

}  // namespace overlap_forge

#endif  // OVERLAP_FORGE_SOLVE_H
