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

#ifndef OVERLAP_FORGE_SYNTHESIS_H
#define OVERLAP_FORGE_SYNTHESIS_H

// Explicit system (x) ancilla unitary realising a solved mapping. The
// ancilla starts in |0>, outcome 0 heralds the beta targets.

#include <array>
#include <optional>

#include "overlap_forge/hilbert.h"
#include "overlap_forge/inner_product.h"

namespace overlap_forge {

/// Canonical pair with <s1|s2> = overlap: s1 = e0, s2 = overlap e0 +
/// sqrt(1 - |overlap|^2) e1.
struct EmbeddedPair {
  Qubit s1;
  Qubit s2;
  InnerProduct target_overlap;
};

EmbeddedPair embed_pair(const InnerProduct& overlap);

struct SynthesisResult {
  JointOperator unitary;
  std::array<JointState, 2> inputs;         // |alpha_i>|0>
  std::array<JointState, 2> branch_images;  // expected U |alpha_i>|0>
};

/// Builds U by completing the input frame {v1, v2} and the output frame
/// {w1, w2} to orthonormal bases with the same Gram-Schmidt sweep and
/// mapping one onto the other. Throws InconsistentSolutionError when the
/// solution fails the unitarity constraint or the frames' Gram data differ
/// by more than kResidualTol.
SynthesisResult synthesize(const MappingProblem& problem,
                           const MappingSolution& solution);

/// Branches with probability below this carry no well-defined conditional
/// state.
inline constexpr double kPopulatedBranch = 1e-10;

struct ActionReport {
  double unitarity_defect;
  double input_overlap_residual;  // |<v_1|v_2> - alpha|
  double action_residual;  // max |U v_i - w_i| componentwise
  std::array<std::array<double, 2>, 2> branch_probability;  // [input][outcome]
  double branch_probability_residual;
  /// |<b1|b2> - beta_eff| over normalised conditional states; empty when a
  /// branch is unpopulated.
  std::optional<double> beta_overlap_residual;
  std::optional<double> gamma_overlap_residual;
  bool passed;
};

/// Recomputes branch probabilities and conditional overlaps from U alone.
ActionReport verify_action(const SynthesisResult& result,
                           const MappingProblem& problem,
                           const MappingSolution& solution);

}  // namespace overlap_forge

#endif  // OVERLAP_FORGE_SYNTHESIS_H
