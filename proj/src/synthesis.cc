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

#include "overlap_forge/synthesis.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "overlap_forge/errors.h"

namespace overlap_forge {

namespace {

double max_component_diff(const JointState& a, const JointState& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    const Complex d = a[k] - b[k];
    worst = std::max({worst, std::abs(d.real()), std::abs(d.imag())});
  }
  return worst;
}

// Overlap of the normalised conditional system states of both inputs for
// one ancilla outcome, or nothing if either branch is (nearly) empty.
std::optional<Complex> conditional_overlap(const JointState& out1,
                                           const JointState& out2,
                                           int outcome) {
  const Qubit c1 = project_ancilla(out1, outcome);
  const Qubit c2 = project_ancilla(out2, outcome);
  const double n1 = c1.norm();
  const double n2 = c2.norm();
  if (n1 * n1 < kPopulatedBranch || n2 * n2 < kPopulatedBranch) {
    return std::nullopt;
  }
  return inner(c1, c2) / (n1 * n2);
}

}  // namespace

EmbeddedPair embed_pair(const InnerProduct& overlap) {
  const double m = overlap.modulus();
  return {Qubit({1.0, 0.0}),
          Qubit({overlap.value(), std::sqrt(std::max(0.0, 1.0 - m * m))}),
          overlap};
}

SynthesisResult synthesize(const MappingProblem& problem,
                           const MappingSolution& solution) {
  if (!(solution.residual <= kResidualTol)) {
    throw InconsistentSolutionError(
        "solution does not satisfy the unitarity constraint");
  }
  const EmbeddedPair in = embed_pair(problem.alpha);
  const EmbeddedPair beta = embed_pair(solution.beta_effective);
  const EmbeddedPair gamma = embed_pair(solution.gamma_effective);
  const Qubit anc0({1.0, 0.0});
  const Qubit anc1({0.0, 1.0});

  SynthesisResult r;
  r.inputs = {tensor(in.s1, anc0), tensor(in.s2, anc0)};
  const std::array<double, 2> p = {solution.p1, solution.p2};
  const std::array<const Qubit*, 2> b = {&beta.s1, &beta.s2};
  const std::array<const Qubit*, 2> g = {&gamma.s1, &gamma.s2};
  for (std::size_t i = 0; i < 2; ++i) {
    r.branch_images[i] =
        tensor(*b[i], anc0).scaled(std::sqrt(p[i])) +
        tensor(*g[i], anc1).scaled(std::sqrt(std::max(0.0, 1.0 - p[i])));
  }

  const Complex gram_in = inner(r.inputs[0], r.inputs[1]);
  const Complex gram_out = inner(r.branch_images[0], r.branch_images[1]);
  if (std::abs(gram_in - gram_out) > kResidualTol) {
    throw InconsistentSolutionError(
        "input and output Gram matrices differ; upstream solver bug");
  }

  // Identical inputs (|alpha| = 1) span a single ray.
  const bool rank_one = 1.0 - problem.alpha.modulus() < kRankTol * kRankTol;
  std::vector<JointState> in_frame = {r.inputs[0]};
  std::vector<JointState> out_frame = {r.branch_images[0]};
  if (!rank_one) {
    in_frame.push_back(r.inputs[1]);
    out_frame.push_back(r.branch_images[1]);
  }
  const auto in_basis = complete_orthonormal<4>(in_frame);
  const auto out_basis = complete_orthonormal<4>(out_frame);
  r.unitary = JointOperator::from_frames(in_basis, out_basis);
  return r;
}

ActionReport verify_action(const SynthesisResult& result,
                           const MappingProblem& problem,
                           const MappingSolution& solution) {
  ActionReport rep{};
  rep.unitarity_defect = unitarity_defect(result.unitary);
  rep.input_overlap_residual =
      std::abs(inner(result.inputs[0], result.inputs[1]) -
               problem.alpha.value());

  const std::array<JointState, 2> out = {
      result.unitary.apply(result.inputs[0]),
      result.unitary.apply(result.inputs[1])};
  rep.action_residual = std::max(max_component_diff(out[0], result.branch_images[0]),
                                 max_component_diff(out[1], result.branch_images[1]));

  const std::array<double, 2> p = {solution.p1, solution.p2};
  rep.branch_probability_residual = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (int o = 0; o < 2; ++o) {
      const double n = project_ancilla(out[i], o).norm();
      rep.branch_probability[i][static_cast<std::size_t>(o)] = n * n;
      const double expected = o == 0 ? p[i] : 1.0 - p[i];
      rep.branch_probability_residual =
          std::max(rep.branch_probability_residual, std::abs(n * n - expected));
    }
  }

  if (auto c = conditional_overlap(out[0], out[1], 0)) {
    rep.beta_overlap_residual = std::abs(*c - solution.beta_effective.value());
  }
  if (auto c = conditional_overlap(out[0], out[1], 1)) {
    rep.gamma_overlap_residual = std::abs(*c - solution.gamma_effective.value());
  }

  rep.passed = rep.unitarity_defect <= kResidualTol &&
               rep.input_overlap_residual <= kResidualTol &&
               rep.action_residual <= kResidualTol &&
               rep.branch_probability_residual <= kResidualTol &&
               rep.beta_overlap_residual.value_or(0.0) <= kResidualTol &&
               rep.gamma_overlap_residual.value_or(0.0) <= kResidualTol;
  return rep;
}

}  // namespace overlap_forge
