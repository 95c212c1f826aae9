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

#ifndef OVERLAP_FORGE_PROTOCOL_SIM_H
#define OVERLAP_FORGE_PROTOCOL_SIM_H

// Seeded Monte Carlo of the heralded protocol: draw the input by its prior,
// apply U, measure the ancilla. Only the input choice and the outcome are
// random; outcome probabilities and conditional states come from exact
// algebra on U.
//
// Random stream: shots are split into blocks of kShotsPerBlock. Block b
// uses std::mt19937_64 seeded through std::seed_seq{seed_lo, seed_hi, b_lo,
// b_hi} (32-bit halves); each shot draws two uniforms u = (word >> 11) *
// 2^-53, the first selecting the input (u < eta1 -> input 1), the second
// the outcome (u < P(outcome 0 | input) -> outcome 0). Both generators and
// seed_seq are fully specified by the C++ standard, so reports are
// bit-identical across platforms and independent of the thread count.

#include <array>
#include <cstdint>
#include <optional>

#include "overlap_forge/inner_product.h"
#include "overlap_forge/synthesis.h"

namespace overlap_forge {

inline constexpr std::uint64_t kShotsPerBlock = 1u << 16;

struct SimulationConfig {
  MappingProblem problem;
  MappingSolution solution;
  SynthesisResult synthesis;
  std::uint64_t shots = 1;
  std::uint64_t seed = 0;
};

struct SimulationReport {
  /// counts[i][o]: input i (0-based), ancilla outcome o.
  std::array<std::array<std::uint64_t, 2>, 2> counts{};
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  double empirical_p_beta = 0.0;
  /// Frequencies of the inputs among outcome-0 shots; empty if none.
  std::optional<PriorPair> empirical_posterior;
  /// Exact outcome-0 probabilities per input, read off U.
  std::array<double, 2> exact_success{};
  double exact_p_beta = 0.0;
  std::optional<double> beta_overlap_residual;
  std::optional<double> gamma_overlap_residual;

  bool operator==(const SimulationReport&) const = default;
};

/// Counts for shots [first_block, last_block) of the stream; the shared
/// kernel of both drivers.
std::array<std::array<std::uint64_t, 2>, 2> sample_blocks(
    std::uint64_t seed, std::uint64_t shots, double eta1,
    std::array<double, 2> success, std::uint64_t first_block,
    std::uint64_t last_block);

/// Reference driver: blocks processed in order on the calling thread.
SimulationReport run_serial(const SimulationConfig& config);

/// OpenMP driver over blocks. `threads` <= 0 uses the OpenMP default.
SimulationReport run_parallel(const SimulationConfig& config, int threads = 0);

/// run_parallel with default threads. Throws DomainError if shots == 0.
SimulationReport run(const SimulationConfig& config);

/// |empirical eta'_1 - eta1 p1 / P_beta|. Throws DomainError when no
/// outcome-0 shot was recorded.
double posterior_check(const SimulationReport& report,
                       const MappingSolution& solution);

/// Standard deviation of the empirical success frequency.
double p_beta_sigma(double p_beta, std::uint64_t shots);

/// Standard deviation of the empirical eta'_1 given the number of successes.
double posterior_sigma(double posterior1, std::uint64_t successes);

}  // namespace overlap_forge

#endif  // OVERLAP_FORGE_PROTOCOL_SIM_H
