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

#include "overlap_forge/protocol_sim.h"

#include <omp.h>

#include <cmath>
#include <random>

#include "overlap_forge/errors.h"

namespace overlap_forge {

namespace {

using Counts = std::array<std::array<std::uint64_t, 2>, 2>;

double uniform(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

std::uint64_t block_count(std::uint64_t shots) {
  return (shots + kShotsPerBlock - 1) / kShotsPerBlock;
}

std::array<double, 2> exact_success(const SimulationConfig& config) {
  std::array<double, 2> p{};
  for (std::size_t i = 0; i < 2; ++i) {
    const JointState out =
        config.synthesis.unitary.apply(config.synthesis.inputs[i]);
    const double n = project_ancilla(out, 0).norm();
    p[i] = n * n;
    // round-off from U must not turn a certain outcome into a rare one
    if (p[i] < 1e-14) p[i] = 0.0;
    if (p[i] > 1.0 - 1e-14) p[i] = 1.0;
  }
  return p;
}

SimulationReport finalize(const SimulationConfig& config, const Counts& counts,
                          std::array<double, 2> success) {
  SimulationReport rep;
  rep.counts = counts;
  rep.shots = config.shots;
  rep.seed = config.seed;
  const std::uint64_t successes = counts[0][0] + counts[1][0];
  rep.empirical_p_beta =
      static_cast<double>(successes) / static_cast<double>(config.shots);
  if (successes > 0) {
    const double e1 =
        static_cast<double>(counts[0][0]) / static_cast<double>(successes);
    rep.empirical_posterior = PriorPair(e1, 1.0 - e1);
  }
  rep.exact_success = success;
  rep.exact_p_beta = config.problem.priors.eta1() * success[0] +
                     config.problem.priors.eta2() * success[1];
  const ActionReport action =
      verify_action(config.synthesis, config.problem, config.solution);
  rep.beta_overlap_residual = action.beta_overlap_residual;
  rep.gamma_overlap_residual = action.gamma_overlap_residual;
  return rep;
}

void check_shots(const SimulationConfig& config) {
  if (config.shots == 0) throw DomainError("shots must be at least 1");
}

}  // namespace

Counts sample_blocks(std::uint64_t seed, std::uint64_t shots, double eta1,
                     std::array<double, 2> success, std::uint64_t first_block,
                     std::uint64_t last_block) {
  Counts counts{};
  for (std::uint64_t b = first_block; b < last_block; ++b) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(b),
                      static_cast<std::uint32_t>(b >> 32)};
    std::mt19937_64 engine(seq);
    const std::uint64_t begin = b * kShotsPerBlock;
    const std::uint64_t end = std::min(shots, begin + kShotsPerBlock);
    for (std::uint64_t s = begin; s < end; ++s) {
      const std::size_t input = uniform(engine) < eta1 ? 0 : 1;
      const std::size_t outcome = uniform(engine) < success[input] ? 0 : 1;
      ++counts[input][outcome];
    }
  }
  return counts;
}

SimulationReport run_serial(const SimulationConfig& config) {
  check_shots(config);
  const auto success = exact_success(config);
  const Counts counts =
      sample_blocks(config.seed, config.shots, config.problem.priors.eta1(),
                    success, 0, block_count(config.shots));
  return finalize(config, counts, success);
}

SimulationReport run_parallel(const SimulationConfig& config, int threads) {
  check_shots(config);
  const auto success = exact_success(config);
  const double eta1 = config.problem.priors.eta1();
  const auto blocks = static_cast<std::int64_t>(block_count(config.shots));
  std::uint64_t c00 = 0, c01 = 0, c10 = 0, c11 = 0;
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(static) num_threads(nthreads) \
    reduction(+ : c00, c01, c10, c11)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    const Counts c =
        sample_blocks(config.seed, config.shots, eta1, success, ub, ub + 1);
    c00 += c[0][0];
    c01 += c[0][1];
    c10 += c[1][0];
    c11 += c[1][1];
  }
  const Counts counts = {{{c00, c01}, {c10, c11}}};
  return finalize(config, counts, success);
}

SimulationReport run(const SimulationConfig& config) {
  return run_parallel(config);
}

double posterior_check(const SimulationReport& report,
                       const MappingSolution& solution) {
  if (!report.empirical_posterior) {
    throw DomainError("no outcome-0 shots: posterior undefined");
  }
  if (!solution.posterior) {
    throw DomainError("solution has zero success probability");
  }
  return std::abs(report.empirical_posterior->eta1() -
                  solution.posterior->eta1());
}

double p_beta_sigma(double p_beta, std::uint64_t shots) {
  return std::sqrt(p_beta * (1.0 - p_beta) / static_cast<double>(shots));
}

double posterior_sigma(double posterior1, std::uint64_t successes) {
  return std::sqrt(posterior1 * (1.0 - posterior1) /
                   static_cast<double>(successes));
}

}  // namespace overlap_forge
