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

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "overlap_forge/errors.h"
#include "overlap_forge/solve.h"

namespace overlap_forge {
namespace {

SimulationConfig make_config(const MappingProblem& p, std::uint64_t shots,
                             std::uint64_t seed) {
  SimulationConfig c;
  c.problem = p;
  c.solution = solve(p);
  c.synthesis = synthesize(p, c.solution);
  c.shots = shots;
  c.seed = seed;
  return c;
}

MappingProblem worked_example() {
  return {InnerProduct(0.3, 0.0), InnerProduct(0.5, 0.6 * kPi),
          InnerProduct(1.0, 1.1 * kPi), PriorPair::from_eta1(0.65)};
}

// Straight transcription of the documented sampling contract.
std::array<std::array<std::uint64_t, 2>, 2> reference_counts(
    std::uint64_t seed, std::uint64_t shots, double eta1,
    std::array<double, 2> success) {
  std::array<std::array<std::uint64_t, 2>, 2> counts{};
  std::mt19937_64 engine;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const std::uint64_t block = s / kShotsPerBlock;
    if (s % kShotsPerBlock == 0) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed),
                        static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(block),
                        static_cast<std::uint32_t>(block >> 32)};
      engine.seed(seq);
    }
    const double u1 = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    const double u2 = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    const int input = u1 < eta1 ? 0 : 1;
    ++counts[input][u2 < success[input] ? 0 : 1];
  }
  return counts;
}

TEST(SampleBlocks, FollowsDocumentedStream) {
  const std::uint64_t seed = 0x123456789abcdefULL;
  const std::uint64_t shots = 3 * kShotsPerBlock + 17;
  const std::array<double, 2> success = {0.3, 0.8};
  EXPECT_EQ(sample_blocks(seed, shots, 0.4, success, 0, 4),
            reference_counts(seed, shots, 0.4, success));
}

TEST(Run, ZeroShotsRejected) {
  EXPECT_THROW(run(make_config(worked_example(), 0, 1)), DomainError);
}

TEST(Run, WithinThreeSigma) {
  const SimulationConfig c = make_config(worked_example(), 1000000, 7);
  const SimulationReport r = run(c);
  EXPECT_NEAR(r.exact_p_beta, c.solution.p_beta, 1e-12);
  EXPECT_LE(std::abs(r.empirical_p_beta - r.exact_p_beta),
            3.0 * p_beta_sigma(r.exact_p_beta, r.shots));
  const std::uint64_t successes = r.counts[0][0] + r.counts[1][0];
  EXPECT_LE(posterior_check(r, c.solution),
            3.0 * posterior_sigma(c.solution.posterior->eta1(), successes));
  EXPECT_EQ(r.counts[0][0] + r.counts[0][1] + r.counts[1][0] + r.counts[1][1],
            r.shots);
  ASSERT_TRUE(r.beta_overlap_residual.has_value());
  EXPECT_LT(*r.beta_overlap_residual, 1e-10);
}

TEST(Run, CertainSuccessIsExact) {
  const MappingProblem p{InnerProduct(1.0, 0.0), InnerProduct(1.0, 0.0),
                         InnerProduct(1.0, 0.0), PriorPair::equal()};
  const SimulationReport r = run(make_config(p, 100000, 3));
  EXPECT_EQ(r.exact_success[0], 1.0);
  EXPECT_EQ(r.exact_success[1], 1.0);
  EXPECT_EQ(r.empirical_p_beta, 1.0);
  EXPECT_EQ(r.counts[0][1] + r.counts[1][1], 0u);
}

TEST(Run, BoundaryPosteriorIsExactlyZero) {
  const MappingProblem p{InnerProduct(0.0, 0.0), InnerProduct(0.8, 0.0),
                         InnerProduct(1.0, kPi), PriorPair(0.25, 0.75)};
  const SimulationConfig c = make_config(p, 200000, 5);
  ASSERT_EQ(c.solution.p1, 0.0);
  const SimulationReport r = run(c);
  EXPECT_EQ(r.counts[0][0], 0u);
  ASSERT_TRUE(r.empirical_posterior.has_value());
  EXPECT_EQ(r.empirical_posterior->eta1(), 0.0);
  EXPECT_EQ(posterior_check(r, c.solution), 0.0);
}

TEST(Run, OnePriorOnly) {
  MappingProblem p = worked_example();
  p.priors = PriorPair(1.0, 0.0);
  const SimulationReport r = run(make_config(p, 50000, 9));
  EXPECT_EQ(r.counts[1][0] + r.counts[1][1], 0u);
}

TEST(Run, SameSeedSameReport) {
  const SimulationConfig c = make_config(worked_example(), 300000, 11);
  EXPECT_EQ(run(c), run(c));
  SimulationConfig d = c;
  d.seed = 12;
  EXPECT_NE(run(c).counts, run(d).counts);
}

TEST(Run, SerialAndParallelAgreeForAnyThreadCount) {
  const SimulationConfig c = make_config(worked_example(), 5 * kShotsPerBlock + 3, 21);
  const SimulationReport serial = run_serial(c);
  for (int threads : {1, 2, 3, 8}) {
    EXPECT_EQ(run_parallel(c, threads), serial) << threads << " threads";
  }
}

TEST(PosteriorCheck, RequiresSuccesses) {
  SimulationReport r;
  EXPECT_THROW(posterior_check(r, solve(worked_example())), DomainError);
}

TEST(Sigmas, BinomialFormulas) {
  EXPECT_DOUBLE_EQ(p_beta_sigma(0.5, 100), 0.05);
  EXPECT_DOUBLE_EQ(posterior_sigma(0.2, 400), 0.02);
  EXPECT_EQ(p_beta_sigma(1.0, 10), 0.0);
}

}  // namespace
}  // namespace overlap_forge
