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

#include "overlap_forge/applications.h"

#include <cmath>

#include "gtest/gtest.h"
#include "overlap_forge/errors.h"
#include "overlap_forge/solve.h"
#include "test_support.h"

namespace overlap_forge {
namespace {

double duan_guo(double a, int m) {
  return (1.0 - a) / (1.0 - std::pow(a, m + 1));
}

TEST(CloningProblem, RealExample) {
  const CloningProblem c = cloning_problem({InnerProduct(0.5, 0.0), 1});
  EXPECT_DOUBLE_EQ(c.problem.beta.modulus(), 0.25);
  EXPECT_DOUBLE_EQ(c.problem.beta.phase(), 0.0);
  EXPECT_DOUBLE_EQ(c.problem.gamma.modulus(), 1.0);
  EXPECT_TRUE(c.phase_collision);
  EXPECT_EQ(c.regime, Regime::kRealProducts);
  EXPECT_NEAR(cloning_probability({InnerProduct(0.5, 0.0), 1}), 2.0 / 3.0,
              1e-9);
}

TEST(CloningProblem, GeneralExample) {
  const CloningSpec spec{InnerProduct(0.5, 0.45 * kPi), 1};
  const CloningProblem c = cloning_problem(spec);
  EXPECT_FALSE(c.phase_collision);
  EXPECT_EQ(c.regime, Regime::kGeneral);
  EXPECT_TRUE(check_independence(c.problem));
  EXPECT_NEAR(c.problem.beta.phase(), 0.9 * kPi, 1e-15);
  EXPECT_NEAR(c.problem.gamma.phase(), -0.6 * kPi, 1e-15);
  EXPECT_EQ(check_modulus_ordering(c.problem),
            ModulusOrdering::kAlphaBetweenTargets);
  EXPECT_NEAR(cloning_probability(spec), 0.42700245143639937, 1e-12);
}

TEST(CloningProblem, Errors) {
  EXPECT_THROW(cloning_problem({InnerProduct(0.5, 0.0), 0}), DomainError);
  EXPECT_THROW(cloning_problem({InnerProduct(1.0, 0.0), 1}), DomainError);
}

TEST(Cloning, MatchesDuanGuoOnCollidingPhases) {
  for (double theta : {0.0, kPi}) {
    for (int k = 1; k < 20; ++k) {
      const double a = k / 20.0;
      for (int m = 1; m <= 5; ++m) {
        EXPECT_NEAR(cloning_probability({InnerProduct(a, theta), m}),
                    duan_guo(a, m), 1e-9)
            << "a=" << a << " m=" << m;
      }
    }
  }
}

TEST(Cloning, NonIncreasingInCopies) {
  for (double theta : {0.0, kPi}) {
    for (int k = 1; k < 20; ++k) {
      const double a = k / 20.0;
      double prev = 1.0;
      for (int m = 1; m <= 5; ++m) {
        const double p = cloning_probability({InnerProduct(a, theta), m},
                                             PriorPair::from_eta1(0.3));
        EXPECT_LE(p, prev + 1e-12) << "a=" << a << " m=" << m;
        prev = p;
      }
    }
  }
}

TEST(Cloning, DeterministicCloningRejected) {
  for (int k = 1; k <= 100; ++k) {
    const double a = k / 101.0;
    for (double theta : {0.0, 0.3 * kPi}) {
      const InnerProduct target(a * a, 2.0 * theta);
      const MappingProblem p{InnerProduct(a, theta), target, target,
                             PriorPair::equal()};
      EXPECT_EQ(check_modulus_ordering(p), ModulusOrdering::kNeither);
      EXPECT_THROW(solve(p), Error);
    }
  }
}

TEST(Deleting, OrthogonalInputs) {
  const DeletingReport r =
      deleting_check(InnerProduct(0.0, 0.0), DeletingRegime::kGeneral);
  EXPECT_TRUE(r.feasible);
  EXPECT_FALSE(r.trivial);
  EXPECT_NEAR(r.total_probability, 1.0, 1e-15);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_LT(r.witness->residual, 1e-10);
}

TEST(Deleting, GeneralRegimeWitness) {
  const DeletingReport r =
      deleting_check(InnerProduct(0.5, 0.2), DeletingRegime::kGeneral);
  ASSERT_TRUE(r.feasible);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_LT(r.witness->residual, 1e-10);
  EXPECT_NEAR(r.total_probability, 1.0, 1e-15);
  auto [x, y] = testing::raw_xy(0.5, 0.2, 1.0, r.theta_beta, 1.0,
                                r.theta_gamma);
  EXPECT_LE(std::abs(x) + std::abs(y), 1.0);
  EXPECT_DOUBLE_EQ(r.witness->beta_effective.modulus(), 1.0);
  EXPECT_DOUBLE_EQ(r.witness->gamma_effective.modulus(), 1.0);
}

TEST(Deleting, RealRegime) {
  const DeletingReport r =
      deleting_check(InnerProduct(0.5, 0.0), DeletingRegime::kReal);
  ASSERT_TRUE(r.feasible);
  EXPECT_LT(r.witness->residual, 1e-10);
  EXPECT_EQ(r.witness->regime, Regime::kRealProducts);
}

TEST(Deleting, IdenticalInputsAreTrivial) {
  const DeletingReport r =
      deleting_check(InnerProduct(1.0, 0.7), DeletingRegime::kGeneral);
  EXPECT_TRUE(r.feasible);
  EXPECT_TRUE(r.trivial);
  EXPECT_EQ(r.total_probability, 1.0);
}

}  // namespace
}  // namespace overlap_forge
