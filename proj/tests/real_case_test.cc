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

#include "overlap_forge/real_case.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "gtest/gtest.h"
#include "overlap_forge/errors.h"
#include "test_support.h"

namespace overlap_forge {
namespace {

using testing::uniform;

const RealCaseProblem kFig3a(1.0 / 3.0, 1.0 / 6.0, 2.0 / 3.0,
                             PriorPair::equal());
const RealCaseProblem kFig3b(1.0 / 6.0, 1.0 / 3.0, 2.0 / 3.0,
                             PriorPair::equal());

double real_residual(const RealCaseProblem& p, double p1, double p2) {
  double best = std::numeric_limits<double>::infinity();
  for (double sb : {1.0, -1.0}) {
    for (double sg : {1.0, -1.0}) {
      best = std::min(best, std::abs(std::sqrt(p1 * p2) * sb * p.beta() +
                                     std::sqrt((1 - p1) * (1 - p2)) * sg *
                                         p.gamma() -
                                     p.alpha()));
    }
  }
  return best;
}

RealCaseProblem random_feasible(std::mt19937_64& rng) {
  for (;;) {
    RealCaseProblem p(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0),
                      uniform(rng, -1.0, 1.0),
                      PriorPair::from_eta1(uniform(rng, 0.0, 1.0)));
    try {
      feasible_interval(p);
      return p;
    } catch (const InfeasibleError&) {
    }
  }
}

TEST(RealCaseProblem, RejectsOutOfRange) {
  EXPECT_THROW(RealCaseProblem(1.5, 0.1, 0.1, PriorPair::equal()),
               DomainError);
}

TEST(FeasibleInterval, Examples) {
  const Interval a = feasible_interval(kFig3a);
  EXPECT_NEAR(a.hi, 0.8, 1e-15);
  EXPECT_TRUE(a.lo_open);
  EXPECT_EQ(feasible_interval(kFig3b).hi, 1.0);
  EXPECT_THROW(
      feasible_interval(RealCaseProblem(0.5, 0.3, 0.4, PriorPair::equal())),
      InfeasibleError);
}

TEST(FeasibleInterval, LargerBetaGivesLowerBound) {
  const Interval iv =
      feasible_interval(RealCaseProblem(1.0 / 3.0, 2.0 / 3.0, 1.0 / 6.0,
                                        PriorPair::equal()));
  EXPECT_NEAR(iv.lo, 0.2, 1e-15);
  EXPECT_EQ(iv.hi, 1.0);
  EXPECT_FALSE(iv.lo_open);
}

TEST(FeasibleInterval, InfeasibleReportsExcess) {
  try {
    feasible_interval(RealCaseProblem(-0.5, 0.3, 0.4, PriorPair::equal()));
    FAIL();
  } catch (const InfeasibleError& e) {
    EXPECT_NEAR(e.excess(), 0.1, 1e-15);
  }
}

TEST(P2Pm, Examples) {
  const P2Pair at_hi = p2_pm(kFig3a, 0.8);
  EXPECT_NEAR(at_hi.plus, 0.2, 1e-12);
  EXPECT_NEAR(at_hi.minus, 0.2, 1e-12);
  EXPECT_NEAR(p2_pm(kFig3b, 1.0).plus, 0.25, 1e-12);
  EXPECT_THROW(p2_pm(kFig3a, 0.9), DomainError);
  EXPECT_THROW(p2_pm(kFig3a, 0.0), DomainError);
}

TEST(Property, P2PairsSatisfyConstraint) {
  std::mt19937_64 rng(301);
  for (int i = 0; i < 10000; ++i) {
    const RealCaseProblem p = random_feasible(rng);
    const Interval iv = feasible_interval(p);
    const double lo = iv.lo_open ? 1e-9 : iv.lo;
    const double p1 = uniform(rng, lo, iv.hi);
    const P2Pair q = p2_pm(p, p1);
    EXPECT_GE(q.plus, q.minus);
    EXPECT_GE(q.minus, 0.0);
    for (double p2 : {q.plus, q.minus}) {
      if (p2 > 1.0) continue;  // not a probability; objective excludes it
      EXPECT_LT(real_residual(p, p1, p2), 1e-10)
          << p.alpha() << " " << p.beta() << " " << p.gamma() << " p1=" << p1;
    }
  }
}

// The radicand vanishes at the bound, so a rounding error of order 1e-16 in
// hi surfaces as its square root in p2.
TEST(Property, BranchesMeetAtUpperBound) {
  std::mt19937_64 rng(302);
  for (int i = 0; i < 1000; ++i) {
    const RealCaseProblem p = random_feasible(rng);
    const Interval iv = feasible_interval(p);
    if (iv.hi >= 1.0) continue;
    const P2Pair q = p2_pm(p, iv.hi);
    EXPECT_NEAR(q.plus, q.minus, 1e-7);
    const P2Pair inside = p2_pm(p, 0.5 * iv.hi);
    EXPECT_GT(inside.plus - inside.minus, 1e-7);
  }
}

TEST(Optimize, NeverWorseThanGrid) {
  std::mt19937_64 rng(303);
  for (int i = 0; i < 200; ++i) {
    const RealCaseProblem p = random_feasible(rng);
    const Interval iv = feasible_interval(p);
    const RealCaseSolution s = optimize(p);
    const double lo = iv.lo_open ? kOpenEndpoint : iv.lo;
    EXPECT_GE(s.p1_star, lo);
    EXPECT_LE(s.p1_star, iv.hi);
    EXPECT_GE(s.p2_star, 0.0);
    EXPECT_LE(s.p2_star, 1.0);
    for (int k = 0; k <= 10000; ++k) {
      const double p1 = lo + (iv.hi - lo) * k / 10000.0;
      EXPECT_GE(s.p_beta, real_case_objective(p, p1) - 1e-12);
    }
  }
}

TEST(Optimize, Figure3Values) {
  const RealCaseSolution a = optimize(kFig3a);
  const RealCaseSolution b = optimize(kFig3b);
  EXPECT_NEAR(a.p_beta, 2.0 / 3.0, 1e-9);
  EXPECT_NEAR(b.p_beta, 5.0 / 6.0, 1e-9);
  EXPECT_LE(std::abs(a.p1_star - a.p2_star), 1e-3);
  EXPECT_LE(std::abs(b.p1_star - b.p2_star), 1e-3);
  EXPECT_LT(a.p_beta, b.p_beta);

  const RealCaseProblem skew(1.0 / 6.0, 1.0 / 3.0, 2.0 / 3.0,
                             PriorPair::from_eta1(0.3));
  EXPECT_NEAR(optimize(skew).p_beta, 0.8562089906090276, 1e-9);
}

// 1 -> m+1 cloning at equal priors reaches (1 - a) / (1 - a^{m+1}).
TEST(Optimize, CloningBound) {
  for (double a : {0.1, 0.3, 0.5, 0.8}) {
    for (int m : {1, 2, 4}) {
      const RealCaseProblem p(a, std::pow(a, m + 1), 1.0, PriorPair::equal());
      EXPECT_NEAR(optimize(p).p_beta, (1.0 - a) / (1.0 - std::pow(a, m + 1)),
                  1e-9)
          << "a=" << a << " m=" << m;
    }
  }
}

TEST(Optimize, SymmetricPriorsGiveEqualProbabilities) {
  std::mt19937_64 rng(304);
  for (int i = 0; i < 100; ++i) {
    const double g = uniform(rng, 0.3, 1.0);
    const double b = uniform(rng, 0.05, g);
    const double a = uniform(rng, 0.0, b);
    const RealCaseSolution s =
        optimize(RealCaseProblem(a, b, g, PriorPair::equal()));
    EXPECT_LE(std::abs(s.p1_star - s.p2_star), 1e-3)
        << a << " " << b << " " << g;
  }
}

}  // namespace
}  // namespace overlap_forge
