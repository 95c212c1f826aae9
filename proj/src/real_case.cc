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
#include <string>

#include "overlap_forge/errors.h"

namespace overlap_forge {

namespace {

constexpr int kGridPoints = 10000;
constexpr double kBracketWidth = 1e-10;

bool in_unit(double v) {
  return std::isfinite(v) && v >= -1.0 - kEqualityTol &&
         v <= 1.0 + kEqualityTol;
}

}  // namespace

RealCaseProblem::RealCaseProblem(double alpha, double beta, double gamma,
                                 PriorPair priors)
    : alpha_(alpha), beta_(beta), gamma_(gamma), priors_(priors) {
  if (!in_unit(alpha) || !in_unit(beta) || !in_unit(gamma)) {
    throw DomainError("real overlaps must lie in [-1, 1]");
  }
}

Interval feasible_interval(const RealCaseProblem& problem) {
  const double a2 = problem.alpha() * problem.alpha();
  const double b2 = problem.beta() * problem.beta();
  const double g2 = problem.gamma() * problem.gamma();
  const double slope = g2 - b2;
  const double room = g2 - a2;
  const double excess =
      std::abs(problem.alpha()) -
      std::max(std::abs(problem.beta()), std::abs(problem.gamma()));
  auto infeasible = [&] {
    return InfeasibleError(
        "the target moduli cannot both be below |alpha| (need |gamma| >= "
        "|beta| > |alpha| or |gamma| > |alpha| >= |beta|, up to relabelling)",
        std::max(excess, 0.0));
  };

  if (std::abs(slope) <= kEqualityTol * kEqualityTol) {
    if (room < -kEqualityTol) throw infeasible();
    return {0.0, 1.0, true};
  }
  if (slope > 0.0) {
    const double hi = std::min(room / slope, 1.0);
    if (hi <= 0.0) throw infeasible();
    return {0.0, hi, true};
  }
  // |beta| > |gamma|: the bound becomes a lower bound.
  const double lo = room / slope;
  if (lo > 1.0) throw infeasible();
  if (lo <= 0.0) return {0.0, 1.0, true};
  return {lo, 1.0, false};
}

P2Pair p2_pm(const RealCaseProblem& problem, double p1) {
  const Interval iv = feasible_interval(problem);
  const double lo = iv.lo_open ? 0.0 : iv.lo;
  if (!(p1 >= lo - kEqualityTol && p1 <= iv.hi + kEqualityTol) ||
      (iv.lo_open && p1 <= 0.0)) {
    throw DomainError("p1 = " + std::to_string(p1) +
                      " is outside the feasible interval");
  }
  p1 = std::clamp(p1, 0.0, 1.0);
  const double a = std::abs(problem.alpha());
  const double b = std::abs(problem.beta());
  const double g = std::abs(problem.gamma());
  const double slope = g * g - b * b;
  double radicand = (1.0 - p1) * (g * g - a * a - slope * p1);
  if (radicand < -kEqualityTol) {
    throw DomainError("p1 is outside the feasible interval");
  }
  radicand = std::max(radicand, 0.0);
  const double den = g * g - slope * p1;
  if (den <= 0.0) throw DomainError("p2 undefined at this p1");
  const double lead = a * b * std::sqrt(p1);
  const double tail = g * std::sqrt(radicand);
  return {(lead + tail) * (lead + tail) / (den * den),
          (lead - tail) * (lead - tail) / (den * den)};
}

double real_case_objective(const RealCaseProblem& problem, double p1) {
  const double p2 = p2_pm(problem, p1).plus;
  if (p2 > 1.0 + kEqualityTol) return -std::numeric_limits<double>::infinity();
  return problem.priors().eta1() * p1 + problem.priors().eta2() * p2;
}

RealCaseSolution optimize(const RealCaseProblem& problem) {
  const Interval iv = feasible_interval(problem);
  const double lo = iv.lo_open ? kOpenEndpoint : iv.lo;
  const double hi = std::max(iv.hi, lo);
  auto f = [&](double p) { return real_case_objective(problem, p); };

  double best_p = hi;
  double best_v = f(hi);
  int best_k = kGridPoints - 1;
  const double step = (hi - lo) / (kGridPoints - 1);
  for (int k = 0; k < kGridPoints - 1; ++k) {
    const double p = lo + step * k;
    const double v = f(p);
    if (v > best_v) {
      best_v = v;
      best_p = p;
      best_k = k;
    }
  }

  double left = lo + step * std::max(best_k - 1, 0);
  double right = std::min(lo + step * (best_k + 1), hi);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = right - inv_phi * (right - left);
  double d = left + inv_phi * (right - left);
  double fc = f(c);
  double fd = f(d);
  while (right - left > kBracketWidth) {
    if (fc >= fd) {
      right = d;
      d = c;
      fd = fc;
      c = right - inv_phi * (right - left);
      fc = f(c);
    } else {
      left = c;
      c = d;
      fc = fd;
      d = left + inv_phi * (right - left);
      fd = f(d);
    }
  }
  const double refined = 0.5 * (left + right);
  const double refined_v = f(refined);
  if (refined_v > best_v) {
    best_v = refined_v;
    best_p = refined;
  }

  const double p2 = std::min(p2_pm(problem, best_p).plus, 1.0);
  return {best_p, p2,
          problem.priors().eta1() * best_p + problem.priors().eta2() * p2, '+'};
}

}  // namespace overlap_forge
