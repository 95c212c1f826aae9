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

#include "overlap_forge/inner_product.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "overlap_forge/errors.h"

namespace overlap_forge {

double canonical_phase(double phase) {
  if (!std::isfinite(phase)) throw DomainError("phase is not finite");
  double r = std::remainder(phase, 2.0 * kPi);  // [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

bool near_multiple(double angle, double period) {
  return std::abs(std::remainder(angle, period)) < kAngleTol;
}

InnerProduct::InnerProduct(double modulus, double phase) {
  if (!std::isfinite(modulus) || modulus < 0.0 ||
      modulus > 1.0 + kEqualityTol) {
    throw DomainError("overlap modulus must lie in [0, 1], got " +
                      std::to_string(modulus));
  }
  modulus_ = std::min(modulus, 1.0);
  phase_ = modulus_ == 0.0 ? 0.0 : canonical_phase(phase);
}

InnerProduct InnerProduct::from_complex(Complex z) {
  return InnerProduct(std::abs(z), std::arg(z));
}

InnerProduct InnerProduct::negated() const {
  return InnerProduct(modulus_, phase_ + kPi);
}

PriorPair::PriorPair(double eta1, double eta2) : eta1_(eta1), eta2_(eta2) {
  if (!(eta1 >= 0.0) || !(eta2 >= 0.0) ||
      std::abs(eta1 + eta2 - 1.0) > kEqualityTol) {
    throw DomainError("priors must be non-negative and sum to 1");
  }
}

double PriorPair::gap() const { return std::abs(eta1_ - eta2_); }
double PriorPair::smaller() const { return std::min(eta1_, eta2_); }
double PriorPair::larger() const { return std::max(eta1_, eta2_); }

const char* regime_name(Regime regime) {
  switch (regime) {
    case Regime::kGeneral:
      return "general";
    case Regime::kOrthogonalInputs:
      return "orthogonal-inputs";
    case Regime::kRealProducts:
      return "real-products";
  }
  return "unknown";
}

double mapping_residual(Complex alpha, Complex beta, Complex gamma, double p1,
                        double p2) {
  Complex r = std::sqrt(p1 * p2) * beta +
              std::sqrt((1.0 - p1) * (1.0 - p2)) * gamma - alpha;
  return std::max(std::abs(r.real()), std::abs(r.imag()));
}

SignFlips absorb_signs(const MappingProblem& problem, double p1, double p2) {
  static constexpr std::array<SignFlips, 4> kOrder = {
      SignFlips{false, false}, SignFlips{false, true}, SignFlips{true, false},
      SignFlips{true, true}};
  SignFlips best;
  double best_residual = std::numeric_limits<double>::infinity();
  for (const SignFlips& f : kOrder) {
    Complex b = problem.beta.value() * (f.beta ? -1.0 : 1.0);
    Complex g = problem.gamma.value() * (f.gamma ? -1.0 : 1.0);
    double r = mapping_residual(problem.alpha.value(), b, g, p1, p2);
    if (r <= kResidualTol) return f;
    if (r < best_residual) {
      best_residual = r;
      best = f;
    }
  }
  return best;
}

MappingSolution assemble_solution(const MappingProblem& problem, double p1,
                                  double p2, SignFlips flips,
                                  Assignment assignment, Regime regime) {
  MappingSolution s;
  s.p1 = p1;
  s.p2 = p2;
  s.p_beta = problem.priors.eta1() * p1 + problem.priors.eta2() * p2;
  s.p_gamma = 1.0 - s.p_beta;
  if (s.p_beta > 0.0) {
    double e1 = problem.priors.eta1() * p1 / s.p_beta;
    s.posterior = PriorPair(e1, 1.0 - e1);
    s.degenerate_posterior = (problem.priors.eta1() * p1 == 0.0) ||
                             (problem.priors.eta2() * p2 == 0.0);
  } else {
    s.degenerate_posterior = true;
  }
  s.assignment = assignment;
  s.sign_flips = flips;
  s.beta_effective = flips.beta ? problem.beta.negated() : problem.beta;
  s.gamma_effective = flips.gamma ? problem.gamma.negated() : problem.gamma;
  s.residual = mapping_residual(problem.alpha.value(),
                                s.beta_effective.value(),
                                s.gamma_effective.value(), p1, p2);
  s.regime = regime;
  return s;
}

bool check_independence(const MappingProblem& problem) {
  const double a = problem.alpha.modulus();
  const double b = problem.beta.modulus();
  const double g = problem.gamma.modulus();
  if (a <= kEqualityTol || b <= kEqualityTol || g <= kEqualityTol) {
    return false;
  }
  const double ta = problem.alpha.phase();
  const double tb = problem.beta.phase();
  const double tg = problem.gamma.phase();
  return !near_multiple(tb - ta, kPi) && !near_multiple(tg - ta, kPi) &&
         !near_multiple(tg - tb, kPi);
}

XYCoefficients xy_coefficients(const MappingProblem& problem) {
  if (!check_independence(problem)) {
    throw RegimeError(
        "overlaps violate the independence conditions: a modulus is zero or "
        "a phase difference is a multiple of pi");
  }
  const double a = problem.alpha.modulus();
  const double ta = problem.alpha.phase();
  const double tb = problem.beta.phase();
  const double tg = problem.gamma.phase();
  return {a * std::sin(tg - ta) / (problem.beta.modulus() * std::sin(tg - tb)),
          a * std::sin(tb - ta) / (problem.gamma.modulus() * std::sin(tb - tg))};
}

RootPair pm_probabilities(XYCoefficients xy) {
  const double ax = std::abs(xy.x);
  const double ay = std::abs(xy.y);
  const double sum = ax + ay;
  if (sum > 1.0 + kEqualityTol) {
    throw InfeasibleError(
        "|x| + |y| = " + std::to_string(sum) +
            " exceeds 1: the target moduli violate the ordering |alpha| < "
            "|beta| <= |gamma| or |beta| < |alpha| <= |gamma|",
        sum - 1.0);
  }
  // 1 - 2(x^2 + y^2) + (x^2 - y^2)^2 in factored form; exact zero on the
  // boundary |x| + |y| = 1.
  const double diff = ax - ay;
  const double disc =
      std::max(0.0, (1.0 - sum) * (1.0 + sum) * (1.0 - diff) * (1.0 + diff));
  const double mid = 0.5 * (1.0 + xy.x * xy.x - xy.y * xy.y);
  const double half = 0.5 * std::sqrt(disc);
  return {std::clamp(mid + half, 0.0, 1.0), std::clamp(mid - half, 0.0, 1.0)};
}

double p_beta_plus(XYCoefficients xy, const PriorPair& priors) {
  RootPair r = pm_probabilities(xy);
  return 0.5 * (r.plus + r.minus) + 0.5 * priors.gap() * (r.plus - r.minus);
}

GeneralSolutions solve_general(const MappingProblem& problem) {
  const XYCoefficients xy = xy_coefficients(problem);
  const RootPair roots = pm_probabilities(xy);
  const SignFlips flips{xy.x < 0.0, xy.y < 0.0};

  MappingSolution pm = assemble_solution(problem, roots.plus, roots.minus,
                                         flips, Assignment::kPlusMinus,
                                         Regime::kGeneral);
  MappingSolution mp = assemble_solution(problem, roots.minus, roots.plus,
                                         flips, Assignment::kMinusPlus,
                                         Regime::kGeneral);
  if (problem.priors.eta1() >= problem.priors.eta2()) return {pm, mp};
  return {mp, pm};
}

bool is_feasible_general(const MappingProblem& problem) {
  if (!check_independence(problem)) return false;
  XYCoefficients xy = xy_coefficients(problem);
  return std::abs(xy.x) + std::abs(xy.y) <= 1.0 + kEqualityTol;
}

const char* ordering_name(ModulusOrdering ordering) {
  switch (ordering) {
    case ModulusOrdering::kAlphaBelowTargets:
      return "|alpha| < |beta| <= |gamma|";
    case ModulusOrdering::kAlphaBetweenTargets:
      return "|beta| < |alpha| <= |gamma|";
    case ModulusOrdering::kNeither:
      return "neither";
  }
  return "unknown";
}

ModulusOrdering check_modulus_ordering(const MappingProblem& problem) {
  const double a = problem.alpha.modulus();
  const double lo = std::min(problem.beta.modulus(), problem.gamma.modulus());
  const double hi = std::max(problem.beta.modulus(), problem.gamma.modulus());
  if (a < lo) return ModulusOrdering::kAlphaBelowTargets;
  if (lo < a && a <= hi) return ModulusOrdering::kAlphaBetweenTargets;
  return ModulusOrdering::kNeither;
}

double beta_lower_bound(const InnerProduct& alpha, double theta_beta) {
  const double d = alpha.phase() - theta_beta;
  if (near_multiple(d - 0.5 * kPi, kPi)) {
    throw DomainError(
        "theta_alpha - theta_beta = +-pi/2 is excluded when gamma = "
        "+-i e^{i theta_beta}");
  }
  const double a = alpha.modulus();
  return a * std::abs(std::cos(d)) / (1.0 - a * std::abs(std::sin(d)));
}

BetaMinPoint p_at_beta_min(const InnerProduct& alpha, double theta_beta) {
  const double a = alpha.modulus();
  const double b = beta_lower_bound(alpha, theta_beta);
  const double b2 = b * b;
  double radicand = a * a * (1.0 + b2) - b2;
  if (radicand < -kEqualityTol) {
    throw DomainError("negative discriminant at |beta|_min");
  }
  radicand = std::max(radicand, 0.0);
  // The two branches meet where |sin theta| = |alpha| (radicand zero there).
  const double s = std::abs(std::sin(theta_beta - alpha.phase()));
  const double sign = s < a ? -1.0 : 1.0;
  const double p = 1.0 - (b2 + sign * std::sqrt(radicand)) / (1.0 + b2);
  return {b, p, b <= 1.0};
}

UsdProbability usd_probability(const InnerProduct& alpha,
                               const PriorPair& priors) {
  const double value =
      1.0 - 2.0 * std::sqrt(priors.eta1() * priors.eta2()) * alpha.modulus();
  const bool in_domain =
      priors.larger() > 0.0 &&
      alpha.modulus() <= std::sqrt(priors.smaller() / priors.larger()) +
                             kEqualityTol;
  return {value, value >= 0.0 && in_domain};
}

double phase_sensitivity(const MappingProblem& problem) {
  const double a = problem.alpha.modulus();
  const double b = problem.beta.modulus();
  if (b <= kEqualityTol || std::abs(a - b) <= kEqualityTol) {
    throw DomainError("phase sensitivity needs |alpha| != |beta| and beta != 0");
  }
  const double phi = problem.alpha.phase() - problem.gamma.phase();
  if (near_multiple(phi, kPi)) {
    throw DomainError("theta_alpha - theta_gamma is a multiple of pi");
  }
  const double sign = a > b ? 1.0 : -1.0;
  const double ratio = (a * a) / (b * b);
  return -ratio * (1.0 + sign * problem.priors.gap()) * std::cos(phi) /
         std::sin(phi);
}

}  // namespace overlap_forge
