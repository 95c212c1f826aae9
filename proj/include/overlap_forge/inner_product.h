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

#ifndef OVERLAP_FORGE_INNER_PRODUCT_H
#define OVERLAP_FORGE_INNER_PRODUCT_H

// Problem model shared by all regimes, and the solver for the regime in
// which all three overlaps are non-zero with pairwise phase differences
// that are not multiples of pi.
//
// A mapping sends |alpha_i> (x) |A> to
//   sqrt(p_i) |beta_i> (x) |0> + sqrt(1 - p_i) |gamma_i> (x) |1>,
// which is unitary iff
//   alpha = sqrt(p1 p2) beta + sqrt((1 - p1)(1 - p2)) gamma.
// Writing alpha = x beta + y gamma with real x, y gives p1 p2 = x^2 and
// (1 - p1)(1 - p2) = y^2, hence p1 + p2 = 1 + x^2 - y^2 and p1, p2 are the
// roots of p^2 - (1 + x^2 - y^2) p + x^2.

#include <optional>

#include "overlap_forge/hilbert.h"

namespace overlap_forge {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kAngleTol = 1e-9;
inline constexpr double kResidualTol = 1e-10;

/// Maps any finite angle to (-pi, pi].
double canonical_phase(double phase);

/// True when `angle` is within kAngleTol of an integer multiple of `period`.
bool near_multiple(double angle, double period);

/// Complex overlap in polar form, modulus in [0,1], phase in (-pi, pi].
/// A zero overlap always carries phase 0.
class InnerProduct {
 public:
  InnerProduct() = default;
  /// Throws DomainError for a modulus outside [0, 1 + kEqualityTol] or a
  /// non-finite phase. A modulus in (1, 1 + kEqualityTol] is clamped to 1.
  InnerProduct(double modulus, double phase);
  static InnerProduct from_complex(Complex z);

  double modulus() const { return modulus_; }
  double phase() const { return phase_; }
  Complex value() const { return std::polar(modulus_, phase_); }
  /// Ray-equivalent partner -value (phase shifted by pi).
  InnerProduct negated() const;

 private:
  double modulus_ = 0.0;
  double phase_ = 0.0;
};

class PriorPair {
 public:
  /// Throws DomainError unless eta1, eta2 >= 0 and eta1 + eta2 = 1 within
  /// kEqualityTol.
  PriorPair(double eta1, double eta2);
  static PriorPair from_eta1(double eta1) { return PriorPair(eta1, 1.0 - eta1); }
  static PriorPair equal() { return PriorPair(0.5, 0.5); }

  double eta1() const { return eta1_; }
  double eta2() const { return eta2_; }
  double gap() const;  // |eta1 - eta2|
  double smaller() const;
  double larger() const;

  bool operator==(const PriorPair&) const = default;

 private:
  double eta1_;
  double eta2_;
};

struct MappingProblem {
  InnerProduct alpha;
  InnerProduct beta;
  InnerProduct gamma;
  PriorPair priors = PriorPair::equal();
};

enum class Regime {
  kGeneral,           // complex, non-zero, linearly independent constraints
  kOrthogonalInputs,  // alpha = 0
  kRealProducts,      // all relative phases multiples of pi
};

const char* regime_name(Regime regime);

/// Which root of the quadratic is assigned to the first input state.
enum class Assignment { kPlusMinus, kMinusPlus, kNotApplicable };

/// Records which targets had to be replaced by their ray-equivalent
/// negative (phase + pi) for the unitarity constraint to hold with
/// non-negative square roots.
struct SignFlips {
  bool beta = false;
  bool gamma = false;
  bool operator==(const SignFlips&) const = default;
};

struct MappingSolution {
  double p1 = 0.0;
  double p2 = 0.0;
  double p_beta = 0.0;
  double p_gamma = 1.0;
  /// Probabilities of |beta_i> given success; empty when p_beta = 0.
  std::optional<PriorPair> posterior;
  /// True when some posterior component is exactly zero (a target state is
  /// never produced on success).
  bool degenerate_posterior = false;
  Assignment assignment = Assignment::kNotApplicable;
  SignFlips sign_flips;
  /// The targets actually realised, after sign absorption.
  InnerProduct beta_effective;
  InnerProduct gamma_effective;
  /// Componentwise residual of the unitarity constraint.
  double residual = 0.0;
  Regime regime = Regime::kGeneral;
};

/// max(|Re r|, |Im r|) for r = sqrt(p1 p2) beta + sqrt((1-p1)(1-p2)) gamma
/// - alpha.
double mapping_residual(Complex alpha, Complex beta, Complex gamma, double p1,
                        double p2);

/// Finds the sign flips (tried in the order none, gamma, beta, both) under
/// which (p1, p2) satisfies the unitarity constraint; picks the smallest
/// residual if none reaches kResidualTol.
SignFlips absorb_signs(const MappingProblem& problem, double p1, double p2);

/// Builds a solution record for given branch probabilities: success
/// probabilities, posterior, effective targets and residual.
MappingSolution assemble_solution(const MappingProblem& problem, double p1,
                                  double p2, SignFlips flips,
                                  Assignment assignment, Regime regime);

/// All moduli non-zero and no pairwise phase difference a multiple of pi.
bool check_independence(const MappingProblem& problem);

struct XYCoefficients {
  double x;
  double y;
};

/// Signed coefficients with alpha = x beta + y gamma. Throws RegimeError if
/// check_independence fails.
XYCoefficients xy_coefficients(const MappingProblem& problem);

struct RootPair {
  double plus;
  double minus;
};

/// Roots of p^2 - (1 + x^2 - y^2) p + x^2. Throws InfeasibleError carrying
/// |x| + |y| - 1 when |x| + |y| > 1.
RootPair pm_probabilities(XYCoefficients xy);

struct GeneralSolutions {
  MappingSolution best;  // larger root paired with the larger prior
  MappingSolution alt;
};

GeneralSolutions solve_general(const MappingProblem& problem);

/// Closed form of the optimal success probability
/// (1 + x^2 - y^2)/2 + |eta1 - eta2| sqrt(disc)/2.
double p_beta_plus(XYCoefficients xy, const PriorPair& priors);

enum class ModulusOrdering {
  kAlphaBelowTargets,   // |alpha| < min(|beta|,|gamma|)
  kAlphaBetweenTargets, // min < |alpha| <= max
  kNeither,
};

const char* ordering_name(ModulusOrdering ordering);

ModulusOrdering check_modulus_ordering(const MappingProblem& problem);

/// Smallest |beta| reachable when gamma = +-i e^{i theta_beta}, |gamma| = 1.
/// Throws DomainError when theta_alpha - theta_beta = +-pi/2.
double beta_lower_bound(const InnerProduct& alpha, double theta_beta);

struct BetaMinPoint {
  double beta_min;
  double probability;
  bool physical;  // beta_min <= 1
};

/// Equal-prior success probability at |beta| = beta_lower_bound(alpha,
/// theta_beta). Throws DomainError on forbidden phases or a negative
/// discriminant beyond -kEqualityTol.
BetaMinPoint p_at_beta_min(const InnerProduct& alpha, double theta_beta);

struct UsdProbability {
  double value;  // 1 - 2 sqrt(eta1 eta2) |alpha|, never clamped
  /// False when the closed form is outside its optimality domain
  /// (|alpha| > sqrt(eta_min / eta_max)) or negative.
  bool valid;
};

UsdProbability usd_probability(const InnerProduct& alpha,
                               const PriorPair& priors);

/// First-order coefficient of the optimal success probability in
/// delta = theta_beta - theta_alpha around delta = 0. The beta phase of
/// `problem` is ignored. Throws DomainError if |alpha| = |beta| or
/// theta_alpha - theta_gamma is a multiple of pi.
double phase_sensitivity(const MappingProblem& problem);

bool is_feasible_general(const MappingProblem& problem);

}  // namespace overlap_forge

#endif  // OVERLAP_FORGE_INNER_PRODUCT_H
