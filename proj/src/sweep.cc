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

#include "overlap_forge/sweep.h"

#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include "overlap_forge/errors.h"
#include "overlap_forge/inner_product.h"
#include "overlap_forge/ortho_prep.h"
#include "overlap_forge/real_case.h"

namespace overlap_forge {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

using Row = std::vector<double>;

// Rows land at their grid index, so the table order never depends on the
// evaluation schedule.
template <class Point, class Eval>
std::vector<Row> evaluate(const std::vector<Point>& points, Eval eval,
                          Execution execution) {
  std::vector<Row> rows(points.size());
  const auto n = static_cast<std::int64_t>(points.size());
  if (execution == Execution::kSerial) {
    for (std::int64_t k = 0; k < n; ++k) rows[k] = eval(points[k]);
  } else {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t k = 0; k < n; ++k) rows[k] = eval(points[k]);
  }
  return rows;
}

// (k + 1) / n for k in [0, n): a grid on (0, 1].
double open_unit(int k, int n) { return static_cast<double>(k + 1) / n; }

double general_p_beta(double alpha_mod, double beta_mod, double theta_beta,
                      const PriorPair& priors) {
  try {
    const MappingProblem p{InnerProduct(alpha_mod, 0.0),
                           InnerProduct(beta_mod, theta_beta),
                           InnerProduct(1.0, theta_beta + 0.5 * kPi), priors};
    return solve_general(p).best.p_beta;
  } catch (const Error&) {
    return kNaN;
  }
}

CsvTable fig1a(const SweepSpec& spec, Execution ex) {
  struct Point {
    double t;
    double alpha;
  };
  std::vector<double> alphas = {0.3, 0.5, 0.7, 0.9};
  if (spec.alpha_mod) alphas = {*spec.alpha_mod};
  std::vector<Point> pts;
  for (double a : alphas) {
    for (int k = 0; k < spec.resolution; ++k) {
      pts.push_back({-1.0 + 2.0 * k / (spec.resolution - 1), a});
    }
  }
  auto eval = [](const Point& p) -> Row {
    double b = kNaN;
    try {
      b = beta_lower_bound(InnerProduct(p.alpha, 0.0), -p.t * kPi);
    } catch (const Error&) {
    }
    return {p.t, p.alpha, b};
  };
  return {{"theta_over_pi", "alpha", "beta_min"}, evaluate(pts, eval, ex)};
}

CsvTable fig1b(const SweepSpec& spec, Execution ex) {
  struct Point {
    double beta;
    double alpha;
    double gap;
  };
  std::vector<double> alphas = {0.3, 0.5};
  if (spec.alpha_mod) alphas = {*spec.alpha_mod};
  std::vector<Point> pts;
  for (double a : alphas) {
    for (double gap : {0.3, 0.7, 0.5}) {
      for (int k = 0; k < spec.resolution; ++k) {
        pts.push_back({open_unit(k, spec.resolution), a, gap});
      }
    }
  }
  auto eval = [](const Point& p) -> Row {
    const PriorPair priors = PriorPair::from_eta1(0.5 * (1.0 + p.gap));
    return {p.beta, p.alpha, p.gap,
            general_p_beta(p.alpha, p.beta, 0.6 * kPi, priors)};
  };
  return {{"beta_mod", "alpha", "eta_gap", "p_beta_plus"},
          evaluate(pts, eval, ex)};
}

CsvTable fig2(const SweepSpec& spec, Execution ex) {
  struct Point {
    double ratio;
    double eta1;
  };
  std::vector<double> etas = {1.0 / 8, 1.0 / 4, 1.0 / 3, 1.0 / 2};
  if (spec.eta1) etas = {*spec.eta1};
  std::vector<Point> pts;
  for (double e : etas) {
    for (int k = 0; k < spec.resolution; ++k) {
      pts.push_back({open_unit(k, spec.resolution), e});
    }
  }
  auto eval = [](const Point& p) -> Row {
    const OrthoPrepProblem prob(p.ratio, 1.0, PriorPair::from_eta1(p.eta1));
    return {p.ratio, p.eta1, optimal(prob).p_beta};
  };
  return {{"ratio", "eta1", "p_max"}, evaluate(pts, eval, ex)};
}

CsvTable fig3(const SweepSpec& spec, Execution ex, double alpha, double beta,
              double gamma) {
  struct Point {
    double p1;
    double eta1;
  };
  std::vector<double> etas = {0.3, 0.5, 0.7};
  if (spec.eta1) etas = {*spec.eta1};
  const Interval iv =
      feasible_interval(RealCaseProblem(alpha, beta, gamma, PriorPair::equal()));
  std::vector<Point> pts;
  for (double e : etas) {
    for (int k = 0; k < spec.resolution; ++k) {
      pts.push_back({iv.lo + (iv.hi - iv.lo) * open_unit(k, spec.resolution), e});
    }
  }
  auto eval = [=](const Point& p) -> Row {
    const RealCaseProblem prob(alpha, beta, gamma, PriorPair::from_eta1(p.eta1));
    double v = kNaN;
    try {
      v = real_case_objective(prob, p.p1);
      if (!std::isfinite(v)) v = kNaN;
    } catch (const Error&) {
    }
    return {p.p1, p.eta1, v};
  };
  return {{"p1", "eta1", "p_beta_plus"}, evaluate(pts, eval, ex)};
}

CsvTable fig4(const SweepSpec& spec, Execution ex) {
  struct Point {
    double beta;  // negative: envelope row at |beta|_min(f)
    double f;
  };
  const double a = spec.alpha_mod.value_or(1.0 / std::sqrt(3.0));
  const InnerProduct alpha(a, 0.0);
  const double p_usd = usd_probability(alpha, PriorPair::equal()).value;
  std::vector<Point> pts;
  for (double f : {0.1, 0.2, 0.4, 0.6, 0.8, 0.9}) {
    for (int k = 0; k < spec.resolution; ++k) {
      pts.push_back({open_unit(k, spec.resolution), f});
    }
  }
  for (int k = 0; k < spec.resolution; ++k) {
    pts.push_back({-1.0, 2.0 * (k + 1) / (spec.resolution + 1)});
  }
  auto eval = [=](const Point& p) -> Row {
    const double theta = 0.5 * kPi * p.f;
    double at_min = kNaN;
    double beta_min = kNaN;
    try {
      const BetaMinPoint m = p_at_beta_min(alpha, theta);
      at_min = m.probability;
      beta_min = m.beta_min;
    } catch (const Error&) {
    }
    const double beta = p.beta < 0.0 ? beta_min : p.beta;
    double curve = kNaN;
    if (std::isfinite(beta) && beta <= 1.0) {
      curve = general_p_beta(a, beta, theta, PriorPair::equal());
    }
    return {beta, p.f, curve, p_usd, at_min};
  };
  return {{"beta_mod", "f", "p_beta_plus", "p_usd", "p_at_beta_min"},
          evaluate(pts, eval, ex)};
}

}  // namespace

FigureId parse_figure(const std::string& name) {
  if (name == "fig1a") return FigureId::kFig1a;
  if (name == "fig1b") return FigureId::kFig1b;
  if (name == "fig2") return FigureId::kFig2;
  if (name == "fig3a") return FigureId::kFig3a;
  if (name == "fig3b") return FigureId::kFig3b;
  if (name == "fig4") return FigureId::kFig4;
  throw DomainError("unknown figure id '" + name + "'");
}

const char* figure_name(FigureId id) {
  switch (id) {
    case FigureId::kFig1a:
      return "fig1a";
    case FigureId::kFig1b:
      return "fig1b";
    case FigureId::kFig2:
      return "fig2";
    case FigureId::kFig3a:
      return "fig3a";
    case FigureId::kFig3b:
      return "fig3b";
    case FigureId::kFig4:
      return "fig4";
  }
  return "unknown";
}

CsvTable run_sweep(const SweepSpec& spec, Execution execution) {
  if (spec.resolution < 2) throw DomainError("resolution must be at least 2");
  switch (spec.figure) {
    case FigureId::kFig1a:
      return fig1a(spec, execution);
    case FigureId::kFig1b:
      return fig1b(spec, execution);
    case FigureId::kFig2:
      return fig2(spec, execution);
    case FigureId::kFig3a:
      return fig3(spec, execution, 1.0 / 3, 1.0 / 6, 2.0 / 3);
    case FigureId::kFig3b:
      return fig3(spec, execution, 1.0 / 6, 1.0 / 3, 2.0 / 3);
    case FigureId::kFig4:
      return fig4(spec, execution);
  }
  throw DomainError("unknown figure");
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_csv(const CsvTable& table, std::ostream& out) {
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    out << (c ? "," : "") << table.header[c];
  }
  out << '\n';
  for (const Row& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "," : "") << format_number(row[c]);
    }
    out << '\n';
  }
}

}  // namespace overlap_forge
