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

#ifndef OVERLAP_FORGE_SWEEP_H
#define OVERLAP_FORGE_SWEEP_H

// Parameter sweeps behind the published figures, emitted as long-format
// CSV tables (one row per grid point).
//
//   fig1a  theta_over_pi, alpha, beta_min
//   fig1b  beta_mod, alpha, eta_gap, p_beta_plus
//   fig2   ratio, eta1, p_max
//   fig3a  p1, eta1, p_beta_plus      (alpha=1/3, beta=1/6, gamma=2/3)
//   fig3b  p1, eta1, p_beta_plus      (alpha=1/6, beta=1/3, gamma=2/3)
//   fig4   beta_mod, f, p_beta_plus, p_usd, p_at_beta_min
//
// Points without a physical solution are written as "nan".

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace overlap_forge {

enum class FigureId { kFig1a, kFig1b, kFig2, kFig3a, kFig3b, kFig4 };

/// Throws DomainError for unknown names.
FigureId parse_figure(const std::string& name);
const char* figure_name(FigureId id);

struct SweepSpec {
  FigureId figure = FigureId::kFig1a;
  int resolution = 400;
  /// Replaces the figure's list of |alpha| values (fig1a, fig1b, fig4).
  std::optional<double> alpha_mod;
  /// Replaces the figure's list of eta1 values (fig2, fig3a, fig3b).
  std::optional<double> eta1;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

enum class Execution { kSerial, kParallel };

/// Throws DomainError when resolution < 2.
CsvTable run_sweep(const SweepSpec& spec,
                   Execution execution = Execution::kParallel);

/// 12 significant digits, '.' separator, '\n' line endings.
void write_csv(const CsvTable& table, std::ostream& out);
std::string format_number(double value);

}  // namespace overlap_forge

#endif  // OVERLAP_FORGE_SWEEP_H
