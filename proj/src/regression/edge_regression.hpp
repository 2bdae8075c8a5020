/*
 * Copyright (c) 2026, The lggnn Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "core/moment_estimates.hpp"
#include "graphon/graphon_model.hpp"
#include "graphon/sampled_graph.hpp"
#include "json.hpp"

namespace lggnn {

enum class SpaceMode { kBox, kL1Ball };

/// Feasible set for the coefficients: a box with half-widths b_i / rho^i, or
/// an l1 ball.
struct SearchSpace {
  int n_coef = 0;
  SpaceMode mode = SpaceMode::kBox;
  std::vector<double> b;
  double rho = 1.0;
  double radius = 0.0;

  static SearchSpace box(std::vector<double> b, double rho);
  static SearchSpace l1_ball(int n_coef, double radius, double rho = 1.0);

  /// Half-width b_i / rho^i of coordinate i (0-based, so exponent i+1).
  double half_width(int i) const;
  bool contains(const std::vector<double>& beta, double tol = 1e-9) const;
};

inline constexpr double kDefaultBound = 2.0;
inline constexpr double kBoundMargin = 1.2;
inline constexpr double kBoundFloor = 0.5;

/// b_i = 2 for all coordinates.
SearchSpace default_box(int n_coef, double rho);
/// b_i = 1.2 |beta_i| rho^i for the population minimizer, floored at 0.5.
SearchSpace spectrum_box(const SpectralDecomposition& spec, int n_coef, double rho);
/// Radius 1 / (mu_1 rho).
SearchSpace spectrum_l1_ball(const SpectralDecomposition& spec, int n_coef, double rho);

/// Streamed normal equations.
struct SufficientStats {
  int dim = 0;
  Eigen::MatrixXd gram;
  Eigen::VectorXd cross;
  double target_ss = 0.0;
  std::int64_t pair_count = 0;

  explicit SufficientStats(int d = 0);
  void add(const double* q, double a);
  void merge(const SufficientStats& other);
};

using PairFilter = std::function<bool(int, int)>;
using PairList = std::vector<std::pair<int, int>>;

SufficientStats accumulate_stats(const MomentEstimates& moments, const SampledGraph& graph,
                                 const PairFilter& filter);
SufficientStats accumulate_stats(const MomentEstimates& moments, const SampledGraph& graph,
                                 const PairList& pairs);
/// Rows of width `dim` with matching targets.
SufficientStats accumulate_rows(const std::vector<double>& rows, int dim,
                                const std::vector<double>& targets);

struct KktCertificate {
  bool ok = false;
  /// Largest stationarity residual over free coordinates.
  double stationarity = 0.0;
  /// Largest wrong-signed gradient at an active constraint.
  double sign_violation = 0.0;
  double feasibility = 0.0;
};

enum class FitMethod { kBoxPg, kPls };

struct RegressionFit {
  FitMethod method = FitMethod::kBoxPg;
  std::vector<double> beta;
  double intercept = 0.0;
  SearchSpace space;
  bool has_space = false;
  int components = 0;
  double objective = 0.0;
  int iterations = 0;
  bool converged = false;
  bool monotone = true;
  bool psd_warning = false;
  bool zero_variance_warning = false;
  KktCertificate kkt;
};

inline constexpr double kRidge = 1e-10;

/// (1/N)(b'Gb - 2b'c + s) + ridge term.
double regression_objective(const SufficientStats& stats, const std::vector<double>& beta);

RegressionFit fit_box_constrained(const SufficientStats& stats, const SearchSpace& space,
                                  double tol = 1e-10, int max_iter = 200000);

KktCertificate check_kkt(const SufficientStats& stats, const SearchSpace& space,
                         const std::vector<double>& beta, double tol);

/// PLS1 by NIPALS on an explicit design (rows x dim, row-major).
RegressionFit fit_pls_design(const std::vector<double>& X, int dim, const std::vector<double>& y,
                             int components);
RegressionFit fit_pls(const MomentEstimates& moments, const SampledGraph& graph, int components,
                      const PairFilter& filter);
RegressionFit fit_pls(const MomentEstimates& moments, const SampledGraph& graph, int components,
                      const PairList& pairs);

double predict_row(const RegressionFit& fit, const double* q, bool clamp = false);
/// One prediction per pair in MomentEstimates order.
std::vector<double> predict(const RegressionFit& fit, const MomentEstimates& moments, bool clamp = false);
/// Rows of width beta.size().
std::vector<double> predict_rows(const RegressionFit& fit, const std::vector<double>& rows,
                                 bool clamp = false);

/// Pairs (MomentEstimates order) with p_hat >= gamma.
PairList threshold_edges(const std::vector<double>& p_hat, int n, double gamma);

double population_risk_sbm(const SpectralDecomposition& spec, const std::vector<double>& beta, double rho);
double gen_error_bound(const SpectralDecomposition& spec, int L);

double empirical_risk(const std::vector<double>& beta, const MomentEstimates& moments,
                      const SampledGraph& graph, const PairFilter& filter);
double empirical_risk(const RegressionFit& fit, const MomentEstimates& moments,
                      const SampledGraph& graph, const PairFilter& filter);

nlohmann::json fit_to_json(const RegressionFit& fit);

}  // namespace lggnn
