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
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace lggnn {

enum class GraphonKind { kConstant, kSsbm, kSbm, kGeometric, kPiecewise };

const char* to_string(GraphonKind kind);

/// Symmetric kernel W on [0,1]^2. Block families (constant, ssbm, sbm,
/// piecewise) are stored as a block matrix plus interval boundaries; the
/// geometric family is kept as its latent mechanism on the sphere.
class GraphonModel {
 public:
  static GraphonModel constant(double p);
  static GraphonModel ssbm(int k, double p, double q);
  /// Empty weights means equal community weights.
  static GraphonModel sbm(const Eigen::MatrixXd& P, std::vector<double> weights = {});
  static GraphonModel geometric(int dim, double t);
  static GraphonModel piecewise(const Eigen::MatrixXd& grid);

  GraphonKind kind() const { return kind_; }
  bool is_block() const { return kind_ != GraphonKind::kGeometric; }
  bool equal_weights() const { return equal_weights_; }

  /// Block matrix (1x1 for constant). Empty for geometric.
  const Eigen::MatrixXd& block_matrix() const { return P_; }
  const std::vector<double>& weights() const { return weights_; }
  int block_count() const { return static_cast<int>(P_.rows()); }

  // ssbm / constant parameters, NaN otherwise.
  double p() const { return p_; }
  double q() const { return q_; }

  int sphere_dim() const { return dim_; }
  double threshold() const { return t_; }

  std::optional<double> delta_w() const { return delta_w_; }
  void set_delta_w(double delta);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Community index of a latent in [0,1]; intervals are left-closed and the
  /// last one also contains 1.
  int community_of(double x) const;

  double eval(double x, double y) const;
  /// Threshold kernel on sphere points.
  double eval_sphere(const double* x, const double* y) const;

  /// Re-checks all invariants, including the declared delta_w margin on a
  /// probe grid.
  void validate() const;

 private:
  GraphonModel() = default;
  void finish_blocks();

  GraphonKind kind_ = GraphonKind::kConstant;
  Eigen::MatrixXd P_;
  std::vector<double> weights_;
  std::vector<double> cumulative_;
  bool equal_weights_ = true;
  double p_ = 0.0;
  double q_ = 0.0;
  int dim_ = 0;
  double t_ = 0.0;
  std::optional<double> delta_w_;
  std::string name_;
};

struct SpectralDecomposition {
  int block_count = 0;
  /// All k eigenvalues mu_r = lambda_r(P)/k, sorted descending.
  std::vector<double> eigenvalues;
  /// eigenfunction_blocks[r][j] = phi_r on community interval j.
  std::vector<std::vector<double>> eigenfunction_blocks;
  /// Distinct nonzero eigenvalues (merged within 1e-9) and their multiplicities.
  std::vector<double> distinct;
  std::vector<int> multiplicity;

  int distinct_rank() const { return static_cast<int>(distinct.size()); }
  /// sum_r mu_r^k phi_r(S_a) phi_r(S_b).
  double moment(int k, int a, int b) const;
};

inline constexpr double kEigenMergeTol = 1e-9;

SpectralDecomposition sbm_spectrum(const GraphonModel& model);

struct MomentValue {
  double value = 0.0;
  double std_error = 0.0;
  bool exact = true;
};

inline constexpr std::int64_t kDefaultMcSamples = 100000;

/// W_n^(k)(x, y) = rho^k W^(k)(x, y). Block models are exact; geometric
/// models use Monte Carlo over intermediate sphere points.
MomentValue graphon_moment(const GraphonModel& model, int k, double x, double y, double rho);
MomentValue graphon_moment_sphere(const GraphonModel& model, int k, const Eigen::VectorXd& x,
                                  const Eigen::VectorXd& y, double rho,
                                  std::int64_t mc_samples = kDefaultMcSamples,
                                  std::uint64_t seed = 0);

/// Exact block-level moment matrix: entry (a, b) is W^(k) on S_a x S_b.
Eigen::MatrixXd block_moment_matrix(const GraphonModel& model, int k);

struct BetaStar {
  std::vector<double> beta;
  double residual = 0.0;
};

/// Coefficients with sum_i beta_i mu_s^(i+1) = mu_s for each distinct mu_s.
BetaStar beta_star(const SpectralDecomposition& spec);
BetaStar beta_star(const std::vector<double>& distinct_eigenvalues);

/// Minimizer of the population risk over R^{n_coef} at sparsity rho
/// (minimum-norm when not unique).
std::vector<double> population_minimizer(const SpectralDecomposition& spec, int n_coef,
                                         double rho);

}  // namespace lggnn
