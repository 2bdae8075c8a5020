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
#include "graphon/graphon_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "common/errors.hpp"
#include "common/rng.hpp"

namespace lggnn {

const char* to_string(GraphonKind kind) {
  switch (kind) {
    case GraphonKind::kConstant: return "constant";
    case GraphonKind::kSsbm: return "ssbm";
    case GraphonKind::kSbm: return "sbm";
    case GraphonKind::kGeometric: return "geometric";
    case GraphonKind::kPiecewise: return "piecewise";
  }
  return "unknown";
}

namespace {

void check_probability(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw ParameterError(std::string(what) + " must lie in [0,1], got " + std::to_string(v));
  }
}

void check_block_matrix(const Eigen::MatrixXd& P) {
  if (P.rows() == 0 || P.rows() != P.cols()) {
    throw ParameterError("block matrix must be square and nonempty");
  }
  for (Eigen::Index i = 0; i < P.rows(); ++i) {
    for (Eigen::Index j = 0; j < P.cols(); ++j) {
      check_probability(P(i, j), "block matrix entry");
      if (P(i, j) != P(j, i)) throw ParameterError("block matrix must be symmetric");
    }
  }
}

}  // namespace

GraphonModel GraphonModel::constant(double p) {
  check_probability(p, "constant graphon value");
  GraphonModel m;
  m.kind_ = GraphonKind::kConstant;
  m.P_ = Eigen::MatrixXd::Constant(1, 1, p);
  m.p_ = p;
  m.q_ = p;
  m.name_ = "constant";
  m.finish_blocks();
  return m;
}

GraphonModel GraphonModel::ssbm(int k, double p, double q) {
  if (k < 1) throw ParameterError("ssbm needs at least one community");
  check_probability(p, "ssbm p");
  check_probability(q, "ssbm q");
  GraphonModel m;
  m.kind_ = GraphonKind::kSsbm;
  m.P_ = Eigen::MatrixXd::Constant(k, k, q);
  m.P_.diagonal().setConstant(p);
  m.p_ = p;
  m.q_ = q;
  m.name_ = "ssbm";
  m.finish_blocks();
  return m;
}

GraphonModel GraphonModel::sbm(const Eigen::MatrixXd& P, std::vector<double> weights) {
  check_block_matrix(P);
  GraphonModel m;
  m.kind_ = GraphonKind::kSbm;
  m.P_ = P;
  m.p_ = std::numeric_limits<double>::quiet_NaN();
  m.q_ = m.p_;
  m.name_ = "sbm";
  if (!weights.empty()) {
    if (static_cast<Eigen::Index>(weights.size()) != P.rows()) {
      throw ParameterError("sbm weights must have one entry per community");
    }
    double total = 0.0;
    for (double w : weights) {
      if (!(w > 0.0)) throw ParameterError("sbm weights must be positive");
      total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) throw ParameterError("sbm weights must sum to 1");
    m.weights_ = std::move(weights);
  }
  m.finish_blocks();
  return m;
}

GraphonModel GraphonModel::geometric(int dim, double t) {
  if (dim < 2) throw ParameterError("geometric graphon needs sphere dimension >= 2");
  if (!(t > -1.0 && t < 1.0)) throw ParameterError("geometric threshold must lie in (-1,1)");
  GraphonModel m;
  m.kind_ = GraphonKind::kGeometric;
  m.dim_ = dim;
  m.t_ = t;
  m.p_ = std::numeric_limits<double>::quiet_NaN();
  m.q_ = m.p_;
  m.name_ = "geometric";
  return m;
}

GraphonModel GraphonModel::piecewise(const Eigen::MatrixXd& grid) {
  check_block_matrix(grid);
  GraphonModel m;
  m.kind_ = GraphonKind::kPiecewise;
  m.P_ = grid;
  m.p_ = std::numeric_limits<double>::quiet_NaN();
  m.q_ = m.p_;
  m.name_ = "piecewise";
  m.finish_blocks();
  return m;
}

void GraphonModel::finish_blocks() {
  const int k = block_count();
  if (weights_.empty()) {
    weights_.assign(k, 1.0 / k);
    equal_weights_ = true;
  } else {
    equal_weights_ = std::all_of(weights_.begin(), weights_.end(),
                                 [&](double w) { return std::abs(w - 1.0 / k) <= 1e-12; });
  }
  cumulative_.resize(k);
  double acc = 0.0;
  for (int j = 0; j < k; ++j) {
    acc += weights_[j];
    cumulative_[j] = equal_weights_ ? static_cast<double>(j + 1) / k : acc;
  }
  cumulative_.back() = 1.0;
}

void GraphonModel::set_delta_w(double delta) {
  if (!(delta > 0.0 && delta <= 0.5)) throw ParameterError("delta_w must lie in (0, 1/2]");
  delta_w_ = delta;
}

int GraphonModel::community_of(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) throw ParameterError("latent must lie in [0,1]");
  if (!is_block()) throw UnsupportedModelError("geometric graphon has no communities");
  const int k = block_count();
  if (equal_weights_) return std::min(static_cast<int>(x * k), k - 1);
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), x);
  return std::min(static_cast<int>(it - cumulative_.begin()), k - 1);
}

double GraphonModel::eval(double x, double y) const {
  if (!(x >= 0.0 && x <= 1.0) || !(y >= 0.0 && y <= 1.0)) {
    throw ParameterError("graphon arguments must lie in [0,1]");
  }
  if (!is_block()) {
    throw UnsupportedModelError("geometric graphon is defined on sphere points, not [0,1]");
  }
  return P_(community_of(x), community_of(y));
}

double GraphonModel::eval_sphere(const double* x, const double* y) const {
  if (kind_ != GraphonKind::kGeometric) throw UnsupportedModelError("not a geometric graphon");
  double dot = 0.0;
  for (int c = 0; c < dim_; ++c) dot += x[c] * y[c];
  return dot >= t_ ? 1.0 : 0.0;
}

void GraphonModel::validate() const {
  if (is_block()) {
    check_block_matrix(P_);
    if (static_cast<Eigen::Index>(weights_.size()) != P_.rows()) {
      throw ParameterError("weights do not match block count");
    }
  }
  if (!delta_w_) return;
  const double delta = *delta_w_;
  if (!is_block()) {
    // The threshold kernel takes the values 0 and 1 only.
    throw ParameterError("geometric graphon cannot satisfy a delta_w margin");
  }
  constexpr int kProbe = 64;
  for (int a = 0; a <= kProbe; ++a) {
    for (int b = 0; b <= kProbe; ++b) {
      double w = eval(static_cast<double>(a) / kProbe, static_cast<double>(b) / kProbe);
      if (w < delta || w > 1.0 - delta) {
        throw ParameterError("graphon violates declared delta_w margin");
      }
    }
  }
}

double SpectralDecomposition::moment(int k, int a, int b) const {
  double s = 0.0;
  for (std::size_t r = 0; r < eigenvalues.size(); ++r) {
    s += std::pow(eigenvalues[r], k) * eigenfunction_blocks[r][a] * eigenfunction_blocks[r][b];
  }
  return s;
}

SpectralDecomposition sbm_spectrum(const GraphonModel& model) {
  if (!model.is_block()) throw UnsupportedModelError("spectrum needs a block model");
  const Eigen::MatrixXd& P = model.block_matrix();
  if (!P.isApprox(P.transpose(), 0.0)) throw ParameterError("block matrix must be symmetric");
  if (!model.equal_weights()) {
    throw UnsupportedModelError("spectrum is only available for equal community weights");
  }
  const int k = model.block_count();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(P);
  if (es.info() != Eigen::Success) throw SingularSystemError("eigen decomposition failed");

  SpectralDecomposition out;
  out.block_count = k;
  const double sk = std::sqrt(static_cast<double>(k));
  for (int r = k - 1; r >= 0; --r) {
    Eigen::VectorXd v = es.eigenvectors().col(r);
    for (int j = 0; j < k; ++j) {
      if (std::abs(v(j)) > 1e-12) {
        if (v(j) < 0) v = -v;
        break;
      }
    }
    out.eigenvalues.push_back(es.eigenvalues()(r) / k);
    std::vector<double> phi(k);
    for (int j = 0; j < k; ++j) phi[j] = sk * v(j);
    out.eigenfunction_blocks.push_back(std::move(phi));
  }

  // Eigenvalues are sorted, so equal values are adjacent.
  std::size_t r = 0;
  while (r < out.eigenvalues.size()) {
    std::size_t e = r + 1;
    double sum = out.eigenvalues[r];
    while (e < out.eigenvalues.size() &&
           std::abs(out.eigenvalues[e] - out.eigenvalues[e - 1]) <= kEigenMergeTol) {
      sum += out.eigenvalues[e];
      ++e;
    }
    double mean = sum / static_cast<double>(e - r);
    if (std::abs(mean) > kEigenMergeTol) {
      out.distinct.push_back(mean);
      out.multiplicity.push_back(static_cast<int>(e - r));
    }
    r = e;
  }
  return out;
}

Eigen::MatrixXd block_moment_matrix(const GraphonModel& model, int k) {
  if (k < 1) throw ParameterError("moment order must be >= 1");
  if (!model.is_block()) throw UnsupportedModelError("no exact moments for geometric graphon");
  const Eigen::MatrixXd& P = model.block_matrix();
  Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(model.weights().data(),
                                                        static_cast<Eigen::Index>(model.weights().size()));
  Eigen::MatrixXd M = P;
  for (int i = 1; i < k; ++i) M = (M * w.asDiagonal()) * P;
  return M;
}

MomentValue graphon_moment(const GraphonModel& model, int k, double x, double y, double rho) {
  if (k < 1) throw ParameterError("moment order must be >= 1");
  if (!(rho > 0.0 && rho <= 1.0)) throw ParameterError("rho must lie in (0,1]");
  if (!model.is_block()) {
    throw UnsupportedModelError("geometric moments need sphere latents; use graphon_moment_sphere");
  }
  int a = model.community_of(x);
  int b = model.community_of(y);
  MomentValue out;
  out.value = std::pow(rho, k) * block_moment_matrix(model, k)(a, b);
  return out;
}

MomentValue graphon_moment_sphere(const GraphonModel& model, int k, const Eigen::VectorXd& x,
                                  const Eigen::VectorXd& y, double rho, std::int64_t mc_samples,
                                  std::uint64_t seed) {
  if (k < 1) throw ParameterError("moment order must be >= 1");
  if (!(rho > 0.0 && rho <= 1.0)) throw ParameterError("rho must lie in (0,1]");
  if (model.kind() != GraphonKind::kGeometric) throw UnsupportedModelError("not a geometric graphon");
  const int dim = model.sphere_dim();
  if (x.size() != dim || y.size() != dim) throw ParameterError("sphere latent has wrong dimension");
  MomentValue out;
  if (k == 1) {
    out.value = rho * model.eval_sphere(x.data(), y.data());
    return out;
  }
  if (mc_samples <= 0) {
    throw UnsupportedModelError("geometric graphon has no exact moment; mc_samples must be > 0");
  }
  CounterRng rng = CounterRng(seed).substream(streams::kMonteCarlo);
  std::int64_t hits = 0;
  Eigen::VectorXd prev(dim), cur(dim);
  std::uint64_t counter = 0;
  for (std::int64_t s = 0; s < mc_samples; ++s) {
    prev = x;
    bool alive = true;
    for (int step = 1; step < k && alive; ++step) {
      for (int c = 0; c < dim; ++c) cur(c) = rng.normal(counter++);
      cur.normalize();
      alive = model.eval_sphere(prev.data(), cur.data()) > 0.0;
      prev.swap(cur);
    }
    // Keep the counter layout fixed regardless of early exits.
    counter = static_cast<std::uint64_t>(s + 1) * static_cast<std::uint64_t>((k - 1) * dim);
    if (alive && model.eval_sphere(prev.data(), y.data()) > 0.0) ++hits;
  }
  const double n = static_cast<double>(mc_samples);
  const double phat = static_cast<double>(hits) / n;
  const double scale = std::pow(rho, k);
  out.value = scale * phat;
  out.std_error = mc_samples > 1 ? scale * std::sqrt(phat * (1.0 - phat) / (n - 1.0)) : 0.0;
  out.exact = false;
  return out;
}

BetaStar beta_star(const std::vector<double>& mu) {
  const std::size_t m = mu.size();
  if (m == 0) throw ParameterError("beta_star needs at least one nonzero eigenvalue");
  double max_abs = 0.0;
  for (std::size_t s = 0; s < m; ++s) {
    if (std::abs(mu[s]) <= kEigenMergeTol) throw SingularSystemError("zero eigenvalue passed to beta_star");
    for (std::size_t t = 0; t < s; ++t) {
      if (std::abs(mu[s] - mu[t]) <= kEigenMergeTol) {
        throw SingularSystemError("duplicated eigenvalues; merge them before solving");
      }
    }
    max_abs = std::max(max_abs, std::abs(mu[s]));
  }
  // p(x) = sum_i beta_i x^i equals 1 at every mu_s and 0 at x = 0, so
  // 1 - p(x) = prod_s (1 - x / mu_s).
  std::vector<double> poly{1.0};
  for (double m_s : mu) {
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] -= poly[i] / m_s;
    }
    poly = std::move(next);
  }
  BetaStar out;
  out.beta.resize(m);
  for (std::size_t i = 1; i <= m; ++i) out.beta[i - 1] = -poly[i];

  for (double m_s : mu) {
    double lhs = 0.0;
    for (std::size_t i = 0; i < m; ++i) lhs += out.beta[i] * std::pow(m_s, static_cast<double>(i + 2));
    out.residual = std::max(out.residual, std::abs(lhs - m_s));
  }
  if (!(out.residual <= 1e-9 * max_abs)) {
    // Polish the closed form with one pass of the explicit system.
    Eigen::MatrixXd V(m, m);
    Eigen::VectorXd rhs(m);
    for (std::size_t s = 0; s < m; ++s) {
      rhs(s) = mu[s];
      for (std::size_t i = 0; i < m; ++i) V(s, i) = std::pow(mu[s], static_cast<double>(i + 2));
    }
    Eigen::VectorXd b = Eigen::Map<Eigen::VectorXd>(out.beta.data(), static_cast<Eigen::Index>(m));
    Eigen::FullPivLU<Eigen::MatrixXd> lu(V);
    if (lu.rank() < static_cast<Eigen::Index>(m)) throw SingularSystemError("moment system is singular");
    b += lu.solve(rhs - V * b);
    out.residual = (V * b - rhs).cwiseAbs().maxCoeff();
    for (std::size_t i = 0; i < m; ++i) out.beta[i] = b(static_cast<Eigen::Index>(i));
  }
  return out;
}

BetaStar beta_star(const SpectralDecomposition& spec) { return beta_star(spec.distinct); }

std::vector<double> population_minimizer(const SpectralDecomposition& spec, int n_coef, double rho) {
  if (n_coef < 1) throw ParameterError("need at least one coefficient");
  const int m = spec.distinct_rank();
  std::vector<double> out(n_coef, 0.0);
  if (m == 0) return out;
  if (n_coef >= m) {
    BetaStar bs = beta_star(spec);
    for (int i = 0; i < m; ++i) out[i] = bs.beta[i] / std::pow(rho, i + 1);
    return out;
  }
  Eigen::MatrixXd X(m, n_coef);
  Eigen::VectorXd y(m);
  for (int s = 0; s < m; ++s) {
    const double w = std::sqrt(static_cast<double>(spec.multiplicity[s]));
    const double x = rho * spec.distinct[s];
    y(s) = w * x;
    for (int r = 0; r < n_coef; ++r) X(s, r) = w * std::pow(x, r + 2);
  }
  Eigen::VectorXd b = X.completeOrthogonalDecomposition().solve(y);
  for (int r = 0; r < n_coef; ++r) out[r] = b(r);
  return out;
}

}  // namespace lggnn
