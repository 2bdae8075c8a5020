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
#include "regression/edge_regression.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "common/errors.hpp"

namespace lggnn {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

SearchSpace SearchSpace::box(std::vector<double> b, double rho) {
  if (b.empty()) throw ParameterError("search space needs at least one coefficient");
  if (!(rho > 0.0 && rho <= 1.0)) throw ParameterError("rho must lie in (0,1]");
  for (double v : b) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ParameterError("box bounds must be positive");
  }
  SearchSpace s;
  s.n_coef = static_cast<int>(b.size());
  s.mode = SpaceMode::kBox;
  s.b = std::move(b);
  s.rho = rho;
  return s;
}

SearchSpace SearchSpace::l1_ball(int n_coef, double radius, double rho) {
  if (n_coef < 1) throw ParameterError("search space needs at least one coefficient");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw ParameterError("l1 radius must be positive");
  SearchSpace s;
  s.n_coef = n_coef;
  s.mode = SpaceMode::kL1Ball;
  s.radius = radius;
  s.rho = rho;
  return s;
}

double SearchSpace::half_width(int i) const { return b[i] / std::pow(rho, i + 1); }

bool SearchSpace::contains(const std::vector<double>& beta, double tol) const {
  if (static_cast<int>(beta.size()) != n_coef) return false;
  if (mode == SpaceMode::kBox) {
    for (int i = 0; i < n_coef; ++i) {
      if (std::abs(beta[i]) > half_width(i) * (1.0 + tol) + tol) return false;
    }
    return true;
  }
  double norm = 0.0;
  for (double v : beta) norm += std::abs(v);
  return norm <= radius + tol;
}

SearchSpace default_box(int n_coef, double rho) {
  return SearchSpace::box(std::vector<double>(static_cast<std::size_t>(n_coef), kDefaultBound), rho);
}

SearchSpace spectrum_box(const SpectralDecomposition& spec, int n_coef, double rho) {
  // Sized at rho = 1; the box scaling supplies the rho^-i factors.
  std::vector<double> beta = population_minimizer(spec, n_coef, 1.0);
  std::vector<double> b(static_cast<std::size_t>(n_coef));
  for (int i = 0; i < n_coef; ++i) b[i] = std::max(kBoundMargin * std::abs(beta[i]), kBoundFloor);
  return SearchSpace::box(std::move(b), rho);
}

SearchSpace spectrum_l1_ball(const SpectralDecomposition& spec, int n_coef, double rho) {
  if (spec.distinct.empty()) throw ParameterError("spectrum has no nonzero eigenvalue");
  double mu1 = *std::max_element(spec.distinct.begin(), spec.distinct.end());
  if (!(mu1 > 0.0)) throw ParameterError("leading eigenvalue must be positive");
  return SearchSpace::l1_ball(n_coef, 1.0 / (mu1 * rho), rho);
}

SufficientStats::SufficientStats(int d)
    : dim(d), gram(Mat::Zero(d, d)), cross(Vec::Zero(d)) {}

void SufficientStats::add(const double* q, double a) {
  for (int r = 0; r < dim; ++r) {
    cross(r) += a * q[r];
    for (int c = 0; c <= r; ++c) gram(r, c) += q[r] * q[c];
  }
  for (int r = 0; r < dim; ++r) {
    for (int c = r + 1; c < dim; ++c) gram(r, c) = gram(c, r);
  }
  target_ss += a * a;
  ++pair_count;
}

void SufficientStats::merge(const SufficientStats& other) {
  if (other.dim != dim) throw ParameterError("cannot merge statistics of different width");
  gram += other.gram;
  cross += other.cross;
  target_ss += other.target_ss;
  pair_count += other.pair_count;
}

namespace {

void require_same_n(const MomentEstimates& m, const SampledGraph& g) {
  if (m.n != g.n) throw ParameterError("moments and graph disagree on n");
}

}  // namespace

SufficientStats accumulate_stats(const MomentEstimates& moments, const SampledGraph& graph,
                                 const PairFilter& filter) {
  require_same_n(moments, graph);
  SufficientStats s(moments.width());
  std::int64_t p = 0;
  for (int i = 0; i < graph.n; ++i) {
    auto nb = graph.neighbors(i);
    auto it = std::upper_bound(nb.begin(), nb.end(), i);
    for (int j = i + 1; j < graph.n; ++j, ++p) {
      bool edge = it != nb.end() && *it == j;
      if (edge) ++it;
      if (filter && !filter(i, j)) continue;
      s.add(moments.row(p), edge ? 1.0 : 0.0);
    }
  }
  if (s.pair_count == 0) throw EmptyDataError("pair filter accepted no pairs");
  return s;
}

SufficientStats accumulate_stats(const MomentEstimates& moments, const SampledGraph& graph,
                                 const PairList& pairs) {
  require_same_n(moments, graph);
  SufficientStats s(moments.width());
  for (auto [i, j] : pairs) {
    s.add(moments.row(MomentEstimates::pair_index(graph.n, i, j)), graph.has_edge(i, j) ? 1.0 : 0.0);
  }
  if (s.pair_count == 0) throw EmptyDataError("pair list is empty");
  return s;
}

SufficientStats accumulate_rows(const std::vector<double>& rows, int dim, const std::vector<double>& targets) {
  if (dim < 1 || rows.size() != targets.size() * static_cast<std::size_t>(dim)) {
    throw ParameterError("row matrix and targets disagree");
  }
  SufficientStats s(dim);
  for (std::size_t p = 0; p < targets.size(); ++p) s.add(rows.data() + p * dim, targets[p]);
  if (s.pair_count == 0) throw EmptyDataError("no rows to accumulate");
  return s;
}

namespace {

// Quadratic model of the objective with the floored gram and the
// diagonally weighted ridge.
struct Quadratic {
  Mat H;       // Hessian
  Vec lin;     // (2/N) c
  double cst;  // s / N
  Vec ridge_w;
  bool psd_warning = false;

  double value(const Vec& b) const { return 0.5 * b.dot(H * b) - lin.dot(b) + cst; }
  Vec grad(const Vec& b) const { return H * b - lin; }
};

Quadratic make_quadratic(const SufficientStats& stats) {
  if (stats.pair_count <= 0) throw EmptyDataError("no accumulated pairs");
  const double N = static_cast<double>(stats.pair_count);
  const int d = stats.dim;
  Quadratic q;
  Mat G = 0.5 * (stats.gram + stats.gram.transpose());
  Eigen::SelfAdjointEigenSolver<Mat> es(G);
  double lmin = es.eigenvalues().minCoeff();
  double lmax = es.eigenvalues().cwiseAbs().maxCoeff();
  if (lmin < 0.0) {
    q.psd_warning = lmin < -1e-12 * std::max(lmax, 1e-300);
    Vec ev = es.eigenvalues().cwiseMax(0.0);
    G = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
  }
  q.ridge_w.resize(d);
  for (int i = 0; i < d; ++i) {
    double h = stats.gram(i, i) / N;
    q.ridge_w(i) = h > 0.0 ? h : 1.0;
  }
  q.H = (2.0 / N) * G;
  q.H.diagonal() += 2.0 * kRidge * q.ridge_w;
  q.lin = (2.0 / N) * stats.cross;
  q.cst = stats.target_ss / N;
  return q;
}

double largest_eigenvalue(const Mat& M) {
  Eigen::SelfAdjointEigenSolver<Mat> es(M, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

std::vector<double> to_std(const Vec& v) { return {v.data(), v.data() + v.size()}; }

Vec project_l1(const Vec& v, double r) {
  if (v.cwiseAbs().sum() <= r) return v;
  // Duchi et al. sort-based projection.
  std::vector<double> u(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) u[i] = std::abs(v(i));
  std::sort(u.begin(), u.end(), std::greater<>());
  double cum = 0.0, theta = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    cum += u[j];
    double t = (cum - r) / static_cast<double>(j + 1);
    if (u[j] - t > 0.0) theta = t;
  }
  Vec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    double a = std::max(std::abs(v(i)) - theta, 0.0);
    out(i) = v(i) < 0 ? -a : a;
  }
  return out;
}

struct Box {
  Vec lo, hi;
};

Vec clamp(const Vec& v, const Box& box) { return v.cwiseMax(box.lo).cwiseMin(box.hi); }

// Norm of the projected gradient for a box.
double box_pg_norm(const Vec& b, const Vec& g, const Box& box) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < b.size(); ++i) {
    double pg = g(i);
    if (b(i) <= box.lo(i)) pg = std::min(pg, 0.0);
    if (b(i) >= box.hi(i)) pg = std::max(pg, 0.0);
    m = std::max(m, std::abs(pg));
  }
  return m;
}

// Newton step on the free coordinates, fixed ones stay put; falls back to the
// longest feasible fraction of the step.
bool polish_box(const Quadratic& q, const Box& box, Vec& b) {
  Vec g = q.grad(b);
  std::vector<int> freev;
  for (Eigen::Index i = 0; i < b.size(); ++i) {
    bool at_lo = b(i) <= box.lo(i) && g(i) >= 0.0;
    bool at_hi = b(i) >= box.hi(i) && g(i) <= 0.0;
    if (!at_lo && !at_hi) freev.push_back(static_cast<int>(i));
  }
  if (freev.empty()) return false;
  const auto f = static_cast<Eigen::Index>(freev.size());
  Mat Hff(f, f);
  Vec gf(f);
  for (Eigen::Index a = 0; a < f; ++a) {
    gf(a) = g(freev[a]);
    for (Eigen::Index c = 0; c < f; ++c) Hff(a, c) = q.H(freev[a], freev[c]);
  }
  Vec step = Hff.ldlt().solve(-gf);
  if (!step.allFinite()) return false;
  double t = 1.0;
  for (Eigen::Index a = 0; a < f; ++a) {
    int i = freev[a];
    if (step(a) > 0.0 && b(i) + step(a) > box.hi(i)) t = std::min(t, (box.hi(i) - b(i)) / step(a));
    if (step(a) < 0.0 && b(i) + step(a) < box.lo(i)) t = std::min(t, (box.lo(i) - b(i)) / step(a));
  }
  Vec cand = b;
  for (Eigen::Index a = 0; a < f; ++a) cand(freev[a]) += t * step(a);
  cand = clamp(cand, box);
  if (q.value(cand) < q.value(b)) {
    b = cand;
    return true;
  }
  return false;
}

double l1_pg_norm(const Vec& b, const Vec& g, double lip, double r) {
  return lip * (b - project_l1(b - g / lip, r)).cwiseAbs().maxCoeff();
}

bool polish_l1(const Quadratic& q, double r, Vec& b) {
  const Eigen::Index d = b.size();
  Vec g = q.grad(b);
  const double norm = b.cwiseAbs().sum();
  Vec cand;
  if (norm < r * (1.0 - 1e-12)) {
    Vec step = q.H.ldlt().solve(-g);
    if (!step.allFinite()) return false;
    cand = b + step;
    if (cand.cwiseAbs().sum() > r) {
      double lo = 0.0, hi = 1.0;
      for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        ((b + mid * step).cwiseAbs().sum() <= r ? lo : hi) = mid;
      }
      cand = b + lo * step;
    }
  } else {
    std::vector<int> supp;
    for (Eigen::Index i = 0; i < d; ++i) {
      if (b(i) != 0.0) supp.push_back(static_cast<int>(i));
    }
    if (supp.empty()) return false;
    const auto s = static_cast<Eigen::Index>(supp.size());
    Mat K = Mat::Zero(s + 1, s + 1);
    Vec rhs(s + 1);
    double sb = 0.0;
    for (Eigen::Index a = 0; a < s; ++a) {
      double sign = b(supp[a]) > 0 ? 1.0 : -1.0;
      for (Eigen::Index c = 0; c < s; ++c) K(a, c) = q.H(supp[a], supp[c]);
      K(a, s) = sign;
      K(s, a) = sign;
      rhs(a) = -g(supp[a]);
      sb += sign * b(supp[a]);
    }
    rhs(s) = r - sb;
    Vec sol = K.fullPivLu().solve(rhs);
    if (!sol.allFinite()) return false;
    double t = 1.0;
    for (Eigen::Index a = 0; a < s; ++a) {
      double cur = b(supp[a]);
      double nxt = cur + sol(a);
      if ((cur > 0 && nxt < 0) || (cur < 0 && nxt > 0)) t = std::min(t, -cur / sol(a));
    }
    cand = b;
    for (Eigen::Index a = 0; a < s; ++a) cand(supp[a]) += t * sol(a);
    cand = project_l1(cand, r);
  }
  if (q.value(cand) < q.value(b)) {
    b = cand;
    return true;
  }
  return false;
}

}  // namespace

double regression_objective(const SufficientStats& stats, const std::vector<double>& beta) {
  if (static_cast<int>(beta.size()) != stats.dim) throw ParameterError("coefficient size mismatch");
  Quadratic q = make_quadratic(stats);
  return q.value(Eigen::Map<const Vec>(beta.data(), stats.dim));
}

KktCertificate check_kkt(const SufficientStats& stats, const SearchSpace& space,
                         const std::vector<double>& beta, double tol) {
  Quadratic q = make_quadratic(stats);
  const int d = stats.dim;
  Vec b = Eigen::Map<const Vec>(beta.data(), d);
  Vec g = q.grad(b);
  KktCertificate cert;
  if (space.mode == SpaceMode::kBox) {
    for (int i = 0; i < d; ++i) {
      double w = space.half_width(i);
      cert.feasibility = std::max(cert.feasibility, std::max(0.0, std::abs(b(i)) - w));
      double edge = 1e-9 * w;
      if (b(i) >= w - edge) {
        cert.sign_violation = std::max(cert.sign_violation, std::max(0.0, g(i)));
      } else if (b(i) <= -w + edge) {
        cert.sign_violation = std::max(cert.sign_violation, std::max(0.0, -g(i)));
      } else {
        cert.stationarity = std::max(cert.stationarity, std::abs(g(i)));
      }
    }
  } else {
    const double r = space.radius;
    double norm = b.cwiseAbs().sum();
    cert.feasibility = std::max(0.0, norm - r);
    if (norm < r * (1.0 - 1e-9)) {
      cert.stationarity = g.cwiseAbs().maxCoeff();
    } else {
      // g_i = -nu sign(b_i) on the support, |g_i| <= nu elsewhere, nu >= 0.
      double nu = 0.0;
      int count = 0;
      for (int i = 0; i < d; ++i) {
        if (b(i) != 0.0) {
          nu += -(b(i) > 0 ? 1.0 : -1.0) * g(i);
          ++count;
        }
      }
      nu = count > 0 ? nu / count : g.cwiseAbs().maxCoeff();
      cert.sign_violation = std::max(0.0, -nu);
      for (int i = 0; i < d; ++i) {
        if (b(i) != 0.0) {
          double sign = b(i) > 0 ? 1.0 : -1.0;
          cert.stationarity = std::max(cert.stationarity, std::abs(g(i) + nu * sign));
        } else {
          cert.sign_violation = std::max(cert.sign_violation, std::abs(g(i)) - nu);
        }
      }
    }
  }
  cert.ok = cert.stationarity <= tol && cert.sign_violation <= tol && cert.feasibility <= 1e-9;
  return cert;
}

RegressionFit fit_box_constrained(const SufficientStats& stats, const SearchSpace& space, double tol,
                                  int max_iter) {
  if (space.n_coef != stats.dim) throw ParameterError("search space and statistics disagree on width");
  if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");
  const int d = stats.dim;
  Quadratic q = make_quadratic(stats);

  RegressionFit fit;
  fit.method = FitMethod::kBoxPg;
  fit.space = space;
  fit.has_space = true;
  fit.psd_warning = q.psd_warning;

  constexpr int kPolishEvery = 25;
  auto slack = [&](double f) { return 1e-12 * (std::abs(q.cst) + std::abs(f)) + 1e-300; };

  Vec beta = Vec::Zero(d);
  if (space.mode == SpaceMode::kBox) {
    // Jacobi scaling beta = D gamma; the box stays a box.
    Vec D = q.H.diagonal().cwiseSqrt().cwiseInverse();
    Quadratic qs = q;
    qs.H = D.asDiagonal() * q.H * D.asDiagonal();
    qs.lin = D.cwiseProduct(q.lin);
    Box box;
    box.hi.resize(d);
    for (int i = 0; i < d; ++i) box.hi(i) = space.half_width(i) / D(i);
    box.lo = -box.hi;
    Box beta_box{box.lo.cwiseProduct(D), box.hi.cwiseProduct(D)};
    const double lip = largest_eigenvalue(qs.H);
    const double gscale = qs.lin.cwiseAbs().maxCoeff();

    Vec gamma = Vec::Zero(d);
    double f = qs.value(gamma);
    auto done = [&]() {
      Vec gs = qs.grad(gamma);
      Vec b = D.cwiseProduct(gamma);
      return box_pg_norm(b, q.grad(b), beta_box) <= tol &&
             box_pg_norm(gamma, gs, box) <= std::max(tol, 1e-12 * gscale);
    };
    int it = 0;
    while (it < max_iter && !done()) {
      ++it;
      gamma = clamp(gamma - qs.grad(gamma) / lip, box);
      double fn = qs.value(gamma);
      if (fn > f + slack(f)) fit.monotone = false;
      f = fn;
      if (it % kPolishEvery == 0) {
        while (polish_box(qs, box, gamma)) {
        }
        f = qs.value(gamma);
      }
    }
    fit.iterations = it;
    fit.converged = done();
    beta = D.cwiseProduct(gamma);
    // Snap values that round past the bound.
    beta = clamp(beta, beta_box);
  } else {
    const double r = space.radius;
    const double lip = largest_eigenvalue(q.H);
    double f = q.value(beta);
    auto done = [&]() { return l1_pg_norm(beta, q.grad(beta), lip, r) <= tol; };
    int it = 0;
    while (it < max_iter && !done()) {
      ++it;
      beta = project_l1(beta - q.grad(beta) / lip, r);
      double fn = q.value(beta);
      if (fn > f + slack(f)) fit.monotone = false;
      f = fn;
      if (it % kPolishEvery == 0) {
        while (polish_l1(q, r, beta)) {
        }
        f = q.value(beta);
      }
    }
    fit.iterations = it;
    fit.converged = done();
  }
  fit.beta = to_std(beta);
  fit.objective = q.value(beta);
  fit.kkt = check_kkt(stats, space, fit.beta, 10.0 * tol);
  return fit;
}

RegressionFit fit_pls_design(const std::vector<double>& X, int dim, const std::vector<double>& y,
                             int components) {
  if (dim < 1 || X.size() != y.size() * static_cast<std::size_t>(dim)) {
    throw ParameterError("design matrix and response disagree");
  }
  if (components < 1 || components > dim) throw ParameterError("components must lie in 1..L+1");
  const auto N = static_cast<Eigen::Index>(y.size());
  if (N == 0) throw EmptyDataError("no rows for PLS");

  Mat Xc = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      X.data(), N, dim);
  Vec yc = Eigen::Map<const Vec>(y.data(), N);
  const Vec xmean = Xc.colwise().mean().transpose();
  const double ymean = yc.mean();
  Xc.rowwise() -= xmean.transpose();
  yc.array() -= ymean;

  RegressionFit fit;
  fit.method = FitMethod::kPls;
  fit.components = components;
  for (int c = 0; c < dim; ++c) {
    if (Xc.col(c).cwiseAbs().maxCoeff() == 0.0) fit.zero_variance_warning = true;
  }

  Mat W(dim, components), P(dim, components);
  Vec coef(components);
  int used = 0;
  for (int a = 0; a < components; ++a) {
    Vec w = Xc.transpose() * yc;
    double wn = w.norm();
    if (!(wn > 0.0)) break;
    w /= wn;
    Vec t = Xc * w;
    double tt = t.squaredNorm();
    if (!(tt > 0.0)) break;
    Vec p = Xc.transpose() * t / tt;
    double c = t.dot(yc) / tt;
    Xc -= t * p.transpose();
    yc -= c * t;
    W.col(a) = w;
    P.col(a) = p;
    coef(a) = c;
    ++used;
  }
  Vec beta = Vec::Zero(dim);
  if (used > 0) {
    Mat Wu = W.leftCols(used);
    Mat PtW = P.leftCols(used).transpose() * Wu;
    beta = Wu * PtW.partialPivLu().solve(coef.head(used));
  }
  fit.beta = to_std(beta);
  fit.intercept = ymean - xmean.dot(beta);
  fit.iterations = used;
  fit.converged = true;

  // Mean squared residual on the training rows.
  Vec Xb = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
               X.data(), N, dim) * beta;
  Vec resid = (Xb.array() + fit.intercept).matrix() - Eigen::Map<const Vec>(y.data(), N);
  fit.objective = resid.squaredNorm() / static_cast<double>(N);
  return fit;
}

namespace {

template <class Visit>
void for_each_filtered(const MomentEstimates& moments, const SampledGraph& graph, const PairFilter& filter,
                       Visit&& visit) {
  std::int64_t p = 0;
  for (int i = 0; i < graph.n; ++i) {
    auto nb = graph.neighbors(i);
    auto it = std::upper_bound(nb.begin(), nb.end(), i);
    for (int j = i + 1; j < graph.n; ++j, ++p) {
      bool edge = it != nb.end() && *it == j;
      if (edge) ++it;
      if (filter && !filter(i, j)) continue;
      visit(moments.row(p), edge ? 1.0 : 0.0);
    }
  }
}

}  // namespace

RegressionFit fit_pls(const MomentEstimates& moments, const SampledGraph& graph, int components,
                      const PairFilter& filter) {
  require_same_n(moments, graph);
  const int w = moments.width();
  std::vector<double> X, y;
  for_each_filtered(moments, graph, filter, [&](const double* q, double a) {
    X.insert(X.end(), q, q + w);
    y.push_back(a);
  });
  if (y.empty()) throw EmptyDataError("pair filter accepted no pairs");
  return fit_pls_design(X, w, y, components);
}

RegressionFit fit_pls(const MomentEstimates& moments, const SampledGraph& graph, int components,
                      const PairList& pairs) {
  require_same_n(moments, graph);
  const int w = moments.width();
  std::vector<double> X, y;
  X.reserve(pairs.size() * static_cast<std::size_t>(w));
  for (auto [i, j] : pairs) {
    const double* q = moments.row(MomentEstimates::pair_index(graph.n, i, j));
    X.insert(X.end(), q, q + w);
    y.push_back(graph.has_edge(i, j) ? 1.0 : 0.0);
  }
  if (y.empty()) throw EmptyDataError("pair list is empty");
  return fit_pls_design(X, w, y, components);
}

double predict_row(const RegressionFit& fit, const double* q, bool clamp_out) {
  double s = fit.intercept;
  for (std::size_t r = 0; r < fit.beta.size(); ++r) s += fit.beta[r] * q[r];
  if (clamp_out) s = std::clamp(s, 0.0, 1.0);
  return s;
}

std::vector<double> predict(const RegressionFit& fit, const MomentEstimates& moments, bool clamp_out) {
  if (static_cast<int>(fit.beta.size()) != moments.width()) {
    throw ParameterError("fit and moments disagree on width");
  }
  std::vector<double> out(static_cast<std::size_t>(moments.pair_count()));
  for (std::int64_t p = 0; p < moments.pair_count(); ++p) out[p] = predict_row(fit, moments.row(p), clamp_out);
  return out;
}

std::vector<double> predict_rows(const RegressionFit& fit, const std::vector<double>& rows, bool clamp_out) {
  const std::size_t w = fit.beta.size();
  if (w == 0 || rows.size() % w != 0) throw ParameterError("rows do not match coefficient width");
  std::vector<double> out(rows.size() / w);
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = predict_row(fit, rows.data() + p * w, clamp_out);
  return out;
}

PairList threshold_edges(const std::vector<double>& p_hat, int n, double gamma) {
  if (std::isnan(gamma)) throw ParameterError("threshold must not be NaN");
  if (static_cast<std::int64_t>(p_hat.size()) != static_cast<std::int64_t>(n) * (n - 1) / 2) {
    throw ParameterError("prediction vector does not cover all pairs");
  }
  PairList out;
  std::int64_t p = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++p) {
      if (p_hat[p] >= gamma) out.emplace_back(i, j);
    }
  }
  return out;
}

double population_risk_sbm(const SpectralDecomposition& spec, const std::vector<double>& beta, double rho) {
  if (spec.eigenvalues.empty()) throw UnsupportedModelError("population risk needs a block spectrum");
  if (!(rho > 0.0 && rho <= 1.0)) throw ParameterError("rho must lie in (0,1]");
  double risk = 0.0;
  for (double mu : spec.eigenvalues) {
    const double x = rho * mu;
    double fitted = 0.0;
    for (std::size_t r = 0; r < beta.size(); ++r) fitted += beta[r] * std::pow(x, static_cast<double>(r + 2));
    risk += (x - fitted) * (x - fitted);
  }
  return risk;
}

double gen_error_bound(const SpectralDecomposition& spec, int L) {
  if (L < 0) throw ParameterError("L must be >= 0");
  const int m = spec.distinct_rank();
  const int k = L + 1;
  if (k >= m) return 0.0;
  const BetaStar bs = beta_star(spec);
  double total = 0.0;
  for (double mu : spec.distinct) {
    double inner = 0.0;
    for (int r = k; r <= m; ++r) {
      inner += bs.beta[r - 1] * (std::pow(mu, r + 1) - std::pow(mu, L + 2));
    }
    total += inner * inner;
  }
  return std::sqrt(total);
}

double empirical_risk(const RegressionFit& fit, const MomentEstimates& moments, const SampledGraph& graph,
                      const PairFilter& filter) {
  require_same_n(moments, graph);
  if (static_cast<int>(fit.beta.size()) != moments.width()) {
    throw ParameterError("coefficients and moments disagree on width");
  }
  double sum = 0.0;
  std::int64_t count = 0;
  for_each_filtered(moments, graph, filter, [&](const double* q, double a) {
    double e = predict_row(fit, q) - a;
    sum += e * e;
    ++count;
  });
  if (count == 0) throw EmptyDataError("pair filter accepted no pairs");
  return sum / static_cast<double>(count);
}

double empirical_risk(const std::vector<double>& beta, const MomentEstimates& moments,
                      const SampledGraph& graph, const PairFilter& filter) {
  RegressionFit fit;
  fit.beta = beta;
  return empirical_risk(fit, moments, graph, filter);
}

nlohmann::json fit_to_json(const RegressionFit& fit) {
  nlohmann::json j;
  j["method"] = fit.method == FitMethod::kPls ? "pls" : "box_pg";
  j["beta"] = fit.beta;
  j["intercept"] = fit.intercept;
  j["objective"] = fit.objective;
  j["iterations"] = fit.iterations;
  j["converged"] = fit.converged;
  if (fit.method == FitMethod::kPls) j["components"] = fit.components;
  if (fit.has_space) {
    nlohmann::json b;
    b["mode"] = fit.space.mode == SpaceMode::kBox ? "box" : "l1_ball";
    b["rho"] = fit.space.rho;
    if (fit.space.mode == SpaceMode::kBox) {
      b["b"] = fit.space.b;
      std::vector<double> hw;
      for (int i = 0; i < fit.space.n_coef; ++i) hw.push_back(fit.space.half_width(i));
      b["half_widths"] = hw;
    } else {
      b["radius"] = fit.space.radius;
    }
    j["bounds"] = b;
    j["kkt"] = {{"ok", fit.kkt.ok},
                {"stationarity", fit.kkt.stationarity},
                {"sign_violation", fit.kkt.sign_violation},
                {"feasibility", fit.kkt.feasibility}};
    j["monotone"] = fit.monotone;
  }
  j["warnings"] = {{"psd_floor", fit.psd_warning}, {"zero_variance_column", fit.zero_variance_warning}};
  return j;
}

}  // namespace lggnn
