//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cycledg/recovery.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

namespace cycledg {
std::string_view recovery_name(RecoveryMode mode) {
  return mode == RecoveryMode::kL1 ? "l1" : "ls";
}

std::optional<RecoveryMode> parse_recovery(std::string_view name) {
  if (name == "ls")
    return RecoveryMode::kLeastSquares;
  if (name == "l1")
    return RecoveryMode::kL1;
  return std::nullopt;
}

namespace {
  // Weighted graph Laplacian with the smallest vertex of every component
  // grounded at zero; the remaining system is positive definite.
  class GroundedLaplacian {
  public:
    GroundedLaplacian(const WeightedGraph &g, const ArcSet &arcs,
                      const Components &comp)
        : g_(&g), arcs_(&arcs), index_(g.num_vertices(), -1) {
      std::vector<char> root_seen(comp.count, 0);
      int next = 0;
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (root_seen[comp.label[v]] == 0) {
          root_seen[comp.label[v]] = 1;
          continue;
        }
        index_[v] = next++;
      }
      size_ = next;
    }

    int size() const { return size_; }

    void factor(const Eigen::VectorXd &w) {
      std::vector<Eigen::Triplet<double>> trip;
      trip.reserve(4 * w.size());
      for (EdgeId e = 0; e < g_->num_edges(); ++e) {
        int a = index_[(*arcs_)[e].tail], b = index_[(*arcs_)[e].head];
        if (a >= 0)
          trip.emplace_back(a, a, w[e]);
        if (b >= 0)
          trip.emplace_back(b, b, w[e]);
        if (a >= 0 && b >= 0) {
          trip.emplace_back(a, b, -w[e]);
          trip.emplace_back(b, a, -w[e]);
        }
      }
      Eigen::SparseMatrix<double> lap(size_, size_);
      lap.setFromTriplets(trip.begin(), trip.end());
      solver_.compute(lap);
      if (solver_.info() != Eigen::Success)
        throw std::runtime_error("Laplacian factorization failed");
    }

    // Minimizes sum_e w_e (x_i - x_j - y_e)^2 with roots at zero.
    Eigen::VectorXd solve(const Eigen::VectorXd &w,
                          const Eigen::VectorXd &y) const {
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(size_);
      for (EdgeId e = 0; e < g_->num_edges(); ++e) {
        int a = index_[(*arcs_)[e].tail], b = index_[(*arcs_)[e].head];
        if (a >= 0)
          rhs[a] += w[e] * y[e];
        if (b >= 0)
          rhs[b] -= w[e] * y[e];
      }

      Eigen::VectorXd x = Eigen::VectorXd::Zero(g_->num_vertices());
      if (size_ == 0)
        return x;
      Eigen::VectorXd sol = solver_.solve(rhs);
      for (VertexId v = 0; v < g_->num_vertices(); ++v) {
        if (index_[v] >= 0)
          x[v] = sol[index_[v]];
      }
      return x;
    }

  private:
    const WeightedGraph *g_;
    const ArcSet *arcs_;
    std::vector<int> index_;
    int size_ = 0;
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver_;
  };

  void center_components(const Components &comp, Eigen::VectorXd &x) {
    std::vector<double> sum(comp.count, 0.0);
    std::vector<int> cnt(comp.count, 0);
    for (Eigen::Index v = 0; v < x.size(); ++v) {
      sum[comp.label[v]] += x[v];
      ++cnt[comp.label[v]];
    }
    for (Eigen::Index v = 0; v < x.size(); ++v)
      x[v] -= sum[comp.label[v]] / cnt[comp.label[v]];
  }
}  // namespace

RecoveredRealization recover_realization(const WeightedGraph &g,
                                         const ArcSet &arcs,
                                         const Eigen::MatrixXd &y,
                                         const RecoveryOptions &opts) {
  if (y.rows() != g.num_edges() || y.cols() != g.dim())
    throw std::invalid_argument("y must be m x K");
  if (!y.allFinite())
    throw std::invalid_argument("y has non-finite entries");

  const Components comp = connected_components(g);
  GroundedLaplacian lap(g, arcs, comp);

  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(g.num_edges());
  lap.factor(ones);

  RecoveredRealization out { Realization(g.num_vertices(), g.dim()),
                             comp.count };
  for (int k = 0; k < g.dim(); ++k) {
    Eigen::VectorXd yk = y.col(k);
    Eigen::VectorXd x = lap.solve(ones, yk);

    if (opts.mode == RecoveryMode::kL1) {
      GroundedLaplacian wlap(g, arcs, comp);
      Eigen::VectorXd w(g.num_edges());
      const double eps2 = opts.l1_smoothing * opts.l1_smoothing;
      for (int it = 0; it < opts.l1_iterations; ++it) {
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
          double r = x[arcs[e].tail] - x[arcs[e].head] - yk[e];
          w[e] = 1 / std::sqrt(r * r + eps2);
        }
        // Normalise so the largest weight is 1; keeps the factorization
        // well scaled when residuals vanish.
        if (w.size() > 0)
          w /= w.maxCoeff();
        wlap.factor(w);
        x = wlap.solve(w, yk);
      }
    }

    center_components(comp, x);
    out.x.col(k) = x;
  }
  return out;
}

ResidualSummary residual_check(const WeightedGraph &g, const ArcSet &arcs,
                               const Realization &x, const Eigen::MatrixXd &y) {
  if (x.rows() != g.num_vertices() || y.rows() != g.num_edges()
      || x.cols() != y.cols())
    throw std::invalid_argument("shape mismatch in residual_check");

  ResidualSummary s;
  const auto count = static_cast<double>(y.size());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    for (Eigen::Index k = 0; k < y.cols(); ++k) {
      double r = std::abs(x(arcs[e].tail, k) - x(arcs[e].head, k) - y(e, k));
      s.max = std::max(s.max, r);
      s.mean += r;
    }
  }
  if (count > 0)
    s.mean /= count;
  return s;
}
}  // namespace cycledg
