//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CYCLEDG_FORMULATION_H_
#define CYCLEDG_FORMULATION_H_

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cycledg/euler.h"
#include "cycledg/graph.h"

namespace cycledg {
enum class FormulationKind { kCycle, kEuler, kEdge };

std::string_view kind_name(FormulationKind kind);
std::optional<FormulationKind> parse_kind(std::string_view name);

/// Position of every variable in the flat vector. Blocks are stored
/// vertex-major (x_{i,0..K-1} contiguous), x block first.
struct Layout {
  int n = 0;
  int m = 0;
  int dim = 0;
  bool has_x = false;
  bool has_y = false;

  int x_offset() const { return 0; }
  int y_offset() const { return has_x ? n * dim : 0; }
  int size() const { return (has_x ? n * dim : 0) + (has_y ? m * dim : 0); }

  int x(int i, int k) const { return x_offset() + i * dim + k; }
  int y(int e, int k) const { return y_offset() + e * dim + k; }

  // Variables belonging to one dimension: x block then y block.
  int slice_size() const { return (has_x ? n : 0) + (has_y ? m : 0); }
  int slice_x(int i) const { return i; }
  int slice_y(int e) const { return (has_x ? n : 0) + e; }
  int from_slice(int local, int k) const {
    if (has_x && local < n)
      return x(local, k);
    return y(local - (has_x ? n : 0), k);
  }
};

/// Homogeneous sparse row: sum of coef * z[index] = 0.
struct LinearRow {
  std::vector<std::pair<int, double>> terms;
};

class PointAssignment {
public:
  PointAssignment() = default;
  explicit PointAssignment(Layout layout)
      : layout_(layout), values_(Eigen::VectorXd::Zero(layout.size())) { }
  PointAssignment(Layout layout, Eigen::VectorXd values);

  const Layout &layout() const { return layout_; }
  const Eigen::VectorXd &values() const { return values_; }
  Eigen::VectorXd &values() { return values_; }

  double x(int i, int k) const { return values_[layout_.x(i, k)]; }
  double &x(int i, int k) { return values_[layout_.x(i, k)]; }
  double y(int e, int k) const { return values_[layout_.y(e, k)]; }
  double &y(int e, int k) { return values_[layout_.y(e, k)]; }

  /// n x K block of vertex positions; requires an x block.
  Eigen::MatrixXd x_block() const;
  /// m x K block of edge projections; requires a y block.
  Eigen::MatrixXd y_block() const;

private:
  Layout layout_;
  Eigen::VectorXd values_;
};

/// Smooth quartic objective, homogeneous linear rows and box bounds over a
/// flat variable vector. Immutable after construction.
///
/// The rows are given per dimension as a template over one slice of the
/// layout (see Layout::slice_size()); the same template applies to every
/// dimension k.
class FormulationInstance {
public:
  FormulationInstance(FormulationKind kind, const WeightedGraph &g,
                      Layout layout, std::vector<LinearRow> slice_rows,
                      Eigen::VectorXd lower, Eigen::VectorXd upper);

  FormulationKind kind() const { return kind_; }
  const Layout &layout() const { return layout_; }
  int num_variables() const { return layout_.size(); }

  const std::vector<LinearRow> &slice_rows() const { return slice_rows_; }
  /// Rows expanded over all dimensions, dimension-major.
  std::vector<LinearRow> rows() const;
  int num_rows() const {
    return static_cast<int>(slice_rows_.size()) * layout_.dim;
  }

  const Eigen::VectorXd &lower() const { return lower_; }
  const Eigen::VectorXd &upper() const { return upper_; }

  const std::vector<Edge> &edges() const { return edges_; }

  double objective(const Eigen::VectorXd &z) const;
  double objective_and_gradient(const Eigen::VectorXd &z,
                                Eigen::VectorXd &grad) const;

  /// Residual sum_k (...)^2 - d_e^2 of edge e.
  double edge_residual(const Eigen::VectorXd &z, int e) const;

  /// max |row . z| over all rows.
  double row_violation(const Eigen::VectorXd &z) const;

private:
  FormulationKind kind_;
  Layout layout_;
  std::vector<Edge> edges_;
  std::vector<LinearRow> slice_rows_;
  Eigen::VectorXd lower_;
  Eigen::VectorXd upper_;
};

/// Edge-based model over x: centroid rows and bounds +-(sum of weights)/2.
FormulationInstance build_edge(const WeightedGraph &g);

/// Cycle-based model over y: one row per basis cycle and dimension, bounds
/// -d_e <= y_ek <= d_e.
FormulationInstance build_cycle(const WeightedGraph &g, const ArcSet &arcs,
                                const CycleBasis &basis);

/// Eulerian relaxation over (x, y): the aggregated circuit row, the coupling
/// rows x_i - x_j - y_e = 0 and the centroid row, per dimension.
FormulationInstance build_euler(const WeightedGraph &g, const ArcSet &arcs,
                                const EulerStructure &es);

double eval_objective(const FormulationInstance &f, const PointAssignment &p);
Eigen::VectorXd eval_gradient(const FormulationInstance &f,
                              const PointAssignment &p);

/// y_ek = x_ik - x_jk along each arc (i, j).
Eigen::MatrixXd induced_differences(const ArcSet &arcs,
                                    const Eigen::MatrixXd &x);
}  // namespace cycledg

#endif  // CYCLEDG_FORMULATION_H_
