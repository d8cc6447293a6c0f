//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cycledg/formulation.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cycledg {
std::string_view kind_name(FormulationKind kind) {
  switch (kind) {
  case FormulationKind::kCycle:
    return "cycle";
  case FormulationKind::kEuler:
    return "euler";
  case FormulationKind::kEdge:
    return "edge";
  }
  return "?";
}

std::optional<FormulationKind> parse_kind(std::string_view name) {
  for (auto kind: { FormulationKind::kCycle, FormulationKind::kEuler,
                    FormulationKind::kEdge }) {
    if (kind_name(kind) == name)
      return kind;
  }
  return std::nullopt;
}

PointAssignment::PointAssignment(Layout layout, Eigen::VectorXd values)
    : layout_(layout), values_(std::move(values)) {
  if (values_.size() != layout_.size())
    throw std::invalid_argument("point size does not match layout");
}

Eigen::MatrixXd PointAssignment::x_block() const {
  Eigen::MatrixXd x(layout_.n, layout_.dim);
  for (int i = 0; i < layout_.n; ++i)
    for (int k = 0; k < layout_.dim; ++k)
      x(i, k) = this->x(i, k);
  return x;
}

Eigen::MatrixXd PointAssignment::y_block() const {
  Eigen::MatrixXd y(layout_.m, layout_.dim);
  for (int e = 0; e < layout_.m; ++e)
    for (int k = 0; k < layout_.dim; ++k)
      y(e, k) = this->y(e, k);
  return y;
}

FormulationInstance::FormulationInstance(FormulationKind kind,
                                         const WeightedGraph &g,
                                         Layout layout,
                                         std::vector<LinearRow> slice_rows,
                                         Eigen::VectorXd lower,
                                         Eigen::VectorXd upper)
    : kind_(kind), layout_(layout), edges_(g.edges()),
      slice_rows_(std::move(slice_rows)), lower_(std::move(lower)),
      upper_(std::move(upper)) {
  if (!layout_.has_x && !layout_.has_y)
    throw std::invalid_argument("formulation has no variables");
  if (lower_.size() != layout_.size() || upper_.size() != layout_.size())
    throw std::invalid_argument("bounds do not match layout");
  for (const LinearRow &row: slice_rows_) {
    for (const auto &[idx, coef]: row.terms) {
      if (idx < 0 || idx >= layout_.slice_size())
        throw std::invalid_argument("row index outside the slice");
    }
  }
}

std::vector<LinearRow> FormulationInstance::rows() const {
  std::vector<LinearRow> out;
  out.reserve(num_rows());
  for (int k = 0; k < layout_.dim; ++k) {
    for (const LinearRow &row: slice_rows_) {
      LinearRow r;
      for (const auto &[idx, coef]: row.terms)
        r.terms.emplace_back(layout_.from_slice(idx, k), coef);
      out.push_back(std::move(r));
    }
  }
  return out;
}

double FormulationInstance::edge_residual(const Eigen::VectorXd &z,
                                          int e) const {
  const Edge &ed = edges_[e];
  double sq = 0;
  for (int k = 0; k < layout_.dim; ++k) {
    double t = layout_.has_y ? z[layout_.y(e, k)]
                             : z[layout_.x(ed.u, k)] - z[layout_.x(ed.v, k)];
    sq += t * t;
  }
  return sq - ed.d * ed.d;
}

double FormulationInstance::objective(const Eigen::VectorXd &z) const {
  double f = 0;
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    double r = edge_residual(z, e);
    f += r * r;
  }
  return f;
}

double FormulationInstance::objective_and_gradient(
    const Eigen::VectorXd &z, Eigen::VectorXd &grad) const {
  grad.setZero(z.size());
  double f = 0;
  const int dim = layout_.dim;
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const Edge &ed = edges_[e];
    double r = edge_residual(z, e);
    f += r * r;
    if (layout_.has_y) {
      for (int k = 0; k < dim; ++k)
        grad[layout_.y(e, k)] += 4 * r * z[layout_.y(e, k)];
    } else {
      for (int k = 0; k < dim; ++k) {
        double t = 4 * r * (z[layout_.x(ed.u, k)] - z[layout_.x(ed.v, k)]);
        grad[layout_.x(ed.u, k)] += t;
        grad[layout_.x(ed.v, k)] -= t;
      }
    }
  }
  return f;
}

double FormulationInstance::row_violation(const Eigen::VectorXd &z) const {
  double worst = 0;
  for (int k = 0; k < layout_.dim; ++k) {
    for (const LinearRow &row: slice_rows_) {
      double s = 0;
      for (const auto &[idx, coef]: row.terms)
        s += coef * z[layout_.from_slice(idx, k)];
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

namespace {
  void set_x_bounds(const WeightedGraph &g, const Layout &layout,
                    Eigen::VectorXd &lower, Eigen::VectorXd &upper) {
    const double half = 0.5 * g.total_weight();
    for (int i = 0; i < layout.n; ++i) {
      for (int k = 0; k < layout.dim; ++k) {
        lower[layout.x(i, k)] = -half;
        upper[layout.x(i, k)] = half;
      }
    }
  }

  void set_y_bounds(const WeightedGraph &g, const Layout &layout,
                    Eigen::VectorXd &lower, Eigen::VectorXd &upper) {
    for (int e = 0; e < layout.m; ++e) {
      for (int k = 0; k < layout.dim; ++k) {
        lower[layout.y(e, k)] = -g.edge(e).d;
        upper[layout.y(e, k)] = g.edge(e).d;
      }
    }
  }

  LinearRow centroid_row(const Layout &layout) {
    LinearRow row;
    for (int i = 0; i < layout.n; ++i)
      row.terms.emplace_back(layout.slice_x(i), 1.0);
    return row;
  }
}  // namespace

FormulationInstance build_edge(const WeightedGraph &g) {
  Layout layout { g.num_vertices(), g.num_edges(), g.dim(), true, false };
  Eigen::VectorXd lower(layout.size()), upper(layout.size());
  set_x_bounds(g, layout, lower, upper);
  return { FormulationKind::kEdge, g, layout, { centroid_row(layout) },
           std::move(lower), std::move(upper) };
}

FormulationInstance build_cycle(const WeightedGraph &g, const ArcSet &arcs,
                                const CycleBasis &basis) {
  if (static_cast<int>(arcs.size()) != g.num_edges())
    throw std::invalid_argument("arc set does not match graph");

  Layout layout { g.num_vertices(), g.num_edges(), g.dim(), false, true };
  std::vector<LinearRow> rows;
  rows.reserve(basis.size());
  for (const SignedCycle &c: basis.cycles) {
    LinearRow row;
    for (const CycleTerm &t: c.terms)
      row.terms.emplace_back(layout.slice_y(t.edge), t.coef);
    rows.push_back(std::move(row));
  }

  Eigen::VectorXd lower(layout.size()), upper(layout.size());
  set_y_bounds(g, layout, lower, upper);
  return { FormulationKind::kCycle, g, layout, std::move(rows),
           std::move(lower), std::move(upper) };
}

FormulationInstance build_euler(const WeightedGraph &g, const ArcSet &arcs,
                                const EulerStructure &es) {
  if (static_cast<int>(arcs.size()) != g.num_edges()
      || static_cast<int>(es.row_coef.size()) != g.num_edges())
    throw std::invalid_argument("Euler structure does not match graph");

  Layout layout { g.num_vertices(), g.num_edges(), g.dim(), true, true };
  std::vector<LinearRow> rows;
  rows.reserve(g.num_edges() + 2);

  LinearRow circuit_row;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (es.row_coef[e] != 0)
      circuit_row.terms.emplace_back(layout.slice_y(e), es.row_coef[e]);
  }
  rows.push_back(std::move(circuit_row));

  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    rows.push_back(LinearRow { { { layout.slice_x(arcs[e].tail), 1.0 },
                                 { layout.slice_x(arcs[e].head), -1.0 },
                                 { layout.slice_y(e), -1.0 } } });
  }
  rows.push_back(centroid_row(layout));

  Eigen::VectorXd lower(layout.size()), upper(layout.size());
  set_x_bounds(g, layout, lower, upper);
  set_y_bounds(g, layout, lower, upper);
  return { FormulationKind::kEuler, g, layout, std::move(rows),
           std::move(lower), std::move(upper) };
}

double eval_objective(const FormulationInstance &f, const PointAssignment &p) {
  if (p.values().size() != f.num_variables())
    throw std::invalid_argument("point does not match formulation layout");
  return f.objective(p.values());
}

Eigen::VectorXd eval_gradient(const FormulationInstance &f,
                              const PointAssignment &p) {
  if (p.values().size() != f.num_variables())
    throw std::invalid_argument("point does not match formulation layout");
  Eigen::VectorXd grad;
  f.objective_and_gradient(p.values(), grad);
  return grad;
}

Eigen::MatrixXd induced_differences(const ArcSet &arcs,
                                    const Eigen::MatrixXd &x) {
  Eigen::MatrixXd y(static_cast<Eigen::Index>(arcs.size()), x.cols());
  for (std::size_t e = 0; e < arcs.size(); ++e)
    y.row(static_cast<Eigen::Index>(e)) = x.row(arcs[e].tail) - x.row(arcs[e].head);
  return y;
}
}  // namespace cycledg
