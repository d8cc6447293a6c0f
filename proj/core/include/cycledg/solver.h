//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CYCLEDG_SOLVER_H_
#define CYCLEDG_SOLVER_H_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cycledg/formulation.h"

namespace cycledg {
struct SolverConfig {
  int starts = 20;
  // 0 selects 5 * (number of variables).
  int max_iterations = 0;
  double gradient_tolerance = 1e-8;
  double objective_target = 1e-16;
  std::uint64_t seed = 1;
  double sufficient_decrease = 1e-4;
  double backtrack_factor = 0.5;
  int memory = 7;
  int threads = 1;

  /// Throws std::invalid_argument on a non-positive count or tolerance.
  void validate() const;
};

class SolveError: public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Euclidean projection onto {z : A z = 0} for the rows of a formulation.
/// The row template is shared by all dimensions, so one orthonormal basis of
/// the template's row space serves every slice.
class AffineProjector {
public:
  explicit AffineProjector(const FormulationInstance &f);

  void project(Eigen::VectorXd &z) const;
  /// Projection onto {z : A z = 0, z_i = 0 for every i with fixed[i]}.
  void project_face(Eigen::VectorXd &z, const std::vector<char> &fixed) const;
  int rank() const { return static_cast<int>(basis_.cols()); }

private:
  Layout layout_;
  Eigen::MatrixXd basis_;  // slice_size x rank, orthonormal columns
};

PointAssignment project_affine(const FormulationInstance &f,
                               const PointAssignment &p);

enum class LocalStatus {
  kGradientTolerance,
  kObjectiveTarget,
  kIterationLimit,
  kStalled,
  kAborted,
};

std::string_view status_name(LocalStatus status);

struct LocalResult {
  Eigen::VectorXd point;
  double objective = 0;
  int iterations = 0;
  LocalStatus status = LocalStatus::kIterationLimit;
  std::string diagnostic;

  bool converged() const {
    return status == LocalStatus::kGradientTolerance
           || status == LocalStatus::kObjectiveTarget;
  }
};

/// Projected limited-memory BFGS with backtracking. Every trial point is
/// projected onto the rows and clipped to the bounds; the returned point
/// satisfies the rows to 1e-9. Accepted objective values never increase.
LocalResult local_solve(const FormulationInstance &f,
                        const AffineProjector &projector,
                        const Eigen::VectorXd &start, const SolverConfig &cfg,
                        std::vector<double> *trace = nullptr);

LocalResult local_solve(const FormulationInstance &f,
                        const PointAssignment &start, const SolverConfig &cfg);

/// Uniform sample in the box, then projected onto the rows.
PointAssignment sample_start(const FormulationInstance &f,
                             const AffineProjector &projector,
                             std::mt19937_64 &rng);
PointAssignment sample_start(const FormulationInstance &f,
                             std::mt19937_64 &rng);

/// Generator for start `index` of a run seeded with `seed`; independent of
/// execution order.
std::mt19937_64 start_rng(std::uint64_t seed, int index);

struct StartRecord {
  int index = 0;
  double objective = 0;
  int iterations = 0;
  LocalStatus status = LocalStatus::kIterationLimit;
  std::string diagnostic;

  bool converged() const {
    return status == LocalStatus::kGradientTolerance
           || status == LocalStatus::kObjectiveTarget;
  }
};

struct SolveResult {
  PointAssignment best;
  double best_objective = 0;
  int best_start = -1;
  std::vector<StartRecord> starts;
  double wall_seconds = 0;
};

/// Runs local_solve from cfg.starts random starts and keeps the best point,
/// ordered by (objective, start index). Stops after the first start (in index
/// order) that reaches the objective target, independently of thread count.
/// Throws SolveError only if every start aborts.
SolveResult multistart(const FormulationInstance &f, const SolverConfig &cfg);
}  // namespace cycledg

#endif  // CYCLEDG_SOLVER_H_
