//
// Project cycledg - Copyright 2026 The cycledg Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cycledg/solver.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <cmath>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <Eigen/QR>

namespace cycledg {
void SolverConfig::validate() const {
  if (starts < 1)
    throw std::invalid_argument("starts must be at least 1");
  if (max_iterations < 0)
    throw std::invalid_argument("max_iterations must be nonnegative");
  if (!(gradient_tolerance > 0) || !(objective_target > 0))
    throw std::invalid_argument("tolerances must be positive");
  if (!(sufficient_decrease > 0 && sufficient_decrease < 1))
    throw std::invalid_argument("sufficient_decrease must be in (0, 1)");
  if (!(backtrack_factor > 0 && backtrack_factor < 1))
    throw std::invalid_argument("backtrack_factor must be in (0, 1)");
  if (memory < 1)
    throw std::invalid_argument("memory must be at least 1");
  if (threads < 1)
    throw std::invalid_argument("threads must be at least 1");
}

std::string_view status_name(LocalStatus status) {
  switch (status) {
  case LocalStatus::kGradientTolerance:
    return "gradient-tolerance";
  case LocalStatus::kObjectiveTarget:
    return "objective-target";
  case LocalStatus::kIterationLimit:
    return "iteration-limit";
  case LocalStatus::kStalled:
    return "stalled";
  case LocalStatus::kAborted:
    return "aborted";
  }
  return "?";
}

AffineProjector::AffineProjector(const FormulationInstance &f)
    : layout_(f.layout()) {
  const auto &rows = f.slice_rows();
  if (rows.empty())
    return;

  const int s = layout_.slice_size();
  Eigen::MatrixXd at = Eigen::MatrixXd::Zero(s, static_cast<Eigen::Index>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto &[idx, coef]: rows[r].terms)
      at(idx, static_cast<Eigen::Index>(r)) += coef;
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(at);
  qr.setThreshold(1e-12);
  const Eigen::Index rank = qr.rank();
  basis_ = qr.householderQ() * Eigen::MatrixXd::Identity(s, rank);
}

void AffineProjector::project(Eigen::VectorXd &z) const {
  if (basis_.cols() == 0)
    return;

  const int s = layout_.slice_size();
  Eigen::VectorXd slice(s);
  for (int k = 0; k < layout_.dim; ++k) {
    for (int j = 0; j < s; ++j)
      slice[j] = z[layout_.from_slice(j, k)];
    slice.noalias() -= basis_ * (basis_.transpose() * slice);
    for (int j = 0; j < s; ++j)
      z[layout_.from_slice(j, k)] = slice[j];
  }
}

void AffineProjector::project_face(Eigen::VectorXd &z,
                                   const std::vector<char> &fixed) const {
  const int s = layout_.slice_size();
  Eigen::VectorXd slice(s);
  std::vector<int> active;
  for (int k = 0; k < layout_.dim; ++k) {
    active.clear();
    for (int j = 0; j < s; ++j) {
      slice[j] = z[layout_.from_slice(j, k)];
      if (fixed[layout_.from_slice(j, k)])
        active.push_back(j);
    }
    if (basis_.cols() > 0)
      slice.noalias() -= basis_ * (basis_.transpose() * slice);
    if (!active.empty() && basis_.cols() > 0) {
      // Schur system on the active coordinates: (I - Q_S Q_S^T) lambda = h_S.
      const Eigen::Index na = static_cast<Eigen::Index>(active.size());
      Eigen::MatrixXd qs(na, basis_.cols());
      Eigen::VectorXd hs(na);
      for (Eigen::Index a = 0; a < na; ++a) {
        qs.row(a) = basis_.row(active[a]);
        hs[a] = slice[active[a]];
      }
      Eigen::MatrixXd schur = Eigen::MatrixXd::Identity(na, na)
                              - qs * qs.transpose();
      Eigen::VectorXd lambda =
          Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd>(schur)
              .solve(hs);
      Eigen::VectorXd w = Eigen::VectorXd::Zero(s);
      for (Eigen::Index a = 0; a < na; ++a)
        w[active[a]] = lambda[a];
      w.noalias() -= basis_ * (basis_.transpose() * w);
      slice -= w;
    }
    for (int j: active)
      slice[j] = 0;
    for (int j = 0; j < s; ++j)
      z[layout_.from_slice(j, k)] = slice[j];
  }
}

PointAssignment project_affine(const FormulationInstance &f,
                               const PointAssignment &p) {
  Eigen::VectorXd z = p.values();
  if (z.size() != f.num_variables())
    throw std::invalid_argument("point does not match formulation layout");
  AffineProjector(f).project(z);
  return { f.layout(), std::move(z) };
}

namespace {
  constexpr int kMaxFeasibilityRounds = 500;
  constexpr double kMinStep = 1e-20;
  constexpr int kMaxFaceRounds = 8;
  constexpr double kActiveTol = 1e-12;

  double box_violation(const FormulationInstance &f, const Eigen::VectorXd &z) {
    return std::max((f.lower() - z).maxCoeff(), (z - f.upper()).maxCoeff());
  }

  // Alternating projections between the rows and the box; both sets contain
  // the origin, so the iteration converges to a point of the intersection.
  void restore_feasibility(const FormulationInstance &f,
                           const AffineProjector &projector,
                           Eigen::VectorXd &z) {
    projector.project(z);
    for (int round = 0; round < kMaxFeasibilityRounds; ++round) {
      if (z.size() == 0 || box_violation(f, z) <= 1e-12)
        return;
      z = z.cwiseMax(f.lower()).cwiseMin(f.upper());
      projector.project(z);
    }
  }

  // Largest t >= 0 with lower <= z + t d <= upper.
  double max_box_step(const FormulationInstance &f, const Eigen::VectorXd &z,
                      const Eigen::VectorXd &d) {
    double t = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < z.size(); ++i) {
      if (d[i] > 0)
        t = std::min(t, (f.upper()[i] - z[i]) / d[i]);
      else if (d[i] < 0)
        t = std::min(t, (f.lower()[i] - z[i]) / d[i]);
    }
    return std::max(t, 0.0);
  }

  // Restricts d to the face of the box it pushes against, keeping A d = 0.
  void face_direction(const FormulationInstance &f,
                      const AffineProjector &projector,
                      const Eigen::VectorXd &z, Eigen::VectorXd &d,
                      std::vector<char> &fixed) {
    std::fill(fixed.begin(), fixed.end(), 0);
    for (int round = 0; round < kMaxFaceRounds; ++round) {
      bool grew = false;
      for (Eigen::Index i = 0; i < z.size(); ++i) {
        const bool at_upper = z[i] >= f.upper()[i] - kActiveTol && d[i] > 0;
        const bool at_lower = z[i] <= f.lower()[i] + kActiveTol && d[i] < 0;
        if (!fixed[i] && (at_upper || at_lower)) {
          fixed[i] = 1;
          grew = true;
        }
      }
      if (!grew)
        return;
      projector.project_face(d, fixed);
    }
  }

  struct CurvaturePair {
    Eigen::VectorXd s;
    Eigen::VectorXd y;
    double rho;
  };

  Eigen::VectorXd two_loop(const std::deque<CurvaturePair> &mem,
                           const Eigen::VectorXd &g) {
    Eigen::VectorXd q = g;
    std::vector<double> alpha(mem.size());
    for (std::size_t i = mem.size(); i-- > 0;) {
      alpha[i] = mem[i].rho * mem[i].s.dot(q);
      q.noalias() -= alpha[i] * mem[i].y;
    }
    if (!mem.empty()) {
      const CurvaturePair &last = mem.back();
      q *= last.s.dot(last.y) / last.y.squaredNorm();
    }
    for (std::size_t i = 0; i < mem.size(); ++i) {
      double beta = mem[i].rho * mem[i].y.dot(q);
      q.noalias() += (alpha[i] - beta) * mem[i].s;
    }
    return -q;
  }

  bool finite(double f, const Eigen::VectorXd &g) {
    return std::isfinite(f) && g.allFinite();
  }
}  // namespace

LocalResult local_solve(const FormulationInstance &f,
                        const AffineProjector &projector,
                        const Eigen::VectorXd &start, const SolverConfig &cfg,
                        std::vector<double> *trace) {
  if (start.size() != f.num_variables())
    throw std::invalid_argument("start does not match formulation layout");

  const int max_iter =
      cfg.max_iterations > 0 ? cfg.max_iterations : 5 * f.num_variables();

  LocalResult res;
  res.point = start;
  if (!start.allFinite()) {
    res.objective = std::numeric_limits<double>::quiet_NaN();
    res.status = LocalStatus::kAborted;
    res.diagnostic = "start point has non-finite entries";
    return res;
  }
  restore_feasibility(f, projector, res.point);

  Eigen::VectorXd grad, pgrad;
  double fx = f.objective_and_gradient(res.point, grad);
  if (!finite(fx, grad)) {
    res.objective = fx;
    res.status = LocalStatus::kAborted;
    res.diagnostic = "non-finite objective or gradient at the start";
    return res;
  }
  pgrad = grad;
  projector.project(pgrad);
  if (trace != nullptr)
    trace->push_back(fx);

  std::deque<CurvaturePair> mem;
  Eigen::VectorXd trial, trial_grad, dir;
  std::vector<char> fixed(static_cast<std::size_t>(res.point.size()), 0);

  res.status = LocalStatus::kIterationLimit;
  for (res.iterations = 0; res.iterations < max_iter; ++res.iterations) {
    if (fx <= cfg.objective_target) {
      res.status = LocalStatus::kObjectiveTarget;
      break;
    }
    if (pgrad.lpNorm<Eigen::Infinity>() <= cfg.gradient_tolerance) {
      res.status = LocalStatus::kGradientTolerance;
      break;
    }

    dir = two_loop(mem, pgrad);
    projector.project(dir);
    face_direction(f, projector, res.point, dir, fixed);
    double slope = grad.dot(dir);
    if (!(slope < 0)) {
      mem.clear();
      dir = -pgrad;
      face_direction(f, projector, res.point, dir, fixed);
      slope = grad.dot(dir);
      if (!(slope < 0)) {
        dir = -pgrad;
        slope = grad.dot(dir);
      }
    }

    double step = mem.empty() ? std::min(1.0, 1.0 / dir.norm()) : 1.0;
    const double box_step = max_box_step(f, res.point, dir);
    const bool inside = box_step >= kMinStep;
    if (inside)
      step = std::min(step, box_step);
    double ft = 0;
    bool accepted = false;
    while (step >= kMinStep) {
      trial = res.point + step * dir;
      if (inside)
        trial = trial.cwiseMax(f.lower()).cwiseMin(f.upper());
      else if (box_violation(f, trial) > 0)
        restore_feasibility(f, projector, trial);

      ft = f.objective(trial);
      double decrease = grad.dot(trial - res.point);
      if (std::isfinite(ft) && ft <= fx
          && ft <= fx + cfg.sufficient_decrease * decrease) {
        accepted = true;
        break;
      }
      step *= cfg.backtrack_factor;
    }
    if (!accepted) {
      res.status = LocalStatus::kStalled;
      break;
    }

    ft = f.objective_and_gradient(trial, trial_grad);
    if (!finite(ft, trial_grad)) {
      res.status = LocalStatus::kAborted;
      res.diagnostic = "non-finite objective or gradient at iteration "
                       + std::to_string(res.iterations);
      break;
    }

    Eigen::VectorXd pnew = trial_grad;
    projector.project(pnew);
    CurvaturePair cp { trial - res.point, pnew - pgrad, 0 };
    double sy = cp.s.dot(cp.y);
    if (sy > 1e-12 * cp.y.squaredNorm() && sy > 0) {
      cp.rho = 1 / sy;
      mem.push_back(std::move(cp));
      if (static_cast<int>(mem.size()) > cfg.memory)
        mem.pop_front();
    }

    res.point.swap(trial);
    grad.swap(trial_grad);
    pgrad.swap(pnew);
    fx = ft;
    if (trace != nullptr)
      trace->push_back(fx);
  }

  // Rows exact to rounding at the returned point.
  projector.project(res.point);
  res.objective = f.objective(res.point);
  return res;
}

LocalResult local_solve(const FormulationInstance &f,
                        const PointAssignment &start, const SolverConfig &cfg) {
  return local_solve(f, AffineProjector(f), start.values(), cfg);
}

std::mt19937_64 start_rng(std::uint64_t seed, int index) {
  std::seed_seq seq { static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index) };
  return std::mt19937_64(seq);
}

PointAssignment sample_start(const FormulationInstance &f,
                             const AffineProjector &projector,
                             std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::VectorXd z(f.num_variables());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    double lo = f.lower()[i], hi = f.upper()[i];
    z[i] = lo + (hi - lo) * unit(rng);
  }
  projector.project(z);
  return { f.layout(), std::move(z) };
}

PointAssignment sample_start(const FormulationInstance &f,
                             std::mt19937_64 &rng) {
  return sample_start(f, AffineProjector(f), rng);
}

SolveResult multistart(const FormulationInstance &f, const SolverConfig &cfg) {
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();

  const AffineProjector projector(f);
  std::vector<std::optional<LocalResult>> results(cfg.starts);
  std::atomic<int> next { 0 };
  std::atomic<int> stop_after { INT_MAX };

  auto worker = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= cfg.starts || i > stop_after.load())
        return;

      LocalResult r;
      try {
        auto rng = start_rng(cfg.seed, i);
        PointAssignment s = sample_start(f, projector, rng);
        r = local_solve(f, projector, s.values(), cfg);
      } catch (const std::exception &ex) {
        r.status = LocalStatus::kAborted;
        r.diagnostic = ex.what();
      }

      if (r.status != LocalStatus::kAborted
          && r.objective <= cfg.objective_target) {
        int cur = stop_after.load();
        while (i < cur && !stop_after.compare_exchange_weak(cur, i)) { }
      }
      results[i] = std::move(r);
    }
  };

  const int nthreads = std::min(cfg.threads, cfg.starts);
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back(worker);
    for (auto &th: pool)
      th.join();
  }

  const int last = std::min(cfg.starts - 1, stop_after.load());
  SolveResult out;
  for (int i = 0; i <= last; ++i) {
    LocalResult &r = *results[i];
    out.starts.push_back({ i, r.objective, r.iterations, r.status,
                           r.diagnostic });
    if (r.status == LocalStatus::kAborted)
      continue;
    if (out.best_start < 0 || r.objective < out.best_objective) {
      out.best_start = i;
      out.best_objective = r.objective;
      out.best = PointAssignment(f.layout(), std::move(r.point));
    }
  }

  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (out.best_start < 0)
    throw SolveError("every start aborted: " + out.starts.front().diagnostic);
  return out;
}
}  // namespace cycledg
