#pragma once

#include <string>

#include "opi/constraint_system.hpp"

namespace opi::solver {

struct SolverSettings {
  double tol_feas = 1e-8;
  double tol_gap = 1e-8;
  int max_iter = 400;
  double time_limit_s = 120.0;
  bool verbose = false;

  /// Reads overrides from config keys (max_iter, tol_feas, tol_gap,
  /// time_limit_s) given as "key=value" strings.
  void apply(const std::vector<std::pair<std::string, std::string>>& kv);
};

enum class SolveStatus { optimal, infeasible, unbounded, limit };

std::string to_string(SolveStatus s);

struct SolverReport {
  SolveStatus status = SolveStatus::limit;
  double objective = 0.0;
  gramsets::ConstraintSystem::Assignment primal;
  double max_eq_residual = 0.0;
  double min_psd_slack = 0.0;
  int iterations = 0;
  double wall_time_s = 0.0;
  std::string diagnostics;
};

/// Name of the active conic backend; selected through the OPI_SOLVER_BACKEND
/// environment variable. Throws BackendError for unknown names.
std::string backend_name();

/// Solves the system with its objective (feasibility when none is set).
/// Deterministic given fixed settings and backend version. Never silently
/// returns a value: statuses other than optimal carry diagnostics.
SolverReport solve(const gramsets::ConstraintSystem& cs, const SolverSettings& settings = {});

struct FeasibilityReport {
  bool feasible = false;
  /// Worst signed PSD slack. Feasible: the smallest eigenvalue slack of the
  /// returned point (about zero at the boundary). Infeasible: -t* where t*
  /// is the smallest uniform shift of all PSD constraints that restores
  /// feasibility, capped at 1.
  double margin = 0.0;
  SolverReport report;
};

/// Solves with zero objective; for infeasible systems a relaxation solve
/// quantifies the violation.
FeasibilityReport feasibility(const gramsets::ConstraintSystem& cs,
                              const SolverSettings& settings = {});

}  // namespace opi::solver
