#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "opi/errors.hpp"

namespace opi::gramsets {

/// Reference to entry (i,j) of a symmetric matrix variable; canonical i <= j,
/// the same coefficient applies to the mirrored entry.
struct MatEntryRef {
  int var = 0;
  int i = 0;
  int j = 0;
};

/// Affine scalar expression over matrix-variable entries and scalar
/// variables: constant + sum coeff * G_var(i,j) + sum coeff * s_k.
class LinExpr {
 public:
  double constant = 0.0;
  std::vector<std::pair<MatEntryRef, double>> mat_terms;
  std::vector<std::pair<int, double>> scalar_terms;

  LinExpr() = default;
  static LinExpr constant_of(double c);
  static LinExpr entry(int var, int i, int j, double coeff = 1.0);
  static LinExpr scalar(int id, double coeff = 1.0);

  LinExpr& operator+=(const LinExpr& o);
  LinExpr& operator-=(const LinExpr& o);
  LinExpr& operator*=(double c);

  friend LinExpr operator+(LinExpr a, const LinExpr& b) { a += b; return a; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { a -= b; return a; }
  friend LinExpr operator*(LinExpr a, double c) { a *= c; return a; }
  friend LinExpr operator*(double c, LinExpr a) { a *= c; return a; }
  friend LinExpr operator-(LinExpr a) { a *= -1.0; return a; }

  /// Merges duplicate terms, drops zeros, sorts deterministically.
  void simplify();
  bool is_zero(double tol = 0.0) const;
};

struct MatrixVar {
  std::string name;
  int dim = 0;
  bool psd = true;  // false: free symmetric (used by relaxations)
};

struct ScalarVar {
  std::string name;
};

struct EqConstraint {
  std::string name;
  LinExpr expr;  // expr == 0
};

struct IneqConstraint {
  std::string name;
  LinExpr expr;  // expr >= 0
};

/// Symmetric affine matrix expression required PSD. Entries stored as the
/// upper triangle in row-major order: (0,0),(0,1),...,(0,d-1),(1,1),...
struct PsdConstraint {
  std::string name;
  int dim = 0;
  std::vector<LinExpr> upper;

  static int tri_count(int dim) { return dim * (dim + 1) / 2; }
  static int tri_index(int dim, int i, int j);
  const LinExpr& at(int i, int j) const { return upper[tri_index(dim, i, j)]; }
};

enum class Sense { minimize, maximize };

/// Solver-agnostic SDP: symmetric PSD matrix variables, free scalar
/// variables, affine equalities, affine scalar inequalities and affine PSD
/// constraints, plus an optional affine objective.
class ConstraintSystem {
 public:
  int add_matrix_var(std::string name, int dim, bool psd = true);
  void grow_matrix_var(int var, int new_dim);
  int add_scalar_var(std::string name);

  void add_eq(std::string name, LinExpr expr);
  void add_ineq(std::string name, LinExpr expr);
  void add_psd(std::string name, int dim, std::vector<LinExpr> upper);
  void set_objective(Sense sense, LinExpr expr);

  const std::vector<MatrixVar>& matrix_vars() const { return mat_vars_; }
  const std::vector<ScalarVar>& scalar_vars() const { return scalar_vars_; }
  const std::vector<EqConstraint>& eqs() const { return eqs_; }
  const std::vector<IneqConstraint>& ineqs() const { return ineqs_; }
  const std::vector<PsdConstraint>& psds() const { return psds_; }
  bool has_objective() const { return has_objective_; }
  Sense sense() const { return sense_; }
  const LinExpr& objective() const { return objective_; }

  /// Checks variable references and PSD entry counts; throws on violation.
  void validate() const;

  /// Values for every variable, in declaration order.
  struct Assignment {
    std::vector<Eigen::MatrixXd> mats;
    std::vector<double> scalars;
  };

  double eval(const LinExpr& e, const Assignment& a) const;
  Eigen::MatrixXd eval_psd(const PsdConstraint& c, const Assignment& a) const;

  struct Residuals {
    double max_eq_violation = 0.0;   // max |expr|
    double max_ineq_violation = 0.0; // max(0, -expr)
    double min_psd_eig = 0.0;        // over PSD constraints and PSD variables
  };
  Residuals residuals(const Assignment& a) const;

  /// Human-readable constraint dump with a stable line format.
  void print(std::ostream& os) const;

 private:
  std::vector<MatrixVar> mat_vars_;
  std::vector<ScalarVar> scalar_vars_;
  std::vector<EqConstraint> eqs_;
  std::vector<IneqConstraint> ineqs_;
  std::vector<PsdConstraint> psds_;
  LinExpr objective_;
  Sense sense_ = Sense::minimize;
  bool has_objective_ = false;
};

}  // namespace opi::gramsets
