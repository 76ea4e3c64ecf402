#include "opi/constraint_system.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace opi::gramsets {

LinExpr LinExpr::constant_of(double c) {
  LinExpr e;
  e.constant = c;
  return e;
}

LinExpr LinExpr::entry(int var, int i, int j, double coeff) {
  LinExpr e;
  if (i > j) std::swap(i, j);
  e.mat_terms.push_back({MatEntryRef{var, i, j}, coeff});
  return e;
}

LinExpr LinExpr::scalar(int id, double coeff) {
  LinExpr e;
  e.scalar_terms.push_back({id, coeff});
  return e;
}

LinExpr& LinExpr::operator+=(const LinExpr& o) {
  constant += o.constant;
  mat_terms.insert(mat_terms.end(), o.mat_terms.begin(), o.mat_terms.end());
  scalar_terms.insert(scalar_terms.end(), o.scalar_terms.begin(), o.scalar_terms.end());
  return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& o) {
  constant -= o.constant;
  mat_terms.reserve(mat_terms.size() + o.mat_terms.size());
  for (const auto& [ref, c] : o.mat_terms) mat_terms.push_back({ref, -c});
  for (const auto& [id, c] : o.scalar_terms) scalar_terms.push_back({id, -c});
  return *this;
}

LinExpr& LinExpr::operator*=(double c) {
  constant *= c;
  for (auto& t : mat_terms) t.second *= c;
  for (auto& t : scalar_terms) t.second *= c;
  return *this;
}

void LinExpr::simplify() {
  auto key = [](const MatEntryRef& r) {
    return std::tuple<int, int, int>(r.var, r.i, r.j);
  };
  std::sort(mat_terms.begin(), mat_terms.end(),
            [&](const auto& a, const auto& b) { return key(a.first) < key(b.first); });
  std::vector<std::pair<MatEntryRef, double>> merged;
  for (const auto& t : mat_terms) {
    if (!merged.empty() && key(merged.back().first) == key(t.first))
      merged.back().second += t.second;
    else
      merged.push_back(t);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const auto& t) { return t.second == 0.0; }),
               merged.end());
  mat_terms = std::move(merged);

  std::sort(scalar_terms.begin(), scalar_terms.end());
  std::vector<std::pair<int, double>> smerged;
  for (const auto& t : scalar_terms) {
    if (!smerged.empty() && smerged.back().first == t.first)
      smerged.back().second += t.second;
    else
      smerged.push_back(t);
  }
  smerged.erase(std::remove_if(smerged.begin(), smerged.end(),
                               [](const auto& t) { return t.second == 0.0; }),
                smerged.end());
  scalar_terms = std::move(smerged);
}

bool LinExpr::is_zero(double tol) const {
  if (std::abs(constant) > tol) return false;
  for (const auto& t : mat_terms)
    if (std::abs(t.second) > tol) return false;
  for (const auto& t : scalar_terms)
    if (std::abs(t.second) > tol) return false;
  return true;
}

int PsdConstraint::tri_index(int dim, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * dim - i * (i - 1) / 2 + (j - i);
}

int ConstraintSystem::add_matrix_var(std::string name, int dim, bool psd) {
  if (dim < 0) throw DimensionError("add_matrix_var: negative dimension");
  mat_vars_.push_back(MatrixVar{std::move(name), dim, psd});
  return static_cast<int>(mat_vars_.size()) - 1;
}

void ConstraintSystem::grow_matrix_var(int var, int new_dim) {
  if (var < 0 || var >= static_cast<int>(mat_vars_.size()))
    throw DimensionError("grow_matrix_var: unknown variable");
  if (new_dim < mat_vars_[var].dim)
    throw DimensionError("grow_matrix_var: shrinking not allowed");
  mat_vars_[var].dim = new_dim;
}

int ConstraintSystem::add_scalar_var(std::string name) {
  scalar_vars_.push_back(ScalarVar{std::move(name)});
  return static_cast<int>(scalar_vars_.size()) - 1;
}

void ConstraintSystem::add_eq(std::string name, LinExpr expr) {
  expr.simplify();
  eqs_.push_back(EqConstraint{std::move(name), std::move(expr)});
}

void ConstraintSystem::add_ineq(std::string name, LinExpr expr) {
  expr.simplify();
  ineqs_.push_back(IneqConstraint{std::move(name), std::move(expr)});
}

void ConstraintSystem::add_psd(std::string name, int dim, std::vector<LinExpr> upper) {
  if (static_cast<int>(upper.size()) != PsdConstraint::tri_count(dim))
    throw DimensionError("add_psd: wrong number of entries for dim " + std::to_string(dim));
  for (LinExpr& e : upper) e.simplify();
  psds_.push_back(PsdConstraint{std::move(name), dim, std::move(upper)});
}

void ConstraintSystem::set_objective(Sense sense, LinExpr expr) {
  expr.simplify();
  sense_ = sense;
  objective_ = std::move(expr);
  has_objective_ = true;
}

namespace {

void check_expr(const LinExpr& e, const std::vector<MatrixVar>& mv, int ns,
                const std::string& where) {
  for (const auto& [ref, c] : e.mat_terms) {
    (void)c;
    if (ref.var < 0 || ref.var >= static_cast<int>(mv.size()))
      throw DimensionError(where + ": unknown matrix variable");
    if (ref.i < 0 || ref.j < ref.i || ref.j >= mv[ref.var].dim)
      throw DimensionError(where + ": entry out of range for " + mv[ref.var].name);
  }
  for (const auto& [id, c] : e.scalar_terms) {
    (void)c;
    if (id < 0 || id >= ns) throw DimensionError(where + ": unknown scalar variable");
  }
}

}  // namespace

void ConstraintSystem::validate() const {
  const int ns = static_cast<int>(scalar_vars_.size());
  for (const auto& c : eqs_) check_expr(c.expr, mat_vars_, ns, "eq " + c.name);
  for (const auto& c : ineqs_) check_expr(c.expr, mat_vars_, ns, "ineq " + c.name);
  for (const auto& c : psds_) {
    if (static_cast<int>(c.upper.size()) != PsdConstraint::tri_count(c.dim))
      throw DimensionError("psd " + c.name + ": entry count mismatch");
    for (const LinExpr& e : c.upper) check_expr(e, mat_vars_, ns, "psd " + c.name);
  }
  if (has_objective_) check_expr(objective_, mat_vars_, ns, "objective");
}

double ConstraintSystem::eval(const LinExpr& e, const Assignment& a) const {
  double v = e.constant;
  for (const auto& [ref, c] : e.mat_terms) v += c * a.mats[ref.var](ref.i, ref.j);
  for (const auto& [id, c] : e.scalar_terms) v += c * a.scalars[id];
  return v;
}

Eigen::MatrixXd ConstraintSystem::eval_psd(const PsdConstraint& c, const Assignment& a) const {
  Eigen::MatrixXd m(c.dim, c.dim);
  for (int i = 0; i < c.dim; ++i)
    for (int j = i; j < c.dim; ++j) m(i, j) = m(j, i) = eval(c.at(i, j), a);
  return m;
}

ConstraintSystem::Residuals ConstraintSystem::residuals(const Assignment& a) const {
  Residuals r;
  r.min_psd_eig = std::numeric_limits<double>::infinity();
  for (const auto& c : eqs_)
    r.max_eq_violation = std::max(r.max_eq_violation, std::abs(eval(c.expr, a)));
  for (const auto& c : ineqs_)
    r.max_ineq_violation = std::max(r.max_ineq_violation, std::max(0.0, -eval(c.expr, a)));
  auto min_eig = [](const Eigen::MatrixXd& m) {
    if (m.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
  };
  for (const auto& c : psds_) r.min_psd_eig = std::min(r.min_psd_eig, min_eig(eval_psd(c, a)));
  for (std::size_t k = 0; k < mat_vars_.size(); ++k)
    if (mat_vars_[k].psd && mat_vars_[k].dim > 0)
      r.min_psd_eig = std::min(r.min_psd_eig, min_eig(a.mats[k]));
  if (!std::isfinite(r.min_psd_eig)) r.min_psd_eig = 0.0;
  return r;
}

namespace {

void print_expr(std::ostream& os, const LinExpr& e, const std::vector<MatrixVar>& mv,
                const std::vector<ScalarVar>& sv) {
  bool first = true;
  auto sep = [&](double c) {
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    return std::abs(c);
  };
  for (const auto& [ref, c] : e.mat_terms) {
    if (c == 0) continue;
    const double m = sep(c);
    if (m != 1.0) os << m << "*";
    os << mv[ref.var].name << "(" << ref.i << "," << ref.j << ")";
  }
  for (const auto& [id, c] : e.scalar_terms) {
    if (c == 0) continue;
    const double m = sep(c);
    if (m != 1.0) os << m << "*";
    os << sv[id].name;
  }
  if (e.constant != 0.0 || first) {
    const double m = sep(e.constant);
    os << m;
  }
}

}  // namespace

void ConstraintSystem::print(std::ostream& os) const {
  for (const auto& v : mat_vars_)
    os << "var " << v.name << " : " << (v.psd ? "psd" : "sym") << " " << v.dim << "x"
       << v.dim << "\n";
  for (const auto& v : scalar_vars_) os << "scalar " << v.name << "\n";
  for (const auto& c : eqs_) {
    os << "eq " << c.name << " : ";
    print_expr(os, c.expr, mat_vars_, scalar_vars_);
    os << " == 0\n";
  }
  for (const auto& c : ineqs_) {
    os << "ineq " << c.name << " : ";
    print_expr(os, c.expr, mat_vars_, scalar_vars_);
    os << " >= 0\n";
  }
  for (const auto& c : psds_) {
    os << "psd " << c.name << " (" << c.dim << "x" << c.dim << "):\n";
    for (int i = 0; i < c.dim; ++i)
      for (int j = i; j < c.dim; ++j) {
        os << "  [" << i << "," << j << "] = ";
        print_expr(os, c.at(i, j), mat_vars_, scalar_vars_);
        os << "\n";
      }
  }
  if (has_objective_) {
    os << (sense_ == Sense::minimize ? "minimize " : "maximize ");
    print_expr(os, objective_, mat_vars_, scalar_vars_);
    os << "\n";
  }
}

}  // namespace opi::gramsets
