#pragma once

#include <Eigen/Dense>
#include <vector>

#include "opi/errors.hpp"

namespace opi::linalg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Default combined absolute/relative tolerance used across the kernel.
inline constexpr double kDefaultTol = 1e-8;

/// 1 + infinity-norm style scale, so comparisons behave absolutely near zero
/// and relatively for large data.
double scale_of(const Matrix& a);

/// Dense real symmetric matrix with triangular storage, so A = A^T holds
/// exactly by construction.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int dim);

  /// Builds from a dense matrix; throws NotSymmetricError if the asymmetry
  /// exceeds sym_tol * scale. Off-triangle deviations are averaged away.
  static SymmetricMatrix from_dense(const Matrix& a, double sym_tol = kDefaultTol);

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return tri_[index(i, j)]; }
  void set(int i, int j, double v) { tri_[index(i, j)] = v; }
  Matrix dense() const;

 private:
  std::size_t index(int i, int j) const;
  int dim_ = 0;
  std::vector<double> tri_;  // lower triangle, row-major
};

/// Eigendecomposition of a symmetric matrix: A = V diag(lambda) V^T with
/// eigenvalues sorted descending and orthonormal eigenvectors.
struct EigDecomposition {
  Vector eigenvalues;
  Matrix eigenvectors;
};

EigDecomposition eig(const SymmetricMatrix& a);

double min_eigenvalue(const SymmetricMatrix& a);

/// True iff lambda_min(A) >= -tol.
bool psd_check(const SymmetricMatrix& a, double tol = kDefaultTol);

/// Gram matrix [A|B|...]^T [A|B|...] of horizontally stacked blocks that
/// share a row count. PSD by construction.
SymmetricMatrix gram(const std::vector<Matrix>& blocks);
SymmetricMatrix gram(const Matrix& a);

/// Factor B with B^T B = G (within tol) and rows(B) equal to the numerical
/// rank of G. Singular values below tol * max(1, lambda_max) count as zero.
/// Throws NotPsdError when G is not PSD within tol.
Matrix gram_factor(const SymmetricMatrix& g, double tol = kDefaultTol);

/// Given A (k x N), B (l x N) with k <= l and A^T A = B^T B within tol,
/// returns R (l x k) with R^T R = I and R A = B. The completion on the
/// orthogonal complement is chosen deterministically.
/// Throws NoIsometryError when the Gram matrices disagree beyond tol.
Matrix recover_isometry(const Matrix& a, const Matrix& b, double tol = kDefaultTol);

/// Polar decomposition M = R Q of a tall matrix (rows >= cols): R isometric,
/// Q symmetric PSD carrying the singular values of M.
struct PolarDecomposition {
  Matrix isometric;      // R, m x n with R^T R = I
  SymmetricMatrix psd;   // Q = (M^T M)^{1/2}
};

PolarDecomposition polar(const Matrix& m);

enum class SpectrumKind { eigen, singular };

/// Sorted (ascending) multiset of eigenvalues or singular values.
/// kind == eigen requires a square input symmetric within sym_tol.
std::vector<double> spectrum(const Matrix& m, SpectrumKind kind,
                             double sym_tol = kDefaultTol);

/// Deterministic orthonormal completion: given Q (n x k) with orthonormal
/// columns, returns C (n x (n-k)) with [Q C] orthogonal.
Matrix orthonormal_completion(const Matrix& q);

/// Column-space orthonormal basis of A together with the coefficient map:
/// basis = A * coef, so images of basis vectors under any operator acting on
/// col(A) can be formed from images of A's columns.
struct RangeBasis {
  Matrix basis;  // n x r, orthonormal
  Matrix coef;   // N x r, basis = A * coef
  int rank = 0;
};

RangeBasis range_basis(const Matrix& a, double tol = kDefaultTol);

}  // namespace opi::linalg
