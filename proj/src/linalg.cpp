#include "opi/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <string>

namespace opi::linalg {

namespace {

void require_finite(const Matrix& a, const char* what) {
  if (!a.allFinite()) throw Error(std::string(what) + ": non-finite entries");
}

}  // namespace

double scale_of(const Matrix& a) {
  if (a.size() == 0) return 1.0;
  return 1.0 + a.cwiseAbs().maxCoeff();
}

SymmetricMatrix::SymmetricMatrix(int dim) : dim_(dim) {
  if (dim <= 0) throw DimensionError("SymmetricMatrix: dimension must be positive");
  tri_.assign(static_cast<std::size_t>(dim) * (dim + 1) / 2, 0.0);
}

std::size_t SymmetricMatrix::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
    throw DimensionError("SymmetricMatrix: index out of range");
  if (j > i) std::swap(i, j);
  return static_cast<std::size_t>(i) * (i + 1) / 2 + j;
}

SymmetricMatrix SymmetricMatrix::from_dense(const Matrix& a, double sym_tol) {
  if (a.rows() != a.cols())
    throw DimensionError("SymmetricMatrix::from_dense: matrix not square");
  require_finite(a, "SymmetricMatrix::from_dense");
  const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (asym > sym_tol * scale_of(a))
    throw NotSymmetricError("SymmetricMatrix::from_dense: asymmetry " +
                            std::to_string(asym) + " exceeds tolerance");
  SymmetricMatrix s(static_cast<int>(a.rows()));
  for (int i = 0; i < s.dim_; ++i)
    for (int j = 0; j <= i; ++j) s.tri_[s.index(i, j)] = 0.5 * (a(i, j) + a(j, i));
  return s;
}

Matrix SymmetricMatrix::dense() const {
  Matrix a(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = tri_[index(i, j)];
  return a;
}

EigDecomposition eig(const SymmetricMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.dense());
  if (es.info() != Eigen::Success) throw Error("eig: eigendecomposition failed");
  EigDecomposition d;
  const int n = a.dim();
  d.eigenvalues = es.eigenvalues().reverse();
  d.eigenvectors = es.eigenvectors().rowwise().reverse();
  (void)n;
  return d;
}

double min_eigenvalue(const SymmetricMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.dense(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw Error("min_eigenvalue: eigensolver failed");
  return es.eigenvalues()(0);
}

bool psd_check(const SymmetricMatrix& a, double tol) {
  return min_eigenvalue(a) >= -tol;
}

SymmetricMatrix gram(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw DimensionError("gram: no blocks");
  const Eigen::Index rows = blocks.front().rows();
  Eigen::Index cols = 0;
  for (const Matrix& b : blocks) {
    if (b.rows() != rows) throw DimensionError("gram: blocks disagree on row count");
    require_finite(b, "gram");
    cols += b.cols();
  }
  if (cols == 0) throw DimensionError("gram: zero total columns");
  Matrix stacked(rows, cols);
  Eigen::Index off = 0;
  for (const Matrix& b : blocks) {
    stacked.middleCols(off, b.cols()) = b;
    off += b.cols();
  }
  Matrix g = stacked.transpose() * stacked;
  g = 0.5 * (g + g.transpose()).eval();
  return SymmetricMatrix::from_dense(g, 1e-12);
}

SymmetricMatrix gram(const Matrix& a) { return gram(std::vector<Matrix>{a}); }

Matrix gram_factor(const SymmetricMatrix& g, double tol) {
  const EigDecomposition d = eig(g);
  const int n = g.dim();
  const double lmax = std::max(0.0, d.eigenvalues(0));
  const double thresh = tol * std::max(1.0, lmax);
  if (d.eigenvalues(n - 1) < -thresh)
    throw NotPsdError("gram_factor: matrix not PSD within tolerance (lambda_min = " +
                      std::to_string(d.eigenvalues(n - 1)) + ")");
  int rank = 0;
  while (rank < n && d.eigenvalues(rank) > thresh) ++rank;
  Matrix b(rank, n);
  for (int k = 0; k < rank; ++k)
    b.row(k) = std::sqrt(d.eigenvalues(k)) * d.eigenvectors.col(k).transpose();
  return b;
}

Matrix orthonormal_completion(const Matrix& q) {
  const Eigen::Index n = q.rows();
  const Eigen::Index k = q.cols();
  if (k > n) throw DimensionError("orthonormal_completion: more columns than rows");
  if (k == n) return Matrix(n, 0);
  if (k == 0) return Matrix::Identity(n, n);
  Eigen::HouseholderQR<Matrix> qr(q);
  Matrix full = qr.householderQ() * Matrix::Identity(n, n);
  return full.rightCols(n - k);
}

RangeBasis range_basis(const Matrix& a, double tol) {
  RangeBasis rb;
  if (a.size() == 0) {
    rb.basis = Matrix(a.rows(), 0);
    rb.coef = Matrix(a.cols(), 0);
    return rb;
  }
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  const double thresh = tol * std::max(1.0, smax);
  int r = 0;
  while (r < sv.size() && sv(r) > thresh) ++r;
  rb.rank = r;
  rb.basis = svd.matrixU().leftCols(r);
  rb.coef = svd.matrixV().leftCols(r) * sv.head(r).cwiseInverse().asDiagonal();
  return rb;
}

Matrix recover_isometry(const Matrix& a, const Matrix& b, double tol) {
  if (a.cols() != b.cols())
    throw DimensionError("recover_isometry: column counts differ");
  const Eigen::Index k = a.rows();
  const Eigen::Index l = b.rows();
  if (k > l) throw DimensionError("recover_isometry: rows(A) must not exceed rows(B)");

  const Matrix ata = a.transpose() * a;
  const Matrix btb = b.transpose() * b;
  const double mismatch =
      (a.cols() == 0) ? 0.0 : (ata - btb).cwiseAbs().maxCoeff();
  const double scale = std::max(scale_of(ata), scale_of(btb));
  if (mismatch > tol * scale)
    throw NoIsometryError("recover_isometry: Gram mismatch " + std::to_string(mismatch));

  const RangeBasis ra = range_basis(a, tol);
  Matrix ub = b * ra.coef;  // l x r, near-orthonormal since B^T B = A^T A
  if (ra.rank > 0) {
    // Symmetric orthogonalization polish keeps R^T R = I to machine precision.
    Eigen::SelfAdjointEigenSolver<Matrix> es(ub.transpose() * ub);
    Matrix w = es.eigenvectors() *
               es.eigenvalues().cwiseMax(1e-300).cwiseSqrt().cwiseInverse().asDiagonal() *
               es.eigenvectors().transpose();
    ub = ub * w;
  }
  const Matrix ca = orthonormal_completion(ra.basis);           // k x (k-r)
  const Matrix cb = orthonormal_completion(ub).leftCols(k - ra.rank);  // l x (k-r)
  Matrix r = ub * ra.basis.transpose() + cb * ca.transpose();
  return r;
}

PolarDecomposition polar(const Matrix& m) {
  if (m.rows() < m.cols()) throw DimensionError("polar: matrix must be tall (rows >= cols)");
  require_finite(m, "polar");
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Matrix u = svd.matrixU();
  const Matrix v = svd.matrixV();
  Matrix q = v * svd.singularValues().asDiagonal() * v.transpose();
  q = 0.5 * (q + q.transpose()).eval();
  return PolarDecomposition{u * v.transpose(), SymmetricMatrix::from_dense(q, 1e-12)};
}

std::vector<double> spectrum(const Matrix& m, SpectrumKind kind, double sym_tol) {
  require_finite(m, "spectrum");
  std::vector<double> out;
  if (kind == SpectrumKind::eigen) {
    if (m.rows() != m.cols()) throw DimensionError("spectrum: eigen kind requires square input");
    const SymmetricMatrix s = SymmetricMatrix::from_dense(m, sym_tol);
    Eigen::SelfAdjointEigenSolver<Matrix> es(s.dense(), Eigen::EigenvaluesOnly);
    out.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  } else {
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto& sv = svd.singularValues();
    out.assign(sv.data(), sv.data() + sv.size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace opi::linalg
