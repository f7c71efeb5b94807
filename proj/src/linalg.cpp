#include "repsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace repsim {

SymmetricMatrix::SymmetricMatrix(Matrix a) {
  if (a.rows() != a.cols()) {
    throw DataError("SymmetricMatrix: input is " + std::to_string(a.rows()) +
                    "x" + std::to_string(a.cols()) + ", expected square");
  }
  if (!a.allFinite()) {
    throw DataError("SymmetricMatrix: non-finite entries");
  }
  mat_ = 0.5 * (a + a.transpose());
}

EigenDecomposition sym_eig(const SymmetricMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.mat());
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("sym_eig: eigensolver did not converge");
  }
  EigenDecomposition out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

namespace {

// Checks the PSD tolerance policy and returns the decomposition with
// negative dust clipped to zero. Eigenvalues below -tol * max(1, lambda_max)
// are a hard error.
EigenDecomposition clipped_psd_eig(const SymmetricMatrix& a, double tol,
                                   const char* op) {
  EigenDecomposition eig = sym_eig(a);
  const double lambda_max = eig.eigenvalues(0);
  const double floor = -tol * std::max(1.0, lambda_max);
  const double lambda_min = eig.eigenvalues(a.dim() - 1);
  if (lambda_min < floor) {
    throw NotPSD(std::string(op) + ": eigenvalue " +
                 std::to_string(lambda_min) + " below tolerance " +
                 std::to_string(floor));
  }
  eig.eigenvalues = eig.eigenvalues.cwiseMax(0.0);
  return eig;
}

}  // namespace

SymmetricMatrix psd_sqrt(const SymmetricMatrix& a, double tol) {
  const EigenDecomposition eig = clipped_psd_eig(a, tol, "psd_sqrt");
  const Vector roots = eig.eigenvalues.cwiseSqrt();
  return SymmetricMatrix(eig.eigenvectors * roots.asDiagonal() *
                         eig.eigenvectors.transpose());
}

SymmetricMatrix psd_inv_sqrt(const SymmetricMatrix& a, double rank_tol,
                             double tol) {
  const EigenDecomposition eig = clipped_psd_eig(a, tol, "psd_inv_sqrt");
  const double cutoff = rank_tol * eig.eigenvalues(0);
  Vector mapped(a.dim());
  for (Index i = 0; i < a.dim(); ++i) {
    const double l = eig.eigenvalues(i);
    mapped(i) = l > cutoff ? 1.0 / std::sqrt(l) : 0.0;
  }
  return SymmetricMatrix(eig.eigenvectors * mapped.asDiagonal() *
                         eig.eigenvectors.transpose());
}

double nuclear_norm(const Matrix& a) {
  if (!a.allFinite()) {
    throw DataError("nuclear_norm: non-finite entries");
  }
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  Eigen::BDCSVD<Matrix> svd(a);
  if (svd.info() != Eigen::Success) {
    throw NumericalFailure("nuclear_norm: SVD did not converge");
  }
  return svd.singularValues().sum();
}

Matrix random_orthogonal(Index dim, CounterRng& rng) {
  if (dim < 1) throw DataError("random_orthogonal: dim must be >= 1");
  Matrix g(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) g(i, j) = rng.next_normal();
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR();
  for (Index j = 0; j < dim; ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

Matrix random_orthogonal(Index dim, std::uint64_t seed) {
  CounterRng rng(seed);
  return random_orthogonal(dim, rng);
}

}  // namespace repsim
