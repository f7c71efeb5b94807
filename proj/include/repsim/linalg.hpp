#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "repsim/errors.hpp"
#include "repsim/rng.hpp"

namespace repsim {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Relative budget for negative eigenvalues of matrices that are PSD in
/// exact arithmetic. Eigenvalues in [-tol * max(1, lambda_max), 0) are
/// clipped to zero; anything below is a hard NotPSD error.
inline constexpr double kEigClipTol = 1e-9;

/// Relative cutoff for pseudo-inversion: eigenvalues <= rank_tol * lambda_max
/// are treated as exact zeros.
inline constexpr double kRankTol = 1e-10;

/// Dense symmetric matrix. Construction symmetrizes A <- (A + A^T)/2 and
/// rejects non-finite entries, so downstream eigensolves never see
/// asymmetry accumulated from round-off.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(Matrix a);

  Index dim() const { return mat_.rows(); }
  const Matrix& mat() const { return mat_; }

 private:
  Matrix mat_;
};

struct EigenDecomposition {
  Vector eigenvalues;   // sorted descending
  Matrix eigenvectors;  // orthonormal columns, column i pairs with value i
};

/// Full symmetric eigendecomposition, eigenvalues sorted descending.
EigenDecomposition sym_eig(const SymmetricMatrix& a);

/// PSD square root V diag(sqrt(clip(lambda, 0))) V^T. Eigenvalues below
/// -tol * max(1, lambda_max) raise NotPSD.
SymmetricMatrix psd_sqrt(const SymmetricMatrix& a, double tol = kEigClipTol);

/// Pseudo-inverse square root: eigenvalues <= rank_tol * lambda_max map to
/// zero, the rest to lambda^{-1/2}. Same PSD tolerance policy as psd_sqrt.
SymmetricMatrix psd_inv_sqrt(const SymmetricMatrix& a,
                             double rank_tol = kRankTol,
                             double tol = kEigClipTol);

/// Sum of singular values. For symmetric input this equals the sum of
/// absolute eigenvalues.
double nuclear_norm(const Matrix& a);

/// Haar-distributed orthogonal matrix: Gaussian fill, QR, sign-corrected
/// diagonal of R. Deterministic per seed.
Matrix random_orthogonal(Index dim, std::uint64_t seed);

/// Same, drawing from an existing stream.
Matrix random_orthogonal(Index dim, CounterRng& rng);

}  // namespace repsim
