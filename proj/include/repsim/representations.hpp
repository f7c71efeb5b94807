#pragma once

#include <string>

#include "repsim/linalg.hpp"

namespace repsim {

/// Centered condition-by-unit response matrix (M conditions x N units).
/// Construction validates: finite entries, M >= 2, zero column means within
/// 1e-10 of each column's scale, and a nonzero matrix overall (all-zero
/// responses would put a zero trace under every downstream normalization).
class ResponseMatrix {
 public:
  explicit ResponseMatrix(Matrix centered);

  Index conditions() const { return values_.rows(); }  // M
  Index units() const { return values_.cols(); }       // N
  const Matrix& values() const { return values_; }

 private:
  Matrix values_;
};

/// Subtracts each column's mean. Idempotent; rejects non-finite input and
/// M < 2.
ResponseMatrix center_columns(const Matrix& raw);

enum class Preset { kCustom, kCka, kGulp, kCca, kEnsd, kInversePr };

/// The readout weight penalty G(X) = a*C_X + b*I, plus the named presets.
/// The ensd and inverse_pr presets use a data-dependent isotropic scale
/// (resolved in regularizer_matrix), so their stored b is not meaningful.
class RegularizerSpec {
 public:
  static RegularizerSpec cka(double b = 1.0);
  static RegularizerSpec gulp(double lambda);
  static RegularizerSpec cca();
  static RegularizerSpec ensd();
  static RegularizerSpec inverse_pr();
  static RegularizerSpec custom(double a, double b);

  Preset preset() const { return preset_; }
  double a() const { return a_; }
  double b() const { return b_; }
  std::string name() const;

 private:
  RegularizerSpec(Preset preset, double a, double b);

  Preset preset_;
  double a_;
  double b_;
};

/// M x M PSD condition-similarity matrix. Construction symmetrizes and
/// rejects non-finite or non-square input; positive semidefiniteness is
/// guaranteed by the producing operations (factored forms), and re-checked
/// with the clipping tolerance wherever eigenvalues are consumed.
class KernelMatrix {
 public:
  explicit KernelMatrix(Matrix m);

  Index dim() const { return mat_.rows(); }
  const Matrix& mat() const { return mat_; }
  double trace() const { return mat_.trace(); }

 private:
  Matrix mat_;
};

/// Empirical covariance C_X = X^T X / M.
SymmetricMatrix covariance(const ResponseMatrix& x);

/// The N x N penalty matrix G for the given spec. Affine presets give
/// a*C_X + b*I; ensd gives (Tr[C^2]/Tr[C])*I; inverse_pr gives Tr[C]*I.
SymmetricMatrix regularizer_matrix(const ResponseMatrix& x,
                                   const RegularizerSpec& spec);

/// Normalized representation X G(X)^{-1/2} / sqrt(M), pseudo-inverting G
/// when it is singular (e.g. the cca preset on rank-deficient data).
Matrix normalized_representation(const ResponseMatrix& x,
                                 const RegularizerSpec& spec);

/// Kernel matrix K_X = X G(X)^{-1} X^T / M, computed as the Gram matrix of
/// the normalized representation so the result is PSD by construction.
KernelMatrix kernel_matrix(const ResponseMatrix& x,
                           const RegularizerSpec& spec);

/// Appends zero columns up to target_units. Kernel matrices are unchanged
/// by padding.
ResponseMatrix zero_pad(const ResponseMatrix& x, Index target_units);

}  // namespace repsim
