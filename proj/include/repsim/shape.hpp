#pragma once

#include <utility>

#include "repsim/representations.hpp"

namespace repsim {

/// Procrustes distance against its decoding-distance bounds.
/// With alpha = Tr K_X, beta = Tr K_Y, d2 = ||K_X - K_Y||_F^2 and
/// r_delta = R(K_X - K_Y):
///   lower_bound = (alpha+beta) - sqrt((alpha+beta)^2 - r_delta * d2)
///   upper_bound = sqrt(r_delta * d2)
/// and both bracket procrustes_sq (the squared Bures distance). Slacks are
/// procrustes_sq - lower_bound and upper_bound - procrustes_sq; both are
/// >= -1e-8 for valid PSD kernels.
struct BoundReport {
  double procrustes_sq;
  double decoding_dist_sq;
  double r_delta;
  double alpha;
  double beta;
  double lower_bound;
  double upper_bound;
  double lower_slack;
  double upper_slack;
};

/// Minimal Frobenius distance over orthogonal alignments of the columns,
/// sqrt(||X||_F^2 + ||Y||_F^2 - 2 ||Y^T X||_*). Widths may differ: the
/// closed form is unchanged by zero-padding the narrower matrix.
double procrustes_distance(const Matrix& x, const Matrix& y);

/// Fidelity Tr[(K_X^{1/2} K_Y K_X^{1/2})^{1/2}] via the symmetric sandwich
/// square root with eigenvalue clipping.
double fidelity(const KernelMatrix& k_x, const KernelMatrix& k_y);

/// Bures distance sqrt(Tr K_X + Tr K_Y - 2 fidelity). Equals the Procrustes
/// distance between any factorizations X~ X~^T = K_X, Y~ Y~^T = K_Y.
double bures_distance(const KernelMatrix& k_x, const KernelMatrix& k_y);

/// Closed-form nuclear norm of alpha u u^T - beta v v^T for unit vectors:
/// sqrt((alpha+beta)^2 - 4 alpha beta <u,v>^2).
double rank_one_nuclear_norm(double alpha, const Vector& u, double beta,
                             const Vector& v);

/// Computes the BoundReport for a PSD kernel pair. Raises DataError when
/// the kernels coincide within 1e-12 (the participation ratio of the
/// difference is 0/0 there; the distance is exactly 0 and should be
/// reported directly by the caller).
BoundReport procrustes_bounds(const KernelMatrix& k_x, const KernelMatrix& k_y);

/// (lhs, rhs) = (||K_X^{1/2} - K_Y^{1/2}||_F^2, ||K_X - K_Y||_*);
/// lhs <= rhs for PSD inputs, with equality when both kernels have
/// eigenvalues in {0, 1} in a shared eigenbasis.
std::pair<double, double> powers_stormer_check(const KernelMatrix& k_x,
                                               const KernelMatrix& k_y);

}  // namespace repsim
