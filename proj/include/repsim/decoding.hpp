#pragma once

#include <cstdint>

#include "repsim/representations.hpp"

namespace repsim {

/// Best- and worst-case decoding alignment over unit-norm targets, together
/// with targets that achieve them. When an extreme eigenvalue is degenerate
/// the returned target is one arbitrary eigenvector from its eigenspace;
/// the value, not the vector, is the contract.
struct AlignmentExtremes {
  double best_value;
  double worst_value;
  Vector best_target;
  Vector worst_target;
};

/// Closed-form optimal readout weights w* = G(X)^{-1} X^T z / M
/// (pseudo-inverse when G is singular).
Vector optimal_weights(const ResponseMatrix& x, const RegularizerSpec& spec,
                       const Vector& z);

/// Inner product <X w*, Y v*> between optimal readouts of the same target,
/// evaluated through the explicit weights.
double decoding_similarity(const ResponseMatrix& x, const ResponseMatrix& y,
                           const RegularizerSpec& spec_x,
                           const RegularizerSpec& spec_y, const Vector& z);

/// Extremes of z^T K_X K_Y z over unit-norm z: the largest and smallest
/// eigenvalues of (K_X K_Y + K_Y K_X)/2 and their eigenvectors.
AlignmentExtremes alignment_extremes(const KernelMatrix& k_x,
                                     const KernelMatrix& k_y);

/// Average decoding similarity Tr(K_X K_z K_Y) for targets with
/// second-moment matrix K_z.
double average_decoding_similarity(const KernelMatrix& k_x,
                                   const KernelMatrix& k_y,
                                   const KernelMatrix& k_z);

/// Average squared readout distance ||K_X - K_Y||_F^2 (targets with
/// identity second moment).
double average_decoding_distance(const KernelMatrix& k_x,
                                 const KernelMatrix& k_y);

enum class MomentKind { kSimilarity, kDistance };

/// Target distribution for Monte-Carlo sampling. Both satisfy E[z z^T] = I;
/// Rademacher is exposed as a robustness check.
enum class TargetDistribution { kGaussian, kRademacher };

struct MonteCarloResult {
  double mean;
  double std_error;
  std::int64_t n_samples;
};

/// Monte-Carlo estimate of the average decoding similarity or squared
/// distance over random targets. Sample i draws from its own counter-based
/// stream (seed, i), so the estimate is bitwise-identical for any worker
/// count. Requires n_samples >= 100.
MonteCarloResult monte_carlo_decoding_moment(
    const ResponseMatrix& x, const ResponseMatrix& y,
    const RegularizerSpec& spec_x, const RegularizerSpec& spec_y,
    MomentKind kind, std::int64_t n_samples, std::uint64_t seed,
    TargetDistribution dist = TargetDistribution::kGaussian);

}  // namespace repsim
