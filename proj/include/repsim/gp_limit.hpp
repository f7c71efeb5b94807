#pragma once

#include <cstdint>
#include <vector>

#include "repsim/representations.hpp"

namespace repsim {

enum class TaskKernelKind { kRbf, kDelta };

/// Covariance of the task distribution over inputs: RBF
/// q(u, u') = exp(-||u - u'||^2 / (2 gamma)), or the Kronecker delta
/// (identity on distinct inputs).
struct TaskKernelSpec {
  TaskKernelKind kind = TaskKernelKind::kRbf;
  double length_scale = 1.0;  // gamma, RBF only; must be > 0
};

/// Gram matrix Q_ij = q(u_i, u_j) over the rows of inputs.
KernelMatrix task_gram(const TaskKernelSpec& spec, const Matrix& inputs);

/// A fixed bounded nonlinear map u -> tanh(A u / squash_scale) standing in
/// for a trained network; responses are bounded by construction and are
/// centered empirically before use.
class SyntheticSystem {
 public:
  SyntheticSystem(Matrix mixing, double squash_scale);

  /// Mixing matrix with standard-normal entries drawn from the seed.
  static SyntheticSystem random(int input_dim, int output_dim,
                                std::uint64_t seed,
                                double squash_scale = 1.0);

  int input_dim() const { return static_cast<int>(mixing_.cols()); }
  int output_dim() const { return static_cast<int>(mixing_.rows()); }

  /// Raw (uncentered) responses, one row per input row.
  Matrix respond(const Matrix& inputs) const;

 private:
  Matrix mixing_;  // output_dim x input_dim
  double squash_scale_;
};

/// Plug-in estimate Tr[K_X Q K_Y] / M of the infinite-data decoding
/// similarity; with Q = I this is Tr[K_X K_Y] / M.
double plugin_estimator(const ResponseMatrix& x, const ResponseMatrix& y,
                        const RegularizerSpec& spec_x,
                        const RegularizerSpec& spec_y, const KernelMatrix& q);

struct ConvergenceRecord {
  int m;
  int repeat;
  double estimate;
  double abs_error;
};

struct ConvergenceSummary {
  int m;
  double median_abs_error;
};

struct ConvergenceResult {
  int reference_m;
  double reference;
  std::vector<ConvergenceRecord> records;   // grid-major, repeat-minor order
  std::vector<ConvergenceSummary> summary;  // per grid entry
};

/// Empirical convergence check of the plug-in estimator. The reference is a
/// single evaluation at 4 * max(m_grid) (computed blockwise, the task Gram
/// matrix is never materialized at that size); each (M, repeat) cell draws M
/// fresh standard-normal inputs and records |estimate - reference|.
/// Deterministic per seed; m_grid must be strictly increasing.
ConvergenceResult convergence_experiment(
    const SyntheticSystem& f, const SyntheticSystem& g,
    const TaskKernelSpec& task, const RegularizerSpec& spec_x,
    const RegularizerSpec& spec_y, const std::vector<int>& m_grid, int repeats,
    std::uint64_t seed);

}  // namespace repsim
