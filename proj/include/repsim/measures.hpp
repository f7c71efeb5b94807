#pragma once

#include <string>

#include "repsim/representations.hpp"

namespace repsim {

struct MeasureScore {
  std::string name;
  double value;
  RegularizerSpec regularizer;  // the penalty that realizes this measure
  bool normalized;              // true when the score is a [0, 1] ratio
};

/// Linear CKA: Tr[K_X K_Y] / (||K_X||_F ||K_Y||_F) with G = b*I. The value
/// is independent of b (it cancels in the ratio).
MeasureScore cka(const ResponseMatrix& x, const ResponseMatrix& y,
                 double b = 1.0);

/// Squared GULP distance: ||K_X - K_Y||_F^2 with G = C + lambda*I.
MeasureScore gulp_distance(const ResponseMatrix& x, const ResponseMatrix& y,
                           double lambda);

/// Normalized kernel alignment with G = (1-alpha)*C + alpha*I. At alpha = 0
/// on full-rank inputs of equal width this is the mean squared canonical
/// correlation; at alpha = 1 it equals the CKA score.
MeasureScore mean_squared_cca(const ResponseMatrix& x, const ResponseMatrix& y,
                              double alpha);

/// Effective number of shared dimensions,
/// Tr[XX^T] Tr[YY^T] Tr[XX^T YY^T] / (Tr[(XX^T)^2] Tr[(YY^T)^2]),
/// evaluated directly from the Gram matrices. Identical to the average
/// decoding similarity under the ensd penalty.
MeasureScore ensd(const ResponseMatrix& x, const ResponseMatrix& y);

/// Participation ratio (sum sigma_i)^2 / sum sigma_i^2 over singular values;
/// a continuous effective rank, 1 <= R <= rank(A).
double participation_ratio(const Matrix& a);

/// Average decoding self-similarity under the inverse_pr penalty; equals
/// 1 / R(C_X).
double inverse_pr_selfsimilarity(const ResponseMatrix& x);

}  // namespace repsim
