#include "repsim/representations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace repsim {

namespace {

void check_column_means(const Matrix& values) {
  for (Index j = 0; j < values.cols(); ++j) {
    const double scale = std::max(1.0, values.col(j).cwiseAbs().maxCoeff());
    const double mean = values.col(j).mean();
    if (std::abs(mean) > 1e-10 * scale) {
      throw DataError("ResponseMatrix: column " + std::to_string(j) +
                      " has mean " + std::to_string(mean) +
                      "; responses must be column-centered");
    }
  }
}

}  // namespace

ResponseMatrix::ResponseMatrix(Matrix centered) {
  if (centered.rows() < 2) {
    throw DataError("ResponseMatrix: need at least 2 conditions, got " +
                    std::to_string(centered.rows()));
  }
  if (centered.cols() < 1) {
    throw DataError("ResponseMatrix: need at least 1 unit");
  }
  if (!centered.allFinite()) {
    throw DataError("ResponseMatrix: non-finite entries");
  }
  check_column_means(centered);
  if (centered.norm() == 0.0) {
    throw DataError(
        "ResponseMatrix: all responses are zero; downstream normalizations "
        "divide by the response scale");
  }
  values_ = std::move(centered);
}

ResponseMatrix center_columns(const Matrix& raw) {
  if (raw.rows() < 2) {
    throw DataError("center_columns: need at least 2 conditions, got " +
                    std::to_string(raw.rows()));
  }
  if (!raw.allFinite()) {
    throw DataError("center_columns: non-finite entries");
  }
  Matrix centered = raw;
  centered.rowwise() -= raw.colwise().mean();
  return ResponseMatrix(std::move(centered));
}

RegularizerSpec::RegularizerSpec(Preset preset, double a, double b)
    : preset_(preset), a_(a), b_(b) {}

RegularizerSpec RegularizerSpec::cka(double b) {
  if (b <= 0.0) throw DataError("RegularizerSpec: cka needs b > 0");
  return {Preset::kCka, 0.0, b};
}

RegularizerSpec RegularizerSpec::gulp(double lambda) {
  if (lambda <= 0.0) throw DataError("RegularizerSpec: gulp needs lambda > 0");
  return {Preset::kGulp, 1.0, lambda};
}

RegularizerSpec RegularizerSpec::cca() { return {Preset::kCca, 1.0, 0.0}; }

RegularizerSpec RegularizerSpec::ensd() { return {Preset::kEnsd, 0.0, 0.0}; }

RegularizerSpec RegularizerSpec::inverse_pr() {
  return {Preset::kInversePr, 0.0, 0.0};
}

RegularizerSpec RegularizerSpec::custom(double a, double b) {
  if (a < 0.0 || b < 0.0) {
    throw DataError("RegularizerSpec: a and b must be nonnegative");
  }
  if (a + b <= 0.0) {
    throw DataError("RegularizerSpec: a + b must be positive");
  }
  return {Preset::kCustom, a, b};
}

std::string RegularizerSpec::name() const {
  switch (preset_) {
    case Preset::kCka:
      return "cka";
    case Preset::kGulp:
      return "gulp";
    case Preset::kCca:
      return "cca";
    case Preset::kEnsd:
      return "ensd";
    case Preset::kInversePr:
      return "inverse_pr";
    case Preset::kCustom:
      return "custom";
  }
  return "custom";
}

KernelMatrix::KernelMatrix(Matrix m) {
  if (m.rows() != m.cols()) {
    throw DataError("KernelMatrix: input is " + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()) + ", expected square");
  }
  if (!m.allFinite()) {
    throw DataError("KernelMatrix: non-finite entries");
  }
  mat_ = 0.5 * (m + m.transpose());
}

SymmetricMatrix covariance(const ResponseMatrix& x) {
  const Matrix& v = x.values();
  const double m = static_cast<double>(x.conditions());
  return SymmetricMatrix(v.transpose() * v / m);
}

SymmetricMatrix regularizer_matrix(const ResponseMatrix& x,
                                   const RegularizerSpec& spec) {
  const SymmetricMatrix c = covariance(x);
  const Index n = x.units();
  switch (spec.preset()) {
    case Preset::kEnsd: {
      const double trace = c.mat().trace();
      if (trace <= 0.0) {
        throw DataError("regularizer_matrix: ensd preset needs Tr[C] > 0");
      }
      const double scale = c.mat().squaredNorm() / trace;  // Tr[C^2]/Tr[C]
      return SymmetricMatrix(scale * Matrix::Identity(n, n));
    }
    case Preset::kInversePr: {
      const double trace = c.mat().trace();
      if (trace <= 0.0) {
        throw DataError(
            "regularizer_matrix: inverse_pr preset needs Tr[C] > 0");
      }
      return SymmetricMatrix(trace * Matrix::Identity(n, n));
    }
    default:
      return SymmetricMatrix(spec.a() * c.mat() +
                             spec.b() * Matrix::Identity(n, n));
  }
}

Matrix normalized_representation(const ResponseMatrix& x,
                                 const RegularizerSpec& spec) {
  const SymmetricMatrix g = regularizer_matrix(x, spec);
  const SymmetricMatrix g_inv_sqrt = psd_inv_sqrt(g);
  const double m = static_cast<double>(x.conditions());
  return x.values() * g_inv_sqrt.mat() / std::sqrt(m);
}

KernelMatrix kernel_matrix(const ResponseMatrix& x,
                           const RegularizerSpec& spec) {
  const Matrix xn = normalized_representation(x, spec);
  return KernelMatrix(xn * xn.transpose());
}

ResponseMatrix zero_pad(const ResponseMatrix& x, Index target_units) {
  if (target_units < x.units()) {
    throw DataError("zero_pad: target_units " + std::to_string(target_units) +
                    " is smaller than the current width " +
                    std::to_string(x.units()));
  }
  Matrix padded = Matrix::Zero(x.conditions(), target_units);
  padded.leftCols(x.units()) = x.values();
  return ResponseMatrix(std::move(padded));
}

}  // namespace repsim
