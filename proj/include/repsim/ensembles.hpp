#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "repsim/representations.hpp"

namespace repsim {

enum class EnsembleKind {
  kDirichlet,             // Dirichlet eigenvalues, independent random bases
  kLowRankPerturbed,      // A A^T vs (A + eps N)(A + eps N)^T, A uniform M x r
  kRankOne,               // the low-rank recipe with r = 1
  kWishart,               // W(r, I) vs W(r, I) + W(n, I)
  kSimultaneousDiagonal,  // thresholded eigenvalues in one shared basis
};

const char* ensemble_kind_name(EnsembleKind kind);
EnsembleKind parse_ensemble_kind(const std::string& name);

/// A random ensemble of trace-1 PSD matrix pairs. Parameter defaults follow
/// the generating recipes; dim is the matrix side M.
struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::kDirichlet;
  int dim = 50;

  double dirichlet_log10_min = -3.0;  // concentration 10^min .. 10^max,
  double dirichlet_log10_max = 3.0;   // log-spaced across the dim entries
  int lowrank_max_rank = 24;          // r uniform in [1, max]
  int wishart_max_dof = 50;           // first matrix dof uniform in [1, max]
  int wishart_max_extra_dof = 10;     // added dof uniform in [1, max]
  double diag_threshold = 0.6;        // zero U[0,1] draws below this
  int max_attempts = 100;             // redraws before giving up
};

/// Draws one PSD pair, trace-normalized to 1. Deterministic per
/// (seed, index): the pair is generated from the stream (seed, kind, index).
std::pair<KernelMatrix, KernelMatrix> sample_pair(const EnsembleSpec& spec,
                                                  std::uint64_t seed,
                                                  std::uint64_t index = 0);

/// Half-open participation-ratio interval [lo, hi).
struct RDeltaBin {
  double lo;
  double hi;
};

struct ScanRecord {
  EnsembleKind kind;
  int index;            // sample index within the scan
  int bin;              // index into the bin list
  double r_delta;
  double procrustes;    // Bures/Procrustes distance (not squared)
  double decoding_dist; // ||K_X - K_Y||_F (not squared)
  double lower_bound;   // bounds on the squared Procrustes distance
  double upper_bound;
  bool within_bounds;   // both slacks >= -1e-8
};

/// Samples pairs_per_spec pairs from every spec, evaluates the distance
/// bounds for each pair, and returns one record per pair whose r_delta
/// falls inside one of the bins. Bins must be non-overlapping. Output order
/// (and content) is deterministic per (specs, seed).
std::vector<ScanRecord> scan_ensembles(const std::vector<EnsembleSpec>& specs,
                                       int pairs_per_spec,
                                       const std::vector<RDeltaBin>& bins,
                                       std::uint64_t seed);

struct BoundCurvePoint {
  double decoding_dist;  // d, with d^2 the squared average decoding distance
  double lower;          // bounds on the squared Procrustes distance at d
  double upper;
};

/// Samples n_points values of d uniformly on [0, (alpha+beta)/sqrt(r_delta)]
/// and evaluates both bounds; plot-ready. Requires r_delta >= 1 and
/// n_points >= 2.
std::vector<BoundCurvePoint> bound_curves(double alpha, double beta,
                                          double r_delta, int n_points);

}  // namespace repsim
