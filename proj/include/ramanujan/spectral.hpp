#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ramanujan/graph.hpp"
#include "ramanujan/kernels.hpp"

namespace ramanujan::spectral {

/// Relative cluster tolerance used for multiplicities, with an absolute floor.
inline constexpr double kClusterRelTol = 1e-6;
inline constexpr double kClusterAbsFloor = 1e-9;
/// Gram eigenvalues below this (relative to the largest) are treated as zero.
inline constexpr double kGramZeroTol = 1e-9;

/// mu(d_r, d_c) = sqrt(d_r - 1) + sqrt(d_c - 1).
double ramanujan_bound(std::size_t d_row, std::size_t d_col);
/// 2 sqrt(d - 1).
double ramanujan_bound(std::size_t d);

/// All min(n_r, n_c) singular values, descending. Computed from the
/// eigenvalues of the smaller Gram product.
std::vector<double> singular_values(const BinaryBigraph& b,
                                    kernels::Exec exec = kernels::Exec::parallel);

/// Full adjacency spectrum, descending.
std::vector<double> eigenvalues(const SimpleGraph& g,
                                kernels::Exec exec = kernels::Exec::parallel);

/// Number of values within the cluster tolerance of `centre`.
std::size_t cluster_size(const std::vector<double>& values, double centre);

/// A value with its multiplicity after clustering.
struct Cluster {
  double value = 0.0;
  std::size_t multiplicity = 0;
};
/// Groups a descending sequence into clusters.
std::vector<Cluster> clusters(const std::vector<double>& descending);

struct SpectralReport {
  enum class Kind { graph, bigraph };
  Kind kind = Kind::bigraph;
  std::size_t n_rows = 0, n_cols = 0;
  Degrees degrees;                // for graphs, row == col == d
  std::vector<double> spectrum;   // descending by magnitude
  double top = 0.0;               // sigma1 or lambda1
  double second = 0.0;            // sigma2 or lambda2 (signed for graphs)
  double bound = 0.0;
  bool is_ramanujan = false;
  std::size_t second_multiplicity = 0;
  double gap = 0.0;               // bound - |second|
};

/// Numerical slack allowed when comparing against the bound.
inline constexpr double kVerdictSlack = 1e-9;

/// Ramanujan bookkeeping for a regular graph (|lambda2| <= 2 sqrt(d-1)).
/// Throws IrregularError if the graph is not regular.
SpectralReport ramanujan_report(const SimpleGraph& g,
                                kernels::Exec exec = kernels::Exec::parallel);
/// Bookkeeping for a biregular bigraph (sigma2 <= mu(d_r, d_c)).
SpectralReport ramanujan_report(const BinaryBigraph& b,
                                kernels::Exec exec = kernels::Exec::parallel);

/// || E - alpha 1 ||_2 with alpha = d_r / n_c. Requires a biregular E.
double centered_spectral_norm(const BinaryBigraph& e,
                              kernels::Exec exec = kernels::Exec::parallel);

/// Largest singular value of an arbitrary 0/1 matrix.
double spectral_norm(const BinaryBigraph& e, kernels::Exec exec = kernels::Exec::parallel);

/// Spectral norm of a small integer matrix given row-major.
double spectral_norm(const std::vector<int>& m, std::size_t rows, std::size_t cols);

/// Maximum inner product between two distinct columns (max off-diagonal of
/// E^T E). Requires at least two columns.
std::size_t theta_c(const BinaryBigraph& e, kernels::Exec exec = kernels::Exec::parallel);

}  // namespace ramanujan::spectral
