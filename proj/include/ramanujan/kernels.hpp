#pragma once

// Dense numerical kernels. Every kernel comes in two flavours selected by
// `Exec`: an OpenMP version used in production and a plain serial reference
// kept for tests and the benchmark. The OpenMP versions only split work by
// rows, and each row is processed in a fixed order, so their output does not
// depend on the thread count.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ramanujan::kernels {

enum class Exec { serial, parallel };

/// Row-major dense square matrix of doubles.
struct DenseSymmetric {
  std::size_t n = 0;
  std::vector<double> values;

  double& operator()(std::size_t i, std::size_t j) { return values[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

/// G = B B^T for a row-major 0/1 matrix with `rows` x `cols` entries.
/// The parallel kernel walks column supports; the serial reference is the
/// textbook triple loop.
DenseSymmetric gram_rows(std::span<const std::uint8_t> entries, std::size_t rows,
                         std::size_t cols, Exec exec = Exec::parallel);

/// Householder reduction of a symmetric matrix (destroyed) to tridiagonal
/// form. `diag` gets n entries, `offdiag` n entries with offdiag[n-1] = 0.
/// The parallel kernel works on the lower triangle only and fuses each
/// rank-2 update with the next step's matrix-vector product, so every entry
/// is read once per step. Its result does not depend on the thread count.
/// The serial reference does full-matrix sweeps and agrees to rounding.
void tridiagonalize(DenseSymmetric& a, std::vector<double>& diag,
                    std::vector<double>& offdiag, Exec exec = Exec::parallel);

/// Eigenvalues of a symmetric tridiagonal matrix by implicit QL with
/// Wilkinson shifts. Inputs are consumed. Output is unsorted.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag,
                                            std::vector<double> offdiag);

/// Full spectrum of a dense symmetric matrix, sorted descending.
std::vector<double> symmetric_eigenvalues(DenseSymmetric a,
                                          Exec exec = Exec::parallel);

}  // namespace ramanujan::kernels
