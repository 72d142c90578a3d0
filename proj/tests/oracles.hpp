#pragma once

// Reference computations that share no code with the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

/// Cyclic Jacobi on a dense symmetric matrix; eigenvalues descending.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::fabs(apq) < 1e-300) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i * n + i];
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Singular values of a row-major 0/1 matrix through Jacobi on B^T B or B B^T.
inline std::vector<double> singular_values(const std::vector<std::uint8_t>& b, std::size_t rows,
                                           std::size_t cols) {
  const bool by_rows = rows <= cols;
  const std::size_t n = by_rows ? rows : cols, len = by_rows ? cols : rows;
  auto at = [&](std::size_t line, std::size_t k) { return by_rows ? b[line * cols + k] : b[k * cols + line]; };
  std::vector<double> g(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < len; ++k) g[i * n + j] += at(i, k) * at(j, k);
  auto ev = jacobi_eigenvalues(g, n);
  const double top = ev.empty() ? 0.0 : *std::max_element(ev.begin(), ev.end());
  for (double& v : ev) v = v <= 1e-10 * top ? 0.0 : std::sqrt(v);
  return ev;
}

/// Max inner product of two distinct columns, by direct pairwise sums.
inline std::size_t max_column_overlap(const std::vector<std::uint8_t>& b, std::size_t rows, std::size_t cols) {
  std::size_t best = 0;
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t k = j + 1; k < cols; ++k) {
      std::size_t s = 0;
      for (std::size_t i = 0; i < rows; ++i) s += b[i * cols + j] & b[i * cols + k];
      best = std::max(best, s);
    }
  return best;
}

/// +1 if a is a nonzero square mod q, found by listing all squares.
inline int legendre_by_squares(std::int64_t a, std::int64_t q) {
  a = ((a % q) + q) % q;
  for (std::int64_t x = 1; x < q; ++x)
    if (x * x % q == a) return 1;
  return -1;
}

inline bool all_close(const std::vector<double>& x, const std::vector<double>& y, double tol) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (std::fabs(x[i] - y[i]) > tol) return false;
  return true;
}

inline std::vector<double> sorted_abs(std::vector<double> v) {
  for (double& x : v) x = std::fabs(x);
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace oracle
