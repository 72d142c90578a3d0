#include "ramanujan/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "ramanujan/error.hpp"

namespace ramanujan::kernels {

namespace {

using Index = std::ptrdiff_t;

DenseSymmetric gram_rows_serial(std::span<const std::uint8_t> e, std::size_t rows,
                                std::size_t cols) {
  DenseSymmetric g{rows, std::vector<double>(rows * rows, 0.0)};
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < rows; ++k) {
      long acc = 0;
      for (std::size_t j = 0; j < cols; ++j) acc += e[i * cols + j] * e[k * cols + j];
      g(i, k) = static_cast<double>(acc);
    }
  }
  return g;
}

DenseSymmetric gram_rows_parallel(std::span<const std::uint8_t> e, std::size_t rows,
                                  std::size_t cols) {
  // Rows touching each column, and columns touched by each row.
  std::vector<std::vector<std::size_t>> col_support(cols), row_support(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (e[i * cols + j]) {
        col_support[j].push_back(i);
        row_support[i].push_back(j);
      }
    }
  }
  DenseSymmetric g{rows, std::vector<double>(rows * rows, 0.0)};
  const Index n = static_cast<Index>(rows);
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < n; ++i) {
    double* out = &g.values[static_cast<std::size_t>(i) * rows];
    for (std::size_t j : row_support[static_cast<std::size_t>(i)]) {
      for (std::size_t k : col_support[j]) out[k] += 1.0;
    }
  }
  return g;
}

// One Householder reflector H = I - tau v v^T chosen so that H x = alpha e_0.
struct Reflector {
  std::vector<double> v;
  double tau = 0.0;
  double alpha = 0.0;
};

Reflector make_reflector(const double* x, std::size_t m) {
  Reflector h;
  h.v.assign(x, x + m);
  double scale = 0.0;
  for (std::size_t i = 0; i < m; ++i) scale = std::max(scale, std::fabs(x[i]));
  if (scale == 0.0) return h;
  double s = 0.0;
  for (std::size_t i = 0; i < m; ++i) s += (x[i] / scale) * (x[i] / scale);
  // H = I - tau v v^T with v[0] = 1 maps x to (alpha, 0, ..., 0).
  h.alpha = x[0] > 0.0 ? -scale * std::sqrt(s) : scale * std::sqrt(s);
  h.tau = (h.alpha - x[0]) / h.alpha;
  const double head = x[0] - h.alpha;
  for (std::size_t i = 0; i < m; ++i) h.v[i] = x[i] / head;
  h.v[0] = 1.0;
  return h;
}

// p = tau * w - K v with K = tau^2 (w.v) / 2, where w = A22 v. The rank-2
// update A22 -= v p^T + p v^T then applies H A22 H.
std::vector<double> update_vector(const Reflector& h, const std::vector<double>& w) {
  const std::size_t m = h.v.size();
  std::vector<double> p(m);
  double pv = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    p[i] = h.tau * w[i];
    pv += p[i] * h.v[i];
  }
  const double k = 0.5 * h.tau * pv;
  for (std::size_t i = 0; i < m; ++i) p[i] -= k * h.v[i];
  return p;
}

void tridiagonalize_serial(DenseSymmetric& a, std::vector<double>& d,
                           std::vector<double>& e) {
  const std::size_t n = a.n;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t lo = k + 1, m = n - lo;
    d[k] = a(k, k);
    const Reflector h = make_reflector(&a.values[k * n + lo], m);
    e[k] = h.tau == 0.0 ? a(k, lo) : h.alpha;
    if (h.tau == 0.0) continue;
    std::vector<double> w(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < m; ++j) acc += a(lo + i, lo + j) * h.v[j];
      w[i] = acc;
    }
    const std::vector<double> p = update_vector(h, w);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        a(lo + i, lo + j) -= h.v[i] * p[j] + p[i] * h.v[j];
      }
    }
  }
  if (n >= 2) {
    d[n - 2] = a(n - 2, n - 2);
    e[n - 2] = a(n - 2, n - 1);
  }
  if (n >= 1) {
    d[n - 1] = a(n - 1, n - 1);
    e[n - 1] = 0.0;
  }
}

// Row blocks of the trailing lower triangle with roughly equal area. Each
// block accumulates its own share of A v; shares are summed in block order.
constexpr std::size_t kBlocks = 16;

std::vector<std::size_t> block_bounds(std::size_t m) {
  std::vector<std::size_t> b(kBlocks + 1, m);
  b[0] = 0;
  for (std::size_t k = 1; k < kBlocks; ++k) {
    const double frac = std::sqrt(static_cast<double>(k) / static_cast<double>(kBlocks));
    b[k] = std::max(b[k - 1], std::min(m, static_cast<std::size_t>(frac * static_cast<double>(m))));
  }
  return b;
}

void tridiagonalize_parallel(DenseSymmetric& a, std::vector<double>& d,
                             std::vector<double>& e) {
  const std::size_t n = a.n;
  if (n < 3) {
    tridiagonalize_serial(a, d, e);
    return;
  }
  std::vector<double> column(n);
  auto pivot_column = [&](std::size_t k) {
    const std::size_t m = n - k - 1;
    for (std::size_t i = 0; i < m; ++i) column[i] = a(k + 1 + i, k);
    return make_reflector(column.data(), m);
  };
  std::vector<std::vector<double>> partial(kBlocks);

  // Rows first..n-1 and columns first..row of the lower triangle. Applies the
  // pending rank-2 update (if any) and accumulates w = A v over the same
  // entries, reading each one once.
  auto sweep = [&](std::size_t first, const Reflector* update, const std::vector<double>* p,
                   std::size_t update_lo, const Reflector* next, std::vector<double>& w) {
    const std::size_t m = n - first;
    const auto bounds = block_bounds(m);
    for (auto& buf : partial) buf.assign(next ? m : 0, 0.0);
    const Index blocks = static_cast<Index>(kBlocks);
#pragma omp parallel for schedule(dynamic, 1)
    for (Index blk = 0; blk < blocks; ++blk) {
      std::vector<double>& acc = partial[static_cast<std::size_t>(blk)];
      for (std::size_t i = bounds[static_cast<std::size_t>(blk)]; i < bounds[static_cast<std::size_t>(blk) + 1]; ++i) {
        double* row = &a.values[(first + i) * n + first];
        if (update) {
          const std::size_t ui = first + i - update_lo;
          const double vi = update->v[ui], pi = (*p)[ui];
          const double* vj = &update->v[first - update_lo];
          const double* pj = &(*p)[first - update_lo];
          for (std::size_t j = 0; j <= i; ++j) row[j] -= vi * pj[j] + pi * vj[j];
        }
        if (next) {
          const double vi = next->v[i];
          double own = 0.0;
          for (std::size_t j = 0; j < i; ++j) {
            own += row[j] * next->v[j];
            acc[j] += row[j] * vi;
          }
          acc[i] += own + row[i] * vi;
        }
      }
    }
    if (!next) return;
    w.assign(m, 0.0);
    for (const auto& buf : partial) {
      for (std::size_t j = 0; j < m; ++j) w[j] += buf[j];
    }
  };

  Reflector h = pivot_column(0);
  std::vector<double> w;
  if (h.tau != 0.0) sweep(1, nullptr, nullptr, 0, &h, w);

  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t lo = k + 1, m = n - lo;
    d[k] = a(k, k);
    e[k] = h.tau == 0.0 ? a(lo, k) : h.alpha;
    const bool active = h.tau != 0.0;
    std::vector<double> p;
    if (active) {
      p = update_vector(h, w);
      // Column lo of the trailing block defines the next reflector.
      for (std::size_t i = 0; i < m; ++i) a(lo + i, lo) -= h.v[i] * p[0] + p[i] * h.v[0];
    }
    const bool last = k + 3 >= n;
    Reflector next;
    if (!last) next = pivot_column(lo);
    const bool next_active = next.tau != 0.0;
    std::vector<double> next_w;
    if (active || next_active) {
      sweep(lo + 1, active ? &h : nullptr, &p, lo, next_active ? &next : nullptr, next_w);
    }
    h = std::move(next);
    w = std::move(next_w);
  }
  d[n - 2] = a(n - 2, n - 2);
  e[n - 2] = a(n - 1, n - 2);
  d[n - 1] = a(n - 1, n - 1);
  e[n - 1] = 0.0;
}

}  // namespace

DenseSymmetric gram_rows(std::span<const std::uint8_t> entries, std::size_t rows,
                         std::size_t cols, Exec exec) {
  if (entries.size() != rows * cols) throw InvalidArgument("gram_rows: size mismatch");
  return exec == Exec::serial ? gram_rows_serial(entries, rows, cols)
                              : gram_rows_parallel(entries, rows, cols);
}

void tridiagonalize(DenseSymmetric& a, std::vector<double>& diag,
                    std::vector<double>& offdiag, Exec exec) {
  diag.assign(a.n, 0.0);
  offdiag.assign(a.n, 0.0);
  if (exec == Exec::serial) {
    tridiagonalize_serial(a, diag, offdiag);
  } else {
    tridiagonalize_parallel(a, diag, offdiag);
  }
}

std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> e) {
  const std::size_t n = d.size();
  if (e.size() != n) throw InvalidArgument("tridiagonal_eigenvalues: size mismatch");
  if (n == 0) return d;
  e[n - 1] = 0.0;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double norm = 0.0;
  for (std::size_t k = 0; k < n; ++k) norm = std::max(norm, std::fabs(d[k]) + std::fabs(e[k]) + (k ? std::fabs(e[k - 1]) : 0.0));
  const double floor = eps * norm;

  for (std::size_t l = 0; l < n; ++l) {
    int iterations = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * dd || std::fabs(e[m]) <= floor) break;
      }
      if (m == l) break;
      if (++iterations > 60) throw InternalError("QL iteration did not converge");

      // Wilkinson-style shift from the leading 2x2 block.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool deflated = false;
      for (std::size_t i = m; i-- > l;) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
  return d;
}

std::vector<double> symmetric_eigenvalues(DenseSymmetric a, Exec exec) {
  std::vector<double> d, e;
  tridiagonalize(a, d, e, exec);
  std::vector<double> values = tridiagonal_eigenvalues(std::move(d), std::move(e));
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

}  // namespace ramanujan::kernels
