#include "ramanujan/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace ramanujan::spectral {

using kernels::DenseSymmetric;
using kernels::Exec;

double ramanujan_bound(std::size_t d_row, std::size_t d_col) {
  auto root = [](std::size_t d) { return d == 0 ? 0.0 : std::sqrt(static_cast<double>(d - 1)); };
  return root(d_row) + root(d_col);
}

double ramanujan_bound(std::size_t d) { return ramanujan_bound(d, d); }

namespace {

// Gram of the shorter side of b: B B^T if rows <= cols, else B^T B.
DenseSymmetric short_side_gram(const BinaryBigraph& b, Exec exec) {
  if (b.rows() <= b.cols()) return kernels::gram_rows(b.entries(), b.rows(), b.cols(), exec);
  const BinaryBigraph t = b.transposed();
  return kernels::gram_rows(t.entries(), t.rows(), t.cols(), exec);
}

std::vector<double> roots_of_gram(DenseSymmetric g, Exec exec) {
  std::vector<double> lambda = kernels::symmetric_eigenvalues(std::move(g), exec);
  const double scale = lambda.empty() ? 1.0 : std::max(1.0, std::fabs(lambda.front()));
  for (double& v : lambda) v = v <= kGramZeroTol * scale ? 0.0 : std::sqrt(v);
  return lambda;
}

bool same_cluster(double a, double b) {
  return std::fabs(a - b) <= std::max(kClusterRelTol * std::max(std::fabs(a), std::fabs(b)),
                                      kClusterAbsFloor);
}

void sort_by_magnitude(std::vector<double>& v) {
  std::stable_sort(v.begin(), v.end(), [](double a, double b) {
    if (std::fabs(a) != std::fabs(b)) return std::fabs(a) > std::fabs(b);
    return a > b;
  });
}

}  // namespace

std::vector<double> singular_values(const BinaryBigraph& b, Exec exec) {
  if (b.rows() == 0 || b.cols() == 0) return {};
  return roots_of_gram(short_side_gram(b, exec), exec);
}

std::vector<double> eigenvalues(const SimpleGraph& g, Exec exec) {
  DenseSymmetric a{g.size(), std::vector<double>(g.adjacency().begin(), g.adjacency().end())};
  return kernels::symmetric_eigenvalues(std::move(a), exec);
}

std::size_t cluster_size(const std::vector<double>& values, double centre) {
  return static_cast<std::size_t>(std::count_if(
      values.begin(), values.end(), [&](double v) { return same_cluster(v, centre); }));
}

std::vector<Cluster> clusters(const std::vector<double>& descending) {
  std::vector<Cluster> out;
  for (double v : descending) {
    if (!out.empty() && same_cluster(out.back().value, v)) {
      ++out.back().multiplicity;
    } else {
      out.push_back({v, 1});
    }
  }
  return out;
}

SpectralReport ramanujan_report(const SimpleGraph& g, Exec exec) {
  const auto d = g.regular_degree();
  if (!d) {
    for (std::size_t v = 1; v < g.size(); ++v) {
      if (g.degree(v) != g.degree(0)) {
        throw IrregularError("graph is not regular: vertex " + std::to_string(v) +
                                 " has degree " + std::to_string(g.degree(v)) +
                                 ", expected " + std::to_string(g.degree(0)),
                             "row", v);
      }
    }
  }
  SpectralReport r;
  r.kind = SpectralReport::Kind::graph;
  r.n_rows = r.n_cols = g.size();
  r.degrees = {*d, *d};
  r.spectrum = eigenvalues(g, exec);
  sort_by_magnitude(r.spectrum);
  if (!r.spectrum.empty()) r.top = r.spectrum[0];
  if (r.spectrum.size() > 1) r.second = r.spectrum[1];
  r.bound = ramanujan_bound(*d);
  std::vector<double> mags(r.spectrum.size());
  std::transform(r.spectrum.begin(), r.spectrum.end(), mags.begin(),
                 [](double v) { return std::fabs(v); });
  r.second_multiplicity = r.spectrum.size() > 1 ? cluster_size(mags, std::fabs(r.second)) : 0;
  r.gap = r.bound - std::fabs(r.second);
  r.is_ramanujan = std::fabs(r.second) <= r.bound + kVerdictSlack;
  return r;
}

SpectralReport ramanujan_report(const BinaryBigraph& b, Exec exec) {
  const DegreeCheck c = check_biregular(b);
  if (!c.ok) {
    throw IrregularError("bigraph is not biregular: " + c.side + " " + std::to_string(c.index) +
                             " has degree " + std::to_string(c.found) + ", expected " +
                             std::to_string(c.expected),
                         c.side, c.index);
  }
  SpectralReport r;
  r.kind = SpectralReport::Kind::bigraph;
  r.n_rows = b.rows();
  r.n_cols = b.cols();
  r.degrees = c.degrees;
  r.spectrum = singular_values(b, exec);
  if (!r.spectrum.empty()) r.top = r.spectrum[0];
  if (r.spectrum.size() > 1) r.second = r.spectrum[1];
  r.bound = ramanujan_bound(c.degrees.row, c.degrees.col);
  r.second_multiplicity = r.spectrum.size() > 1 ? cluster_size(r.spectrum, r.second) : 0;
  r.gap = r.bound - r.second;
  r.is_ramanujan = r.second <= r.bound + kVerdictSlack;
  return r;
}

double centered_spectral_norm(const BinaryBigraph& e, Exec exec) {
  const DegreeCheck c = check_biregular(e);
  if (!c.ok) {
    throw IrregularError("centered norm needs a biregular matrix: " + c.side + " " +
                             std::to_string(c.index) + " breaks regularity",
                         c.side, c.index);
  }
  const double alpha = static_cast<double>(c.degrees.row) / static_cast<double>(e.cols());
  // Gram of the shorter side of E - alpha J:
  // (E E^T)_ik - alpha (r_i + r_k) + alpha^2 * (length of a line).
  const bool by_rows = e.rows() <= e.cols();
  const double line_len = static_cast<double>(by_rows ? e.cols() : e.rows());
  const double line_sum = static_cast<double>(by_rows ? c.degrees.row : c.degrees.col);
  DenseSymmetric g = short_side_gram(e, exec);
  const double shift = -2.0 * alpha * line_sum + alpha * alpha * line_len;
  for (double& v : g.values) v += shift;
  std::vector<double> lambda = kernels::symmetric_eigenvalues(std::move(g), exec);
  return lambda.empty() ? 0.0 : std::sqrt(std::max(0.0, lambda.front()));
}

double spectral_norm(const BinaryBigraph& e, Exec exec) {
  const auto s = singular_values(e, exec);
  return s.empty() ? 0.0 : s.front();
}

double spectral_norm(const std::vector<int>& m, std::size_t rows, std::size_t cols) {
  if (m.size() != rows * cols) throw InvalidArgument("spectral_norm: size mismatch");
  if (rows == 0 || cols == 0) return 0.0;
  // Sparse Gram of the shorter side.
  const bool by_rows = rows <= cols;
  const std::size_t n = by_rows ? rows : cols, len = by_rows ? cols : rows;
  auto at = [&](std::size_t line, std::size_t k) {
    return by_rows ? m[line * cols + k] : m[k * cols + line];
  };
  std::vector<std::vector<std::pair<std::size_t, int>>> across(len);
  for (std::size_t line = 0; line < n; ++line) {
    for (std::size_t k = 0; k < len; ++k) {
      if (at(line, k) != 0) across[k].emplace_back(line, at(line, k));
    }
  }
  DenseSymmetric g{n, std::vector<double>(n * n, 0.0)};
  for (const auto& entries : across) {
    for (const auto& [i, vi] : entries) {
      for (const auto& [k, vk] : entries) g(i, k) += static_cast<double>(vi * vk);
    }
  }
  std::vector<double> lambda = kernels::symmetric_eigenvalues(std::move(g));
  return std::sqrt(std::max(0.0, lambda.front()));
}

std::size_t theta_c(const BinaryBigraph& e, Exec exec) {
  if (e.cols() < 2) throw InvalidArgument("theta_c needs at least two columns");
  if (exec == Exec::serial) {
    const BinaryBigraph t = e.transposed();
    const DenseSymmetric g = kernels::gram_rows(t.entries(), t.rows(), t.cols(), Exec::serial);
    double best = 0.0;
    for (std::size_t i = 0; i < g.n; ++i) {
      for (std::size_t k = 0; k < g.n; ++k) {
        if (i != k) best = std::max(best, g(i, k));
      }
    }
    return static_cast<std::size_t>(best);
  }
  // Streaming overlap counts per column, never materialising E^T E.
  std::vector<std::vector<std::size_t>> row_support(e.rows()), col_support(e.cols());
  for (std::size_t i = 0; i < e.rows(); ++i) {
    for (std::size_t j = 0; j < e.cols(); ++j) {
      if (e(i, j)) {
        row_support[i].push_back(j);
        col_support[j].push_back(i);
      }
    }
  }
  std::size_t best = 0;
  const std::ptrdiff_t ncols = static_cast<std::ptrdiff_t>(e.cols());
#pragma omp parallel
  {
    std::vector<std::size_t> count(e.cols(), 0);
    std::size_t local = 0;
#pragma omp for schedule(static)
    for (std::ptrdiff_t jj = 0; jj < ncols; ++jj) {
      const std::size_t j = static_cast<std::size_t>(jj);
      for (std::size_t i : col_support[j]) {
        for (std::size_t k : row_support[i]) ++count[k];
      }
      for (std::size_t i : col_support[j]) {
        for (std::size_t k : row_support[i]) {
          if (k != j) local = std::max(local, count[k]);
          count[k] = 0;
        }
      }
    }
#pragma omp critical
    best = std::max(best, local);
  }
  return best;
}

}  // namespace ramanujan::spectral
