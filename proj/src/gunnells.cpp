#include "ramanujan/gunnells.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ramanujan/error.hpp"
#include "ramanujan/spectral.hpp"

namespace ramanujan::gunnells {

namespace {

void require_dimension(std::int64_t l) {
  if (l < 2) throw InvalidArgument("projective space needs l >= 2, got " + std::to_string(l));
}

std::int64_t dot(const ProjectivePoint& x, const ProjectivePoint& y, std::int64_t q) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) s = (s + x[k] * y[k]) % q;
  return s;
}

}  // namespace

std::size_t nu(std::int64_t l, std::int64_t q) {
  std::size_t sum = 0, power = 1;
  for (std::int64_t i = 0; i < l; ++i) {
    sum += power;
    power *= static_cast<std::size_t>(q);
  }
  return sum;
}

std::vector<ProjectivePoint> projective_points(const ff::PrimeModulus& pq, std::int64_t l) {
  require_dimension(l);
  const std::int64_t q = pq.value();
  std::vector<ProjectivePoint> out;
  for (std::int64_t lead = 0; lead < l; ++lead) {
    // Free coordinates after the leading one, counted as a base-q odometer
    // with the last coordinate fastest.
    const std::int64_t free = l - lead - 1;
    ProjectivePoint x(static_cast<std::size_t>(l), 0);
    x[static_cast<std::size_t>(lead)] = 1;
    std::int64_t count = 1;
    for (std::int64_t k = 0; k < free; ++k) count *= q;
    for (std::int64_t n = 0; n < count; ++n) {
      std::int64_t rem = n;
      for (std::int64_t k = l - 1; k > lead; --k) {
        x[static_cast<std::size_t>(k)] = rem % q;
        rem /= q;
      }
      out.push_back(x);
    }
  }
  if (out.size() != nu(l, q)) throw InternalError("projective point count mismatch");
  return out;
}

BinaryBigraph build_gunnells(const ff::PrimeModulus& pq, std::int64_t l) {
  const std::int64_t q = pq.value();
  const auto points = projective_points(pq, l);
  const std::size_t n = points.size();
  std::vector<std::uint8_t> entries(n * n, 0);
  const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t a = 0; a < rows; ++a) {
    const auto& x = points[static_cast<std::size_t>(a)];
    for (std::size_t c = 0; c < n; ++c) {
      entries[static_cast<std::size_t>(a) * n + c] = dot(x, points[c], q) == 0 ? 1 : 0;
    }
  }
  BinaryBigraph b(n, n, std::move(entries));
  const Degrees d = require_biregular(b);
  if (d.row != nu(l - 1, q) || d.col != nu(l - 1, q)) {
    throw InternalError("Gunnells bigraph degree differs from nu(l-1, q)");
  }
  return b;
}

GunnellsSpectrum gunnells_spectrum_check(const ff::PrimeModulus& pq, std::int64_t l) {
  const std::int64_t q = pq.value();
  const BinaryBigraph b = build_gunnells(pq, l);
  GunnellsSpectrum out;
  out.singular_values = spectral::singular_values(b);
  out.sigma1 = out.singular_values.front();
  out.expected_sigma1 = static_cast<double>(nu(l - 1, q));
  out.expected_rest = std::sqrt(std::pow(static_cast<double>(q), static_cast<double>(l - 2)));
  out.max_deviation = std::fabs(out.sigma1 - out.expected_sigma1);
  for (std::size_t k = 1; k < out.singular_values.size(); ++k) {
    out.max_deviation = std::max(out.max_deviation, std::fabs(out.singular_values[k] - out.expected_rest));
  }
  out.matches = out.max_deviation <= 1e-8;
  out.bound = spectral::ramanujan_bound(nu(l - 1, q));
  const double sigma2 = out.singular_values.size() > 1 ? out.singular_values[1] : 0.0;
  out.is_ramanujan = sigma2 <= out.bound + spectral::kVerdictSlack;
  return out;
}

std::optional<std::size_t> self_orthogonal_point(const ff::PrimeModulus& pq, std::int64_t l) {
  const auto points = projective_points(pq, l);
  for (std::size_t v = 0; v < points.size(); ++v) {
    if (dot(points[v], points[v], pq.value()) == 0) return v;
  }
  return std::nullopt;
}

SimpleGraph gunnells_nonbipartite(const ff::PrimeModulus& pq, std::int64_t l) {
  if (const auto v = self_orthogonal_point(pq, l)) {
    const auto points = projective_points(pq, l);
    std::string coords;
    for (std::int64_t x : points[*v]) coords += (coords.empty() ? "" : ",") + std::to_string(x);
    throw SelfLoopError("point " + std::to_string(*v) + " = (" + coords +
                            ") is self-orthogonal mod " + std::to_string(pq.value()) +
                            "; the annihilator pairing would create a loop",
                        *v);
  }
  const BinaryBigraph b = build_gunnells(pq, l);
  return apply_pairing(b, VertexPairing::identity(b.cols()));
}

}  // namespace ramanujan::gunnells
