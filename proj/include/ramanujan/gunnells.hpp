#pragma once

// Point/hyperplane incidence bigraphs of the projective space over F_q^l.
// A hyperplane is stored by the canonical vector spanning its annihilator,
// so rows and columns share one label set.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ramanujan/finite_field.hpp"
#include "ramanujan/graph.hpp"

namespace ramanujan::gunnells {

/// Canonical spanning vector of a line in F_q^l: first nonzero entry is 1.
using ProjectivePoint = std::vector<std::int64_t>;

/// nu(l, q) = (q^l - 1) / (q - 1).
std::size_t nu(std::int64_t l, std::int64_t q);

/// All nu(l, q) points: leading one in position 0 first, then position 1,
/// and so on, lexicographic within each stage.
std::vector<ProjectivePoint> projective_points(const ff::PrimeModulus& q, std::int64_t l);

/// Entry (a, b) is 1 iff y_b . x_a = 0 mod q.
BinaryBigraph build_gunnells(const ff::PrimeModulus& q, std::int64_t l);

struct GunnellsSpectrum {
  std::vector<double> singular_values;
  double sigma1 = 0.0;
  double expected_sigma1 = 0.0;       // nu(l-1, q)
  double expected_rest = 0.0;         // sqrt(q^(l-2))
  double max_deviation = 0.0;         // worst |sigma - expected|
  bool matches = false;               // max_deviation <= 1e-8
  double bound = 0.0;                 // 2 sqrt(d - 1)
  bool is_ramanujan = false;
};

GunnellsSpectrum gunnells_spectrum_check(const ff::PrimeModulus& q, std::int64_t l);

/// Index of the first point with x.x = 0 mod q, if any.
std::optional<std::size_t> self_orthogonal_point(const ff::PrimeModulus& q, std::int64_t l);

/// Pairs each hyperplane with its annihilator. With hyperplanes labelled by
/// annihilator the pairing is the identity and A = B. A self-orthogonal
/// point would become a loop, so the conversion is refused with a
/// SelfLoopError naming that vertex.
SimpleGraph gunnells_nonbipartite(const ff::PrimeModulus& q, std::int64_t l);

}  // namespace ramanujan::gunnells
