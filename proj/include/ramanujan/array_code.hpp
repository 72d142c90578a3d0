#pragma once

// Array-code biadjacency matrices B(q, l): a q x l grid of q x q blocks with
// block (I, J) = P^(I*J), P the cyclic shift with P[i][j] = 1 iff
// j = i - 1 mod q. B is (l, q)-biregular with q^2 rows and lq columns.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ramanujan/finite_field.hpp"
#include "ramanujan/graph.hpp"

namespace ramanujan::array_code {

struct ArrayCodeSpec {
  ff::PrimeModulus q;
  std::int64_t l;

  /// Throws InvalidArgument for l < 2.
  ArrayCodeSpec(std::int64_t q_value, std::int64_t l_value);
};

/// q x q cyclic shift, row-major.
std::vector<std::uint8_t> cyclic_shift(std::int64_t q);

/// B(q, l), tagged (l, q)-biregular. When l < q the transpose is flagged as
/// the orientation of interest.
BinaryBigraph build_array_code(const ArrayCodeSpec& spec);

/// A singular value with its exact multiplicity.
struct SingularLevel {
  double value;
  std::size_t multiplicity;
};

/// Closed-form singular values of B(q, l), descending, zero level last.
/// Multiplicities sum to min(q^2, ql).
std::vector<SingularLevel> predicted_spectrum(const ArrayCodeSpec& spec);
/// The same multiset expanded into a descending list.
std::vector<double> predicted_values(const ArrayCodeSpec& spec);

/// Symmetric q-regular graph on q^2 vertices obtained from B(q, q) by
/// pairing column (J, s) with row (J, -s): vertices (I, r) and (J, s) are
/// adjacent iff r + s = I*J mod q. B(q, q) itself is not symmetric for
/// q > 2, and any symmetric matrix with its spectrum has trace q, so the
/// result carries exactly q self-loops.
SimpleGraph build_array_code_graph(std::int64_t q);

}  // namespace ramanujan::array_code
