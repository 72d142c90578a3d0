#pragma once

// Dense 0/1 containers for bipartite graphs (biadjacency matrices) and
// undirected graphs, plus the structural operations shared by every
// construction: degree checks, components, two-colouring, Cayley graphs and
// the bipartite-to-nonbipartite pairing.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ramanujan/error.hpp"
#include "ramanujan/kernels.hpp"

namespace ramanujan {

using Edge = std::pair<std::size_t, std::size_t>;

struct Degrees {
  std::size_t row = 0;  // d_r, degree of every row vertex
  std::size_t col = 0;  // d_c, degree of every column vertex
  bool operator==(const Degrees&) const = default;
};

/// n_r x n_c biadjacency matrix. The edge set is the support of the matrix.
class BinaryBigraph {
 public:
  BinaryBigraph() = default;
  BinaryBigraph(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}
  /// Takes row-major entries; rejects anything other than 0 and 1.
  BinaryBigraph(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint8_t operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, bool value) {
    entries_[i * cols_ + j] = value ? 1 : 0;
    degrees_.reset();
  }
  std::span<const std::uint8_t> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  std::span<const std::uint8_t> entries() const { return entries_; }

  /// Edge list, sorted by row then column.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;
  BinaryBigraph transposed() const;

  /// Degree tag recorded by check_biregular.
  const std::optional<Degrees>& degrees() const { return degrees_; }
  void record_degrees(Degrees d) { degrees_ = d; }

  /// Construction hint: when true the natural object of study is the
  /// transpose (array codes with l < q).
  bool analyze_transposed() const { return analyze_transposed_; }
  void set_analyze_transposed(bool t) { analyze_transposed_ = t; }

  bool operator==(const BinaryBigraph& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint8_t> entries_;
  std::optional<Degrees> degrees_;
  bool analyze_transposed_ = false;
};

enum class Loops { forbid, allow };

/// Undirected graph as a symmetric 0/1 adjacency matrix. Self-loops are only
/// representable when the graph was created with Loops::allow.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n, Loops loops = Loops::forbid)
      : n_(n), loops_(loops), adjacency_(n * n, 0) {}
  /// Validates 0/1 entries, symmetry and (unless allowed) the zero diagonal.
  SimpleGraph(std::size_t n, std::vector<std::uint8_t> adjacency,
              Loops loops = Loops::forbid);

  std::size_t size() const { return n_; }
  Loops loop_policy() const { return loops_; }
  std::uint8_t operator()(std::size_t i, std::size_t j) const { return adjacency_[i * n_ + j]; }
  std::span<const std::uint8_t> row(std::size_t i) const {
    return {adjacency_.data() + i * n_, n_};
  }
  std::span<const std::uint8_t> adjacency() const { return adjacency_; }

  void add_edge(std::size_t u, std::size_t v);
  std::size_t degree(std::size_t v) const;
  /// Common degree if every row sum agrees.
  std::optional<std::size_t> regular_degree() const;
  std::size_t loop_count() const;
  /// Upper-triangle edges (u <= v), sorted.
  std::vector<Edge> edges() const;

  bool operator==(const SimpleGraph& o) const {
    return n_ == o.n_ && adjacency_ == o.adjacency_;
  }

 private:
  std::size_t n_ = 0;
  Loops loops_ = Loops::forbid;
  std::vector<std::uint8_t> adjacency_;
};

/// Outcome of a biregularity check. On failure `side` is "row" or "column"
/// and `index` the first line whose sum disagrees with line 0.
struct DegreeCheck {
  bool ok = false;
  Degrees degrees;
  std::string side;
  std::size_t index = 0;
  std::size_t expected = 0;
  std::size_t found = 0;
};

DegreeCheck check_biregular(const BinaryBigraph& g);
/// Runs check_biregular, records the tag and returns the degrees; throws
/// IrregularError otherwise.
Degrees require_biregular(BinaryBigraph& g);

/// Vertex classes of each component, ordered by their smallest vertex.
std::vector<std::vector<std::size_t>> connected_components(const SimpleGraph& g);

struct Bipartition {
  bool bipartite = false;
  std::vector<std::size_t> first, second;  // first contains vertex 0's class
  std::vector<std::size_t> odd_cycle;      // witness when not bipartite
};
Bipartition bipartition(const SimpleGraph& g);

/// The bipartite graph [[0, B], [B^T, 0]] on rows + cols vertices.
SimpleGraph bipartite_double(const BinaryBigraph& b);

/// Bijection from column vertices to row vertices.
class VertexPairing {
 public:
  explicit VertexPairing(std::vector<std::size_t> col_to_row);
  static VertexPairing identity(std::size_t n);
  std::size_t size() const { return col_to_row_.size(); }
  std::size_t row_of(std::size_t col) const { return col_to_row_[col]; }
  std::size_t col_of(std::size_t row) const { return row_to_col_[row]; }
  /// Permutation matrix with a one at (col, row_of(col)).
  BinaryBigraph matrix() const;

 private:
  std::vector<std::size_t> col_to_row_, row_to_col_;
};

/// A = B * Pi, i.e. A[x][r] = B[x][col_of(r)]. Throws AsymmetryError if A is
/// not symmetric and SelfLoopError on a diagonal one (unless allowed).
SimpleGraph apply_pairing(const BinaryBigraph& b, const VertexPairing& pi,
                          Loops loops = Loops::forbid);

/// Assemble a graph from directed neighbour lists, checking for repeated
/// neighbours and for symmetry.
SimpleGraph graph_from_neighbours(const std::vector<std::vector<std::size_t>>& nbrs);

/// Cayley graph C(G, S): vertex x is joined to x * s for each s in S.
///
/// `elements` lists the group in canonical form and defines vertex order;
/// `compose(x, s)` must return the canonical product and `index_of` map a
/// canonical element back to its vertex. `are_inverse(a, b)` decides whether
/// a * b is the identity and is used to check that S is symmetric.
template <class T, class Compose, class IndexOf, class AreInverse>
SimpleGraph cayley_graph(std::span<const T> elements, std::span<const T> generators,
                         Compose compose, IndexOf index_of, AreInverse are_inverse,
                         kernels::Exec exec = kernels::Exec::parallel) {
  for (std::size_t a = 0; a < generators.size(); ++a) {
    bool found = false;
    for (std::size_t b = 0; b < generators.size() && !found; ++b) {
      found = are_inverse(generators[a], generators[b]);
    }
    if (!found) {
      throw InvalidArgument("cayley_graph: generator " + std::to_string(a) +
                            " has no inverse in the generator set");
    }
  }
  const std::size_t n = elements.size();
  std::vector<std::vector<std::size_t>> nbrs(n);
  auto fill = [&](std::size_t x) {
    auto& out = nbrs[x];
    out.reserve(generators.size());
    for (const T& s : generators) out.push_back(index_of(compose(elements[x], s)));
  };
  if (exec == kernels::Exec::parallel) {
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t x = 0; x < count; ++x) fill(static_cast<std::size_t>(x));
  } else {
    for (std::size_t x = 0; x < n; ++x) fill(x);
  }
  return graph_from_neighbours(nbrs);
}

}  // namespace ramanujan
