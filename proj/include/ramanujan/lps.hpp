#pragma once

// Lubotzky-Phillips-Sarnak Cayley graphs on PGL(2, F_q).
//
// Group elements are stored by a canonical representative of their scalar
// class: [[0, 1], [g, h]] when the (1,1) entry vanishes, otherwise
// [[1, f], [g, h]]. The enumeration order of these representatives is the
// vertex order of every graph built here.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ramanujan/finite_field.hpp"
#include "ramanujan/graph.hpp"
#include "ramanujan/kernels.hpp"

namespace ramanujan::lps {

/// Raw 2x2 matrix [[a, b], [c, d]] over F_q.
struct Mat2 {
  std::int64_t a = 0, b = 0, c = 0, d = 0;
  bool operator==(const Mat2&) const = default;
};

Mat2 multiply(const Mat2& x, const Mat2& y, std::int64_t q);
std::int64_t determinant(const Mat2& m, std::int64_t q);

/// Canonical representative of a class in PGL(2, F_q).
class ProjMatrix {
 public:
  /// Scales m to canonical form. Throws InvalidArgument if det(m) = 0.
  static ProjMatrix from(const Mat2& m, std::int64_t q);
  const Mat2& matrix() const { return m_; }
  bool operator==(const ProjMatrix&) const = default;

 private:
  explicit ProjMatrix(Mat2 m) : m_(m) {}
  Mat2 m_;
};

/// Position of a canonical matrix in enumerate_pgl order.
std::size_t pgl_index(const ProjMatrix& m, std::int64_t q);

/// All q(q^2 - 1) canonical matrices: the [[0,1],[g,h]] block (g, h
/// ascending) followed by the [[1,f],[g,h]] block (f, g, h ascending).
std::vector<ProjMatrix> enumerate_pgl(const ff::PrimeModulus& q);

/// +1 when det(m) is a square mod q (PSL), -1 otherwise (the complement).
int psl_class(const ProjMatrix& m, const ff::PrimeModulus& q);

/// p = a0^2 + a1^2 + a2^2 + a3^2 with a0 odd positive and a1, a2, a3 even.
struct FourSquare {
  std::int64_t a0, a1, a2, a3;
  bool operator==(const FourSquare&) const = default;
};

/// The p + 1 solutions in lexicographic order. Requires p prime, p = 1 mod 4.
std::vector<FourSquare> four_square_solutions(std::int64_t p);

/// Canonical generators M_j, one per four-square solution, using the
/// smallest square root of -1 mod q. Validates p != q, both = 1 mod 4,
/// det M_j = p, inverse-closure and pairwise distinctness.
std::vector<ProjMatrix> lps_generators(std::int64_t p, std::int64_t q);

/// Index j' with M_j M_j' ~ I for every j.
std::vector<std::size_t> inverse_pairs(const std::vector<ProjMatrix>& gens, std::int64_t q);

/// Cayley graph of PGL(2, F_q) under the LPS generators, on all
/// q(q^2 - 1) vertices.
SimpleGraph cayley_pgl(std::int64_t p, std::int64_t q,
                       kernels::Exec exec = kernels::Exec::parallel);

/// Involution [[alpha, beta], [gamma, -alpha]] with alpha = 0, gamma = -1
/// and beta = delta, the smallest non-residue. Its square is -delta * I and
/// its determinant delta is a non-residue.
Mat2 involution_matrix(const ff::PrimeModulus& q);

struct LpsResult {
  int legendre = 0;                  // (p/q)
  std::vector<ProjMatrix> psl;       // row side / first component, PGL order
  std::vector<ProjMatrix> psl_comp;  // column side / second component
  // (p/q) = -1: rows psl, columns psl_comp.
  std::optional<BinaryBigraph> biadjacency;
  // (p/q) = +1: the two components and the isomorphism X -> A X between them
  // (psl index -> psl_comp index).
  std::optional<SimpleGraph> component_psl;
  std::optional<SimpleGraph> component_psl_comp;
  std::vector<std::size_t> isomorphism;
  Mat2 isomorphism_matrix;
};

LpsResult build_lps(std::int64_t p, std::int64_t q,
                    kernels::Exec exec = kernels::Exec::parallel);

struct LpsNonbipartite {
  SimpleGraph graph;                 // on the psl vertices
  BinaryBigraph biadjacency;         // the bipartite form it came from
  VertexPairing pairing;             // psl_comp index -> psl index, Z -> [A Z]
};

/// Non-bipartite (p+1)-regular graph on q(q^2-1)/2 vertices. Requires
/// (p/q) = -1.
LpsNonbipartite lps_nonbipartite(std::int64_t p, std::int64_t q,
                                 kernels::Exec exec = kernels::Exec::parallel);

}  // namespace ramanujan::lps
