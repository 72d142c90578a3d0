#pragma once

// Cayley graphs on the additive group Z_q x Z_q. Vertex (a, b) has index
// a*q + b. The Li flavour reads (a, b) as the extension element a*xbar + b.

#include <cstdint>
#include <utility>
#include <vector>

#include "ramanujan/finite_field.hpp"
#include "ramanujan/graph.hpp"
#include "ramanujan/kernels.hpp"

namespace ramanujan::abelian {

enum class Flavor { li, bibak };

struct AbelianCayleySpec {
  ff::PrimeModulus q;
  Flavor flavor;
  std::vector<std::pair<std::int64_t, std::int64_t>> generators;  // (s1, s2), sorted
};

/// Generators are the q + 1 norm-one units of F_q[x]/(x^2 + c).
AbelianCayleySpec li_spec(std::int64_t q);

/// Generators are the solutions of x^2 + y^2 = 1. Requires q = 3 mod 4.
AbelianCayleySpec bibak_spec(std::int64_t q);

/// Joins v to v + s for every generator s. Checks symmetry of S and that the
/// result is |S|-regular.
SimpleGraph build(const AbelianCayleySpec& spec);

SimpleGraph build_li(std::int64_t q);
SimpleGraph build_bibak(std::int64_t q);

/// lambda_(u,v) = sum over S of cos(2 pi (u s1 + v s2) / q), in character
/// order (u, v) lexicographic.
std::vector<double> character_values(const AbelianCayleySpec& spec,
                                     kernels::Exec exec = kernels::Exec::parallel);

/// The same values sorted descending.
std::vector<double> character_spectrum(const AbelianCayleySpec& spec,
                                       kernels::Exec exec = kernels::Exec::parallel);

}  // namespace ramanujan::abelian
