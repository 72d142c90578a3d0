#include "ramanujan/lps.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ramanujan/error.hpp"

namespace ramanujan::lps {

using ff::mod;

Mat2 multiply(const Mat2& x, const Mat2& y, std::int64_t q) {
  return {mod(x.a * y.a + x.b * y.c, q), mod(x.a * y.b + x.b * y.d, q),
          mod(x.c * y.a + x.d * y.c, q), mod(x.c * y.b + x.d * y.d, q)};
}

std::int64_t determinant(const Mat2& m, std::int64_t q) {
  return mod(m.a * m.d - m.b * m.c, q);
}

ProjMatrix ProjMatrix::from(const Mat2& raw, std::int64_t q) {
  const Mat2 m{mod(raw.a, q), mod(raw.b, q), mod(raw.c, q), mod(raw.d, q)};
  if (determinant(m, q) == 0) throw InvalidArgument("matrix is singular mod " + std::to_string(q));
  const ff::PrimeModulus pq(q);
  const std::int64_t s = ff::inverse_mod(m.a != 0 ? m.a : m.b, pq);
  return ProjMatrix(Mat2{mod(m.a * s, q), mod(m.b * s, q), mod(m.c * s, q), mod(m.d * s, q)});
}

std::size_t pgl_index(const ProjMatrix& pm, std::int64_t q) {
  const Mat2& m = pm.matrix();
  if (m.a == 0) return static_cast<std::size_t>((m.c - 1) * q + m.d);
  const std::int64_t offset = q * (q - 1);
  const std::int64_t fg = m.b * m.c % q;
  const std::int64_t h_rank = m.d < fg ? m.d : m.d - 1;
  return static_cast<std::size_t>(offset + (m.b * q + m.c) * (q - 1) + h_rank);
}

std::vector<ProjMatrix> enumerate_pgl(const ff::PrimeModulus& pq) {
  const std::int64_t q = pq.value();
  std::vector<ProjMatrix> out;
  out.reserve(static_cast<std::size_t>(q * (q * q - 1)));
  for (std::int64_t g = 1; g < q; ++g) {
    for (std::int64_t h = 0; h < q; ++h) out.push_back(ProjMatrix::from({0, 1, g, h}, q));
  }
  for (std::int64_t f = 0; f < q; ++f) {
    for (std::int64_t g = 0; g < q; ++g) {
      for (std::int64_t h = 0; h < q; ++h) {
        if (mod(h - f * g, q) != 0) out.push_back(ProjMatrix::from({1, f, g, h}, q));
      }
    }
  }
  return out;
}

int psl_class(const ProjMatrix& m, const ff::PrimeModulus& q) {
  return ff::legendre_symbol(determinant(m.matrix(), q), q);
}

std::vector<FourSquare> four_square_solutions(std::int64_t p) {
  if (!ff::is_prime(p) || p % 4 != 1) {
    throw InvalidArgument("four-square solutions need a prime p = 1 mod 4, got " +
                          std::to_string(p));
  }
  const auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(p)));
  std::vector<FourSquare> out;
  for (std::int64_t a0 = 1; a0 <= r; a0 += 2) {
    for (std::int64_t a1 = -r; a1 <= r; ++a1) {
      if (a1 % 2 != 0) continue;
      for (std::int64_t a2 = -r; a2 <= r; ++a2) {
        if (a2 % 2 != 0) continue;
        for (std::int64_t a3 = -r; a3 <= r; ++a3) {
          if (a3 % 2 != 0) continue;
          if (a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 == p) out.push_back({a0, a1, a2, a3});
        }
      }
    }
  }
  if (out.size() != static_cast<std::size_t>(p + 1)) {
    throw InternalError("found " + std::to_string(out.size()) + " four-square solutions, expected " +
                        std::to_string(p + 1));
  }
  return out;
}

std::vector<std::size_t> inverse_pairs(const std::vector<ProjMatrix>& gens, std::int64_t q) {
  const ProjMatrix identity = ProjMatrix::from({1, 0, 0, 1}, q);
  std::vector<std::size_t> out(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < gens.size() && !found; ++j) {
      if (ProjMatrix::from(multiply(gens[i].matrix(), gens[j].matrix(), q), q) == identity) {
        out[i] = j;
        found = true;
      }
    }
    if (!found) throw InternalError("LPS generator " + std::to_string(i) + " has no inverse");
  }
  return out;
}

std::vector<ProjMatrix> lps_generators(std::int64_t p, std::int64_t q) {
  if (p == q) throw InvalidArgument("LPS needs two distinct primes");
  const ff::PrimeModulus pq(q);
  if (q % 4 != 1) throw InvalidArgument("LPS needs q = 1 mod 4, got " + std::to_string(q));
  const auto solutions = four_square_solutions(p);
  const std::int64_t i = ff::sqrt_minus_one(pq);

  std::vector<ProjMatrix> gens;
  for (const FourSquare& s : solutions) {
    const Mat2 m{s.a0 + i * s.a1, s.a2 + i * s.a3, -s.a2 + i * s.a3, s.a0 - i * s.a1};
    if (determinant({mod(m.a, q), mod(m.b, q), mod(m.c, q), mod(m.d, q)}, q) != mod(p, q)) {
      throw InternalError("LPS generator determinant differs from p");
    }
    gens.push_back(ProjMatrix::from(m, q));
  }
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (gens[a] == gens[b]) {
        throw InvalidArgument("LPS generators " + std::to_string(a) + " and " + std::to_string(b) +
                              " coincide in PGL(2, F_" + std::to_string(q) + ") for p = " +
                              std::to_string(p) + "; the Cayley graph would be a multigraph");
      }
    }
  }
  inverse_pairs(gens, q);
  return gens;
}

SimpleGraph cayley_pgl(std::int64_t p, std::int64_t q, kernels::Exec exec) {
  const auto gens = lps_generators(p, q);
  const auto elements = enumerate_pgl(ff::PrimeModulus(q));
  const ProjMatrix identity = ProjMatrix::from({1, 0, 0, 1}, q);
  return cayley_graph<ProjMatrix>(
      elements, gens,
      [q](const ProjMatrix& x, const ProjMatrix& s) {
        return ProjMatrix::from(multiply(x.matrix(), s.matrix(), q), q);
      },
      [q](const ProjMatrix& m) { return pgl_index(m, q); },
      [q, &identity](const ProjMatrix& a, const ProjMatrix& b) {
        return ProjMatrix::from(multiply(a.matrix(), b.matrix(), q), q) == identity;
      },
      exec);
}

Mat2 involution_matrix(const ff::PrimeModulus& q) {
  const auto part = ff::residue_partition(q);
  const std::int64_t delta = part.non_residues.front();
  const std::int64_t alpha = 0, gamma = mod(-1, q), beta = mod(alpha * alpha + delta, q);
  const Mat2 a{alpha, beta, gamma, mod(-alpha, q)};
  const std::int64_t det = determinant(a, q);
  if (ff::legendre_symbol(det, q) != -1) throw InternalError("involution determinant is a residue");
  const Mat2 sq = multiply(a, a, q);
  if (ProjMatrix::from(sq, q) != ProjMatrix::from({1, 0, 0, 1}, q)) {
    throw InternalError("involution matrix does not square to a scalar");
  }
  return a;
}

namespace {

struct ClassSplit {
  std::vector<ProjMatrix> psl, psl_comp;
  std::vector<std::size_t> local;  // PGL index -> position within its class
  std::vector<int> cls;            // PGL index -> +1 / -1
};

ClassSplit split_classes(const std::vector<ProjMatrix>& elements, const ff::PrimeModulus& q) {
  ClassSplit s;
  s.local.resize(elements.size());
  s.cls.resize(elements.size());
  for (std::size_t v = 0; v < elements.size(); ++v) {
    s.cls[v] = psl_class(elements[v], q);
    auto& side = s.cls[v] == 1 ? s.psl : s.psl_comp;
    s.local[v] = side.size();
    side.push_back(elements[v]);
  }
  if (s.psl.size() != s.psl_comp.size()) throw InternalError("PSL classes are unbalanced");
  return s;
}

}  // namespace

LpsResult build_lps(std::int64_t p, std::int64_t q, kernels::Exec exec) {
  const ff::PrimeModulus pq(q);
  const SimpleGraph full = cayley_pgl(p, q, exec);
  const auto elements = enumerate_pgl(pq);
  const ClassSplit split = split_classes(elements, pq);

  LpsResult out;
  out.legendre = ff::legendre_symbol(p, pq);
  out.psl = split.psl;
  out.psl_comp = split.psl_comp;
  const std::size_t half = split.psl.size();

  if (out.legendre == -1) {
    BinaryBigraph b(half, half);
    for (const auto& [u, v] : full.edges()) {
      if (split.cls[u] == split.cls[v]) throw InternalError("LPS edge inside a PSL class");
      const std::size_t x = split.cls[u] == 1 ? u : v, z = split.cls[u] == 1 ? v : u;
      b.set(split.local[x], split.local[z], true);
    }
    require_biregular(b);
    out.biadjacency = std::move(b);
    return out;
  }

  const auto comps = connected_components(full);
  if (comps.size() != 2) {
    throw InternalError("LPS with (p/q) = +1 should have 2 components, found " +
                        std::to_string(comps.size()));
  }
  SimpleGraph c1(half), c2(half);
  for (const auto& [u, v] : full.edges()) {
    if (split.cls[u] != split.cls[v]) throw InternalError("LPS edge crosses PSL classes");
    (split.cls[u] == 1 ? c1 : c2).add_edge(split.local[u], split.local[v]);
  }
  out.isomorphism_matrix = involution_matrix(pq);
  out.isomorphism.resize(half);
  for (std::size_t x = 0; x < half; ++x) {
    const ProjMatrix image =
        ProjMatrix::from(multiply(out.isomorphism_matrix, split.psl[x].matrix(), q), q);
    out.isomorphism[x] = split.local[pgl_index(image, q)];
  }
  out.component_psl = std::move(c1);
  out.component_psl_comp = std::move(c2);
  return out;
}

LpsNonbipartite lps_nonbipartite(std::int64_t p, std::int64_t q, kernels::Exec exec) {
  const ff::PrimeModulus pq(q);
  LpsResult r = build_lps(p, q, exec);
  if (r.legendre != -1) {
    throw InvalidArgument("non-bipartite conversion needs (p/q) = -1; (" + std::to_string(p) +
                          "/" + std::to_string(q) + ") = +1 already gives two components");
  }
  const Mat2 a = involution_matrix(pq);
  const auto elements = enumerate_pgl(pq);
  const ClassSplit split = split_classes(elements, pq);
  std::vector<std::size_t> col_to_row(r.psl_comp.size());
  for (std::size_t z = 0; z < r.psl_comp.size(); ++z) {
    const ProjMatrix image = ProjMatrix::from(multiply(a, r.psl_comp[z].matrix(), q), q);
    const std::size_t idx = pgl_index(image, q);
    if (split.cls[idx] != 1) throw InternalError("A Z left PSL");
    col_to_row[z] = split.local[idx];
  }
  VertexPairing pairing(std::move(col_to_row));
  SimpleGraph g = apply_pairing(*r.biadjacency, pairing);
  return {std::move(g), std::move(*r.biadjacency), std::move(pairing)};
}

}  // namespace ramanujan::lps
