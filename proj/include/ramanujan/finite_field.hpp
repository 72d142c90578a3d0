#pragma once

// Arithmetic over the prime field F_q and its quadratic extension
// F_q[x]/(x^2 + c). Moduli stay in the hundreds, so plain 64-bit integers
// are enough for every intermediate product.

#include <compare>
#include <cstdint>
#include <vector>

namespace ramanujan::ff {

bool is_prime(std::int64_t n);

/// A prime q >= 2, validated by trial division on construction.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::int64_t q);
  std::int64_t value() const { return q_; }
  bool is_odd() const { return q_ != 2; }
  operator std::int64_t() const { return q_; }

 private:
  std::int64_t q_;
};

/// Least non-negative residue of a mod q.
inline std::int64_t mod(std::int64_t a, std::int64_t q) {
  std::int64_t r = a % q;
  return r < 0 ? r + q : r;
}

/// Square-and-multiply.
std::int64_t pow_mod(std::int64_t base, std::int64_t exponent, std::int64_t q);
std::int64_t inverse_mod(std::int64_t a, const PrimeModulus& q);

/// Distinct prime divisors of n in ascending order.
std::vector<std::int64_t> prime_divisors(std::int64_t n);

/// +1 if a is a non-zero square mod q, -1 otherwise. Throws InvalidArgument
/// for q = 2 or a = 0 mod q.
int legendre_symbol(std::int64_t a, const PrimeModulus& q);

/// Quadratic residues and non-residues of {1, ..., q-1}, each ascending.
struct ResiduePartition {
  std::vector<std::int64_t> residues;
  std::vector<std::int64_t> non_residues;
};
ResiduePartition residue_partition(const PrimeModulus& q);

/// Smallest positive i with i^2 = -1 mod q. Requires q = 1 mod 4.
std::int64_t sqrt_minus_one(const PrimeModulus& q);

/// F_q[x]/(x^2 + c) with x^2 + c irreducible.
class QuadExtension {
 public:
  /// Throws InvalidArgument if x^2 + c has a root mod q.
  QuadExtension(PrimeModulus q, std::int64_t c);
  const PrimeModulus& modulus() const { return q_; }
  std::int64_t q() const { return q_.value(); }
  std::int64_t c() const { return c_; }

 private:
  PrimeModulus q_;
  std::int64_t c_;
};

/// The element a*xbar + b, with 0 <= a, b < q.
struct ExtElement {
  std::int64_t a = 0;
  std::int64_t b = 0;
  auto operator<=>(const ExtElement&) const = default;
};

ExtElement ext_add(const QuadExtension& f, ExtElement x, ExtElement y);
ExtElement ext_neg(const QuadExtension& f, ExtElement x);
ExtElement ext_mul(const QuadExtension& f, ExtElement x, ExtElement y);
ExtElement ext_pow(const QuadExtension& f, ExtElement x, std::int64_t e);
inline ExtElement ext_one() { return {0, 1}; }
/// Norm x^(q+1); always lands in F_q, returned as its constant term.
std::int64_t ext_norm(const QuadExtension& f, ExtElement x);

/// Irreducible x^2 + c. Uses c = 2 when q = 5 mod 8, otherwise the
/// smallest c >= 1 with -c a non-residue. Requires odd q.
QuadExtension find_irreducible_quadratic(const PrimeModulus& q);

/// True when x generates the multiplicative group of order q^2 - 1.
bool is_primitive(const QuadExtension& f, const ExtElement& x);

/// Generator of the multiplicative group of order q^2 - 1, found by
/// scanning b ascending then a ascending. `max_q` caps the brute-force
/// search.
ExtElement find_primitive_element(const QuadExtension& f,
                                  std::int64_t max_q = 101);

/// The q+1 elements of norm one, sorted by (a, b). Computed as powers
/// g^(k(q-1)) of a primitive element and cross-checked against a direct
/// norm filter.
std::vector<ExtElement> norm_one_units(const QuadExtension& f,
                                       std::int64_t max_q = 101);

}  // namespace ramanujan::ff
