#include "ramanujan/finite_field.hpp"

#include <algorithm>
#include <string>

#include "ramanujan/error.hpp"

namespace ramanujan::ff {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::int64_t q) : q_(q) {
  if (!is_prime(q)) {
    throw InvalidArgument("modulus " + std::to_string(q) + " is not prime");
  }
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exponent, std::int64_t q) {
  std::int64_t result = 1 % q;
  base = mod(base, q);
  while (exponent > 0) {
    if (exponent & 1) result = result * base % q;
    base = base * base % q;
    exponent >>= 1;
  }
  return result;
}

std::int64_t inverse_mod(std::int64_t a, const PrimeModulus& q) {
  a = mod(a, q);
  if (a == 0) throw InvalidArgument("zero has no inverse");
  return pow_mod(a, q.value() - 2, q);
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

void require_odd(const PrimeModulus& q, const char* op) {
  if (!q.is_odd()) {
    throw InvalidArgument(std::string(op) + " requires an odd prime modulus");
  }
}

}  // namespace

int legendre_symbol(std::int64_t a, const PrimeModulus& q) {
  require_odd(q, "legendre_symbol");
  const std::int64_t r = mod(a, q);
  if (r == 0) {
    throw InvalidArgument("legendre_symbol: " + std::to_string(a) +
                          " is divisible by " + std::to_string(q.value()));
  }
  // Euler's criterion.
  return pow_mod(r, (q.value() - 1) / 2, q) == 1 ? 1 : -1;
}

ResiduePartition residue_partition(const PrimeModulus& q) {
  require_odd(q, "residue_partition");
  ResiduePartition part;
  for (std::int64_t a = 1; a < q.value(); ++a) {
    (legendre_symbol(a, q) == 1 ? part.residues : part.non_residues).push_back(a);
  }
  return part;
}

std::int64_t sqrt_minus_one(const PrimeModulus& q) {
  if (q.value() % 4 != 1) {
    throw InvalidArgument("-1 is not a square mod " + std::to_string(q.value()));
  }
  for (std::int64_t i = 1; i < q.value(); ++i) {
    if (i * i % q.value() == q.value() - 1) return i;
  }
  throw InternalError("no square root of -1 found");
}

QuadExtension::QuadExtension(PrimeModulus q, std::int64_t c)
    : q_(q), c_(mod(c, q)) {
  for (std::int64_t x = 0; x < q_.value(); ++x) {
    if ((x * x + c_) % q_.value() == 0) {
      throw InvalidArgument("x^2 + " + std::to_string(c_) + " has root " +
                            std::to_string(x) + " mod " +
                            std::to_string(q_.value()));
    }
  }
}

ExtElement ext_add(const QuadExtension& f, ExtElement x, ExtElement y) {
  return {(x.a + y.a) % f.q(), (x.b + y.b) % f.q()};
}

ExtElement ext_neg(const QuadExtension& f, ExtElement x) {
  return {mod(-x.a, f.q()), mod(-x.b, f.q())};
}

ExtElement ext_mul(const QuadExtension& f, ExtElement x, ExtElement y) {
  // (a x + b)(a' x + b') with x^2 = -c.
  const std::int64_t q = f.q();
  const std::int64_t a = (x.a * y.b + y.a * x.b) % q;
  const std::int64_t b = mod(x.b * y.b - f.c() * (x.a * y.a % q), q);
  return {a, b};
}

ExtElement ext_pow(const QuadExtension& f, ExtElement x, std::int64_t e) {
  ExtElement result = ext_one();
  while (e > 0) {
    if (e & 1) result = ext_mul(f, result, x);
    x = ext_mul(f, x, x);
    e >>= 1;
  }
  return result;
}

std::int64_t ext_norm(const QuadExtension& f, ExtElement x) {
  const ExtElement n = ext_pow(f, x, f.q() + 1);
  if (n.a != 0) throw InternalError("norm left the prime field");
  return n.b;
}

QuadExtension find_irreducible_quadratic(const PrimeModulus& q) {
  require_odd(q, "find_irreducible_quadratic");
  if (q.value() % 8 == 5) return QuadExtension(q, 2);
  for (std::int64_t c = 1; c < q.value(); ++c) {
    if (legendre_symbol(-c, q) == -1) return QuadExtension(q, c);
  }
  throw InternalError("no irreducible quadratic found");
}

bool is_primitive(const QuadExtension& f, const ExtElement& x) {
  if (x == ExtElement{0, 0}) return false;
  const std::int64_t q = f.q();
  const std::int64_t order = q * q - 1;
  const auto divisors = prime_divisors(order);
  return std::none_of(divisors.begin(), divisors.end(), [&](std::int64_t l) {
    return ext_pow(f, x, order / l) == ext_one();
  });
}

ExtElement find_primitive_element(const QuadExtension& f, std::int64_t max_q) {
  const std::int64_t q = f.q();
  if (q > max_q) {
    throw InvalidArgument("primitive element search capped at q <= " +
                          std::to_string(max_q));
  }
  for (std::int64_t b = 0; b < q; ++b) {
    for (std::int64_t a = 0; a < q; ++a) {
      if (is_primitive(f, {a, b})) return {a, b};
    }
  }
  throw InternalError("primitive element scan exhausted");
}

std::vector<ExtElement> norm_one_units(const QuadExtension& f, std::int64_t max_q) {
  const std::int64_t q = f.q();
  const ExtElement g = find_primitive_element(f, max_q);
  const ExtElement step = ext_pow(f, g, q - 1);

  std::vector<ExtElement> from_powers;
  ExtElement cur = step;
  for (std::int64_t k = 1; k <= q + 1; ++k) {
    from_powers.push_back(cur);
    cur = ext_mul(f, cur, step);
  }
  std::sort(from_powers.begin(), from_powers.end());

  std::vector<ExtElement> from_norm;
  for (std::int64_t a = 0; a < q; ++a) {
    for (std::int64_t b = 0; b < q; ++b) {
      if (a == 0 && b == 0) continue;
      if (ext_norm(f, {a, b}) == 1) from_norm.push_back({a, b});
    }
  }
  if (from_powers != from_norm ||
      from_powers.size() != static_cast<std::size_t>(q + 1)) {
    throw InternalError("norm-one units: power enumeration and norm filter disagree");
  }
  return from_powers;
}

}  // namespace ramanujan::ff
