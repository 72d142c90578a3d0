#include "ramanujan/cayley_abelian.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "ramanujan/error.hpp"

namespace ramanujan::abelian {

namespace {

using Pair = std::pair<std::int64_t, std::int64_t>;

double pairwise_sum(const double* x, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

}  // namespace

AbelianCayleySpec li_spec(std::int64_t q_value) {
  const ff::PrimeModulus q(q_value);
  if (!q.is_odd()) throw InvalidArgument("Li construction needs an odd prime");
  const ff::QuadExtension f = ff::find_irreducible_quadratic(q);
  AbelianCayleySpec spec{q, Flavor::li, {}};
  for (const ff::ExtElement& u : ff::norm_one_units(f)) spec.generators.emplace_back(u.a, u.b);
  return spec;
}

AbelianCayleySpec bibak_spec(std::int64_t q_value) {
  const ff::PrimeModulus q(q_value);
  if (q_value % 4 != 3) {
    throw InvalidArgument("Bibak construction needs q = 3 mod 4, got " + std::to_string(q_value));
  }
  AbelianCayleySpec spec{q, Flavor::bibak, {}};
  for (std::int64_t x = 0; x < q_value; ++x) {
    for (std::int64_t y = 0; y < q_value; ++y) {
      if ((x * x + y * y) % q_value == 1) spec.generators.emplace_back(x, y);
    }
  }
  if (spec.generators.size() != static_cast<std::size_t>(q_value + 1)) {
    throw InternalError("circle x^2 + y^2 = 1 has " + std::to_string(spec.generators.size()) +
                        " points, expected q + 1");
  }
  return spec;
}

SimpleGraph build(const AbelianCayleySpec& spec) {
  const std::int64_t q = spec.q.value();
  std::vector<Pair> elements;
  elements.reserve(static_cast<std::size_t>(q * q));
  for (std::int64_t a = 0; a < q; ++a) {
    for (std::int64_t b = 0; b < q; ++b) elements.emplace_back(a, b);
  }
  SimpleGraph g = cayley_graph<Pair>(
      elements, spec.generators,
      [q](const Pair& x, const Pair& s) { return Pair{(x.first + s.first) % q, (x.second + s.second) % q}; },
      [q](const Pair& x) { return static_cast<std::size_t>(x.first * q + x.second); },
      [q](const Pair& x, const Pair& y) {
        return (x.first + y.first) % q == 0 && (x.second + y.second) % q == 0;
      });
  if (g.regular_degree() != spec.generators.size()) {
    throw InternalError("abelian Cayley graph is not |S|-regular");
  }
  return g;
}

SimpleGraph build_li(std::int64_t q) { return build(li_spec(q)); }
SimpleGraph build_bibak(std::int64_t q) { return build(bibak_spec(q)); }

std::vector<double> character_values(const AbelianCayleySpec& spec, kernels::Exec exec) {
  const std::int64_t q = spec.q.value();
  const std::size_t n = static_cast<std::size_t>(q * q);
  std::vector<double> out(n);
  auto eval = [&](std::size_t idx) {
    const std::int64_t u = static_cast<std::int64_t>(idx) / q, v = static_cast<std::int64_t>(idx) % q;
    std::vector<double> terms;
    terms.reserve(spec.generators.size());
    for (const auto& [s1, s2] : spec.generators) {
      const std::int64_t phase = ff::mod(u * s1 + v * s2, q);
      terms.push_back(std::cos(2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(q)));
    }
    out[idx] = pairwise_sum(terms.data(), terms.size());
  };
  if (exec == kernels::Exec::parallel) {
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) eval(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) eval(i);
  }
  return out;
}

std::vector<double> character_spectrum(const AbelianCayleySpec& spec, kernels::Exec exec) {
  auto out = character_values(spec, exec);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace ramanujan::abelian
