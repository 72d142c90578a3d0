#include "ramanujan/array_code.hpp"

#include <cmath>
#include <string>

#include "ramanujan/error.hpp"

namespace ramanujan::array_code {

ArrayCodeSpec::ArrayCodeSpec(std::int64_t q_value, std::int64_t l_value)
    : q(q_value), l(l_value) {
  if (l < 2) throw InvalidArgument("array code needs l >= 2, got " + std::to_string(l));
}

std::vector<std::uint8_t> cyclic_shift(std::int64_t q) {
  if (q < 2) throw InvalidArgument("cyclic shift needs q >= 2");
  const auto n = static_cast<std::size_t>(q);
  std::vector<std::uint8_t> p(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) p[i * n + static_cast<std::size_t>(ff::mod(static_cast<std::int64_t>(i) - 1, q))] = 1;
  return p;
}

BinaryBigraph build_array_code(const ArrayCodeSpec& spec) {
  const std::int64_t q = spec.q.value();
  const std::int64_t l = spec.l;
  const auto nq = static_cast<std::size_t>(q);
  BinaryBigraph b(nq * nq, static_cast<std::size_t>(l) * nq);
  // P^k has its one in row r at column r - k.
  for (std::int64_t bi = 0; bi < q; ++bi) {
    for (std::int64_t bj = 0; bj < l; ++bj) {
      const std::int64_t shift = (bi * bj) % q;
      for (std::int64_t r = 0; r < q; ++r) {
        b.set(static_cast<std::size_t>(bi * q + r),
              static_cast<std::size_t>(bj * q + ff::mod(r - shift, q)), true);
      }
    }
  }
  b.record_degrees({static_cast<std::size_t>(l), nq});
  b.set_analyze_transposed(l < q);
  return b;
}

std::vector<SingularLevel> predicted_spectrum(const ArrayCodeSpec& spec) {
  const auto q = static_cast<std::size_t>(spec.q.value());
  const auto l = static_cast<std::size_t>(spec.l);
  auto root = [](std::size_t v) { return std::sqrt(static_cast<double>(v)); };
  std::vector<SingularLevel> out{{root(q * l), 1}};
  if (l <= q) {
    out.push_back({root(q), l * (q - 1)});
    out.push_back({0.0, l - 1});
  } else if (l % q == 0) {
    out.push_back({root(l), (q - 1) * q});
    out.push_back({0.0, q - 1});
  } else {
    const std::size_t k = l % q;
    out.push_back({root(l + q - k), (q - 1) * k});
    out.push_back({root(l - k), (q - 1) * (q - k)});
    out.push_back({0.0, q - 1});
  }
  // l == q falls in the first branch; drop empty levels.
  std::erase_if(out, [](const SingularLevel& s) { return s.multiplicity == 0; });
  return out;
}

std::vector<double> predicted_values(const ArrayCodeSpec& spec) {
  std::vector<double> out;
  for (const auto& level : predicted_spectrum(spec)) out.insert(out.end(), level.multiplicity, level.value);
  return out;
}

SimpleGraph build_array_code_graph(std::int64_t q_value) {
  const ArrayCodeSpec spec(q_value, q_value);
  const std::int64_t q = spec.q.value();
  const BinaryBigraph b = build_array_code(spec);
  // Column (J, s) is paired with row (J, -s).
  std::vector<std::size_t> col_to_row(b.cols());
  for (std::int64_t bj = 0; bj < q; ++bj) {
    for (std::int64_t s = 0; s < q; ++s) {
      col_to_row[static_cast<std::size_t>(bj * q + s)] = static_cast<std::size_t>(bj * q + ff::mod(-s, q));
    }
  }
  SimpleGraph g = apply_pairing(b, VertexPairing(std::move(col_to_row)), Loops::allow);
  if (g.loop_count() != static_cast<std::size_t>(q)) {
    throw InternalError("array-code graph should carry exactly q self-loops");
  }
  return g;
}

}  // namespace ramanujan::array_code
