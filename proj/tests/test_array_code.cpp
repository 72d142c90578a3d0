#include "doctest.h"
#include "oracles.hpp"
#include "ramanujan/array_code.hpp"
#include "ramanujan/error.hpp"
#include "ramanujan/spectral.hpp"

using namespace ramanujan;
using namespace ramanujan::array_code;

namespace {

std::vector<std::uint8_t> matmul(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b, std::size_t n) {
  std::vector<std::uint8_t> c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i * n + k])
        for (std::size_t j = 0; j < n; ++j) c[i * n + j] |= b[k * n + j];
  return c;
}

std::vector<std::uint8_t> identity(std::size_t n) {
  std::vector<std::uint8_t> id(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
  return id;
}

}  // namespace

TEST_CASE("cyclic shift") {
  CHECK(cyclic_shift(2) == std::vector<std::uint8_t>{0, 1, 1, 0});
  const auto p3 = cyclic_shift(3);
  CHECK(matmul(matmul(p3, p3, 3), p3, 3) == identity(3));
  for (std::int64_t q : {2, 5, 7, 11}) {
    const auto p = cyclic_shift(q);
    const auto n = static_cast<std::size_t>(q);
    std::vector<std::uint8_t> t(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t[j * n + i] = p[i * n + j];
    CHECK(matmul(p, t, n) == identity(n));
  }
}

TEST_CASE("block structure") {
  const auto b22 = build_array_code({2, 2});
  CHECK(b22 == BinaryBigraph(4, 4, {1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0}));

  // Block (I, J) must be P^(IJ) with P from cyclic_shift.
  const std::int64_t q = 5, l = 3;
  const auto b = build_array_code({q, l});
  const auto p = cyclic_shift(q);
  for (std::int64_t bi = 0; bi < q; ++bi)
    for (std::int64_t bj = 0; bj < l; ++bj) {
      auto power = identity(q);
      for (std::int64_t k = 0; k < bi * bj; ++k) power = matmul(power, p, q);
      for (std::int64_t r = 0; r < q; ++r)
        for (std::int64_t c = 0; c < q; ++c) CHECK(b(bi * q + r, bj * q + c) == power[r * q + c]);
    }
}

TEST_CASE("shapes and degrees") {
  auto b53 = build_array_code({5, 3});
  CHECK(b53.rows() == 25);
  CHECK(b53.cols() == 15);
  CHECK(b53.degrees() == Degrees{3, 5});
  CHECK(check_biregular(b53).degrees == Degrees{3, 5});
  CHECK(b53.analyze_transposed());

  auto b35 = build_array_code({3, 5});
  CHECK(b35.rows() == 9);
  CHECK(b35.cols() == 15);
  CHECK(check_biregular(b35).degrees == Degrees{5, 3});
  CHECK_FALSE(b35.analyze_transposed());

  CHECK_THROWS_AS(ArrayCodeSpec(5, 1), InvalidArgument);
  CHECK_THROWS_AS(ArrayCodeSpec(6, 2), InvalidArgument);
}

TEST_CASE("predicted spectrum examples") {
  auto levels = [](std::int64_t q, std::int64_t l) {
    std::vector<std::pair<double, std::size_t>> out;
    for (const auto& s : predicted_spectrum({q, l})) out.emplace_back(s.value, s.multiplicity);
    return out;
  };
  using V = std::vector<std::pair<double, std::size_t>>;
  CHECK(levels(5, 3) == V{{std::sqrt(15.0), 1}, {std::sqrt(5.0), 12}, {0.0, 2}});
  CHECK(levels(3, 5) == V{{std::sqrt(15.0), 1}, {std::sqrt(6.0), 4}, {std::sqrt(3.0), 2}, {0.0, 2}});
  CHECK(levels(2, 2) == V{{2.0, 1}, {std::sqrt(2.0), 2}, {0.0, 1}});
  CHECK(levels(3, 6) == V{{std::sqrt(18.0), 1}, {std::sqrt(6.0), 6}, {0.0, 2}});
}

TEST_CASE("computed spectra match the closed form against an independent oracle") {
  for (std::int64_t q : {2, 3, 5})
    for (std::int64_t l = 2; l <= 2 * q + 1; ++l) {
      const auto b = build_array_code({q, l});
      const auto e = b.entries();
      const auto ref = oracle::singular_values({e.begin(), e.end()}, b.rows(), b.cols());
      CHECK(oracle::all_close(ref, predicted_values({q, l}), 1e-8));
    }
}

TEST_CASE("array codes are Ramanujan with girth-six columns") {
  for (std::int64_t q : {2, 3, 5, 7, 11, 13}) {
    for (std::int64_t l = 2; l <= 2 * q + 1; ++l) {
      const auto b = build_array_code({q, l});
      const auto s = spectral::singular_values(b);
      CHECK(std::fabs(s[0] - std::sqrt(static_cast<double>(q * l))) < 1e-10);
      const auto r = spectral::ramanujan_report(b);
      CHECK(r.is_ramanujan);
      if (l <= q && q <= 7) {
        const auto e = b.entries();
        CHECK(oracle::max_column_overlap({e.begin(), e.end()}, b.rows(), b.cols()) == 1);
      }
    }
  }
}

TEST_CASE("array-code graph") {
  const auto g2 = build_array_code_graph(2);
  CHECK(g2.size() == 4);
  CHECK(g2.regular_degree() == 2u);

  for (std::int64_t q : {3, 5, 7}) {
    const auto g = build_array_code_graph(q);
    CHECK(g.size() == static_cast<std::size_t>(q * q));
    CHECK(g.regular_degree() == static_cast<std::size_t>(q));
    CHECK(g.loop_count() == static_cast<std::size_t>(q));
    const auto ev = oracle::sorted_abs(spectral::eigenvalues(g));
    const double rq = std::sqrt(static_cast<double>(q));
    CHECK(ev[0] == doctest::Approx(q));
    std::size_t root = 0, zero = 0;
    for (std::size_t k = 1; k < ev.size(); ++k) {
      if (std::fabs(ev[k] - rq) < 1e-8) ++root;
      if (ev[k] < 1e-8) ++zero;
    }
    CHECK(root == static_cast<std::size_t>(q * (q - 1)));
    CHECK(zero == static_cast<std::size_t>(q - 1));
    CHECK(spectral::ramanujan_report(g).is_ramanujan);
  }
}
