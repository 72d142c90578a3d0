#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "ramanujan/cayley_abelian.hpp"
#include "ramanujan/error.hpp"
#include "ramanujan/spectral.hpp"

using namespace ramanujan;
using namespace ramanujan::abelian;

TEST_CASE("Bibak generator sets") {
  using P = std::pair<std::int64_t, std::int64_t>;
  CHECK(bibak_spec(3).generators == std::vector<P>{{0, 1}, {0, 2}, {1, 0}, {2, 0}});
  CHECK(bibak_spec(7).generators.size() == 8);
  CHECK_THROWS_AS(bibak_spec(5), InvalidArgument);
  CHECK_THROWS_AS(build_bibak(13), InvalidArgument);
  for (std::int64_t q : {3, 7, 11, 19, 23, 31}) {
    const auto s = bibak_spec(q);
    const std::set<P> set(s.generators.begin(), s.generators.end());
    for (const auto& [x, y] : s.generators) {
      CHECK((x * x + y * y) % q == 1);
      CHECK(set.count({(q - x) % q, (q - y) % q}) == 1);
    }
  }
}

TEST_CASE("Li generator sets are negation-closed norm-one units") {
  for (std::int64_t q : {3, 5, 7, 13, 31}) {
    const auto s = li_spec(q);
    CHECK(s.generators.size() == static_cast<std::size_t>(q + 1));
    const auto f = ff::find_irreducible_quadratic(ff::PrimeModulus(q));
    std::set<std::pair<std::int64_t, std::int64_t>> set(s.generators.begin(), s.generators.end());
    for (const auto& [a, b] : s.generators) {
      CHECK(ff::ext_norm(f, {a, b}) == 1);
      CHECK(set.count({(q - a) % q, (q - b) % q}) == 1);
    }
  }
}

TEST_CASE("graphs") {
  const auto li13 = build_li(13);
  CHECK(li13.size() == 169);
  CHECK(li13.regular_degree() == 14u);
  const auto li5 = build_li(5);
  CHECK(li5.size() == 25);
  CHECK(li5.regular_degree() == 6u);
  const auto b3 = build_bibak(3);
  CHECK(b3.size() == 9);
  CHECK(b3.regular_degree() == 4u);
  // (0,0) is joined to the generators themselves.
  CHECK(b3(0, 1) == 1);
  CHECK(b3(0, 3) == 1);
  CHECK(b3(0, 4) == 0);
}

TEST_CASE("character sums") {
  const auto spec = bibak_spec(3);
  const auto values = character_values(spec);
  CHECK(values[0] == doctest::Approx(4.0));
  CHECK(values[3] == doctest::Approx(1.0));  // (u, v) = (1, 0)
  CHECK(character_values(spec, kernels::Exec::serial) == values);
}

TEST_CASE("character spectrum equals the dense spectrum") {
  std::vector<AbelianCayleySpec> specs;
  for (std::int64_t q : {3, 7, 11, 19, 23}) specs.push_back(bibak_spec(q));
  for (std::int64_t q : {3, 5, 7, 13}) specs.push_back(li_spec(q));
  for (const auto& s : specs) {
    const double q = static_cast<double>(s.q.value());
    const auto chars = character_spectrum(s);
    const auto dense = spectral::eigenvalues(build(s));
    CHECK(oracle::all_close(chars, dense, 1e-8));
    CHECK(chars.front() == doctest::Approx(q + 1.0));
    const auto mags = oracle::sorted_abs(chars);
    CHECK(mags[1] <= 2.0 * std::sqrt(q) + 1e-9);
  }
}
