#include "doctest.h"
#include "ramanujan/array_code.hpp"
#include "ramanujan/error.hpp"
#include "ramanujan/graph.hpp"
#include "ramanujan/gunnells.hpp"
#include "ramanujan/lps.hpp"

using namespace ramanujan;

TEST_CASE("bigraph container") {
  CHECK_THROWS_AS(BinaryBigraph(2, 2, {0, 1, 2, 0}), InvalidArgument);
  CHECK_THROWS_AS(BinaryBigraph(2, 2, {0, 1, 1}), InvalidArgument);
  BinaryBigraph b(2, 3, {1, 0, 1, 0, 1, 0});
  CHECK(b.edges() == std::vector<Edge>{{0, 0}, {0, 2}, {1, 1}});
  CHECK(b.edge_count() == 3);
  const auto t = b.transposed();
  CHECK(t.rows() == 3);
  CHECK(t(2, 0) == 1);
  CHECK(t.transposed() == b);
}

TEST_CASE("simple graph validation") {
  CHECK_THROWS_AS(SimpleGraph(2, {0, 1, 0, 0}), AsymmetryError);
  CHECK_THROWS_AS(SimpleGraph(2, {1, 0, 0, 0}), SelfLoopError);
  CHECK_NOTHROW(SimpleGraph(2, {1, 0, 0, 0}, Loops::allow));
  SimpleGraph g(3);
  g.add_edge(0, 1);
  CHECK(g(1, 0) == 1);
  CHECK_THROWS_AS(g.add_edge(2, 2), SelfLoopError);
  CHECK(g.regular_degree() == std::nullopt);
}

TEST_CASE("biregularity check") {
  BinaryBigraph b = array_code::build_array_code({5, 3});
  const DegreeCheck ok = check_biregular(b);
  CHECK(ok.ok);
  CHECK(ok.degrees == Degrees{3, 5});
  CHECK(b.rows() * ok.degrees.row == b.cols() * ok.degrees.col);
  CHECK(check_biregular(BinaryBigraph(2, 2, {1, 1, 1, 1})).degrees == Degrees{2, 2});

  b.set(7, 0, !b(7, 0));
  const DegreeCheck bad = check_biregular(b);
  CHECK_FALSE(bad.ok);
  CHECK(bad.side == "row");
  CHECK(bad.index == 7);
  CHECK_THROWS_AS(require_biregular(b), IrregularError);

  BinaryBigraph cols_only(2, 2, {1, 0, 1, 0});
  const DegreeCheck c = check_biregular(cols_only);
  CHECK(c.side == "column");
  CHECK(c.index == 1);
}

TEST_CASE("components") {
  CHECK(connected_components(SimpleGraph(3)).size() == 3);
  const auto comps = connected_components(lps::cayley_pgl(17, 13));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 1092);
  CHECK(comps[1].size() == 1092);
  CHECK(connected_components(array_code::build_array_code_graph(5)).size() == 1);
}

TEST_CASE("bipartition") {
  SimpleGraph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  const Bipartition t = bipartition(tri);
  CHECK_FALSE(t.bipartite);
  CHECK(t.odd_cycle.size() % 2 == 1);
  for (std::size_t k = 0; k < t.odd_cycle.size(); ++k)
    CHECK(tri(t.odd_cycle[k], t.odd_cycle[(k + 1) % t.odd_cycle.size()]) == 1);

  const Bipartition l = bipartition(lps::cayley_pgl(5, 13));
  CHECK(l.bipartite);
  CHECK(l.first.size() == 1092);
  CHECK(l.second.size() == 1092);

  const auto gb = gunnells::build_gunnells(ff::PrimeModulus(3), 3);
  const Bipartition gp = bipartition(bipartite_double(gb));
  CHECK(gp.bipartite);
  CHECK(gp.first.size() == 13);
}

TEST_CASE("cayley graph on a cyclic group") {
  std::vector<int> elements(9);
  for (int k = 0; k < 9; ++k) elements[k] = k;
  const std::vector<int> gens{1, 8};
  const SimpleGraph c9 = cayley_graph<int>(
      elements, gens, [](int x, int s) { return (x + s) % 9; }, [](int x) { return std::size_t(x); },
      [](int a, int b) { return (a + b) % 9 == 0; });
  CHECK(c9.regular_degree() == 2u);
  CHECK(connected_components(c9).size() == 1);
  for (int k = 0; k < 9; ++k) CHECK(c9(k, (k + 1) % 9) == 1);

  const std::vector<int> lonely{1};
  CHECK_THROWS_AS(cayley_graph<int>(
                      elements, lonely, [](int x, int s) { return (x + s) % 9; },
                      [](int x) { return std::size_t(x); }, [](int a, int b) { return (a + b) % 9 == 0; }),
                  InvalidArgument);

  // Generators 1 and 4 collide in Z_3.
  std::vector<int> z3{0, 1, 2};
  const std::vector<int> clash{1, 2, 4, 5};
  CHECK_THROWS_AS(cayley_graph<int>(
                      z3, clash, [](int x, int s) { return (x + s) % 3; }, [](int x) { return std::size_t(x); },
                      [](int a, int b) { return (a + b) % 3 == 0; }),
                  CollisionError);
}

TEST_CASE("pairings") {
  CHECK_THROWS_AS(VertexPairing({0, 0}), InvalidArgument);
  const VertexPairing pi({2, 0, 1});
  CHECK(pi.col_of(2) == 0);
  const BinaryBigraph m = pi.matrix();
  CHECK(m(0, 2) == 1);
  CHECK(m.edge_count() == 3);

  BinaryBigraph sym(3, 3, {0, 1, 1, 1, 0, 1, 1, 1, 0});
  CHECK(apply_pairing(sym, VertexPairing::identity(3)).regular_degree() == 2u);
  BinaryBigraph asym(2, 2, {0, 1, 0, 0});
  CHECK_THROWS_AS(apply_pairing(asym, VertexPairing::identity(2)), AsymmetryError);

  // Fano incidence with the perp pairing: 3-regular on 7 vertices, with
  // loops at the three self-orthogonal points.
  const auto fano = gunnells::build_gunnells(ff::PrimeModulus(2), 3);
  CHECK_THROWS_AS(apply_pairing(fano, VertexPairing::identity(7)), SelfLoopError);
  const SimpleGraph a = apply_pairing(fano, VertexPairing::identity(7), Loops::allow);
  CHECK(a.regular_degree() == 3u);
  CHECK(a.loop_count() == 3);
  for (std::size_t x = 0; x < 7; ++x)
    for (std::size_t y = 0; y < 7; ++y) CHECK(a(x, y) == fano(x, y));
}
