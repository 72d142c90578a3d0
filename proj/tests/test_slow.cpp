#include <chrono>
#include <cmath>

#include "doctest.h"
#include "ramanujan/array_code.hpp"
#include "ramanujan/spectral.hpp"

using namespace ramanujan;

TEST_CASE("B(101,101) builds and verifies within ten minutes") {
  const auto start = std::chrono::steady_clock::now();
  const BinaryBigraph b = array_code::build_array_code({101, 101});
  CHECK(b.rows() == 10201);
  CHECK(b.cols() == 10201);
  const auto r = spectral::ramanujan_report(b);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  MESSAGE("B(101,101): " << secs << " s");
  CHECK(r.degrees == Degrees{101, 101});
  CHECK(r.top == doctest::Approx(101.0).epsilon(1e-12));
  CHECK(std::fabs(r.second - std::sqrt(101.0)) < 1e-8);
  CHECK(r.second_multiplicity == 10100u);
  CHECK(r.is_ramanujan);
  CHECK(secs < 600.0);
}
