#pragma once

// Randomised prohibited sets on array-code bigraphs, shared by the unit
// tests and the acceptance run.

#include <random>

#include "ramanujan/array_code.hpp"
#include "ramanujan/perturb.hpp"
#include "ramanujan/spectral.hpp"

namespace trials {

struct Trial {
  std::int64_t l = 0;
  ramanujan::BinaryBigraph e;
  ramanujan::perturb::ProhibitedSet m{0, 0, {}};
};

/// B(7, l) with l in [3, 7] and a prohibited set with line occupancy at most
/// p in [1, 3], mostly placed on existing edges. 2p - 1 <= 7 - theta_c = 6
/// and 2p <= 6l, so the switch procedure's hypotheses hold.
inline Trial make_trial(unsigned seed) {
  std::mt19937 rng(seed);
  Trial t;
  t.l = std::uniform_int_distribution<std::int64_t>(3, 7)(rng);
  t.e = ramanujan::array_code::build_array_code({7, t.l});
  const std::size_t p = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  const std::size_t nr = t.e.rows(), nc = t.e.cols();
  const auto edges = t.e.edges();
  std::vector<std::size_t> per_row(nr, 0), per_col(nc, 0);
  std::vector<ramanujan::Edge> chosen;
  std::uniform_int_distribution<std::size_t> pick_edge(0, edges.size() - 1), pick_row(0, nr - 1),
      pick_col(0, nc - 1);
  std::bernoulli_distribution on_edge(0.75);
  const std::size_t target = std::uniform_int_distribution<std::size_t>(1, nr)(rng);
  for (std::size_t attempt = 0; attempt < 20 * target && chosen.size() < target; ++attempt) {
    const ramanujan::Edge pos = on_edge(rng) ? edges[pick_edge(rng)] : ramanujan::Edge{pick_row(rng), pick_col(rng)};
    if (per_row[pos.first] >= p || per_col[pos.second] >= p) continue;
    if (std::find(chosen.begin(), chosen.end(), pos) != chosen.end()) continue;
    ++per_row[pos.first];
    ++per_col[pos.second];
    chosen.push_back(pos);
  }
  t.m = ramanujan::perturb::ProhibitedSet(nr, nc, std::move(chosen));
  return t;
}

}  // namespace trials
