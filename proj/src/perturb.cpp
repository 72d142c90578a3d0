#include "ramanujan/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

#include "ramanujan/spectral.hpp"

namespace ramanujan::perturb {

ProhibitedSet::ProhibitedSet(std::size_t rows, std::size_t cols, std::vector<Edge> positions)
    : rows_(rows), cols_(cols), positions_(std::move(positions)), mask_(rows * cols, 0) {
  for (const auto& [i, j] : positions_) {
    if (i >= rows_ || j >= cols_) {
      throw InvalidArgument("prohibited position (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") lies outside a " + std::to_string(rows_) +
                            " x " + std::to_string(cols_) + " matrix");
    }
    mask_[i * cols_ + j] = 1;
  }
  std::sort(positions_.begin(), positions_.end());
  positions_.erase(std::unique(positions_.begin(), positions_.end()), positions_.end());
}

std::size_t occupancy(const ProhibitedSet& m) {
  std::vector<std::size_t> per_row(m.rows(), 0), per_col(m.cols(), 0);
  for (const auto& [i, j] : m.positions()) {
    ++per_row[i];
    ++per_col[j];
  }
  std::size_t p = 0;
  for (std::size_t c : per_row) p = std::max(p, c);
  for (std::size_t c : per_col) p = std::max(p, c);
  return p;
}

namespace {

Margin margin(double lhs, double rhs) { return {lhs, rhs, rhs - lhs, lhs <= rhs}; }

void require_shape(const BinaryBigraph& e, const ProhibitedSet& m) {
  if (e.rows() != m.rows() || e.cols() != m.cols()) {
    throw InvalidArgument("prohibited set is " + std::to_string(m.rows()) + " x " +
                          std::to_string(m.cols()) + " but the matrix is " +
                          std::to_string(e.rows()) + " x " + std::to_string(e.cols()));
  }
}

Degrees biregular_degrees(const BinaryBigraph& e) {
  const DegreeCheck c = check_biregular(e);
  if (!c.ok) {
    throw IrregularError(c.side + " " + std::to_string(c.index + 1) + " has degree " +
                             std::to_string(c.found) + ", expected " + std::to_string(c.expected),
                         c.side, c.index);
  }
  return c.degrees;
}

}  // namespace

FeasibilityReport feasibility(const BinaryBigraph& e, const ProhibitedSet& m, double sigma2,
                              kernels::Exec exec) {
  require_shape(e, m);
  FeasibilityReport r;
  r.degrees = biregular_degrees(e);
  r.n_rows = e.rows();
  r.n_cols = e.cols();
  r.p = occupancy(m);
  r.theta_c = e.cols() >= 2 ? spectral::theta_c(e, exec) : 0;
  r.sigma2 = sigma2;
  r.mu = spectral::ramanujan_bound(r.degrees.row, r.degrees.col);
  const double p2 = 2.0 * static_cast<double>(r.p);
  r.row_room = margin(p2, static_cast<double>(r.n_cols) - static_cast<double>(r.degrees.row));
  r.column_overlap =
      margin(p2 - 1.0, static_cast<double>(r.degrees.col) - static_cast<double>(r.theta_c));
  r.spectral = margin(p2, r.mu - r.sigma2);
  return r;
}

FeasibilityReport feasibility(const BinaryBigraph& e, const ProhibitedSet& m, kernels::Exec exec) {
  require_shape(e, m);
  const auto s = spectral::singular_values(e, exec);
  return feasibility(e, m, s.size() > 1 ? s[1] : 0.0, exec);
}

PerturbResult perturb(const BinaryBigraph& e, const ProhibitedSet& m, TieBreak tie) {
  require_shape(e, m);
  const Degrees degrees = biregular_degrees(e);
  const std::size_t nr = e.rows(), nc = e.cols();
  BinaryBigraph cur = e;
  std::vector<std::size_t> row_sum(nr, degrees.row), col_sum(nc, degrees.col);
  // Switches applied plus conflicts still waiting, per line. A line's count
  // in either delta ends up equal to its number of switches.
  std::vector<std::size_t> row_load(nr, 0), col_load(nc, 0);
  for (const auto& [i, j] : m.positions()) {
    if (e(i, j)) {
      ++row_load[i];
      ++col_load[j];
    }
  }
  std::vector<Switch> log;

  auto flip = [&](std::size_t i, std::size_t j, bool value) {
    cur.set(i, j, value);
    if (value) {
      ++row_sum[i];
      ++col_sum[j];
    } else {
      --row_sum[i];
      --col_sum[j];
    }
  };

  auto check_degrees = [&](const Switch& s) {
    for (std::size_t r : {s.i, s.i_bar}) {
      if (row_sum[r] != degrees.row) throw InternalError("2-switch changed degree of row " + std::to_string(r + 1));
    }
    for (std::size_t c : {s.j, s.j_bar}) {
      if (col_sum[c] != degrees.col) throw InternalError("2-switch changed degree of column " + std::to_string(c + 1));
    }
  };

  for (std::size_t i = 0; i < nr; ++i) {
    std::vector<std::size_t> conflicts;
    for (std::size_t j = 0; j < nc; ++j) {
      if (cur(i, j) && m.contains(i, j)) conflicts.push_back(j);
    }
    std::vector<std::size_t> used_rows;
    for (std::size_t j : conflicts) {
      if (!cur(i, j)) continue;
      std::optional<Switch> chosen;
      std::tuple<std::size_t, std::size_t, std::size_t, std::size_t> best{};
      for (std::size_t jb = 0; jb < nc && !(chosen && tie == TieBreak::smallest_index); ++jb) {
        if (cur(i, jb) || m.contains(i, jb)) continue;
        for (std::size_t ib = 0; ib < nr; ++ib) {
          if (ib == i || !cur(ib, jb) || cur(ib, j) || m.contains(ib, j)) continue;
          if (std::find(used_rows.begin(), used_rows.end(), ib) != used_rows.end()) continue;
          // Removing a second conflict at (ib, jb) leaves both loads unchanged.
          const std::size_t extra = m.contains(ib, jb) ? 0 : 1;
          const std::size_t r = row_load[ib] + extra, c = col_load[jb] + extra;
          const std::tuple key{std::max(r, c), r + c, jb, ib};
          if (!chosen || key < best) {
            best = key;
            chosen = Switch{i, j, ib, jb};
          }
          if (tie == TieBreak::smallest_index) break;
        }
      }
      if (!chosen) {
        throw CandidateExhausted("no admissible 2-switch removes prohibited edge (" +
                                     std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                     "): row " + std::to_string(i + 1) + " has " +
                                     std::to_string(conflicts.size()) + " conflicts and " +
                                     std::to_string(log.size()) + " switches were already applied",
                                 i, j);
      }
      const Switch& s = *chosen;
      if (!m.contains(s.i_bar, s.j_bar)) {
        ++row_load[s.i_bar];
        ++col_load[s.j_bar];
      }
      flip(s.i, s.j, false);
      flip(s.i_bar, s.j_bar, false);
      flip(s.i_bar, s.j, true);
      flip(s.i, s.j_bar, true);
      check_degrees(s);
      used_rows.push_back(s.i_bar);
      log.push_back(s);
    }
  }

  PerturbResult out{cur, BinaryBigraph(nr, nc), BinaryBigraph(nr, nc), std::move(log)};
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) {
      if (cur(i, j) && !e(i, j)) out.delta_plus.set(i, j, true);
      if (!cur(i, j) && e(i, j)) out.delta_minus.set(i, j, true);
    }
  }
  return out;
}

bool Certificate::structural_ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.ok || c.name == "retention"; });
}

bool Certificate::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

Certificate verify_perturbation(const BinaryBigraph& e, const PerturbResult& result,
                                const ProhibitedSet& m, kernels::Exec exec) {
  require_shape(e, m);
  const std::size_t nr = e.rows(), nc = e.cols();
  const BinaryBigraph& ep = result.e_p;
  const BinaryBigraph& dp = result.delta_plus;
  const BinaryBigraph& dm = result.delta_minus;
  for (const BinaryBigraph* x : {&ep, &dp, &dm}) {
    if (x->rows() != nr || x->cols() != nc) throw InvalidArgument("perturbation result has the wrong shape");
  }
  Certificate cert;
  cert.p = occupancy(m);
  auto at = [](std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  };

  Check support{"support", true, ""};
  auto fail = [](Check& c, const std::string& why) {
    if (c.ok) c.detail = why;
    c.ok = false;
  };
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) {
      const int expected = int{e(i, j)} - int{dm(i, j)} + int{dp(i, j)};
      if (expected != int{ep(i, j)}) fail(support, "E_p differs from E - D- + D+ at " + at(i, j));
      if (dm(i, j) && !e(i, j)) fail(support, "D- has a one off the support of E at " + at(i, j));
      if (e(i, j) && m.contains(i, j) && !dm(i, j)) fail(support, "prohibited edge " + at(i, j) + " is not removed by D-");
      if (dp(i, j) && e(i, j)) fail(support, "D+ adds an existing edge at " + at(i, j));
      if (dp(i, j) && m.contains(i, j)) fail(support, "D+ adds a prohibited edge at " + at(i, j));
    }
  }
  for (std::size_t i = 0; i < nr; ++i) {
    const auto a = std::accumulate(dp.row(i).begin(), dp.row(i).end(), 0);
    const auto b = std::accumulate(dm.row(i).begin(), dm.row(i).end(), 0);
    if (a != b) fail(support, "D+ and D- row sums differ on row " + std::to_string(i + 1));
  }
  for (std::size_t j = 0; j < nc; ++j) {
    int a = 0, b = 0;
    for (std::size_t i = 0; i < nr; ++i) {
      a += dp(i, j);
      b += dm(i, j);
    }
    if (a != b) fail(support, "D+ and D- column sums differ on column " + std::to_string(j + 1));
  }
  cert.checks.push_back(support);

  Check regular{"biregularity", true, ""};
  const DegreeCheck before = check_biregular(e), after = check_biregular(ep);
  if (!after.ok) {
    fail(regular, after.side + " " + std::to_string(after.index + 1) + " of E_p has degree " +
                      std::to_string(after.found));
  } else if (before.ok && !(after.degrees == before.degrees)) {
    fail(regular, "E_p degrees differ from those of E");
  }
  cert.checks.push_back(regular);

  Check disjoint{"disjointness", true, ""};
  for (const auto& [i, j] : m.positions()) {
    if (ep(i, j)) fail(disjoint, "E_p still contains prohibited edge " + at(i, j));
  }
  cert.checks.push_back(disjoint);

  std::vector<int> diff(nr * nc);
  for (std::size_t k = 0; k < nr * nc; ++k) diff[k] = int{dp.entries()[k]} - int{dm.entries()[k]};
  cert.norm_plus = spectral::spectral_norm(dp, exec);
  cert.norm_minus = spectral::spectral_norm(dm, exec);
  cert.norm_difference = spectral::spectral_norm(diff, nr, nc);
  const double p = static_cast<double>(cert.p), slack = spectral::kVerdictSlack;
  Check norms{"norms", true, ""};
  if (cert.norm_plus > p + slack) fail(norms, "||D+|| = " + std::to_string(cert.norm_plus) + " exceeds p");
  if (cert.norm_minus > p + slack) fail(norms, "||D-|| = " + std::to_string(cert.norm_minus) + " exceeds p");
  if (cert.norm_difference > 2.0 * p + slack) {
    fail(norms, "||D+ - D-|| = " + std::to_string(cert.norm_difference) + " exceeds 2p");
  }
  cert.checks.push_back(norms);

  Check retention{"retention", false, ""};
  if (after.ok) {
    cert.mu = spectral::ramanujan_bound(after.degrees.row, after.degrees.col);
    cert.centered_norm = spectral::centered_spectral_norm(ep, exec);
    retention.ok = cert.centered_norm <= cert.mu + slack;
    if (!retention.ok) {
      retention.detail = "||E_p - alpha J|| = " + std::to_string(cert.centered_norm) +
                         " exceeds mu = " + std::to_string(cert.mu);
    }
  } else {
    retention.detail = "E_p is not biregular";
  }
  cert.checks.push_back(retention);
  return cert;
}

}  // namespace ramanujan::perturb
