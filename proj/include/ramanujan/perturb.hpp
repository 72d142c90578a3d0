#pragma once

// Removal of prohibited edges from a biregular bigraph by degree-preserving
// 2-switches, with a checker that certifies the outcome independently.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ramanujan/error.hpp"
#include "ramanujan/graph.hpp"
#include "ramanujan/kernels.hpp"

namespace ramanujan::perturb {

/// Set M of prohibited (row, column) positions, 0-based, sorted and unique.
class ProhibitedSet {
 public:
  /// Throws InvalidArgument for positions outside rows x cols.
  ProhibitedSet(std::size_t rows, std::size_t cols, std::vector<Edge> positions);
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Edge>& positions() const { return positions_; }
  bool contains(std::size_t i, std::size_t j) const { return mask_[i * cols_ + j] != 0; }
  bool empty() const { return positions_.empty(); }

 private:
  std::size_t rows_, cols_;
  std::vector<Edge> positions_;
  std::vector<std::uint8_t> mask_;
};

/// Largest number of prohibited positions on any single row or column.
std::size_t occupancy(const ProhibitedSet& m);

/// One inequality lhs <= rhs, with margin = rhs - lhs.
struct Margin {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool holds = false;
};

struct FeasibilityReport {
  std::size_t p = 0;
  std::size_t n_rows = 0, n_cols = 0;
  Degrees degrees;
  std::size_t theta_c = 0;
  double sigma2 = 0.0;
  double mu = 0.0;
  Margin row_room;        // 2p <= n_c - d_r
  Margin column_overlap;  // 2p - 1 <= d_c - theta_c
  Margin spectral;        // 2p <= mu - sigma2
  /// The two inequalities the switch procedure relies on.
  bool combinatorial() const { return row_room.holds && column_overlap.holds; }
};

/// Throws IrregularError if E is not biregular, InvalidArgument on a shape
/// mismatch. Infeasibility is reported, not thrown.
FeasibilityReport feasibility(const BinaryBigraph& e, const ProhibitedSet& m,
                              kernels::Exec exec = kernels::Exec::parallel);

/// Same, with sigma2 supplied by the caller instead of recomputed.
FeasibilityReport feasibility(const BinaryBigraph& e, const ProhibitedSet& m, double sigma2,
                              kernels::Exec exec = kernels::Exec::parallel);

/// Remove (i, j) and (i_bar, j_bar); add (i_bar, j) and (i, j_bar).
struct Switch {
  std::size_t i = 0, j = 0, i_bar = 0, j_bar = 0;
  bool operator==(const Switch&) const = default;
};

struct PerturbResult {
  BinaryBigraph e_p;
  BinaryBigraph delta_plus;   // E_p - E where positive
  BinaryBigraph delta_minus;  // E - E_p where positive
  std::vector<Switch> switches;
};

/// No admissible switch exists for a conflict at (row, column).
class CandidateExhausted : public Error {
 public:
  CandidateExhausted(std::string what, std::size_t row, std::size_t column)
      : Error(std::move(what)), row_(row), column_(column) {}
  std::size_t row() const { return row_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t row_, column_;
};

enum class TieBreak {
  least_loaded,    // smallest committed load on the partner row and column
  smallest_index,  // first admissible column, then first admissible row
};

/// Rows are processed in ascending order against the current matrix. For a
/// conflict (i, j) a replacement column j_bar and a partner row i_bar are
/// picked among the admissible candidates according to `tie`. The load of a
/// line counts switches applied to it plus conflicts still waiting on it; a
/// partner edge that is itself a conflict is removed by the same switch.
/// Partner rows are distinct within a row. Degrees are re-checked after
/// every switch.
PerturbResult perturb(const BinaryBigraph& e, const ProhibitedSet& m,
                      TieBreak tie = TieBreak::least_loaded);

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Certificate {
  std::size_t p = 0;
  double norm_plus = 0.0, norm_minus = 0.0, norm_difference = 0.0;
  double centered_norm = 0.0, mu = 0.0;
  std::vector<Check> checks;  // support, biregularity, disjointness, norms, retention
  /// Everything except the Ramanujan retention check.
  bool structural_ok() const;
  bool ok() const;
};

Certificate verify_perturbation(const BinaryBigraph& e, const PerturbResult& result,
                                const ProhibitedSet& m,
                                kernels::Exec exec = kernels::Exec::parallel);

}  // namespace ramanujan::perturb
