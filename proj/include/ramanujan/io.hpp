#pragma once

// File formats: Matrix Market coordinate pattern files for 0/1 matrices,
// the "i,j" prohibited-edge list, and JSON reports with a fixed key order.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "ramanujan/graph.hpp"
#include "ramanujan/perturb.hpp"
#include "ramanujan/spectral.hpp"

namespace ramanujan::io {

using Json = nlohmann::ordered_json;

const char* version();

/// Coordinate pattern general, 1-based, sorted by row then column.
void write_matrix_market(std::ostream& out, const BinaryBigraph& b);
void write_matrix_market(const std::filesystem::path& path, const BinaryBigraph& b);

/// Accepts coordinate pattern (general or symmetric) files. Symmetric
/// files are expanded. Throws ParseError naming the offending line.
BinaryBigraph read_matrix_market(std::istream& in);
BinaryBigraph read_matrix_market(const std::filesystem::path& path);

/// The adjacency matrix as a bigraph with rows = cols = vertices.
BinaryBigraph as_matrix(const SimpleGraph& g);

/// Requires a square symmetric matrix; diagonal ones are kept as loops.
SimpleGraph as_graph(const BinaryBigraph& b);

/// Lines "i,j" with 1-based indices; '#' starts a comment; blank lines are
/// skipped.
perturb::ProhibitedSet read_prohibited(std::istream& in, std::size_t rows, std::size_t cols);
perturb::ProhibitedSet read_prohibited(const std::filesystem::path& path, std::size_t rows,
                                       std::size_t cols);

Json to_json(const spectral::SpectralReport& r);
Json to_json(const perturb::FeasibilityReport& r);
Json to_json(const perturb::Certificate& c);

/// "i,j,i_bar,j_bar" per line, 1-based, with a header.
void write_switch_log(const std::filesystem::path& path, const std::vector<perturb::Switch>& log);

struct RunManifest {
  std::string construction;
  Json parameters = Json::object();
  std::vector<std::string> outputs;
  std::vector<std::string> command;
  Json extra = Json::object();
  double duration_seconds = 0.0;
};

Json to_json(const RunManifest& m);

void write_json(const std::filesystem::path& path, const Json& j);

}  // namespace ramanujan::io
