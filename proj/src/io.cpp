#include "ramanujan/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "ramanujan/error.hpp"

#ifndef RAMANUJAN_VERSION
#define RAMANUJAN_VERSION "unknown"
#endif

namespace ramanujan::io {

const char* version() { return RAMANUJAN_VERSION; }

void write_matrix_market(std::ostream& out, const BinaryBigraph& b) {
  out << "%%MatrixMarket matrix coordinate pattern general\n";
  out << b.rows() << ' ' << b.cols() << ' ' << b.edge_count() << '\n';
  for (const auto& [i, j] : b.edges()) out << i + 1 << ' ' << j + 1 << '\n';
}

void write_matrix_market(const std::filesystem::path& path, const BinaryBigraph& b) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_matrix_market(out, b);
  if (!out) throw Error("failed writing " + path.string());
}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool parse_index(std::string_view token, std::size_t& value) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    const std::size_t start = k;
    while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    if (k > start) out.push_back(line.substr(start, k - start));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BinaryBigraph read_matrix_market(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw ParseError("empty Matrix Market input", 1);
  ++lineno;
  const std::string header = lower(line);
  const auto banner = split_ws(header);
  if (banner.size() != 5 || banner[0] != "%%matrixmarket" || banner[1] != "matrix" ||
      banner[2] != "coordinate" || banner[3] != "pattern") {
    throw ParseError("expected '%%MatrixMarket matrix coordinate pattern general|symmetric'", lineno);
  }
  const bool symmetric = banner[4] == "symmetric";
  if (!symmetric && banner[4] != "general") {
    throw ParseError("unsupported symmetry '" + std::string(banner[4]) + "'", lineno);
  }

  std::size_t rows = 0, cols = 0, nnz = 0;
  bool have_size = false;
  std::vector<std::uint8_t> entries;
  std::size_t seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '%') continue;
    const auto tok = split_ws(body);
    if (!have_size) {
      if (tok.size() != 3 || !parse_index(tok[0], rows) || !parse_index(tok[1], cols) ||
          !parse_index(tok[2], nnz)) {
        throw ParseError("expected 'rows cols entries'", lineno);
      }
      if (symmetric && rows != cols) throw ParseError("symmetric matrix must be square", lineno);
      entries.assign(rows * cols, 0);
      have_size = true;
      continue;
    }
    std::size_t i = 0, j = 0;
    if (tok.size() != 2 || !parse_index(tok[0], i) || !parse_index(tok[1], j)) {
      throw ParseError("expected 'row column' pattern entry", lineno);
    }
    if (i < 1 || i > rows || j < 1 || j > cols) {
      throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range", lineno);
    }
    if (entries[(i - 1) * cols + (j - 1)]) {
      throw ParseError("duplicate entry (" + std::to_string(i) + "," + std::to_string(j) + ")", lineno);
    }
    entries[(i - 1) * cols + (j - 1)] = 1;
    if (symmetric) {
      if (j > i) throw ParseError("symmetric file must list the lower triangle only", lineno);
      entries[(j - 1) * cols + (i - 1)] = 1;
    }
    ++seen;
  }
  if (!have_size) throw ParseError("missing size line", lineno + 1);
  if (seen != nnz) {
    throw ParseError("header announces " + std::to_string(nnz) + " entries, found " + std::to_string(seen),
                     lineno);
  }
  return BinaryBigraph(rows, cols, std::move(entries));
}

BinaryBigraph read_matrix_market(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_matrix_market(in);
}

BinaryBigraph as_matrix(const SimpleGraph& g) {
  const auto a = g.adjacency();
  return BinaryBigraph(g.size(), g.size(), std::vector<std::uint8_t>(a.begin(), a.end()));
}

SimpleGraph as_graph(const BinaryBigraph& b) {
  if (b.rows() != b.cols()) {
    throw InvalidArgument("graph mode needs a square matrix, got " + std::to_string(b.rows()) + " x " +
                          std::to_string(b.cols()));
  }
  bool loops = false;
  for (std::size_t v = 0; v < b.rows(); ++v) loops = loops || b(v, v);
  const auto e = b.entries();
  return SimpleGraph(b.rows(), std::vector<std::uint8_t>(e.begin(), e.end()),
                     loops ? Loops::allow : Loops::forbid);
}

perturb::ProhibitedSet read_prohibited(std::istream& in, std::size_t rows, std::size_t cols) {
  std::vector<Edge> positions;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = line;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    const auto comma = body.find(',');
    std::size_t i = 0, j = 0;
    if (comma == std::string_view::npos || !parse_index(trim(body.substr(0, comma)), i) ||
        !parse_index(trim(body.substr(comma + 1)), j)) {
      throw ParseError("line " + std::to_string(lineno) + ": expected 'i,j' with positive integers, got '" +
                           std::string(body) + "'",
                       lineno);
    }
    if (i < 1 || i > rows || j < 1 || j > cols) {
      throw ParseError("line " + std::to_string(lineno) + ": position (" + std::to_string(i) + "," +
                           std::to_string(j) + ") outside " + std::to_string(rows) + " x " +
                           std::to_string(cols),
                       lineno);
    }
    positions.emplace_back(i - 1, j - 1);
  }
  return perturb::ProhibitedSet(rows, cols, std::move(positions));
}

perturb::ProhibitedSet read_prohibited(const std::filesystem::path& path, std::size_t rows,
                                       std::size_t cols) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_prohibited(in, rows, cols);
}

Json to_json(const spectral::SpectralReport& r) {
  const bool graph = r.kind == spectral::SpectralReport::Kind::graph;
  Json j;
  j["kind"] = graph ? "graph" : "bigraph";
  j["n_rows"] = r.n_rows;
  j["n_cols"] = r.n_cols;
  if (graph) {
    j["degree"] = r.degrees.row;
  } else {
    j["d_row"] = r.degrees.row;
    j["d_col"] = r.degrees.col;
  }
  j[graph ? "lambda1" : "sigma1"] = r.top;
  j[graph ? "lambda2" : "sigma2"] = r.second;
  j["second_multiplicity"] = r.second_multiplicity;
  j["bound"] = r.bound;
  j["gap"] = r.gap;
  j["is_ramanujan"] = r.is_ramanujan;
  Json cl = Json::array();
  for (const auto& c : spectral::clusters(r.spectrum)) {
    cl.push_back(Json{{"value", c.value}, {"multiplicity", c.multiplicity}});
  }
  j["clusters"] = std::move(cl);
  j["spectrum"] = r.spectrum;
  return j;
}

namespace {

Json to_json(const perturb::Margin& m) {
  return Json{{"lhs", m.lhs}, {"rhs", m.rhs}, {"margin", m.margin}, {"holds", m.holds}};
}

}  // namespace

Json to_json(const perturb::FeasibilityReport& r) {
  Json j;
  j["p"] = r.p;
  j["n_rows"] = r.n_rows;
  j["n_cols"] = r.n_cols;
  j["d_row"] = r.degrees.row;
  j["d_col"] = r.degrees.col;
  j["theta_c"] = r.theta_c;
  j["sigma2"] = r.sigma2;
  j["mu"] = r.mu;
  j["row_room"] = to_json(r.row_room);
  j["column_overlap"] = to_json(r.column_overlap);
  j["spectral"] = to_json(r.spectral);
  j["combinatorial"] = r.combinatorial();
  return j;
}

Json to_json(const perturb::Certificate& c) {
  Json j;
  j["p"] = c.p;
  j["norm_delta_plus"] = c.norm_plus;
  j["norm_delta_minus"] = c.norm_minus;
  j["norm_difference"] = c.norm_difference;
  j["centered_norm"] = c.centered_norm;
  j["mu"] = c.mu;
  Json checks = Json::array();
  for (const auto& k : c.checks) checks.push_back(Json{{"name", k.name}, {"ok", k.ok}, {"detail", k.detail}});
  j["checks"] = std::move(checks);
  j["structural_ok"] = c.structural_ok();
  j["ok"] = c.ok();
  return j;
}

void write_switch_log(const std::filesystem::path& path, const std::vector<perturb::Switch>& log) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << "i,j,i_bar,j_bar\n";
  for (const auto& s : log) {
    out << s.i + 1 << ',' << s.j + 1 << ',' << s.i_bar + 1 << ',' << s.j_bar + 1 << '\n';
  }
}

Json to_json(const RunManifest& m) {
  Json j;
  j["construction"] = m.construction;
  j["parameters"] = m.parameters;
  j["outputs"] = m.outputs;
  for (const auto& [k, v] : m.extra.items()) j[k] = v;
  j["command"] = m.command;
  j["version"] = version();
  j["duration_seconds"] = m.duration_seconds;
  return j;
}

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
}

}  // namespace ramanujan::io
