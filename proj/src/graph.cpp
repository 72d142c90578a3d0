#include "ramanujan/graph.hpp"

#include <deque>
#include <numeric>

namespace ramanujan {

namespace {

void require_binary(std::span<const std::uint8_t> v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] > 1) throw InvalidArgument("entry " + std::to_string(k) + " is not 0/1");
  }
}

}  // namespace

BinaryBigraph::BinaryBigraph(std::size_t rows, std::size_t cols,
                             std::vector<std::uint8_t> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw InvalidArgument("biadjacency: expected " + std::to_string(rows * cols) +
                          " entries, got " + std::to_string(entries_.size()));
  }
  require_binary(entries_);
}

std::vector<Edge> BinaryBigraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::size_t BinaryBigraph::edge_count() const {
  return static_cast<std::size_t>(std::count(entries_.begin(), entries_.end(), 1));
}

BinaryBigraph BinaryBigraph::transposed() const {
  BinaryBigraph t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = (*this)(i, j);
  }
  if (degrees_) t.degrees_ = Degrees{degrees_->col, degrees_->row};
  return t;
}

SimpleGraph::SimpleGraph(std::size_t n, std::vector<std::uint8_t> adjacency, Loops loops)
    : n_(n), loops_(loops), adjacency_(std::move(adjacency)) {
  if (adjacency_.size() != n * n) {
    throw InvalidArgument("adjacency: expected " + std::to_string(n * n) + " entries");
  }
  require_binary(adjacency_);
  for (std::size_t i = 0; i < n; ++i) {
    if (loops_ == Loops::forbid && (*this)(i, i)) {
      throw SelfLoopError("adjacency has a self-loop at vertex " + std::to_string(i), i);
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) {
        throw AsymmetryError("adjacency is not symmetric at (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ")",
                             i, j);
      }
    }
  }
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v && loops_ == Loops::forbid) {
    throw SelfLoopError("self-loop at vertex " + std::to_string(u), u);
  }
  adjacency_[u * n_ + v] = 1;
  adjacency_[v * n_ + u] = 1;
}

std::size_t SimpleGraph::degree(std::size_t v) const {
  const auto r = row(v);
  return static_cast<std::size_t>(std::count(r.begin(), r.end(), 1));
}

std::optional<std::size_t> SimpleGraph::regular_degree() const {
  if (n_ == 0) return 0;
  const std::size_t d = degree(0);
  for (std::size_t v = 1; v < n_; ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

std::size_t SimpleGraph::loop_count() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n_; ++i) c += (*this)(i, i);
  return c;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) {
      if ((*this)(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

DegreeCheck check_biregular(const BinaryBigraph& g) {
  DegreeCheck out;
  std::vector<std::size_t> col_sums(g.cols(), 0);
  std::size_t first_row = 0;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    std::size_t s = 0;
    const auto r = g.row(i);
    for (std::size_t j = 0; j < g.cols(); ++j) {
      s += r[j];
      col_sums[j] += r[j];
    }
    if (i == 0) first_row = s;
    if (s != first_row && out.side.empty()) {
      out.side = "row";
      out.index = i;
      out.expected = first_row;
      out.found = s;
    }
  }
  if (!out.side.empty()) return out;
  for (std::size_t j = 1; j < g.cols(); ++j) {
    if (col_sums[j] != col_sums[0]) {
      out.side = "column";
      out.index = j;
      out.expected = col_sums[0];
      out.found = col_sums[j];
      return out;
    }
  }
  out.ok = true;
  out.degrees = {first_row, g.cols() ? col_sums[0] : 0};
  return out;
}

Degrees require_biregular(BinaryBigraph& g) {
  const DegreeCheck c = check_biregular(g);
  if (!c.ok) {
    throw IrregularError("not biregular: " + c.side + " " + std::to_string(c.index) +
                             " has degree " + std::to_string(c.found) + ", expected " +
                             std::to_string(c.expected),
                         c.side, c.index);
  }
  g.record_degrees(c.degrees);
  return c.degrees;
}

std::vector<std::vector<std::size_t>> connected_components(const SimpleGraph& g) {
  const std::size_t n = g.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      const auto r = g.row(u);
      for (std::size_t v = 0; v < n; ++v) {
        if (r[v] && !seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Bipartition bipartition(const SimpleGraph& g) {
  const std::size_t n = g.size();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<int> colour(n, -1);
  std::vector<std::size_t> parent(n, none);
  Bipartition out;

  auto path_to_root = [&](std::size_t v) {
    std::vector<std::size_t> p{v};
    while (parent[v] != none) {
      v = parent[v];
      p.push_back(v);
    }
    return p;
  };

  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      const auto r = g.row(u);
      for (std::size_t v = 0; v < n; ++v) {
        if (!r[v]) continue;
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          parent[v] = u;
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          // Odd cycle: u -> lca -> v plus the edge (u, v).
          auto pu = path_to_root(u);
          auto pv = path_to_root(v);
          while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
            pu.pop_back();
            pv.pop_back();
          }
          out.odd_cycle = pu;
          for (std::size_t k = pv.size() - 1; k-- > 0;) out.odd_cycle.push_back(pv[k]);
          return out;
        }
      }
    }
  }
  out.bipartite = true;
  for (std::size_t v = 0; v < n; ++v) {
    (colour[v] == colour[0] ? out.first : out.second).push_back(v);
  }
  return out;
}

SimpleGraph bipartite_double(const BinaryBigraph& b) {
  const std::size_t n = b.rows() + b.cols();
  SimpleGraph g(n);
  for (const auto& [i, j] : b.edges()) g.add_edge(i, b.rows() + j);
  return g;
}

VertexPairing::VertexPairing(std::vector<std::size_t> col_to_row)
    : col_to_row_(std::move(col_to_row)), row_to_col_(col_to_row_.size(), col_to_row_.size()) {
  for (std::size_t c = 0; c < col_to_row_.size(); ++c) {
    const std::size_t r = col_to_row_[c];
    if (r >= col_to_row_.size() || row_to_col_[r] != col_to_row_.size()) {
      throw InvalidArgument("pairing is not a bijection at column " + std::to_string(c));
    }
    row_to_col_[r] = c;
  }
}

VertexPairing VertexPairing::identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return VertexPairing(std::move(p));
}

BinaryBigraph VertexPairing::matrix() const {
  BinaryBigraph m(size(), size());
  for (std::size_t c = 0; c < size(); ++c) m.set(c, col_to_row_[c], true);
  return m;
}

SimpleGraph apply_pairing(const BinaryBigraph& b, const VertexPairing& pi, Loops loops) {
  if (b.rows() != b.cols() || pi.size() != b.cols()) {
    throw InvalidArgument("apply_pairing needs a square biadjacency matching the pairing");
  }
  const std::size_t n = b.rows();
  std::vector<std::uint8_t> a(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t r = 0; r < n; ++r) a[x * n + r] = b(x, pi.col_of(r));
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (loops == Loops::forbid && a[x * n + x]) {
      throw SelfLoopError("pairing creates a self-loop at vertex " + std::to_string(x), x);
    }
    for (std::size_t y = x + 1; y < n; ++y) {
      if (a[x * n + y] != a[y * n + x]) {
        throw AsymmetryError("B*Pi is not symmetric at (" + std::to_string(x) + ", " +
                                 std::to_string(y) + ")",
                             x, y);
      }
    }
  }
  return SimpleGraph(n, std::move(a), loops);
}

SimpleGraph graph_from_neighbours(const std::vector<std::vector<std::size_t>>& nbrs) {
  const std::size_t n = nbrs.size();
  std::vector<std::uint8_t> a(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t k = 0; k < nbrs[x].size(); ++k) {
      const std::size_t y = nbrs[x][k];
      if (y == x) throw SelfLoopError("generator " + std::to_string(k) + " fixes vertex " +
                                          std::to_string(x), x);
      if (a[x * n + y]) {
        const auto first = static_cast<std::size_t>(
            std::find(nbrs[x].begin(), nbrs[x].end(), y) - nbrs[x].begin());
        throw CollisionError("generators " + std::to_string(first) + " and " +
                                 std::to_string(k) + " give the same neighbour of vertex " +
                                 std::to_string(x) + " (multigraph)",
                             x, first, k);
      }
      a[x * n + y] = 1;
    }
  }
  return SimpleGraph(n, std::move(a));
}

}  // namespace ramanujan
