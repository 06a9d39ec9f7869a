#include "msv/graph_cone.hpp"

#include <numeric>
#include <stdexcept>

namespace msv {

namespace {

// Union-find with path halving.
struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<size_t>(a)] = b;
    return true;
  }
};

}  // namespace

BipartiteGraph graph_of(const CellSet& l_cells) {
  BipartiteGraph g;
  g.grid = l_cells.grid_size();
  g.rows = l_cells.occupied_rows();
  g.cols = l_cells.occupied_cols();
  g.edges = l_cells.cells();
  return g;
}

int component_count(const BipartiteGraph& g) {
  const int vertices = g.vertex_count();
  if (vertices == 0) return 0;
  UnionFind uf(2 * g.grid);
  int comps = vertices;
  for (const Cell& e : g.edges) {
    if (uf.unite(e.row - 1, g.grid + e.col - 1)) --comps;
  }
  return comps;
}

std::vector<WeightVector> weight_generators(const CellSet& l_cells, int n) {
  if (n < l_cells.grid_size()) {
    throw std::invalid_argument("ambient dimension smaller than the grid");
  }
  std::vector<WeightVector> out;
  out.reserve(static_cast<size_t>(l_cells.size()));
  for (Cell c : l_cells.cells()) {
    WeightVector v{std::vector<int64_t>(2 * static_cast<size_t>(n), 0)};
    v.coords[static_cast<size_t>(c.row - 1)] = 1;
    v.coords[static_cast<size_t>(n + c.col - 1)] = -1;
    out.push_back(std::move(v));
  }
  return out;
}

int integer_rank(std::vector<std::vector<int64_t>> m) {
  if (m.empty() || m[0].empty()) return 0;
  const size_t rows = m.size();
  const size_t cols = m[0].size();
  for (const auto& row : m) {
    if (row.size() != cols) {
      throw std::invalid_argument("ragged matrix");
    }
  }

  size_t rank = 0;
  int64_t prev = 1;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    const std::vector<int64_t>& pivot_row = m[rank];
    const int64_t p = pivot_row[c];
    for (size_t r = rank + 1; r < rows; ++r) {
      const int64_t head = m[r][c];
      for (size_t j = c + 1; j < cols; ++j) {
        const __int128 num = static_cast<__int128>(m[r][j]) * p -
                             static_cast<__int128>(head) * pivot_row[j];
        __int128 q;
        if (prev == 1) {
          q = num;
        } else if (prev == -1) {
          q = -num;
        } else {
          q = num / prev;
          // exact by Sylvester's identity; a remainder means corrupt state
          if (q * prev != num) {
            throw std::overflow_error("non-exact division in elimination");
          }
        }
        if (q > INT64_MAX || q < INT64_MIN) {
          throw std::overflow_error("minor exceeds 64-bit range");
        }
        m[r][j] = static_cast<int64_t>(q);
      }
      m[r][c] = 0;
    }
    prev = p;
    ++rank;
  }
  return static_cast<int>(rank);
}

int cone_dim_by_rank(const std::vector<WeightVector>& gens) {
  if (gens.empty()) return 0;
  std::vector<std::vector<int64_t>> m;
  m.reserve(gens.size());
  for (const WeightVector& g : gens) m.push_back(g.coords);
  return integer_rank(std::move(m));
}

int cone_dim_by_formula(const BipartiteGraph& g) {
  return g.vertex_count() - component_count(g);
}

}  // namespace msv
