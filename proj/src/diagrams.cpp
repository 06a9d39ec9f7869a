#include "msv/diagrams.hpp"

#include <algorithm>
#include <bit>
#include <climits>

namespace msv {

namespace {

uint64_t low_bits(int count) {
  if (count <= 0) return 0;
  if (count >= 64) return ~uint64_t{0};
  return (uint64_t{1} << count) - 1;
}

// Flood fill of the edge-connected component containing start.
CellSet flood_component(const CellSet& cells, Cell start) {
  CellSet comp(cells.grid_size());
  std::vector<Cell> stack{start};
  comp.insert(start);
  while (!stack.empty()) {
    const Cell c = stack.back();
    stack.pop_back();
    const Cell nbrs[4] = {{c.row - 1, c.col},
                          {c.row + 1, c.col},
                          {c.row, c.col - 1},
                          {c.row, c.col + 1}};
    for (Cell nb : nbrs) {
      if (cells.contains(nb) && !comp.contains(nb)) {
        comp.insert(nb);
        stack.push_back(nb);
      }
    }
  }
  return comp;
}

// Southwest-most cell: largest row, then smallest column within that row.
Cell southwest_most(const CellSet& cells) {
  for (int r = cells.grid_size(); r >= 1; --r) {
    const uint64_t bits = cells.row_bits(r);
    if (bits) return {r, std::countr_zero(bits) + 1};
  }
  return {0, 0};
}

}  // namespace

CellSet opposite_rothe(const Permutation& w) {
  const int n = w.size();
  CellSet out(n);
  uint64_t seen = 0;  // bit v-1 set once value v has appeared
  for (int j = 1; j <= n; ++j) {
    const int wj = w(j);
    seen |= uint64_t{1} << (wj - 1);
    // rows i with i > w(j) and value i not yet placed (w^{-1}(i) > j)
    uint64_t rows = (wj >= 64) ? 0 : (~uint64_t{0} << wj);
    rows &= low_bits(n) & ~seen;
    while (rows) {
      out.insert(std::countr_zero(rows) + 1, j);
      rows &= rows - 1;
    }
  }
  return out;
}

std::vector<CellSet> connected_components(const CellSet& cells) {
  std::vector<CellSet> comps;
  if (cells.grid_size() == 0 || cells.empty()) return comps;
  CellSet visited(cells.grid_size());
  for (Cell c : cells.cells()) {
    if (visited.contains(c)) continue;
    CellSet comp = flood_component(cells, c);
    visited |= comp;
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(), [](const CellSet& a, const CellSet& b) {
    const Cell ra = southwest_most(a);
    const Cell rb = southwest_most(b);
    if (ra.row != rb.row) return ra.row > rb.row;
    return ra.col < rb.col;
  });
  return comps;
}

CellSet essential_from(const CellSet& opp) {
  const int n = opp.grid_size();
  CellSet out(n);
  for (int r = 1; r <= n; ++r) {
    const uint64_t row = opp.row_bits(r);
    if (!row) continue;
    const uint64_t north = (r > 1) ? opp.row_bits(r - 1) : 0;
    out.assign_row_bits(r, row & ~north & ~(row >> 1));
  }
  return out;
}

CellSet dominant_from(const CellSet& opp) {
  const int n = opp.grid_size();
  if (!opp.contains(n, 1)) return CellSet(n);
  return flood_component(opp, {n, 1});
}

CellSet southwest_from(const CellSet& essential) {
  const int n = essential.grid_size();
  CellSet out(n);
  uint64_t prefix = 0;
  for (int r = 1; r <= n; ++r) {
    const uint64_t row = essential.row_bits(r);
    if (row) {
      const int max_col = 64 - std::countl_zero(row);
      prefix |= low_bits(max_col);
    }
    if (prefix) out.assign_row_bits(r, prefix);
  }
  return out;
}

CellSet essential_set(const Permutation& w) {
  return essential_from(opposite_rothe(w));
}

CellSet dominant_piece(const Permutation& w) {
  return dominant_from(opposite_rothe(w));
}

CellSet southwest_closure(const Permutation& w) {
  return southwest_from(essential_set(w));
}

CellSet l_diagram(const Permutation& w) {
  const CellSet opp = opposite_rothe(w);
  return southwest_from(essential_from(opp)) - dominant_from(opp);
}

CellSet l_prime_diagram(const Permutation& w) {
  const CellSet opp = opposite_rothe(w);
  return southwest_from(essential_from(opp)) - opp;
}

DiagramBundle bundle(const Permutation& w) {
  CellSet opp = opposite_rothe(w);
  CellSet ess = essential_from(opp);
  CellSet dom = dominant_from(opp);
  CellSet sw = southwest_from(ess);
  CellSet l = sw - dom;
  CellSet lp = sw - opp;
  return DiagramBundle{w,
                       std::move(opp),
                       std::move(ess),
                       std::move(dom),
                       std::move(sw),
                       std::move(l),
                       std::move(lp)};
}

bool is_french_young(const CellSet& cells) {
  if (cells.grid_size() == 0 || cells.empty()) return true;
  const int n = cells.grid_size();
  int row_min = 0, row_max = 0, col_min = INT_MAX;
  for (int r = 1; r <= n; ++r) {
    const uint64_t bits = cells.row_bits(r);
    if (!bits) continue;
    if (!row_min) row_min = r;
    row_max = r;
    col_min = std::min(col_min, std::countr_zero(bits) + 1);
  }
  int prev_len = 0;
  for (int r = row_min; r <= row_max; ++r) {
    const uint64_t bits = cells.row_bits(r);
    const int len = std::popcount(bits);
    // every row must be a contiguous run starting at the western edge
    if (bits != (low_bits(len) << (col_min - 1))) return false;
    // lengths weakly decrease from bottom (large r) to top
    if (len < prev_len || len == 0) return false;
    prev_len = len;
  }
  return true;
}

}  // namespace msv
