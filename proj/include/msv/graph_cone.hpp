#pragma once

#include <cstdint>
#include <vector>

#include "msv/cells.hpp"

namespace msv {

// Bipartite graph G(w): one edge a -> b̄ per cell (a, b) of the L-diagram,
// vertex sets exactly the occupied rows and columns (no isolated vertices).
struct BipartiteGraph {
  int grid = 0;            // ambient grid size n
  std::vector<int> rows;   // sorted occupied row labels
  std::vector<int> cols;   // sorted occupied column labels (the barred side)
  std::vector<Cell> edges; // sorted (row, col) pairs

  int vertex_count() const {
    return static_cast<int>(rows.size() + cols.size());
  }
};

// Weight e_i - f_j of a torus character, embedded in Z^{2n} with basis
// e_1..e_n, f_1..f_n.
struct WeightVector {
  std::vector<int64_t> coords;
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

BipartiteGraph graph_of(const CellSet& l_cells);

// Number of connected components (union-find); 0 for the empty graph.
int component_count(const BipartiteGraph& g);

// One generator e_row - f_col per cell of L.
std::vector<WeightVector> weight_generators(const CellSet& l_cells, int n);

// Rank over Q of an integer matrix by fraction-free (Bareiss) elimination.
// Exact; throws std::overflow_error if an intermediate minor leaves the
// 64-bit range (never happens for the ±1 incidence rows used here).
int integer_rank(std::vector<std::vector<int64_t>> m);

// Dimension of the weight cone as the rank of its generator set.
int cone_dim_by_rank(const std::vector<WeightVector>& gens);

// Dimension of the edge cone of an acyclic graph: |V(G)| - |comp(G)|.
int cone_dim_by_formula(const BipartiteGraph& g);

}  // namespace msv
