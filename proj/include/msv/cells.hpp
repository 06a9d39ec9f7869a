#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace msv {

// A cell of the n x n grid in matrix coordinates: row 1 is the north edge,
// column n the east edge.
struct Cell {
  int row = 0;
  int col = 0;
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

// Finite set of grid cells, one 64-bit word per row (bit c-1 of word r-1 is
// cell (r, c)). Membership, insertion and set difference are constant time
// per cell; the representation is exact for grids up to 64 x 64.
class CellSet {
 public:
  static constexpr int kMaxGrid = 64;

  CellSet() = default;
  explicit CellSet(int n);

  int grid_size() const { return n_; }

  // Out-of-grid queries return false rather than throwing, so neighbour
  // probes in flood fills need no bounds guards.
  bool contains(int row, int col) const {
    if (row < 1 || row > n_ || col < 1 || col > n_) return false;
    return (rows_[row - 1] >> (col - 1)) & 1u;
  }
  bool contains(Cell c) const { return contains(c.row, c.col); }

  void insert(int row, int col);
  void insert(Cell c) { insert(c.row, c.col); }

  int size() const;
  bool empty() const;

  uint64_t row_bits(int row) const { return rows_[row - 1]; }
  void assign_row_bits(int row, uint64_t bits);

  CellSet operator-(const CellSet& other) const;
  CellSet& operator|=(const CellSet& other);
  bool subset_of(const CellSet& other) const;

  std::vector<Cell> cells() const;  // sorted by (row, col)
  std::vector<int> occupied_rows() const;
  std::vector<int> occupied_cols() const;

  friend bool operator==(const CellSet&, const CellSet&) = default;

 private:
  int n_ = 0;
  std::vector<uint64_t> rows_;
};

}  // namespace msv
