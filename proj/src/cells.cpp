#include "msv/cells.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace msv {

CellSet::CellSet(int n) : n_(n), rows_(static_cast<size_t>(n), 0) {
  if (n < 1 || n > kMaxGrid) {
    throw std::invalid_argument("CellSet grid size must be in [1, " +
                                std::to_string(kMaxGrid) + "], got " +
                                std::to_string(n));
  }
}

void CellSet::insert(int row, int col) {
  if (row < 1 || row > n_ || col < 1 || col > n_) {
    throw std::out_of_range("cell (" + std::to_string(row) + ", " +
                            std::to_string(col) + ") outside the " +
                            std::to_string(n_) + "x" + std::to_string(n_) +
                            " grid");
  }
  rows_[row - 1] |= uint64_t{1} << (col - 1);
}

int CellSet::size() const {
  int total = 0;
  for (uint64_t bits : rows_) total += std::popcount(bits);
  return total;
}

bool CellSet::empty() const {
  for (uint64_t bits : rows_) {
    if (bits) return false;
  }
  return true;
}

void CellSet::assign_row_bits(int row, uint64_t bits) {
  if (row < 1 || row > n_) {
    throw std::out_of_range("row " + std::to_string(row) + " outside grid");
  }
  if (n_ < 64 && (bits >> n_) != 0) {
    throw std::out_of_range("row bits exceed grid size");
  }
  rows_[row - 1] = bits;
}

CellSet CellSet::operator-(const CellSet& other) const {
  if (other.n_ != n_) {
    throw std::invalid_argument("set difference of mismatched grids");
  }
  CellSet out(n_);
  for (int r = 0; r < n_; ++r) out.rows_[r] = rows_[r] & ~other.rows_[r];
  return out;
}

CellSet& CellSet::operator|=(const CellSet& other) {
  if (other.n_ != n_) {
    throw std::invalid_argument("union of mismatched grids");
  }
  for (int r = 0; r < n_; ++r) rows_[r] |= other.rows_[r];
  return *this;
}

bool CellSet::subset_of(const CellSet& other) const {
  if (other.n_ != n_) {
    throw std::invalid_argument("subset test on mismatched grids");
  }
  for (int r = 0; r < n_; ++r) {
    if (rows_[r] & ~other.rows_[r]) return false;
  }
  return true;
}

std::vector<Cell> CellSet::cells() const {
  std::vector<Cell> out;
  for (int r = 1; r <= n_; ++r) {
    uint64_t bits = rows_[r - 1];
    while (bits) {
      out.push_back({r, std::countr_zero(bits) + 1});
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<int> CellSet::occupied_rows() const {
  std::vector<int> out;
  for (int r = 1; r <= n_; ++r) {
    if (rows_[r - 1]) out.push_back(r);
  }
  return out;
}

std::vector<int> CellSet::occupied_cols() const {
  uint64_t all = 0;
  for (uint64_t bits : rows_) all |= bits;
  std::vector<int> out;
  while (all) {
    out.push_back(std::countr_zero(all) + 1);
    all &= all - 1;
  }
  return out;
}

}  // namespace msv
