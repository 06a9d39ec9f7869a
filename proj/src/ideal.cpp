#include "msv/ideal.hpp"

#include <cstdint>
#include <sstream>

#include "msv/diagrams.hpp"
#include "msv/errors.hpp"

namespace msv {

namespace {

constexpr uint64_t kSaturated = UINT64_MAX;

uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 value = 1;
  for (int i = 1; i <= k; ++i) {
    value = value * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (value > kSaturated) return kSaturated;
  }
  return static_cast<uint64_t>(value);
}

uint64_t saturating_add(uint64_t a, uint64_t b) {
  return (a > kSaturated - b) ? kSaturated : a + b;
}

uint64_t saturating_mul(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

// Advances a k-subset of {0, ..., limit-1} in lexicographic order.
bool next_combination(std::vector<int>& idx, int limit) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[static_cast<size_t>(i)] < limit - (k - i)) {
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j) {
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<RankCondition> rank_conditions(const Permutation& w) {
  std::vector<RankCondition> out;
  for (Cell c : essential_set(w).cells()) {
    out.push_back({c, w.rank_at(c.row, c.col)});
  }
  return out;
}

uint64_t minor_count(const Permutation& w, bool for_y) {
  const int n = w.size();
  uint64_t total = 0;
  for (const RankCondition& rc : rank_conditions(w)) {
    if (for_y && rc.bound == 0) continue;
    const int s = rc.bound + 1;
    total = saturating_add(
        total, saturating_mul(binomial(n - rc.cell.row + 1, s),
                              binomial(rc.cell.col, s)));
  }
  return total;
}

void for_each_minor(const Permutation& w, bool for_y, uint64_t cap,
                    const std::function<void(const MinorDescriptor&)>& visit) {
  const uint64_t count = minor_count(w, for_y);
  if (count > cap) {
    std::string shown = (count == kSaturated) ? std::string("more than 10^19")
                                              : std::to_string(count);
    throw limit_error("descriptor count " + shown + " exceeds the cap of " +
                      std::to_string(cap) + " for " + w.to_string());
  }

  const int n = w.size();
  const CellSet dom =
      for_y ? dominant_piece(w) : CellSet(n);  // zero positions in the Y form
  for (const RankCondition& rc : rank_conditions(w)) {
    if (for_y && rc.bound == 0) continue;
    const int a = rc.cell.row;
    const int b = rc.cell.col;
    const int s = rc.bound + 1;
    const int row_span = n - a + 1;
    if (s > row_span || s > b) continue;  // no minors of that size exist

    std::vector<int> ri(static_cast<size_t>(s));
    for (int i = 0; i < s; ++i) ri[static_cast<size_t>(i)] = i;
    do {
      std::vector<int> ci(static_cast<size_t>(s));
      for (int i = 0; i < s; ++i) ci[static_cast<size_t>(i)] = i;
      do {
        MinorDescriptor m;
        m.rows.reserve(static_cast<size_t>(s));
        m.cols.reserve(static_cast<size_t>(s));
        for (int i : ri) m.rows.push_back(a + i);
        for (int i : ci) m.cols.push_back(1 + i);
        if (for_y) {
          for (int row : m.rows) {
            for (int col : m.cols) {
              if (dom.contains(row, col)) m.zero_cells.push_back({row, col});
            }
          }
        }
        visit(m);
      } while (next_combination(ci, b));
    } while (next_combination(ri, row_span));
  }
}

std::vector<MinorDescriptor> minor_generators(const Permutation& w, bool for_y,
                                              uint64_t cap) {
  std::vector<MinorDescriptor> out;
  for_each_minor(w, for_y, cap,
                 [&out](const MinorDescriptor& m) { out.push_back(m); });
  return out;
}

std::string to_string(const MinorDescriptor& m) {
  std::ostringstream out;
  if (m.size() == 1 && m.zero_cells.empty()) {
    out << "z(" << m.rows[0] << "," << m.cols[0] << ")";
    return out.str();
  }
  out << "det z[{";
  for (size_t i = 0; i < m.rows.size(); ++i) {
    if (i) out << ",";
    out << m.rows[i];
  }
  out << "},{";
  for (size_t i = 0; i < m.cols.size(); ++i) {
    if (i) out << ",";
    out << m.cols[i];
  }
  out << "}]";
  for (size_t i = 0; i < m.zero_cells.size(); ++i) {
    out << (i == 0 ? " with " : ", ");
    out << "z(" << m.zero_cells[i].row << "," << m.zero_cells[i].col << ")=0";
  }
  return out.str();
}

}  // namespace msv
