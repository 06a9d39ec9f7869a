#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "msv/cells.hpp"
#include "msv/permutation.hpp"

namespace msv {

// One rank condition rk_M(a, b) <= bound attached to an essential cell.
struct RankCondition {
  Cell cell;
  int bound = 0;
  friend constexpr auto operator<=>(const RankCondition&,
                                    const RankCondition&) = default;
};

// Symbolic descriptor of one (bound+1)-minor imposed by a rank condition.
// Determinants are never expanded. zero_cells are the positions inside the
// minor forced to 0 in the Y_w form (entries of dom(w)).
struct MinorDescriptor {
  std::vector<int> rows;  // sorted, ⊆ {a..n}
  std::vector<int> cols;  // sorted, ⊆ {1..b}
  std::vector<Cell> zero_cells;

  int size() const { return static_cast<int>(rows.size()); }
  friend bool operator==(const MinorDescriptor&, const MinorDescriptor&) =
      default;
};

inline constexpr uint64_t kDefaultMinorCap = 1'000'000;

// One condition per essential cell, sorted by cell.
std::vector<RankCondition> rank_conditions(const Permutation& w);

// Number of descriptors minor_generators would emit, saturated at
// UINT64_MAX: sum of C(n-a+1, r+1) * C(b, r+1) over the emitted conditions.
uint64_t minor_count(const Permutation& w, bool for_y = false);

// All (r+1) x (r+1) minors of rows {a..n} x cols {1..b} per essential cell
// (a, b) with bound r. With for_y, conditions of bound 0 are dropped (their
// generators are single entries of dom(w), identically zero on Y_w) and
// zero_cells marks dom(w) positions. Throws limit_error reporting the count
// when it would exceed cap.
std::vector<MinorDescriptor> minor_generators(
    const Permutation& w, bool for_y = false, uint64_t cap = kDefaultMinorCap);

// Streaming form of minor_generators.
void for_each_minor(const Permutation& w, bool for_y, uint64_t cap,
                    const std::function<void(const MinorDescriptor&)>& visit);

// "z(4,1)" for single entries, otherwise
// "det z[{2,3,4},{1,2,3}] with z(4,1)=0".
std::string to_string(const MinorDescriptor& m);

}  // namespace msv
