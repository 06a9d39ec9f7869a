#include <set>

#include "doctest.h"
#include "msv/diagrams.hpp"
#include "msv/errors.hpp"
#include "msv/ideal.hpp"
#include "msv/random.hpp"
#include "msv/serialize.hpp"
#include "test_helpers.hpp"

using namespace msv;

TEST_CASE("rank conditions of the worked permutations") {
  const auto rc = rank_conditions(Permutation::parse("3412"));
  REQUIRE(rc.size() == 2);
  CHECK(rc[0] == RankCondition{{2, 3}, 2});
  CHECK(rc[1] == RankCondition{{4, 1}, 0});

  const auto rc5 = rank_conditions(Permutation::parse("34512"));
  REQUIRE(rc5.size() == 3);
  CHECK(rc5[0] == RankCondition{{2, 4}, 3});
  CHECK(rc5[1] == RankCondition{{4, 1}, 0});
  CHECK(rc5[2] == RankCondition{{5, 2}, 0});

  CHECK(rank_conditions(Permutation::longest_element(6)).empty());
}

TEST_CASE("minor generators for the matrix Schubert variety of 3412") {
  const auto minors = minor_generators(Permutation::parse("3412"), false);
  REQUIRE(minors.size() == 2);
  // sorted conditions put the size-3 minor of (2, 3) first
  CHECK(minors[0].rows == std::vector<int>{2, 3, 4});
  CHECK(minors[0].cols == std::vector<int>{1, 2, 3});
  CHECK(minors[0].zero_cells.empty());
  CHECK(minors[1].rows == std::vector<int>{4});
  CHECK(minors[1].cols == std::vector<int>{1});
  CHECK(to_string(minors[1]) == "z(4,1)");
}

TEST_CASE("minor generators for Y_3412 drop the dominant entry") {
  const auto minors = minor_generators(Permutation::parse("3412"), true);
  REQUIRE(minors.size() == 1);
  CHECK(minors[0].rows == std::vector<int>{2, 3, 4});
  CHECK(minors[0].cols == std::vector<int>{1, 2, 3});
  CHECK(minors[0].zero_cells == std::vector<Cell>{{4, 1}});
  CHECK(to_string(minors[0]) == "det z[{2,3,4},{1,2,3}] with z(4,1)=0");
}

TEST_CASE("no conditions, no minors") {
  CHECK(minor_generators(Permutation::longest_element(5), false).empty());
  CHECK(minor_generators(Permutation::longest_element(5), true).empty());
}

TEST_CASE("descriptor counts match the binomial formula") {
  SplitMix64 gen(321);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(gen.below(5));
    const Permutation w = random_permutation(n, gen);
    auto binom = [](int nn, int kk) {
      uint64_t v = 1;
      for (int i = 1; i <= kk; ++i) {
        v = v * static_cast<uint64_t>(nn - kk + i) / static_cast<uint64_t>(i);
      }
      return v;
    };
    for (const bool for_y : {false, true}) {
      uint64_t expected = 0;
      for (const RankCondition& rc : rank_conditions(w)) {
        if (for_y && rc.bound == 0) continue;
        expected += binom(n - rc.cell.row + 1, rc.bound + 1) *
                    binom(rc.cell.col, rc.bound + 1);
      }
      CHECK(minor_count(w, for_y) == expected);
      CHECK(minor_generators(w, for_y).size() == expected);
    }
  }
}

TEST_CASE("a bound-zero condition yields one descriptor per entry") {
  // ess(identity) consists of bound-zero cells (i, i-1)
  const Permutation id = Permutation::identity(4);
  const auto minors = minor_generators(id, false);
  uint64_t expected = 0;
  for (const RankCondition& rc : rank_conditions(id)) {
    CHECK(rc.bound == 0);
    expected += static_cast<uint64_t>(4 - rc.cell.row + 1) *
                static_cast<uint64_t>(rc.cell.col);
  }
  CHECK(minors.size() == expected);
  for (const MinorDescriptor& m : minors) CHECK(m.size() == 1);
  // ... and the Y form has nothing left
  CHECK(minor_generators(id, true).empty());
}

TEST_CASE("Y-form descriptors stay inside the southwest diagram") {
  SplitMix64 gen(55);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + static_cast<int>(gen.below(4));
    const Permutation w = random_permutation(n, gen);
    const CellSet sw = southwest_closure(w);
    const CellSet dom = dominant_piece(w);
    for (const MinorDescriptor& m : minor_generators(w, true)) {
      for (int r : m.rows) {
        for (int c : m.cols) {
          CHECK(sw.contains(r, c));
        }
      }
      for (Cell z : m.zero_cells) CHECK(dom.contains(z));
    }
  }
}

TEST_CASE("the cap refuses with the count in the message") {
  CHECK_THROWS_AS(minor_generators(Permutation::parse("3412"), false, 1),
                  limit_error);
  try {
    minor_generators(Permutation::parse("3412"), false, 1);
  } catch (const limit_error& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
  // a large grassmannian-type permutation overflows small caps quickly
  std::vector<int> word;
  for (int v = 9; v <= 16; ++v) word.push_back(v);
  for (int v = 1; v <= 8; ++v) word.push_back(v);
  const Permutation big = Permutation::from_one_line(word);
  const uint64_t count = minor_count(big, false);
  CHECK(count > 1000);
  CHECK_THROWS_AS(minor_generators(big, false, 1000), limit_error);
  CHECK(minor_generators(big, false, count).size() == count);
}

TEST_CASE("descriptor JSON") {
  const auto minors = minor_generators(Permutation::parse("3412"), true);
  const nlohmann::json j = to_json(minors[0]);
  CHECK(j.at("rows") == nlohmann::json({2, 3, 4}));
  CHECK(j.at("size") == 3);
  CHECK(j.at("zero_cells") == nlohmann::json::array({{4, 1}}));
}
