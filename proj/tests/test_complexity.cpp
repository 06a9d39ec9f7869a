#include <sstream>

#include "doctest.h"
#include "msv/complexity.hpp"
#include "msv/diagrams.hpp"
#include "msv/graph_cone.hpp"
#include "msv/random.hpp"
#include "msv/serialize.hpp"
#include "test_helpers.hpp"

using namespace msv;
using msv::testing::for_all_permutations;

TEST_CASE("worked example 3412") {
  const ComplexityReport r = analyze(Permutation::parse("3412"));
  CHECK(r.n == 4);
  CHECK(r.card_opposite_rothe == 2);
  CHECK(r.card_dominant == 1);
  CHECK(r.card_southwest == 9);
  CHECK(r.card_l == 8);
  CHECK(r.card_l_prime == 7);
  CHECK(r.vertex_count == 6);
  CHECK(r.component_count == 1);
  CHECK(r.cone_dim == 5);
  CHECK(r.dim_msv == 14);
  CHECK(r.dim_y == 7);
  CHECK(r.length == 4);
  CHECK(r.complexity == 2);
}

TEST_CASE("worked example 54132") {
  const ComplexityReport r = analyze(Permutation::parse("54132"));
  CHECK(r.card_l == 12);
  CHECK(r.card_dominant == 0);
  CHECK(r.card_opposite_rothe == 2);
  CHECK(r.vertex_count == 7);
  CHECK(r.component_count == 1);
  CHECK(r.complexity == 12 + 0 - 2 - 7 + 1);
  CHECK(r.complexity == 4);
}

TEST_CASE("degenerate permutations have complexity zero") {
  for (int n = 1; n <= 6; ++n) {
    const ComplexityReport id = analyze(Permutation::identity(n));
    CHECK(id.complexity == 0);
    CHECK(id.dim_y == 0);
    const ComplexityReport w0 = analyze(Permutation::longest_element(n));
    CHECK(w0.complexity == 0);
  }
}

TEST_CASE("dimension of the matrix Schubert variety") {
  CHECK(dim_msv(Permutation::parse("3412")) == 14);
  for (int n : {3, 5, 7}) {
    CHECK(dim_msv(Permutation::longest_element(n)) == n * n);
  }
  CHECK(dim_msv(Permutation::parse("34512")) == 25 - 4);
}

TEST_CASE("dimension of Y_w") {
  CHECK(dim_y(Permutation::parse("3412")) == 7);
  CHECK(dim_y(Permutation::identity(5)) == 0);
  CHECK(dim_y(Permutation::parse("54312")) == 15);
}

TEST_CASE("rank cross-check on analyze") {
  SplitMix64 gen(99);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + static_cast<int>(gen.below(8));
    const Permutation w = random_permutation(n, gen);
    const ComplexityReport r = analyze(w, /*check_rank=*/true);
    CHECK(r.complexity == r.card_l_prime - r.cone_dim);
  }
}

TEST_CASE("exhaustive bounds up to n = 6") {
  for (int n = 1; n <= 6; ++n) {
    for_all_permutations(n, [n](const Permutation& w) {
      const ComplexityReport r = analyze(w);
      CHECK(r.complexity >= 0);
      if (n >= 4) CHECK(r.complexity <= (n - 1) * (n - 3));
      CHECK(r.dim_y <= r.dim_msv);
      CHECK(r.dim_msv == n * n - (n * (n - 1) / 2 - r.length));
      CHECK(r.dim_y == r.card_l_prime);
      CHECK(r.dim_msv == n * n - r.card_opposite_rothe);
    });
  }
}

TEST_CASE("sampled checks at larger n") {
  SplitMix64 gen(123);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 8 + static_cast<int>(gen.below(4));  // 8..11
    const Permutation w = random_permutation(n, gen);
    const ComplexityReport r = analyze(w, /*check_rank=*/true);
    CHECK(r.complexity >= 0);
    CHECK(r.complexity <= (n - 1) * (n - 3));
    CHECK(r.dim_msv == n * n - (n * (n - 1) / 2 - r.length));
  }
}

TEST_CASE("CSV row form") {
  const ComplexityReport r = analyze(Permutation::parse("3412"));
  const std::string header = report_csv_header();
  const std::string row = report_csv_row(r);
  CHECK(std::count(header.begin(), header.end(), ',') ==
        std::count(row.begin(), row.end(), ','));
  CHECK(row == "\"3412\",4,2,1,9,8,7,6,1,5,14,7,4,2");
}

TEST_CASE("report JSON round-trips") {
  const ComplexityReport r = analyze(Permutation::parse("54132"));
  const ComplexityReport back = report_from_json(to_json(r));
  CHECK(back == r);
  CHECK(to_json(back) == to_json(r));
}

TEST_CASE("diagram JSON is a sorted array of pairs") {
  const CellSet opp = opposite_rothe(Permutation::parse("34512"));
  const nlohmann::json j = to_json(opp);
  CHECK(j == nlohmann::json::array({{2, 4}, {4, 1}, {5, 1}, {5, 2}}));
  CHECK(cellset_from_json(j, 5) == opp);
  CHECK_THROWS_AS(cellset_from_json(nlohmann::json{{1, 2, 3}}, 5),
                  std::invalid_argument);
}

TEST_CASE("graph JSON has sorted rows, cols and edges") {
  const nlohmann::json j =
      to_json(graph_of(l_diagram(Permutation::parse("3412"))));
  CHECK(j.at("rows") == nlohmann::json({2, 3, 4}));
  CHECK(j.at("cols") == nlohmann::json({1, 2, 3}));
  CHECK(j.at("edges").size() == 8);
  CHECK(j.at("edges")[0] == nlohmann::json({2, 1}));
}
