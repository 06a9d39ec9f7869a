#pragma once

#include <string>

#include "msv/permutation.hpp"

namespace msv {

// Every quantity the pipeline produces for one permutation. The complexity
// is computed two ways and the report is rejected if they disagree:
//   d = |L'| - dim σ  and  d = |L| + |dom| - |D°| - |V(G)| + |comp(G)|.
struct ComplexityReport {
  Permutation w;
  int n = 0;
  int card_opposite_rothe = 0;
  int card_dominant = 0;
  int card_southwest = 0;
  int card_l = 0;
  int card_l_prime = 0;
  int vertex_count = 0;
  int component_count = 0;
  int cone_dim = 0;
  int dim_msv = 0;
  int dim_y = 0;
  int length = 0;
  int complexity = 0;

  friend bool operator==(const ComplexityReport&, const ComplexityReport&) =
      default;
};

// Runs the full pipeline. cone_dim uses the |V| - |comp| formula; with
// check_rank the exact integer-rank oracle is run as well and a mismatch
// raises verification_error.
ComplexityReport analyze(const Permutation& w, bool check_rank = false);

// n² - |D°(w)|.
int dim_msv(const Permutation& w);

// |L'(w)|.
int dim_y(const Permutation& w);

std::string report_csv_header();
std::string report_csv_row(const ComplexityReport& r);

}  // namespace msv
