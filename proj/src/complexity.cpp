#include "msv/complexity.hpp"

#include <sstream>
#include <stdexcept>

#include "msv/diagrams.hpp"
#include "msv/errors.hpp"
#include "msv/graph_cone.hpp"

namespace msv {

ComplexityReport analyze(const Permutation& w, bool check_rank) {
  const int n = w.size();
  const DiagramBundle b = bundle(w);
  const BipartiteGraph g = graph_of(b.l_diagram);
  const int comps = component_count(g);
  const int vertices = g.vertex_count();
  const int cone = vertices - comps;

  if (check_rank) {
    const int by_rank = cone_dim_by_rank(weight_generators(b.l_diagram, n));
    if (by_rank != cone) {
      throw verification_error(
          "cone dimension mismatch for " + w.to_string() + ": rank gives " +
          std::to_string(by_rank) + ", |V| - |comp| gives " +
          std::to_string(cone));
    }
  }

  ComplexityReport r{w,
                     n,
                     b.opposite_rothe.size(),
                     b.dominant.size(),
                     b.southwest.size(),
                     b.l_diagram.size(),
                     b.l_prime.size(),
                     vertices,
                     comps,
                     cone,
                     n * n - b.opposite_rothe.size(),
                     b.l_prime.size(),
                     w.coxeter_length(),
                     0};
  r.complexity = r.card_l_prime - cone;
  const int alt = r.card_l + r.card_dominant - r.card_opposite_rothe -
                  vertices + comps;
  if (r.complexity != alt || r.complexity < 0) {
    throw std::logic_error("complexity formulas disagree for " +
                           w.to_string());
  }
  return r;
}

int dim_msv(const Permutation& w) {
  const int n = w.size();
  return n * n - opposite_rothe(w).size();
}

int dim_y(const Permutation& w) { return l_prime_diagram(w).size(); }

std::string report_csv_header() {
  return "permutation,n,card_opposite_rothe,card_dominant,card_southwest,"
         "card_l,card_l_prime,vertex_count,component_count,cone_dim,dim_msv,"
         "dim_y,length,complexity";
}

std::string report_csv_row(const ComplexityReport& r) {
  std::ostringstream out;
  out << '"' << r.w.to_string() << '"' << ',' << r.n << ','
      << r.card_opposite_rothe << ',' << r.card_dominant << ','
      << r.card_southwest << ',' << r.card_l << ',' << r.card_l_prime << ','
      << r.vertex_count << ',' << r.component_count << ',' << r.cone_dim << ','
      << r.dim_msv << ',' << r.dim_y << ',' << r.length << ',' << r.complexity;
  return out.str();
}

}  // namespace msv
