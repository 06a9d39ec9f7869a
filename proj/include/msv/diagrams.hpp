#pragma once

#include <vector>

#include "msv/cells.hpp"
#include "msv/permutation.hpp"

namespace msv {

// All diagrams the complexity pipeline reads off a permutation, computed in
// one pass. Invariants: dominant ⊆ opposite_rothe ⊆ southwest,
// l_diagram = southwest \ dominant, l_prime = southwest \ opposite_rothe.
struct DiagramBundle {
  Permutation w;
  CellSet opposite_rothe;
  CellSet essential;
  CellSet dominant;
  CellSet southwest;
  CellSet l_diagram;
  CellSet l_prime;
};

// Opposite Rothe diagram D°(w) = {(i, j) : w(j) < i, w^{-1}(i) > j}; the
// boxes missed by the north- and east-firing lasers of the dots.
CellSet opposite_rothe(const Permutation& w);

// Maximal edge-connected components (cells sharing a side), ordered by
// southwest-most cell: larger row first, then smaller column.
std::vector<CellSet> connected_components(const CellSet& cells);

// North-east corners of D°(w): cells (i, j) in D° with (i-1, j) and
// (i, j+1) both outside D°.
CellSet essential_set(const Permutation& w);

// Connected component of (n, 1) in D°(w), empty if (n, 1) is not in D°.
// Coincides with the cells of submatrix rank 0.
CellSet dominant_piece(const Permutation& w);

// Cells weakly southwest of some essential cell.
CellSet southwest_closure(const Permutation& w);

CellSet l_diagram(const Permutation& w);        // sw(w) \ dom(w)
CellSet l_prime_diagram(const Permutation& w);  // sw(w) \ D°(w)

DiagramBundle bundle(const Permutation& w);

// True iff the set, translated to its bounding box with a south-west origin,
// is a left-justified diagram with weakly decreasing row lengths from bottom
// to top. Empty sets qualify; disconnected sets never do.
bool is_french_young(const CellSet& cells);

// Pieces of the pipeline operating on an already computed diagram.
CellSet essential_from(const CellSet& opposite_rothe);
CellSet dominant_from(const CellSet& opposite_rothe);
CellSet southwest_from(const CellSet& essential);

}  // namespace msv
