#pragma once

#include "omegacat/cells.hpp"

namespace omegacat {

// Checks the precategory axioms on stored data: globularity d(dx)=d(cx),
// c(cx)=c(dx); de = ce = 1; totality of the composition tables on composable
// pairs; and the boundary of every table entry.
ValidationReport validate_globular(const CategoryPresentation& P);

// Checks strictness as cell equalities: associativity of every o_k, the unit
// laws e^k c^k f o_k f = f and f o_k e^k d^k f = f, the interchange law over
// all admissible quadruples, and strict preservation of e by horizontal
// composites, i.e. e f o_{k+1} e g = e (f o_k g).
ValidationReport validate_strict(const CategoryPresentation& P);

// Table lookup, reducing virtual e-iterates via e^k(f o_n g) = e^k f o_{n+k} e^k g.
// Throws domain_error when the arguments are not k-composable.
VirtualCell compose(const CategoryPresentation& P, int k, const VirtualCell& f,
                    const VirtualCell& g);

// Horizontal composite g * f of arrows g in L(b,c), f in L(a,b) over objects,
// padding the lower-degree argument with identities.
VirtualCell horizontal(const CategoryPresentation& P, const VirtualCell& g,
                       const VirtualCell& f);

// The hom-presentation L(x,y): cells of degree deg(x)+1+r become degree-r
// cells, compositions and identities restricted, truncation reduced. Empty
// when x, y are non-parallel higher cells.
CategoryPresentation hom_category(const CategoryPresentation& P, const CellId& x,
                                  const CellId& y);

// Same cells with d/c swapped on degree-1 cells and the deepest composition
// argument-swapped. An involution.
CategoryPresentation opposite(const CategoryPresentation& P);

// The 1-category of degree-n arrows: objects L^0, arrows L^n with d^n, c^n,
// composition o_n.
CategoryPresentation level_category(const CategoryPresentation& P, int n);

// Attaches two fresh objects and shifts P one degree up as their hom-set,
// so hom_category(result, alpha, beta) returns P's cells unchanged.
struct AmbientExtension {
  CategoryPresentation category;
  CellId alpha;
  CellId beta;
};
AmbientExtension ambient_extend(const CategoryPresentation& P);

// Cells of L(b, a) at hom-relative degree r, including the virtual identity
// iterates above the truncation level.
std::vector<VirtualCell> virtual_hom_cells(const CategoryPresentation& P, const CellId& b,
                                           const CellId& a, int r);

// The n-th approximation L^(n): degree-n cells replaced by the given
// equivalence classes, higher cells become identities. The caller supplies
// the level-n partition (module equivalence computes it). Throws domain_error
// with the offending pair when the induced composition is ill-defined.
CategoryPresentation approximation(const CategoryPresentation& P, int n,
                                   const std::vector<std::vector<CellId>>& level_classes);

}  // namespace omegacat
