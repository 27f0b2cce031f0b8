#pragma once

#include "omegacat/functor.hpp"

namespace omegacat {

// A level-n modification between two level-(n-1) modifications (level 0:
// a natural transformation between the two functors). The boundary stack
// carries the full tower; components assign to each source object a target
// cell one degree above the level.
struct ModificationData {
  std::string name;
  int level = 0;
  FunctorData functor_dom;  // d^{level+1}
  FunctorData functor_cod;  // c^{level+1}
  // stack[j] = the level-j pair (alpha^j_1, alpha^j_2), j = 0 .. level-1
  std::vector<std::pair<std::shared_ptr<const ModificationData>,
                        std::shared_ptr<const ModificationData>>>
      stack;
  std::map<CellId, VirtualCell> components;  // source object -> target cell, degree level+1

  VirtualCell at(const CellId& obj) const;
  bool same_shape(const ModificationData& other) const;  // level, functors, stack, components
};

// e(M): the identity one level up, components e(M(a)).
ModificationData identity_modification(const FunctorData& F);
ModificationData raise_modification(const ModificationData& M);

// Boundary condition componentwise plus the Def 1.8 naturality squares
// mu(e^k M(b), F(f)) ~ mu(G(f), e^k M(a)) for all cells f with level+k up to
// the source truncation; the last layer runs on virtual identities via the
// e-reduction. Squares that hold up to ~ are additionally asserted to hold
// as equalities.
ValidationReport check_modification(const ModificationData& M);

// Def 1.9 composite: componentwise for k < level+2, across categories for
// k = level+2. The boundary stack of the result is rebuilt recursively.
ModificationData compose_modifications(int k, const ModificationData& M1,
                                       const ModificationData& M2);

// Horizontal composite via the second Lemma 1.5 formula, for cross-checks.
ModificationData horizontal_modification_alt(const ModificationData& M1,
                                             const ModificationData& M2);

// Whiskers: postcompose_functor(H, M) = H M, precompose_functor(M, H) = M H.
ModificationData postcompose_functor(const FunctorData& H, const ModificationData& M);
ModificationData precompose_functor(const ModificationData& M, const FunctorData& H);

// Quasiequivalence of depth k: 0 = ~ inside the presented functor category
// (supported for small targets), 1 = componentwise ~. Depth >= 2 is not
// defined for proper modifications.
bool quasiequal_depth(const ModificationData& M1, const ModificationData& M2, int k);

// The hom-tower of the functor category between the shared boundaries of a
// level-n stack, presented as a finite category: degree-r cells are the
// level-(n+r) modifications. Used by quasiequal_depth(.., 0).
struct ModTower {
  CategoryPresentation category;
  std::map<CellId, ModificationData> cells;  // presentation id -> modification
  CellId id_of(const ModificationData& M) const;
};
ModTower modification_hom_tower(const ModificationData& sample, std::size_t guard);

std::size_t search_limit();  // OMEGACAT_SEARCH_LIMIT override, default 1e6

}  // namespace omegacat
