#pragma once

#include <memory>

#include "omegacat/cells.hpp"
#include "omegacat/equivalence.hpp"

namespace omegacat {

// A cell-level map between presentations. Degree-preserving; values may be
// virtual e-iterates when the target is truncated lower than the source.
struct FunctorData {
  std::string name;
  std::shared_ptr<const CategoryPresentation> source;
  std::shared_ptr<const CategoryPresentation> target;
  std::map<CellId, VirtualCell> map;  // total on stored source cells

  // Canonical extension over virtual cells: F(e^j x) = e^j F(x).
  VirtualCell apply(const VirtualCell& v) const;

  // Same source/target and the same cell map.
  bool same_mapping(const FunctorData& other) const;
};

FunctorData identity_functor(std::shared_ptr<const CategoryPresentation> P);
// g_after_f: source of g must be the target of f.
FunctorData compose_functors(const FunctorData& g, const FunctorData& f);

// Grading and d/c strictly; e and every o_k strictly (strict mode) or up to
// ~ decided in the target (weak mode).
ValidationReport check_functor(const FunctorData& F, bool strict);

// Lemma 1.3 hom-set criterion, checked globally: every source pair x ~ y
// lands on a target pair F(x) ~ F(y).
bool check_preserves_equiv(const FunctorData& F);

struct EquivalencePairResult {
  bool established = false;
  ValidationReport details;
  bool faithful = false;    // Prop 3.1 necessary conditions for F
  bool full = false;
  bool surjective_on_objects = false;
};

// Verifies G(F(a)) ~ a and F(G(b)) ~ b on objects together with first-order
// naturality of the chosen degree-1 witnesses.
EquivalencePairResult check_equivalence_pair(const FunctorData& F, const FunctorData& G);

// G(F(x)) ~ x and F(G(y)) ~ y on every cell; a passing pair must consist of
// mutually inverse bijections (Prop 3.2), which is re-asserted.
bool check_quasiisomorphism(const FunctorData& F, const FunctorData& G);

// All weak functors S -> T, by backtracking over boundary-compatible cell
// assignments and filtering through check_functor. The guard bounds the
// number of assignments visited.
std::vector<FunctorData> enumerate_functors(std::shared_ptr<const CategoryPresentation> S,
                                            std::shared_ptr<const CategoryPresentation> T,
                                            std::size_t guard);

}  // namespace omegacat
