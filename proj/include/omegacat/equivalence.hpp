#pragma once

#include <memory>

#include "omegacat/cells.hpp"

namespace omegacat {

struct FunctorData;

// Recursive tree of arrows exhibiting x ~ y. A null sub-branch is a leaf and
// marks a level where the required composite equals the identity cell on the
// nose. forward lies in L(x,y), backward in L(y,x), one degree above the pair.
struct EquivalenceWitness {
  VirtualCell forward;
  VirtualCell backward;
  std::shared_ptr<EquivalenceWitness> left_sub;   // backward o_1 forward ~ e(x)
  std::shared_ptr<EquivalenceWitness> right_sub;  // forward o_1 backward ~ e(y)

  int depth() const;
};

struct EquivDegree {
  int value = 0;
  friend bool operator==(const EquivDegree&, const EquivDegree&) = default;
};

// Memoized decision state for one presentation. Reusable across queries;
// all entries are pure facts about the presentation.
class EquivalenceCache {
 public:
  explicit EquivalenceCache(const CategoryPresentation& P) : P_(&P) {}

  const CategoryPresentation& presentation() const { return *P_; }

  // The coinductive relation, grounded at the truncation level where all
  // higher cells are virtual identities and ~ collapses to equality.
  bool equivalent(VirtualCell x, VirtualCell y);

  // Minimal-depth witness; ties broken lexicographically by arrow ids.
  std::optional<EquivalenceWitness> witness(VirtualCell x, VirtualCell y);

  // Least degree over all witnesses (0 iff an all-identity witness exists).
  std::optional<int> min_degree(VirtualCell x, VirtualCell y);

 private:
  struct PairInfo {
    bool equivalent = false;
    int min_depth = -1;
    int min_degree = -1;
  };
  const PairInfo& solve(const VirtualCell& x, const VirtualCell& y);
  std::vector<std::pair<VirtualCell, VirtualCell>> candidate_pairs(const VirtualCell& x,
                                                                   const VirtualCell& y);

  const CategoryPresentation* P_;
  std::map<std::pair<VirtualCell, VirtualCell>, PairInfo> memo_;
};

// --- spec operations ---------------------------------------------------

std::optional<EquivalenceWitness> decide_equiv(const CategoryPresentation& P, const CellId& x,
                                               const CellId& y);

std::optional<EquivDegree> equiv_degree(const CategoryPresentation& P, const CellId& x,
                                        const CellId& y);

EquivDegree category_degree(const CategoryPresentation& P);

struct ArrowClass {
  bool monic = false;
  bool epic = false;
  bool equivalence = false;
};
ArrowClass classify_arrow(const CategoryPresentation& P, const CellId& f);
ArrowClass classify_arrow(EquivalenceCache& cache, const VirtualCell& f);

// The subcategory L_{k~}: everything up to degree k, only equivalences above.
CategoryPresentation eq_subcategory(const CategoryPresentation& P, int k);

// Level-n partition of cells by ~, classes sorted by least member.
std::vector<std::vector<CellId>> equivalence_classes(const CategoryPresentation& P, int n);

// approximation(P, n) with the partition computed here.
CategoryPresentation approximation(const CategoryPresentation& P, int n);

bool check_mn_invariant(const FunctorData& F, int m, int n);

// --- witness plumbing ----------------------------------------------------

// Checks the witness tree against Def 1.2: boundary shape at every node,
// leaf composites equal to identities, recursive validity of sub-branches.
bool validate_witness(const CategoryPresentation& P, const EquivalenceWitness& w,
                      const VirtualCell& x, const VirtualCell& y);

// The Lemma 1.1 transitivity composite: forward arrows compose, sub-branches
// are re-derived. Throws if the inputs do not share the middle cell.
EquivalenceWitness compose_witnesses(const CategoryPresentation& P, const VirtualCell& x,
                                     const VirtualCell& y, const VirtualCell& z,
                                     const EquivalenceWitness& w_xy,
                                     const EquivalenceWitness& w_yz);

}  // namespace omegacat
