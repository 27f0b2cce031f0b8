#pragma once

#include "omegacat/functor.hpp"

namespace omegacat {

// --- graphs and diagrams ---------------------------------------------------

struct GraphNode {
  CellId id;
  int degree = 0;
  std::optional<CellId> dom;
  std::optional<CellId> cod;

  friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

struct GraphPresentation {
  std::string name;
  std::map<CellId, GraphNode> nodes;

  void check_wellformed() const;  // degree arithmetic and d^2 = dc, c^2 = cd
  const GraphNode& node(const CellId& id) const;
  std::vector<CellId> nodes_of_degree(int d) const;
  // Iterated boundary down to degree 0.
  CellId object_dom(const CellId& id) const;
  CellId object_cod(const CellId& id) const;
};

// Degree-1 node boundaries flipped, for running colimits through opposites.
GraphPresentation opposite_graph(const GraphPresentation& G);

struct DiagramData {
  std::string name;
  GraphPresentation graph;
  std::shared_ptr<const CategoryPresentation> target;
  std::map<CellId, VirtualCell> assignment;

  ValidationReport validate() const;  // total, degree- and d/c-preserving
};

DiagramData constant_diagram(std::shared_ptr<const CategoryPresentation> P, const CellId& a,
                             const GraphPresentation& G);

// --- presheaves ------------------------------------------------------------

// Finite stand-in for a contravariant CAT-valued functor on the base: a value
// presentation per object, a full functor per 1-cell, and object-level maps
// for higher cells.
struct PresheafData {
  std::string name;
  std::shared_ptr<const CategoryPresentation> base;
  std::map<CellId, std::shared_ptr<const CategoryPresentation>> values;
  std::map<CellId, FunctorData> action0;                         // degree-1 cells
  std::map<CellId, std::map<CellId, VirtualCell>> actionN;       // degree >= 2 cells

  const CategoryPresentation& value(const CellId& obj) const;
  // Action of a (possibly virtual) cell of degree >= 1 on an object of
  // values(object_cod), landing in values(object_dom).
  VirtualCell act(const VirtualCell& f, const CellId& x) const;
  // Full functor action of a degree-1 cell.
  const FunctorData& functor_of(const CellId& one_cell) const;
};

// The contravariant hom-functor L(-, a) with precomposition actions.
PresheafData hom_presheaf(std::shared_ptr<const CategoryPresentation> P, const CellId& a);

// The covariant hom-functor L(a, -), presented over the opposite base with
// postcomposition actions.
PresheafData covariant_hom_functor(std::shared_ptr<const CategoryPresentation> P,
                                   const CellId& a);

// Constant presheaf: every object gets the same value, actions are identities.
PresheafData constant_presheaf(std::shared_ptr<const CategoryPresentation> base,
                               std::shared_ptr<const CategoryPresentation> value);

// Functoriality up to componentwise ~ on 1-cells plus the boundary
// conditions tying actionN to the actions of d f and c f.
ValidationReport validate_presheaf(const PresheafData& F);

// --- Yoneda ----------------------------------------------------------------

// A transformation L(-, a) -> F at level n: per object b a map from cells of
// L(b, a) to cells of F(b). For n >= 1 only hom-objects are mapped.
struct TransformationData {
  int level = 0;
  CellId rep_object;
  std::map<CellId, std::map<CellId, VirtualCell>> components;  // b -> (hom-cell -> value cell)
};

// The Lemma 3.2/3.3 naturality squares, as equalities (the strict form).
ValidationReport check_transformation(const PresheafData& F, const TransformationData& tau);

// tau with components tau_b(f) = F(f)(beta).
TransformationData yoneda_backward(const PresheafData& F, const CellId& a,
                                   const VirtualCell& beta);

// tau |-> (a, tau_a(e a)). Throws domain_error("naturality-violated: ...")
// when tau fails check_transformation.
std::pair<CellId, VirtualCell> yoneda_forward(const PresheafData& F,
                                              const TransformationData& tau);

// --- representability ------------------------------------------------------

struct RepresentabilityWitness {
  CellId rep_object;
  VirtualCell universal_element;
};

struct RepresentabilityResult {
  bool representable = false;
  std::vector<RepresentabilityWitness> witnesses;  // all found (strict mode)
  long candidates_checked = 0;
};

// Strict mode: search every (a, beta) and demand a unique f with
// gamma = F(f)(beta) for every cell gamma of every value.
RepresentabilityResult check_representable_strict(const PresheafData& F);

// Weak mode: witness-check only. Per object b the caller supplies a
// quasi-inverse cell map F(b) -> L(b, a); the induced functor pair is run
// through check_equivalence_pair.
struct WeakRepresentabilityWitness {
  CellId rep_object;
  VirtualCell universal_element;
  std::map<CellId, std::map<CellId, VirtualCell>> inverses;  // b -> (F(b) cell -> hom cell)
};
bool check_representable_weak(const PresheafData& F, const WeakRepresentabilityWitness& w);

// --- cones and limits ------------------------------------------------------

// A cone at the given level: legs on degree-0 nodes, one cell of
// L(vertex, D(v)) of hom-degree `level` each; higher structure is identities.
struct ConeData {
  CellId vertex;
  int level = 0;
  std::map<CellId, VirtualCell> legs;
};

// The triangle conditions against every higher node, as equalities (strict)
// or up to ~ (weak).
bool cone_condition(const DiagramData& D, const ConeData& cone, bool strict);

// All strict cones with the given vertex and level.
std::vector<ConeData> enumerate_cones(const DiagramData& D, const CellId& vertex, int level,
                                      std::size_t guard);

// Precomposition of a level-0 cone with f : z -> vertex (hom-degree n).
ConeData cone_act(const DiagramData& D, const ConeData& cone, const VirtualCell& f);

struct LimitCertificate {
  ConeData cone;
  long cones_checked = 0;      // over all vertices and levels
  long mediators_verified = 0; // unique mediating cells found
};

// Exhaustive search for a strictly universal cone; colimits run the search
// in the opposite category over the opposite graph.
std::optional<LimitCertificate> find_strict_limit(const DiagramData& D);
std::optional<LimitCertificate> find_strict_colimit(const DiagramData& D);

// The category of weak cones at z: objects are ~-cones, higher cells are
// componentwise modifications between them. Ids are leg digests.
struct ConeCategory {
  CategoryPresentation category;
  std::map<CellId, ConeData> cones;  // presentation id -> level-0 cone data
  CellId id_of(const ConeData& cone) const;
};
ConeCategory cones_category(const DiagramData& D, const CellId& z, std::size_t guard);

// Witness for check_weak_limit: per object z, the quasi-inverse leg-keyed
// assignment Cones(z) -> L(z, vertex).
struct WeakLimitWitness {
  std::map<CellId, std::map<CellId, VirtualCell>> inverse;  // z -> (cone id -> hom cell)
};
bool check_weak_limit(const DiagramData& D, const ConeData& cone, const WeakLimitWitness& w);

}  // namespace omegacat
