#include "omegacat/presheaf.hpp"

#include <algorithm>

#include "omegacat/core.hpp"

namespace omegacat {

// --- graphs and diagrams ---------------------------------------------------

void GraphPresentation::check_wellformed() const {
  for (const auto& [id, n] : nodes) {
    if (id != n.id) throw malformed_error(name + ": node key/id mismatch at '" + id + "'");
    if ((n.degree == 0) != !n.dom.has_value() || (n.degree == 0) != !n.cod.has_value())
      throw malformed_error(name + ": boundary presence/degree mismatch at '" + id + "'");
    if (n.degree > 0) {
      auto d = nodes.find(*n.dom);
      auto c = nodes.find(*n.cod);
      if (d == nodes.end() || c == nodes.end())
        throw malformed_error(name + ": dangling boundary at '" + id + "'");
      if (d->second.degree != n.degree - 1 || c->second.degree != n.degree - 1)
        throw malformed_error(name + ": boundary degree mismatch at '" + id + "'");
      if (n.degree >= 2) {
        if (*d->second.dom != *nodes.at(*n.cod).dom || *c->second.cod != *nodes.at(*n.dom).cod)
          throw malformed_error(name + ": globularity fails at '" + id + "'");
      }
    }
  }
}

const GraphNode& GraphPresentation::node(const CellId& id) const {
  auto it = nodes.find(id);
  if (it == nodes.end()) throw domain_error("unknown node '" + id + "'");
  return it->second;
}

std::vector<CellId> GraphPresentation::nodes_of_degree(int d) const {
  std::vector<CellId> out;
  for (const auto& [id, n] : nodes)
    if (n.degree == d) out.push_back(id);
  return out;
}

CellId GraphPresentation::object_dom(const CellId& id) const {
  CellId cur = id;
  while (node(cur).degree > 0) cur = *node(cur).dom;
  return cur;
}

CellId GraphPresentation::object_cod(const CellId& id) const {
  CellId cur = id;
  while (node(cur).degree > 0) cur = *node(cur).cod;
  return cur;
}

GraphPresentation opposite_graph(const GraphPresentation& G) {
  GraphPresentation O = G;
  O.name = G.name + "^op";
  for (auto& [id, n] : O.nodes)
    if (n.degree == 1) std::swap(n.dom, n.cod);
  return O;
}

ValidationReport DiagramData::validate() const {
  ValidationReport rep;
  graph.check_wellformed();
  for (const auto& [id, n] : graph.nodes) {
    rep.bump("diagram-assignment");
    auto it = assignment.find(id);
    if (it == assignment.end()) {
      rep.add("diagram-assignment", {id}, "node has no image");
      continue;
    }
    if (target->vdegree(it->second) != n.degree) {
      rep.add("diagram-assignment", {id}, "degree not preserved");
      continue;
    }
    if (n.degree > 0) {
      if (!(assignment.at(*n.dom) == target->vdom(it->second)))
        rep.add("diagram-assignment", {id}, "D(d x) != d D(x)");
      if (!(assignment.at(*n.cod) == target->vcod(it->second)))
        rep.add("diagram-assignment", {id}, "D(c x) != c D(x)");
    }
  }
  return rep;
}

DiagramData constant_diagram(std::shared_ptr<const CategoryPresentation> P, const CellId& a,
                             const GraphPresentation& G) {
  if (P->degree_of(a) != 0) throw domain_error("constant_diagram: '" + a + "' is not an object");
  DiagramData D;
  D.name = "Delta(" + a + ")";
  D.graph = G;
  D.target = P;
  for (const auto& [id, n] : G.nodes) D.assignment[id] = P->videntity({a, 0}, n.degree);
  return D;
}

// --- presheaves ------------------------------------------------------------

const CategoryPresentation& PresheafData::value(const CellId& obj) const {
  auto it = values.find(obj);
  if (it == values.end()) throw domain_error("presheaf '" + name + "': no value at '" + obj + "'");
  return *it->second;
}

const FunctorData& PresheafData::functor_of(const CellId& one_cell) const {
  auto it = action0.find(one_cell);
  if (it == action0.end())
    throw domain_error("presheaf '" + name + "': no action for 1-cell '" + one_cell + "'");
  return it->second;
}

VirtualCell PresheafData::act(const VirtualCell& f, const CellId& x) const {
  VirtualCell fn = base->normalize(f);
  const int deg = base->vdegree(fn);
  if (deg < 1) throw domain_error("presheaf act: '" + to_string(f) + "' is an object");
  if (fn.epower > 0) {
    VirtualCell inner = act({fn.cell, 0}, x);
    const CellId tgt = base->vdom({fn.cell, 0}, base->degree_of(fn.cell)).cell;
    return value(tgt).videntity(inner, fn.epower);
  }
  if (deg == 1) return functor_of(fn.cell).apply({x, 0});
  auto it = actionN.find(fn.cell);
  if (it == actionN.end())
    throw domain_error("presheaf '" + name + "': no action for cell '" + fn.cell + "'");
  auto jt = it->second.find(x);
  if (jt == it->second.end())
    throw domain_error("presheaf '" + name + "': action of '" + fn.cell +
                       "' undefined on object '" + x + "'");
  return jt->second;
}

PresheafData hom_presheaf(std::shared_ptr<const CategoryPresentation> P, const CellId& a) {
  if (P->degree_of(a) != 0) throw domain_error("hom_presheaf: '" + a + "' is not an object");
  PresheafData F;
  F.name = P->name + "(-," + a + ")";
  F.base = P;
  for (const auto& b : P->objects())
    F.values[b] = std::make_shared<const CategoryPresentation>(hom_category(*P, b, a));
  for (const auto& [id, rec] : P->cells) {
    if (rec.degree == 1) {
      FunctorData act;  // precomposition hom(cod f, a) -> hom(dom f, a)
      act.name = F.name + "(" + id + ")";
      act.source = F.values.at(*rec.cod);
      act.target = F.values.at(*rec.dom);
      for (const auto& [g, unused] : act.source->cells)
        act.map[g] = horizontal(*P, {g, 0}, {id, 0});
      F.action0[id] = std::move(act);
    } else if (rec.degree >= 2) {
      const CellId bc = P->vcod({id, 0}, rec.degree).cell;
      auto& table = F.actionN[id];
      for (const auto& x : P->hom_cells(bc, a, 0)) table[x] = horizontal(*P, {x, 0}, {id, 0});
    }
  }
  return F;
}

PresheafData covariant_hom_functor(std::shared_ptr<const CategoryPresentation> P,
                                   const CellId& a) {
  if (P->degree_of(a) != 0)
    throw domain_error("covariant_hom_functor: '" + a + "' is not an object");
  PresheafData F;
  F.name = P->name + "(" + a + ",-)";
  F.base = std::make_shared<const CategoryPresentation>(opposite(*P));
  for (const auto& b : P->objects())
    F.values[b] = std::make_shared<const CategoryPresentation>(hom_category(*P, a, b));
  for (const auto& [id, rec] : P->cells) {
    if (rec.degree == 1) {
      FunctorData act;  // postcomposition hom(a, dom f) -> hom(a, cod f)
      act.name = F.name + "(" + id + ")";
      act.source = F.values.at(*rec.dom);
      act.target = F.values.at(*rec.cod);
      for (const auto& [g, unused] : act.source->cells)
        act.map[g] = horizontal(*P, {id, 0}, {g, 0});
      F.action0[id] = std::move(act);
    } else if (rec.degree >= 2) {
      const CellId bd = P->vdom({id, 0}, rec.degree).cell;
      auto& table = F.actionN[id];
      for (const auto& x : P->hom_cells(a, bd, 0)) table[x] = horizontal(*P, {id, 0}, {x, 0});
    }
  }
  return F;
}

PresheafData constant_presheaf(std::shared_ptr<const CategoryPresentation> base,
                               std::shared_ptr<const CategoryPresentation> value) {
  PresheafData F;
  F.name = "const_" + value->name;
  F.base = base;
  for (const auto& b : base->objects()) F.values[b] = value;
  for (const auto& [id, rec] : base->cells) {
    if (rec.degree == 1) {
      F.action0[id] = identity_functor(value);
    } else if (rec.degree >= 2) {
      auto& table = F.actionN[id];
      for (const auto& x : value->objects()) table[x] = value->videntity({x, 0}, rec.degree - 1);
    }
  }
  return F;
}

ValidationReport validate_presheaf(const PresheafData& F) {
  ValidationReport rep;
  const auto& B = *F.base;

  for (const auto& b : B.objects()) {
    rep.bump("presheaf-values");
    if (!F.values.count(b)) rep.add("presheaf-values", {b}, "missing value category");
  }
  if (!rep.ok()) return rep;

  for (const auto& [id, rec] : B.cells) {
    if (rec.degree != 1) continue;
    rep.bump("presheaf-action0");
    auto it = F.action0.find(id);
    if (it == F.action0.end()) {
      rep.add("presheaf-action0", {id}, "missing action");
      continue;
    }
    if (it->second.source.get() != F.values.at(*rec.cod).get() ||
        it->second.target.get() != F.values.at(*rec.dom).get()) {
      rep.add("presheaf-action0", {id}, "action endpoints do not match the values");
      continue;
    }
    auto fr = check_functor(it->second, false);
    if (!fr.ok())
      rep.add("presheaf-action0", {id}, "action is not a functor: " + fr.violations.front().law);
  }
  if (!rep.ok()) return rep;

  // F(e a) componentwise ~ identity.
  for (const auto& [z, ez] : B.identity_map) {
    if (B.degree_of(z) != 0) continue;
    EquivalenceCache vcache(F.value(z));
    for (const auto& [x, unused] : F.value(z).cells) {
      rep.bump("presheaf-unit");
      if (!vcache.equivalent(F.functor_of(ez).apply({x, 0}), {x, 0}))
        rep.add("presheaf-unit", {z, x}, "F(e a) not equivalent to the identity at '" + x + "'");
    }
  }
  // Contravariant functoriality on 1-cells, componentwise ~.
  for (const auto& [key, res] : B.composition) {
    if (key.k != 1 || B.degree_of(key.left) != 1) continue;
    EquivalenceCache vcache(F.value(*B.record(key.left).cod));
    for (const auto& [x, unused] : F.value(*B.record(key.left).cod).cells) {
      rep.bump("presheaf-composition");
      auto lhs = F.functor_of(res).apply({x, 0});
      auto rhs = F.functor_of(key.right).apply(F.functor_of(key.left).apply({x, 0}));
      if (!vcache.presentation().cells.empty()) {
        EquivalenceCache tcache(F.value(*B.record(key.right).dom));
        if (!tcache.equivalent(lhs, rhs))
          rep.add("presheaf-composition", {key.left, key.right, x},
                  "F(f o g) not equivalent to F(g) F(f)");
      }
    }
  }
  // actionN: totality, grading, boundary conditions.
  for (const auto& [id, rec] : B.cells) {
    if (rec.degree < 2) continue;
    rep.bump("presheaf-actionN");
    const CellId bd = B.vdom({id, 0}, rec.degree).cell;
    const CellId bc = B.vcod({id, 0}, rec.degree).cell;
    const auto& V = F.value(bd);
    for (const auto& x : F.value(bc).objects()) {
      VirtualCell y{};
      try {
        y = F.act({id, 0}, x);
      } catch (const domain_error&) {
        rep.add("presheaf-actionN", {id, x}, "missing higher action value");
        continue;
      }
      if (V.vdegree(y) != rec.degree - 1) {
        rep.add("presheaf-actionN", {id, x}, "higher action value has wrong degree");
        continue;
      }
      if (!(V.vdom(y) == F.act({*rec.dom, 0}, x)))
        rep.add("presheaf-actionN", {id, x}, "d of action value is not the action of d f");
      if (!(V.vcod(y) == F.act({*rec.cod, 0}, x)))
        rep.add("presheaf-actionN", {id, x}, "c of action value is not the action of c f");
    }
  }
  return rep;
}

// --- Yoneda ----------------------------------------------------------------

namespace {

// The identity 1-cell of an object; Yoneda needs at least truncation 1.
CellId unit_cell(const CategoryPresentation& B, const CellId& a) {
  auto it = B.identity_map.find(a);
  if (it == B.identity_map.end())
    throw domain_error("yoneda: base is truncated below the identity of '" + a + "'");
  return it->second;
}

}  // namespace

ValidationReport check_transformation(const PresheafData& F, const TransformationData& tau) {
  ValidationReport rep;
  const auto& B = *F.base;
  const CellId a = tau.rep_object;
  const int n = tau.level;

  for (const auto& b : B.objects()) {
    const auto& V = F.value(b);
    auto it = tau.components.find(b);
    const auto& comp = it == tau.components.end()
                           ? std::map<CellId, VirtualCell>{}
                           : it->second;
    const int max_rel = n == 0 ? B.truncation - 1 : 0;
    for (int r = 0; r <= max_rel; ++r) {
      for (const auto& f : B.hom_cells(b, a, r)) {
        rep.bump("transformation-grading");
        auto jt = comp.find(f);
        if (jt == comp.end()) {
          rep.add("transformation-grading", {b, f}, "missing component value");
          continue;
        }
        const int want = n == 0 ? r : n;
        if (V.vdegree(jt->second) != want)
          rep.add("transformation-grading", {b, f}, "component value has wrong degree");
      }
    }
  }
  if (!rep.ok()) return rep;

  // Naturality squares tau_c(f * g) = F(g)(tau_b(f)), as equalities.
  for (const auto& b : B.objects()) {
    for (const auto& [g, grec] : B.cells) {
      if (grec.degree < 1) continue;
      const CellId c = B.vdom({g, 0}, grec.degree).cell;
      if (!(B.vcod({g, 0}, grec.degree) == VirtualCell{b, 0})) continue;
      const int max_rel = n == 0 ? B.truncation - 1 : 0;
      for (int r = 0; r <= max_rel; ++r) {
        for (const auto& f : B.hom_cells(b, a, r)) {
          const bool f_is_object = r == 0;
          const bool g_is_one_cell = grec.degree == 1;
          if (!f_is_object && !g_is_one_cell) continue;  // outside the checkable data
          if (n >= 1 && !g_is_one_cell) continue;        // tau has object components only
          rep.bump("transformation-naturality");
          VirtualCell moved = horizontal(B, {f, 0}, {g, 0});
          VirtualCell lhs;
          if (n == 0) {
            lhs = tau.components.at(c).at(moved.cell);
            if (moved.epower > 0) lhs = F.value(c).videntity(lhs, moved.epower);
          } else {
            lhs = tau.components.at(c).at(moved.cell);
          }
          VirtualCell rhs = g_is_one_cell
                                ? F.functor_of(g).apply(tau.components.at(b).at(f))
                                : F.act({g, 0}, tau.components.at(b).at(f).cell);
          if (!(lhs == rhs))
            rep.add("transformation-naturality", {b, f, g},
                    "tau_c(f * g) != F(g)(tau_b(f))");
        }
      }
    }
  }
  return rep;
}

TransformationData yoneda_backward(const PresheafData& F, const CellId& a,
                                   const VirtualCell& beta) {
  const auto& B = *F.base;
  TransformationData tau;
  tau.rep_object = a;
  tau.level = F.value(a).vdegree(beta);
  const int n = tau.level;
  for (const auto& b : B.objects()) {
    auto& comp = tau.components[b];
    const int max_rel = n == 0 ? B.truncation - 1 : 0;
    for (int r = 0; r <= max_rel; ++r)
      for (const auto& f : B.hom_cells(b, a, r)) {
        if (n == 0) {
          comp[f] = r == 0 ? F.functor_of(f).apply(beta) : F.act({f, 0}, beta.cell);
        } else {
          comp[f] = F.functor_of(f).apply(beta);
        }
      }
  }
  auto rep = check_transformation(F, tau);
  if (!rep.ok())
    throw domain_error("yoneda_backward: constructed transformation fails naturality (" +
                       rep.violations.front().detail + ")");
  return tau;
}

std::pair<CellId, VirtualCell> yoneda_forward(const PresheafData& F,
                                              const TransformationData& tau) {
  auto rep = check_transformation(F, tau);
  if (!rep.ok())
    throw domain_error("naturality-violated: " + rep.violations.front().law + " at " +
                       (rep.violations.front().witness.empty()
                            ? std::string("?")
                            : rep.violations.front().witness.front()));
  const CellId ea = unit_cell(*F.base, tau.rep_object);
  return {tau.rep_object, tau.components.at(tau.rep_object).at(ea)};
}

// --- representability ------------------------------------------------------

RepresentabilityResult check_representable_strict(const PresheafData& F) {
  RepresentabilityResult res;
  const auto& B = *F.base;
  for (const auto& a : B.objects()) {
    for (const auto& beta : F.value(a).objects()) {
      ++res.candidates_checked;
      bool ok = true;
      for (const auto& b : B.objects()) {
        const auto& V = F.value(b);
        for (const auto& [gamma, grec] : V.cells) {
          int hits = 0;
          for (const auto& f : virtual_hom_cells(B, b, a, grec.degree))
            if (F.act(f, beta) == VirtualCell{gamma, 0}) ++hits;
          if (hits != 1) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (ok) res.witnesses.push_back({a, {beta, 0}});
    }
  }
  res.representable = !res.witnesses.empty();
  return res;
}

bool check_representable_weak(const PresheafData& F, const WeakRepresentabilityWitness& w) {
  const auto& B = *F.base;
  const CellId a = w.rep_object;
  for (const auto& b : B.objects()) {
    auto hom = std::make_shared<const CategoryPresentation>(hom_category(B, b, a));
    // T_b : L(b,a) -> F(b), f |-> F(f)(beta), extended over all hom cells.
    FunctorData T;
    T.name = "yoneda@" + b;
    T.source = hom;
    T.target = F.values.at(b);
    for (const auto& [f, frec] : hom->cells)
      T.map[f] = frec.degree == 0 ? F.functor_of(f).apply(w.universal_element)
                                  : F.act({f, 0}, w.universal_element.cell);
    auto it = w.inverses.find(b);
    if (it == w.inverses.end()) throw domain_error("malformed-witness: no inverse at '" + b + "'");
    FunctorData S;
    S.name = "witness@" + b;
    S.source = F.values.at(b);
    S.target = hom;
    S.map = it->second;
    if (!check_functor(T, false).ok()) return false;
    if (!check_functor(S, false).ok()) return false;
    if (!check_equivalence_pair(T, S).established) return false;
  }
  return true;
}

}  // namespace omegacat
