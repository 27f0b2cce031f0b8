#include "omegacat/functor.hpp"

#include <algorithm>
#include <functional>

#include "omegacat/core.hpp"

namespace omegacat {

VirtualCell FunctorData::apply(const VirtualCell& v) const {
  VirtualCell n = source->normalize(v);
  auto it = map.find(n.cell);
  if (it == map.end())
    throw domain_error("functor '" + name + "': no value for cell '" + n.cell + "'");
  return target->normalize({it->second.cell, it->second.epower + n.epower});
}

bool FunctorData::same_mapping(const FunctorData& other) const {
  return source.get() == other.source.get() && target.get() == other.target.get() &&
         map == other.map;
}

FunctorData identity_functor(std::shared_ptr<const CategoryPresentation> P) {
  FunctorData F;
  F.name = "id_" + P->name;
  F.source = P;
  F.target = P;
  for (const auto& [id, rec] : P->cells) F.map[id] = {id, 0};
  return F;
}

FunctorData compose_functors(const FunctorData& g, const FunctorData& f) {
  if (g.source.get() != f.target.get())
    throw domain_error("compose_functors: middle categories differ");
  FunctorData out;
  out.name = g.name + "." + f.name;
  out.source = f.source;
  out.target = g.target;
  for (const auto& [id, v] : f.map) out.map[id] = g.apply(v);
  return out;
}

ValidationReport check_functor(const FunctorData& F, bool strict) {
  ValidationReport rep;
  const auto& S = *F.source;
  const auto& T = *F.target;
  EquivalenceCache tcache(T);

  auto same = [&](const VirtualCell& u, const VirtualCell& v) {
    if (strict) return u == v;
    return tcache.equivalent(u, v);
  };

  for (const auto& [id, rec] : S.cells) {
    if (!F.map.count(id)) {
      rep.add("functor-totality", {id}, "no value assigned");
      continue;
    }
    rep.bump("functor-grading");
    try {
      VirtualCell fx = F.apply({id, 0});
      if (T.vdegree(fx) != rec.degree) {
        rep.add("functor-grading", {id}, "degree not preserved");
        continue;
      }
      if (rec.degree > 0) {
        rep.bump("functor-boundaries");
        if (!(F.apply({*rec.dom, 0}) == T.vdom(fx)))
          rep.add("functor-boundaries", {id}, "F(d x) != d F(x)");
        if (!(F.apply({*rec.cod, 0}) == T.vcod(fx)))
          rep.add("functor-boundaries", {id}, "F(c x) != c F(x)");
      }
    } catch (const domain_error& e) {
      rep.add("functor-grading", {id}, e.what());
    }
  }
  if (!rep.ok()) return rep;  // later laws assume a graded globular map

  for (const auto& [z, ez] : S.identity_map) {
    rep.bump("functor-identities");
    if (!same(F.apply({ez, 0}), T.videntity(F.apply({z, 0}))))
      rep.add("functor-identities", {z, ez},
              strict ? "F(e z) != e F(z)" : "F(e z) not equivalent to e F(z)");
  }
  for (const auto& [key, res] : S.composition) {
    rep.bump("functor-composites");
    auto lhs = F.apply({res, 0});
    auto rhs = T.try_compose(key.k, F.apply({key.left, 0}), F.apply({key.right, 0}));
    if (!rhs || !same(lhs, *rhs))
      rep.add("functor-composites", {key.left, key.right},
              "F(f o_" + std::to_string(key.k) + " g) " +
                  (strict ? "!=" : "not equivalent to") + " F(f) o F(g)");
  }
  return rep;
}

bool check_preserves_equiv(const FunctorData& F) {
  const auto& S = *F.source;
  EquivalenceCache scache(S);
  EquivalenceCache tcache(*F.target);
  for (int d = 0; d <= S.truncation; ++d) {
    auto ids = S.cells_of_degree(d);
    for (const auto& x : ids)
      for (const auto& y : ids) {
        if (!scache.equivalent({x, 0}, {y, 0})) continue;
        if (!tcache.equivalent(F.apply({x, 0}), F.apply({y, 0}))) return false;
      }
  }
  return true;
}

bool check_mn_invariant(const FunctorData& F, int m, int n) {
  if (!check_functor(F, false).ok() || !check_preserves_equiv(F)) return false;
  EquivalenceCache scache(*F.source);
  EquivalenceCache tcache(*F.target);
  bool attained = false;
  const auto objs = F.source->objects();
  for (const auto& a : objs)
    for (const auto& b : objs) {
      auto sd = scache.min_degree({a, 0}, {b, 0});
      if (!sd || *sd > m) continue;
      auto td = tcache.min_degree(F.apply({a, 0}), F.apply({b, 0}));
      if (!td || *td > n) return false;
      if (*td == n) attained = true;
    }
  return attained;
}

EquivalencePairResult check_equivalence_pair(const FunctorData& F, const FunctorData& G) {
  EquivalencePairResult out;
  if (F.target.get() != G.source.get() || F.source.get() != G.target.get())
    throw domain_error("check_equivalence_pair: functors are not opposed");
  const auto& L = *F.source;
  const auto& Lp = *F.target;
  EquivalenceCache lcache(L);
  EquivalenceCache pcache(Lp);

  // Witness arrows a ~ G F a with first-order naturality, then symmetrically.
  auto round = [&](const CategoryPresentation& C, EquivalenceCache& cache,
                   const FunctorData& rt_f, const FunctorData& rt_g, const char* side,
                   ValidationReport& rep) {
    std::map<CellId, VirtualCell> unit;
    for (const auto& a : C.objects()) {
      rep.bump(std::string(side) + "-roundtrip");
      auto gfa = rt_g.apply(rt_f.apply({a, 0}));
      auto w = cache.witness({a, 0}, gfa);
      if (!w) {
        rep.add(std::string(side) + "-roundtrip", {a}, "object not equivalent to its round trip");
        continue;
      }
      unit[a] = w->forward;
    }
    if (!rep.ok()) return;
    for (const auto& [id, rec] : C.cells) {
      if (rec.degree != 1) continue;
      rep.bump(std::string(side) + "-naturality");
      // f_{a'} o_1 u  ~  GF(u) o_1 f_a
      auto lhs = C.try_compose(1, unit.at(*rec.cod), {id, 0});
      auto rhs = C.try_compose(1, rt_g.apply(rt_f.apply({id, 0})), unit.at(*rec.dom));
      if (!lhs || !rhs || !cache.equivalent(*lhs, *rhs))
        rep.add(std::string(side) + "-naturality", {id},
                "witness square does not commute up to ~");
    }
  };
  round(L, lcache, F, G, "unit", out.details);
  round(Lp, pcache, G, F, "counit", out.details);
  out.established = out.details.ok();

  // Prop 3.1 conditions for F, reported alongside.
  out.faithful = true;
  out.full = true;
  out.surjective_on_objects = true;
  const auto objs = L.objects();
  for (const auto& a : objs)
    for (const auto& b : objs) {
      auto cells_ab = L.hom_cells(a, b);
      for (const auto& x : cells_ab)
        for (const auto& y : cells_ab) {
          if (L.degree_of(x) != L.degree_of(y)) continue;
          if (pcache.equivalent(F.apply({x, 0}), F.apply({y, 0})) &&
              !lcache.equivalent({x, 0}, {y, 0}))
            out.faithful = false;
        }
      const CellId fa = F.apply({a, 0}).cell, fb = F.apply({b, 0}).cell;
      for (const auto& h : Lp.hom_cells(fa, fb)) {
        bool hit = false;
        for (const auto& x : cells_ab)
          if (L.degree_of(x) == Lp.degree_of(h) &&
              pcache.equivalent(F.apply({x, 0}), {h, 0}))
            hit = true;
        if (!hit) out.full = false;
      }
    }
  for (const auto& b : Lp.objects()) {
    bool hit = false;
    for (const auto& a : objs)
      if (pcache.equivalent(F.apply({a, 0}), {b, 0})) hit = true;
    if (!hit) out.surjective_on_objects = false;
  }
  return out;
}

std::vector<FunctorData> enumerate_functors(std::shared_ptr<const CategoryPresentation> S,
                                            std::shared_ptr<const CategoryPresentation> T,
                                            std::size_t guard) {
  std::vector<CellId> order;  // by degree, then id: boundaries come first
  for (int d = 0; d <= S->truncation; ++d)
    for (const auto& id : S->cells_of_degree(d)) order.push_back(id);

  std::vector<FunctorData> out;
  FunctorData cur;
  cur.source = S;
  cur.target = T;
  std::size_t budget = guard;

  auto candidates = [&](const CellId& id) {
    std::vector<VirtualCell> cands;
    const auto& rec = S->record(id);
    if (rec.degree == 0) {
      for (const auto& b : T->objects()) cands.push_back({b, 0});
      return cands;
    }
    VirtualCell u = cur.map.at(*rec.dom), v = cur.map.at(*rec.cod);
    for (const auto& [tid, trec] : T->cells) {
      if (trec.degree != rec.degree) continue;
      VirtualCell w{tid, 0};
      if (T->vdom(w) == u && T->vcod(w) == v) cands.push_back(w);
    }
    if (rec.degree > T->truncation && u == v && T->vdegree(u) == rec.degree - 1)
      cands.push_back(T->videntity(u));
    return cands;
  };

  std::function<void(std::size_t)> rec_fill = [&](std::size_t i) {
    if (budget == 0) throw domain_error("enumerate_functors: guard exceeded");
    --budget;
    if (i == order.size()) {
      cur.name = "F" + std::to_string(out.size());
      if (check_functor(cur, false).ok()) out.push_back(cur);
      return;
    }
    for (const auto& v : candidates(order[i])) {
      cur.map[order[i]] = v;
      rec_fill(i + 1);
    }
    cur.map.erase(order[i]);
  };
  rec_fill(0);
  return out;
}

bool check_quasiisomorphism(const FunctorData& F, const FunctorData& G) {
  if (F.target.get() != G.source.get() || F.source.get() != G.target.get())
    throw domain_error("check_quasiisomorphism: functors are not opposed");
  EquivalenceCache lcache(*F.source);
  EquivalenceCache pcache(*F.target);
  for (const auto& [id, rec] : F.source->cells)
    if (!lcache.equivalent(G.apply(F.apply({id, 0})), {id, 0})) return false;
  for (const auto& [id, rec] : F.target->cells)
    if (!pcache.equivalent(F.apply(G.apply({id, 0})), {id, 0})) return false;

  // Prop 3.2: a quasiisomorphism is a bijection with functor inverse. In a
  // truncated presentation the cell-wise conditions force this on the nose;
  // anything else is an internal inconsistency.
  for (const auto& [id, rec] : F.source->cells)
    if (!(G.apply(F.apply({id, 0})) == VirtualCell{id, 0})) return false;
  for (const auto& [id, rec] : F.target->cells)
    if (!(F.apply(G.apply({id, 0})) == VirtualCell{id, 0})) return false;
  return true;
}

}  // namespace omegacat
