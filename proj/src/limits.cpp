#include <algorithm>

#include "omegacat/core.hpp"
#include "omegacat/modification.hpp"
#include "omegacat/presheaf.hpp"

namespace omegacat {

namespace {

std::string leg_digest(const std::map<CellId, VirtualCell>& legs) {
  std::string out = "{";
  for (const auto& [v, c] : legs) out += v + ":" + to_string(c) + ",";
  out += "}";
  return out;
}

}  // namespace

bool cone_condition(const DiagramData& D, const ConeData& cone, bool strict) {
  const auto& T = *D.target;
  const int n = cone.level;
  std::optional<EquivalenceCache> cache;
  if (!strict) cache.emplace(T);

  for (const auto& [g, node] : D.graph.nodes) {
    if (node.degree == 0) continue;
    const int k = node.degree;
    const CellId d0 = D.graph.object_dom(g);
    const CellId c0 = D.graph.object_cod(g);
    auto itd = cone.legs.find(d0);
    auto itc = cone.legs.find(c0);
    if (itd == cone.legs.end() || itc == cone.legs.end()) return false;
    const int M = std::max(n + 1, k);
    VirtualCell lhs = T.videntity(itc->second, M - (n + 1));
    auto rhs = T.try_compose(M, T.videntity(D.assignment.at(g), M - k),
                             T.videntity(itd->second, M - (n + 1)));
    if (!rhs) return false;
    if (strict ? !(lhs == *rhs) : !cache->equivalent(lhs, *rhs)) return false;
  }
  return true;
}

std::vector<ConeData> enumerate_cones(const DiagramData& D, const CellId& vertex, int level,
                                      std::size_t guard) {
  const auto& T = *D.target;
  const auto verts = D.graph.nodes_of_degree(0);
  std::vector<std::vector<VirtualCell>> cand(verts.size());
  std::vector<ConeData> out;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    cand[i] = virtual_hom_cells(T, vertex, D.assignment.at(verts[i]).cell, level);
    if (cand[i].empty()) return out;
  }
  std::vector<std::size_t> idx(verts.size(), 0);
  std::size_t budget = guard;
  while (true) {
    if (budget-- == 0)
      throw domain_error("enumerate_cones: guard exceeded (raise OMEGACAT_SEARCH_LIMIT)");
    ConeData cone;
    cone.vertex = vertex;
    cone.level = level;
    for (std::size_t i = 0; i < verts.size(); ++i) cone.legs[verts[i]] = cand[i][idx[i]];
    if (cone_condition(D, cone, true)) out.push_back(std::move(cone));
    std::size_t i = 0;
    while (i < verts.size() && ++idx[i] == cand[i].size()) idx[i++] = 0;
    if (i == verts.size()) break;
  }
  return out;
}

ConeData cone_act(const DiagramData& D, const ConeData& cone, const VirtualCell& f) {
  const auto& T = *D.target;
  ConeData out;
  out.vertex = T.vdom(f, T.vdegree(f)).cell;
  out.level = T.vdegree(f) - 1;
  for (const auto& [v, leg] : cone.legs) out.legs[v] = horizontal(T, leg, f);
  return out;
}

namespace {

std::optional<LimitCertificate> limit_search(const DiagramData& D) {
  auto dia = D.validate();
  if (!dia.ok())
    throw domain_error("find_strict_limit: invalid diagram: " + dia.violations.front().detail);
  const auto& T = *D.target;
  const std::size_t guard = search_limit();

  // Cone spaces per (probe object, level), shared across vertex candidates.
  std::map<std::pair<CellId, int>, std::vector<ConeData>> cone_space;
  for (const auto& z : T.objects())
    for (int n = 0; n + 1 <= T.truncation; ++n)
      cone_space[{z, n}] = enumerate_cones(D, z, n, guard);

  LimitCertificate cert;
  for (const auto& a : T.objects()) {
    for (const auto& nu : cone_space[{a, 0}]) {
      bool universal = true;
      long checked = 0, mediators = 0;
      for (const auto& [key, cones] : cone_space) {
        const auto& [z, n] = key;
        for (const auto& gamma : cones) {
          ++checked;
          int hits = 0;
          for (const auto& f : virtual_hom_cells(T, z, a, n)) {
            auto moved = cone_act(D, nu, f);
            if (moved.legs == gamma.legs) ++hits;
          }
          if (hits != 1) {
            universal = false;
            break;
          }
          ++mediators;
        }
        if (!universal) break;
      }
      if (universal) {
        cert.cone = nu;
        cert.cones_checked = checked;
        cert.mediators_verified = mediators;
        return cert;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<LimitCertificate> find_strict_limit(const DiagramData& D) {
  return limit_search(D);
}

std::optional<LimitCertificate> find_strict_colimit(const DiagramData& D) {
  DiagramData O;
  O.name = D.name + "^op";
  O.graph = opposite_graph(D.graph);
  O.target = std::make_shared<const CategoryPresentation>(opposite(*D.target));
  O.assignment = D.assignment;
  return limit_search(O);
}

// --- weak limits -----------------------------------------------------------

ConeCategory cones_category(const DiagramData& D, const CellId& z, std::size_t guard) {
  const auto& T = *D.target;
  ConeCategory out;
  CategoryPresentation& H = out.category;
  H.name = "Cones(" + z + "," + D.name + ")";
  H.truncation = std::max(0, T.truncation - 1);
  const auto verts = D.graph.nodes_of_degree(0);
  std::size_t budget = guard;

  // Level-0 objects: weak cones.
  std::map<int, std::vector<CellId>> layers;
  {
    std::vector<std::vector<VirtualCell>> cand(verts.size());
    bool empty = false;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      cand[i] = virtual_hom_cells(T, z, D.assignment.at(verts[i]).cell, 0);
      if (cand[i].empty()) empty = true;
    }
    std::vector<std::size_t> idx(verts.size(), 0);
    while (!empty) {
      if (budget-- == 0) throw domain_error("cones_category: guard exceeded");
      ConeData cone;
      cone.vertex = z;
      cone.level = 0;
      for (std::size_t i = 0; i < verts.size(); ++i) cone.legs[verts[i]] = cand[i][idx[i]];
      if (cone_condition(D, cone, false)) {
        CellId id = leg_digest(cone.legs);
        CellRecord rec;
        rec.id = id;
        H.cells[id] = rec;
        out.cones[id] = cone;
        layers[0].push_back(id);
      }
      std::size_t i = 0;
      while (i < verts.size() && ++idx[i] == cand[i].size()) idx[i++] = 0;
      if (i == verts.size()) break;
    }
  }

  // Higher cells: componentwise families between parallel lower cells.
  std::map<CellId, std::map<CellId, VirtualCell>> comps;  // cell -> family
  for (const auto& id : layers[0]) comps[id] = out.cones.at(id).legs;
  for (int r = 1; r <= H.truncation; ++r) {
    for (const auto& xid : layers[r - 1]) {
      for (const auto& yid : layers[r - 1]) {
        if (r >= 2) {
          const auto& rx = H.cells.at(xid);
          const auto& ry = H.cells.at(yid);
          if (rx.dom != ry.dom || rx.cod != ry.cod) continue;
        }
        std::vector<std::vector<VirtualCell>> cand(verts.size());
        bool empty = false;
        for (std::size_t i = 0; i < verts.size(); ++i) {
          const VirtualCell u = comps.at(xid).at(verts[i]);
          const VirtualCell v = comps.at(yid).at(verts[i]);
          for (const auto& [cid, crec] : T.cells) {
            if (crec.degree != r + 1) continue;
            VirtualCell w{cid, 0};
            if (T.vdom(w) == u && T.vcod(w) == v) cand[i].push_back(w);
          }
          if (r + 1 > T.truncation && u == v) cand[i].push_back(T.videntity(u));
          if (cand[i].empty()) empty = true;
        }
        if (empty) continue;
        std::vector<std::size_t> idx(verts.size(), 0);
        while (true) {
          if (budget-- == 0) throw domain_error("cones_category: guard exceeded");
          ConeData fam;
          fam.vertex = z;
          fam.level = r;
          for (std::size_t i = 0; i < verts.size(); ++i) fam.legs[verts[i]] = cand[i][idx[i]];
          if (cone_condition(D, fam, false)) {
            CellId id = xid + "=>" + yid + leg_digest(fam.legs);
            CellRecord rec;
            rec.id = id;
            rec.degree = r;
            rec.dom = xid;
            rec.cod = yid;
            bool is_ident = xid == yid;
            if (is_ident)
              for (const auto& [v, c] : fam.legs)
                is_ident = is_ident && c == T.videntity(comps.at(xid).at(v));
            if (is_ident) {
              rec.identity_of = xid;
              H.identity_map[xid] = id;
            }
            H.cells[id] = rec;
            comps[id] = fam.legs;
            layers[r].push_back(id);
          }
          std::size_t i = 0;
          while (i < verts.size() && ++idx[i] == cand[i].size()) idx[i++] = 0;
          if (i == verts.size()) break;
        }
      }
    }
  }

  // Composition tables, componentwise.
  std::map<std::tuple<int, CellId, CellId, std::string>, CellId> index;
  for (const auto& [id, fam] : comps) {
    const auto& rec = H.cells.at(id);
    index[{rec.degree, rec.degree ? *rec.dom : CellId{}, rec.degree ? *rec.cod : CellId{},
           leg_digest(fam)}] = id;
  }
  for (int r = 1; r <= H.truncation; ++r)
    for (int k = 1; k <= r; ++k)
      for (const auto& fid : layers[r])
        for (const auto& gid : layers[r]) {
          VirtualCell f{fid, 0}, g{gid, 0};
          if (!(H.vdom(f, k) == H.vcod(g, k))) continue;
          std::map<CellId, VirtualCell> cc;
          for (const auto& v : verts)
            cc[v] = compose(T, k, comps.at(fid).at(v), comps.at(gid).at(v));
          CellId dom = k == 1 ? *H.cells.at(gid).dom
                              : H.composition.at({k - 1, *H.cells.at(fid).dom,
                                                  *H.cells.at(gid).dom});
          CellId cod = k == 1 ? *H.cells.at(fid).cod
                              : H.composition.at({k - 1, *H.cells.at(fid).cod,
                                                  *H.cells.at(gid).cod});
          auto it = index.find({r, dom, cod, leg_digest(cc)});
          if (it == index.end())
            throw domain_error("cones_category: composite escaped the enumeration");
          H.composition[{k, fid, gid}] = it->second;
        }
  return out;
}

CellId ConeCategory::id_of(const ConeData& cone) const {
  CellId id = leg_digest(cone.legs);
  if (!category.has_cell(id)) throw domain_error("ConeCategory: cone not present");
  return id;
}

bool check_weak_limit(const DiagramData& D, const ConeData& cone, const WeakLimitWitness& w) {
  const auto& T = *D.target;
  if (cone.level != 0 || !cone_condition(D, cone, false)) return false;
  const CellId a = cone.vertex;
  const std::size_t guard = search_limit();

  for (const auto& z : T.objects()) {
    auto CC = std::make_shared<ConeCategory>(cones_category(D, z, guard));
    auto Hp = std::make_shared<const CategoryPresentation>(CC->category);
    auto hom = std::make_shared<const CategoryPresentation>(hom_category(T, z, a));

    // Canonical functor L(z, a) -> Cones(z): whisker the cone by f.
    FunctorData Tz;
    Tz.name = "cone@" + z;
    Tz.source = hom;
    Tz.target = Hp;
    std::map<CellId, std::map<CellId, VirtualCell>> fam;  // hom cell -> legs
    for (const auto& [fid, frec] : hom->cells) {
      std::map<CellId, VirtualCell> legs;
      for (const auto& [v, leg] : cone.legs) legs[v] = horizontal(T, leg, {fid, 0});
      fam[fid] = legs;
    }
    for (const auto& [fid, frec] : hom->cells) {
      if (frec.degree == 0) {
        CellId id = leg_digest(fam.at(fid));
        if (!Hp->has_cell(id)) return false;  // image is not even a weak cone
        Tz.map[fid] = {id, 0};
      }
    }
    for (int r = 1; r <= hom->truncation; ++r)
      for (const auto& fid : hom->cells_of_degree(r)) {
        const auto& frec = hom->record(fid);
        CellId dom = Tz.map.at(*frec.dom).cell;
        CellId cod = Tz.map.at(*frec.cod).cell;
        CellId id = dom + "=>" + cod + leg_digest(fam.at(fid));
        if (!Hp->has_cell(id)) return false;
        Tz.map[fid] = {id, 0};
      }
    auto itw = w.inverse.find(z);
    if (itw == w.inverse.end())
      throw domain_error("malformed-witness: no inverse assignment at '" + z + "'");
    FunctorData Sz;
    Sz.name = "witness@" + z;
    Sz.source = Hp;
    Sz.target = hom;
    Sz.map = itw->second;
    if (!check_functor(Tz, false).ok()) return false;
    if (!check_functor(Sz, false).ok()) return false;
    if (!check_equivalence_pair(Tz, Sz).established) return false;
  }
  return true;
}

}  // namespace omegacat
