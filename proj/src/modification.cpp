#include "omegacat/modification.hpp"

#include <algorithm>
#include <cstdlib>

#include "omegacat/core.hpp"

namespace omegacat {

namespace {

bool parallel_stacks(const ModificationData& a, const ModificationData& b) {
  if (a.level != b.level) return false;
  if (!a.functor_dom.same_mapping(b.functor_dom) || !a.functor_cod.same_mapping(b.functor_cod))
    return false;
  for (std::size_t j = 0; j < a.stack.size(); ++j) {
    if (a.stack[j].first->components != b.stack[j].first->components) return false;
    if (a.stack[j].second->components != b.stack[j].second->components) return false;
  }
  return true;
}

// Virtual cells of the given degree between the given boundaries.
std::vector<VirtualCell> cells_between(const CategoryPresentation& T, const VirtualCell& u,
                                       const VirtualCell& v, int deg) {
  std::vector<VirtualCell> out;
  if (deg <= T.truncation) {
    for (const auto& [id, rec] : T.cells) {
      if (rec.degree != deg) continue;
      VirtualCell w{id, 0};
      if (T.vdom(w) == u && T.vcod(w) == v) out.push_back(w);
    }
  } else if (u == v && T.vdegree(u) == deg - 1) {
    out.push_back(T.videntity(u));
  }
  return out;
}

}  // namespace

std::size_t search_limit() {
  if (const char* env = std::getenv("OMEGACAT_SEARCH_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

VirtualCell ModificationData::at(const CellId& obj) const {
  auto it = components.find(obj);
  if (it == components.end())
    throw domain_error("modification '" + name + "': no component at '" + obj + "'");
  return it->second;
}

bool ModificationData::same_shape(const ModificationData& other) const {
  return parallel_stacks(*this, other) && components == other.components;
}

ModificationData identity_modification(const FunctorData& F) {
  ModificationData M;
  M.name = "e(" + F.name + ")";
  M.level = 0;
  M.functor_dom = F;
  M.functor_cod = F;
  for (const auto& a : F.source->objects())
    M.components[a] = F.target->videntity(F.apply({a, 0}));
  return M;
}

ModificationData raise_modification(const ModificationData& M) {
  ModificationData R;
  R.name = "e(" + M.name + ")";
  R.level = M.level + 1;
  R.functor_dom = M.functor_dom;
  R.functor_cod = M.functor_cod;
  R.stack = M.stack;
  auto self = std::make_shared<const ModificationData>(M);
  R.stack.push_back({self, self});
  for (const auto& [a, v] : M.components)
    R.components[a] = M.functor_dom.target->videntity(v);
  return R;
}

ValidationReport check_modification(const ModificationData& M) {
  ValidationReport rep;
  const auto& S = *M.functor_dom.source;
  const auto& T = *M.functor_dom.target;
  const FunctorData& F = M.functor_dom;
  const FunctorData& G = M.functor_cod;
  EquivalenceCache tcache(T);

  if (static_cast<int>(M.stack.size()) != M.level)
    rep.add("modification-stack", {}, "stack size does not match the level");
  for (std::size_t j = 0; j < M.stack.size(); ++j) {
    if (!M.stack[j].first || !M.stack[j].second ||
        M.stack[j].first->level != static_cast<int>(j) ||
        M.stack[j].second->level != static_cast<int>(j))
      rep.add("modification-stack", {}, "stack entry at level " + std::to_string(j) +
                                            " is missing or mis-leveled");
  }
  if (!rep.ok()) return rep;

  for (const auto& a : S.objects()) {
    rep.bump("modification-boundaries");
    if (!M.components.count(a)) {
      rep.add("modification-boundaries", {a}, "missing component");
      continue;
    }
    VirtualCell comp = M.at(a);
    if (T.vdegree(comp) != M.level + 1) {
      rep.add("modification-boundaries", {a}, "component has wrong degree");
      continue;
    }
    if (!(T.vdom(comp, M.level + 1) == F.apply({a, 0})) ||
        !(T.vcod(comp, M.level + 1) == G.apply({a, 0})))
      rep.add("modification-boundaries", {a}, "component not in hom(F a, G a)");
    if (M.level == 0) {
      if (!(T.vdom(comp) == F.apply({a, 0})) || !(T.vcod(comp) == G.apply({a, 0})))
        rep.add("modification-boundaries", {a}, "d/c of component disagree with functors");
    } else {
      if (!(T.vdom(comp) == M.stack[M.level - 1].first->at(a)))
        rep.add("modification-boundaries", {a}, "d component(a) != (d alpha)(a)");
      if (!(T.vcod(comp) == M.stack[M.level - 1].second->at(a)))
        rep.add("modification-boundaries", {a}, "c component(a) != (c alpha)(a)");
    }
  }
  if (!rep.ok()) return rep;

  // Naturality squares, level j = level .. truncation; the top layer runs on
  // virtual identities and reduces through e.
  bool all_equal = true;
  std::vector<std::string> first_nonstrict;
  for (int j = M.level; j <= S.truncation; ++j) {
    std::vector<VirtualCell> layer;
    if (j + 1 <= S.truncation) {
      for (const auto& id : S.cells_of_degree(j + 1)) layer.push_back({id, 0});
    } else {
      for (const auto& id : S.cells_of_degree(S.truncation))
        layer.push_back({id, j + 1 - S.truncation});
    }
    const int pad = j - M.level;
    for (const auto& f : layer) {
      rep.bump("modification-naturality");
      const CellId a = S.vdom(f, j + 1).cell;
      const CellId b = S.vcod(f, j + 1).cell;
      auto lhs = T.try_compose(j + 1, T.videntity(M.at(b), pad), F.apply(f));
      auto rhs = T.try_compose(j + 1, G.apply(f), T.videntity(M.at(a), pad));
      if (!lhs || !rhs || !tcache.equivalent(*lhs, *rhs)) {
        rep.add("modification-naturality", {to_string(f)},
                "mu(e^k M(b), F(f)) is not equivalent to mu(G(f), e^k M(a))");
      } else if (!(*lhs == *rhs)) {
        all_equal = false;
        first_nonstrict = {to_string(f)};
      }
    }
  }
  // Squares commuting up to ~ commute strictly; anything else means the
  // input data is inconsistent.
  if (rep.ok() && !all_equal)
    rep.add("modification-naturality-strict", first_nonstrict,
            "square commutes up to ~ but not as an equality");
  return rep;
}

ModificationData compose_modifications(int k, const ModificationData& M1,
                                       const ModificationData& M2) {
  const int n = M1.level;
  if (M2.level != n) throw domain_error("compose_modifications: level mismatch");
  if (k < 1 || k > n + 2) throw domain_error("compose_modifications: depth out of range");

  ModificationData out;
  out.name = M1.name + " o_" + std::to_string(k) + " " + M2.name;
  out.level = n;

  if (k <= n + 1) {
    if (M1.functor_dom.source.get() != M2.functor_dom.source.get() ||
        M1.functor_dom.target.get() != M2.functor_dom.target.get())
      throw domain_error("compose_modifications: categories differ");
    // d^k M1 = c^k M2
    if (k <= n) {
      if (M1.stack[n - k].first->components != M2.stack[n - k].second->components)
        throw domain_error("compose_modifications: boundaries do not match at depth " +
                           std::to_string(k));
      out.functor_dom = M1.functor_dom;
      out.functor_cod = M1.functor_cod;
    } else {
      if (!M1.functor_dom.same_mapping(M2.functor_cod))
        throw domain_error("compose_modifications: functors do not match at depth " +
                           std::to_string(k));
      out.functor_dom = M2.functor_dom;
      out.functor_cod = M1.functor_cod;
    }
    const auto& T = *M1.functor_dom.target;
    for (const auto& [a, v] : M1.components)
      out.components[a] = compose(T, k, v, M2.at(a));
    out.stack.resize(n);
    for (int j = 1; j <= n; ++j) {
      const auto& p1 = M1.stack[n - j];
      const auto& p2 = M2.stack[n - j];
      if (j < k) {
        out.stack[n - j] = {std::make_shared<const ModificationData>(
                                compose_modifications(k - j, *p1.first, *p2.first)),
                            std::make_shared<const ModificationData>(
                                compose_modifications(k - j, *p1.second, *p2.second))};
      } else if (j == k) {
        out.stack[n - j] = {p2.first, p1.second};
      } else {
        out.stack[n - j] = p1;
      }
    }
    return out;
  }

  // k = n + 2: horizontal across categories; M2 : L -> L', M1 : L' -> L''.
  if (M1.functor_dom.source.get() != M2.functor_dom.target.get())
    throw domain_error("compose_modifications: middle category differs");
  out.functor_dom = compose_functors(M1.functor_dom, M2.functor_dom);
  out.functor_cod = compose_functors(M1.functor_cod, M2.functor_cod);
  const auto& T = *M1.functor_dom.target;
  const FunctorData& Fp = M2.functor_cod;  // c^{n+1} M2
  const FunctorData& Gd = M1.functor_dom;  // d^{n+1} M1
  for (const auto& [a, unused] : M2.components)
    out.components[a] =
        compose(T, n + 1, M1.at(Fp.apply({a, 0}).cell), Gd.apply(M2.at(a)));
  out.stack.resize(n);
  for (int j = 1; j <= n; ++j) {
    const auto& p1 = M1.stack[n - j];
    const auto& p2 = M2.stack[n - j];
    out.stack[n - j] = {std::make_shared<const ModificationData>(
                            compose_modifications((n - j) + 2, *p1.first, *p2.first)),
                        std::make_shared<const ModificationData>(
                            compose_modifications((n - j) + 2, *p1.second, *p2.second))};
  }
  return out;
}

ModificationData horizontal_modification_alt(const ModificationData& M1,
                                             const ModificationData& M2) {
  const int n = M1.level;
  ModificationData out = compose_modifications(n + 2, M1, M2);
  // Replace the components by the second Lemma 1.5 formula G' beta o alpha F.
  const auto& T = *M1.functor_dom.target;
  const FunctorData& Gp = M1.functor_cod;  // c^{n+1} M1
  const FunctorData& Fd = M2.functor_dom;  // d^{n+1} M2
  for (auto& [a, v] : out.components)
    v = compose(T, n + 1, Gp.apply(M2.at(a)), M1.at(Fd.apply({a, 0}).cell));
  return out;
}

ModificationData postcompose_functor(const FunctorData& H, const ModificationData& M) {
  if (H.source.get() != M.functor_dom.target.get())
    throw domain_error("postcompose_functor: categories do not line up");
  ModificationData out;
  out.name = H.name + "(" + M.name + ")";
  out.level = M.level;
  out.functor_dom = compose_functors(H, M.functor_dom);
  out.functor_cod = compose_functors(H, M.functor_cod);
  for (const auto& p : M.stack)
    out.stack.push_back({std::make_shared<const ModificationData>(postcompose_functor(H, *p.first)),
                         std::make_shared<const ModificationData>(postcompose_functor(H, *p.second))});
  for (const auto& [a, v] : M.components) out.components[a] = H.apply(v);
  return out;
}

ModificationData precompose_functor(const ModificationData& M, const FunctorData& H) {
  if (H.target.get() != M.functor_dom.source.get())
    throw domain_error("precompose_functor: categories do not line up");
  ModificationData out;
  out.name = M.name + "(" + H.name + ")";
  out.level = M.level;
  out.functor_dom = compose_functors(M.functor_dom, H);
  out.functor_cod = compose_functors(M.functor_cod, H);
  for (const auto& p : M.stack)
    out.stack.push_back({std::make_shared<const ModificationData>(precompose_functor(*p.first, H)),
                         std::make_shared<const ModificationData>(precompose_functor(*p.second, H))});
  for (const auto& a : H.source->objects())
    out.components[a] = M.at(H.apply({a, 0}).cell);
  return out;
}

// --- hom-tower of the functor category ------------------------------------

namespace {

std::string digest(const std::map<CellId, VirtualCell>& comps) {
  std::string out = "{";
  for (const auto& [a, v] : comps) out += a + ":" + to_string(v) + ",";
  out += "}";
  return out;
}

}  // namespace

CellId ModTower::id_of(const ModificationData& M) const {
  CellId want = digest(M.components);
  for (const auto& [id, mod] : cells)
    if (mod.level == M.level && digest(mod.components) == want && parallel_stacks(mod, M))
      return id;
  throw domain_error("ModTower: modification not present in tower");
}

ModTower modification_hom_tower(const ModificationData& sample, std::size_t guard) {
  ModTower tower;
  const auto& T = *sample.functor_dom.target;
  const auto& S = *sample.functor_dom.source;
  const int n = sample.level;

  CategoryPresentation& H = tower.category;
  H.name = "FunHom(" + sample.functor_dom.name + "," + sample.functor_cod.name + ")@" +
           std::to_string(n);
  H.truncation = std::max(0, T.truncation - n - 1);

  auto lower_dom = [&](const CellId& a) {
    return n == 0 ? sample.functor_dom.apply({a, 0}) : sample.stack[n - 1].first->at(a);
  };
  auto lower_cod = [&](const CellId& a) {
    return n == 0 ? sample.functor_cod.apply({a, 0}) : sample.stack[n - 1].second->at(a);
  };

  const auto objs = S.objects();
  std::size_t budget = guard;

  // Enumerate component maps with the given per-object boundary choices.
  auto enumerate = [&](int level, auto boundary_dom, auto boundary_cod,
                       const decltype(sample.stack)& stack) {
    std::vector<ModificationData> found;
    std::vector<std::vector<VirtualCell>> cand(objs.size());
    for (std::size_t i = 0; i < objs.size(); ++i) {
      cand[i] = cells_between(T, boundary_dom(objs[i]), boundary_cod(objs[i]), level + 1);
      if (cand[i].empty()) return found;
    }
    std::vector<std::size_t> idx(objs.size(), 0);
    while (true) {
      if (budget-- == 0)
        throw domain_error("functor-category-too-large: enumeration guard exceeded "
                           "(raise OMEGACAT_SEARCH_LIMIT)");
      ModificationData M;
      M.level = level;
      M.functor_dom = sample.functor_dom;
      M.functor_cod = sample.functor_cod;
      M.stack = stack;
      for (std::size_t i = 0; i < objs.size(); ++i) M.components[objs[i]] = cand[i][idx[i]];
      if (check_modification(M).ok()) {
        M.name = "m" + std::to_string(level) + digest(M.components);
        found.push_back(std::move(M));
      }
      std::size_t i = 0;
      while (i < objs.size() && ++idx[i] == cand[i].size()) idx[i++] = 0;
      if (i == objs.size()) break;
    }
    return found;
  };

  // Relative degree 0: level-n modifications over the sample's stack.
  std::map<int, std::vector<CellId>> layer_ids;
  std::map<CellId, std::pair<CellId, CellId>> bounds;  // cell -> (dom, cod) in H
  {
    auto mods = enumerate(n, lower_dom, lower_cod, sample.stack);
    for (auto& M : mods) {
      CellId id = digest(M.components);
      CellRecord rec;
      rec.id = id;
      rec.degree = 0;
      H.cells[id] = rec;
      tower.cells[id] = std::move(M);
      layer_ids[0].push_back(id);
    }
  }
  for (int r = 1; r <= H.truncation; ++r) {
    for (const auto& xid : layer_ids[r - 1]) {
      for (const auto& yid : layer_ids[r - 1]) {
        const auto& X = tower.cells.at(xid);
        const auto& Y = tower.cells.at(yid);
        if (r >= 2 && bounds.at(xid) != bounds.at(yid)) continue;  // parallel pairs only
        auto stack = X.stack;
        stack.push_back({std::make_shared<const ModificationData>(X),
                         std::make_shared<const ModificationData>(Y)});
        auto mods = enumerate(n + r, [&](const CellId& a) { return X.at(a); },
                              [&](const CellId& a) { return Y.at(a); }, stack);
        for (auto& M : mods) {
          CellId id = xid + "=>" + yid + digest(M.components);
          CellRecord rec;
          rec.id = id;
          rec.degree = r;
          rec.dom = xid;
          rec.cod = yid;
          if (M.components == raise_modification(X).components && xid == yid)
            rec.identity_of = xid;
          H.cells[id] = rec;
          if (rec.identity_of) H.identity_map[xid] = id;
          bounds[id] = {xid, yid};
          tower.cells[id] = std::move(M);
          layer_ids[r].push_back(id);
        }
      }
    }
  }

  // Composition tables: componentwise composites looked up by digest.
  std::map<std::tuple<int, CellId, CellId, std::string>, CellId> index;
  for (const auto& [id, M] : tower.cells) {
    const auto& rec = H.cells.at(id);
    index[{rec.degree, rec.degree ? *rec.dom : CellId{}, rec.degree ? *rec.cod : CellId{},
           digest(M.components)}] = id;
  }
  for (int r = 1; r <= H.truncation; ++r) {
    for (int k = 1; k <= r; ++k) {
      for (const auto& fid : layer_ids[r]) {
        for (const auto& gid : layer_ids[r]) {
          VirtualCell f{fid, 0}, g{gid, 0};
          if (!(H.vdom(f, k) == H.vcod(g, k))) continue;
          const auto& FM = tower.cells.at(fid);
          const auto& GM = tower.cells.at(gid);
          std::map<CellId, VirtualCell> comps;
          for (const auto& a : objs) comps[a] = compose(T, k, FM.at(a), GM.at(a));
          CellId dom = k == 1 ? *H.cells.at(gid).dom
                              : H.composition.at({k - 1, *H.cells.at(fid).dom,
                                                  *H.cells.at(gid).dom});
          CellId cod = k == 1 ? *H.cells.at(fid).cod
                              : H.composition.at({k - 1, *H.cells.at(fid).cod,
                                                  *H.cells.at(gid).cod});
          auto it = index.find({r, dom, cod, digest(comps)});
          if (it == index.end())
            throw domain_error("ModTower: composite escaped the enumeration");
          H.composition[{k, fid, gid}] = it->second;
        }
      }
    }
  }
  return tower;
}

bool quasiequal_depth(const ModificationData& M1, const ModificationData& M2, int k) {
  if (M1.level != M2.level)
    throw domain_error("quasiequal_depth: levels differ");
  if (M1.functor_dom.source.get() != M2.functor_dom.source.get())
    throw domain_error("quasiequal_depth: sources differ");
  if (k >= 2)
    throw domain_error("unsupported-depth: only depths 0 and 1 make sense for proper "
                       "modifications");
  if (k == 1) {
    if (M1.functor_dom.target.get() != M2.functor_dom.target.get()) return false;
    EquivalenceCache tcache(*M1.functor_dom.target);
    for (const auto& [a, v] : M1.components)
      if (!tcache.equivalent(v, M2.at(a))) return false;
    return true;
  }
  if (!parallel_stacks(M1, M2)) return M1.same_shape(M2);
  ModTower tower = modification_hom_tower(M1, search_limit());
  EquivalenceCache cache(tower.category);
  return cache.equivalent({tower.id_of(M1), 0}, {tower.id_of(M2), 0});
}

}  // namespace omegacat
