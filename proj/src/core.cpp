#include "omegacat/core.hpp"

#include <algorithm>
#include <map>

namespace omegacat {

namespace {

// Groups ids of stored cells by degree once; validators iterate these a lot.
std::map<int, std::vector<CellId>> by_degree(const CategoryPresentation& P) {
  std::map<int, std::vector<CellId>> out;
  for (const auto& [id, rec] : P.cells) out[rec.degree].push_back(id);
  return out;
}

}  // namespace

ValidationReport validate_globular(const CategoryPresentation& P) {
  ValidationReport rep;
  const auto layers = by_degree(P);

  for (const auto& [id, rec] : P.cells) {
    if (rec.degree >= 2) {
      rep.bump("globularity");
      VirtualCell w{id, 0};
      if (!(P.vdom(P.vdom(w)) == P.vdom(P.vcod(w))))
        rep.add("globularity", {id}, "d(d x) != d(c x)");
      if (!(P.vcod(P.vcod(w)) == P.vcod(P.vdom(w))))
        rep.add("globularity", {id}, "c(c x) != c(d x)");
    }
    if (rec.identity_of) {
      rep.bump("identity-boundaries");
      if (!(rec.dom && *rec.dom == *rec.identity_of && rec.cod && *rec.cod == *rec.identity_of))
        rep.add("identity-boundaries", {id}, "d e != 1 or c e != 1 at '" + id + "'");
    }
  }

  // Totality of the composition tables on composable pairs.
  for (const auto& [deg, ids] : layers) {
    if (deg < 1) continue;
    for (int k = 1; k <= deg; ++k) {
      for (const auto& f : ids) {
        for (const auto& g : ids) {
          if (!(P.vdom({f, 0}, k) == P.vcod({g, 0}, k))) continue;
          rep.bump("composition-totality");
          if (!P.composition.count({k, f, g}))
            rep.add("composition-totality", {f, g},
                    "missing entry " + f + " o_" + std::to_string(k) + " " + g);
        }
      }
    }
  }

  // Entries must be composable and carry the boundaries forced by the laws.
  for (const auto& [key, res] : P.composition) {
    rep.bump("composition-boundaries");
    const auto [k, f, g] = std::tuple{key.k, key.left, key.right};
    const int deg = P.degree_of(f);
    if (P.degree_of(g) != deg || P.degree_of(res) != deg || k > deg) {
      rep.add("composition-boundaries", {f, g, res}, "degree mismatch in entry");
      continue;
    }
    if (!(P.vdom({f, 0}, k) == P.vcod({g, 0}, k))) {
      rep.add("composition-boundaries", {f, g}, "entry for non-composable pair");
      continue;
    }
    VirtualCell h{res, 0};
    VirtualCell want_dom = k == 1 ? P.vdom({g, 0})
                                  : P.try_compose(k - 1, P.vdom({f, 0}), P.vdom({g, 0}))
                                        .value_or(VirtualCell{"?", 0});
    VirtualCell want_cod = k == 1 ? P.vcod({f, 0})
                                  : P.try_compose(k - 1, P.vcod({f, 0}), P.vcod({g, 0}))
                                        .value_or(VirtualCell{"?", 0});
    if (deg == k) {
      // composition along objects: boundaries come from the outer factors
      want_dom = P.vdom({g, 0});
      want_cod = P.vcod({f, 0});
      if (k > 1) {
        // d h = d f o_{k-1} d g still holds; both prescriptions agree for k = deg
        auto dd = P.try_compose(k - 1, P.vdom({f, 0}), P.vdom({g, 0}));
        if (dd) want_dom = *dd;
        auto cc = P.try_compose(k - 1, P.vcod({f, 0}), P.vcod({g, 0}));
        if (cc) want_cod = *cc;
      }
    }
    if (!(P.vdom(h) == want_dom))
      rep.add("composition-boundaries", {f, g, res}, "composite has wrong dom");
    if (!(P.vcod(h) == want_cod))
      rep.add("composition-boundaries", {f, g, res}, "composite has wrong cod");
  }
  return rep;
}

ValidationReport validate_strict(const CategoryPresentation& P) {
  ValidationReport rep;
  const auto layers = by_degree(P);

  // Unit laws at every depth.
  for (const auto& [deg, ids] : layers) {
    for (const auto& id : ids) {
      VirtualCell f{id, 0};
      for (int k = 1; k <= deg; ++k) {
        rep.bump("unit-law");
        auto lu = P.try_compose(k, P.videntity(P.vcod(f, k), k), f);
        auto ru = P.try_compose(k, f, P.videntity(P.vdom(f, k), k));
        if (!lu || !(*lu == f))
          rep.add("unit-law", {id}, "e^k c^k f o_" + std::to_string(k) + " f != f");
        if (!ru || !(*ru == f))
          rep.add("unit-law", {id}, "f o_" + std::to_string(k) + " e^k d^k f != f");
      }
    }
  }

  // Associativity: for entries f o_k g and g o_k h, compare both bracketings.
  for (const auto& [key, fg] : P.composition) {
    const int deg = P.degree_of(key.left);
    for (const auto& h : layers.at(deg)) {
      if (!(P.vdom({key.right, 0}, key.k) == P.vcod({h, 0}, key.k))) continue;
      rep.bump("associativity");
      auto gh = P.try_compose(key.k, {key.right, 0}, {h, 0});
      auto l = gh ? P.try_compose(key.k, {key.left, 0}, *gh) : std::nullopt;
      auto r = P.try_compose(key.k, {fg, 0}, {h, 0});
      if (!l || !r || !(*l == *r))
        rep.add("associativity", {key.left, key.right, h},
                "(f o g) o h != f o (g o h) at k=" + std::to_string(key.k));
    }
  }

  // Interchange: (f o_k f') o_j (g o_k g') = (f o_j g) o_k (f' o_j g'), k < j.
  {
    std::map<int, std::vector<std::pair<CompositionKey, CellId>>> entries_by_k;
    for (const auto& [key, res] : P.composition) entries_by_k[key.k].push_back({key, res});
    for (const auto& [k, entries] : entries_by_k) {
      for (const auto& [key1, u] : entries) {
        const int deg = P.degree_of(key1.left);
        for (const auto& [key2, v] : entries) {
          if (P.degree_of(key2.left) != deg) continue;
          for (int j = k + 1; j <= deg; ++j) {
            if (!(P.vdom({u, 0}, j) == P.vcod({v, 0}, j))) continue;
            rep.bump("interchange");
            auto lhs = P.try_compose(j, {u, 0}, {v, 0});
            auto fg = P.try_compose(j, {key1.left, 0}, {key2.left, 0});
            auto fpgp = P.try_compose(j, {key1.right, 0}, {key2.right, 0});
            auto rhs = (fg && fpgp) ? P.try_compose(k, *fg, *fpgp) : std::nullopt;
            if (!lhs || !rhs || !(*lhs == *rhs))
              rep.add("interchange", {key1.left, key1.right, key2.left, key2.right},
                      "interchange fails at k=" + std::to_string(k) + ", j=" + std::to_string(j));
          }
        }
      }
    }
  }

  // Strict preservation of identities by horizontal composites:
  // e f o_{k+1} e g = e (f o_k g) whenever both sides stay below truncation.
  for (const auto& [key, res] : P.composition) {
    if (P.degree_of(res) >= P.truncation) continue;
    rep.bump("identity-preservation");
    auto lhs = P.try_compose(key.k + 1, P.videntity({key.left, 0}), P.videntity({key.right, 0}));
    if (!lhs || !(*lhs == P.videntity({res, 0})))
      rep.add("identity-preservation", {key.left, key.right},
              "e f o_" + std::to_string(key.k + 1) + " e g != e (f o_" +
                  std::to_string(key.k) + " g)");
  }
  return rep;
}

std::vector<VirtualCell> virtual_hom_cells(const CategoryPresentation& P, const CellId& b,
                                           const CellId& a, int r) {
  std::vector<VirtualCell> out;
  if (r + 1 <= P.truncation) {
    for (const auto& f : P.hom_cells(b, a, r)) out.push_back({f, 0});
  } else if (P.truncation >= 1) {
    const int top = P.truncation - 1;
    for (const auto& f : P.hom_cells(b, a, top)) out.push_back({f, r - top});
  }
  return out;
}

VirtualCell compose(const CategoryPresentation& P, int k, const VirtualCell& f,
                    const VirtualCell& g) {
  auto fn = P.normalize(f);
  auto gn = P.normalize(g);
  if (P.vdegree(fn) != P.vdegree(gn))
    throw domain_error("compose: degree mismatch of " + to_string(f) + ", " + to_string(g));
  auto res = P.try_compose(k, fn, gn);
  if (!res)
    throw domain_error("compose: " + to_string(f) + " o_" + std::to_string(k) + " " +
                       to_string(g) + " is not defined in '" + P.name + "'");
  return *res;
}

VirtualCell horizontal(const CategoryPresentation& P, const VirtualCell& g,
                       const VirtualCell& f) {
  auto gn = P.normalize(g);
  auto fn = P.normalize(f);
  const int dg = P.vdegree(gn), df = P.vdegree(fn);
  if (dg < 1 || df < 1 || !(P.vdom(gn, dg) == P.vcod(fn, df)))
    throw domain_error("horizontal: " + to_string(g) + " * " + to_string(f) +
                       " is not horizontally composable");
  const int m = std::max(dg, df);
  return compose(P, m, P.videntity(gn, m - dg), P.videntity(fn, m - df));
}

CategoryPresentation hom_category(const CategoryPresentation& P, const CellId& x,
                                  const CellId& y) {
  const int q = P.degree_of(x);
  if (P.degree_of(y) != q) throw domain_error("hom_category: degree mismatch");

  CategoryPresentation H;
  H.name = P.name + "(" + x + "," + y + ")";
  H.truncation = std::max(0, P.truncation - q - 1);
  if (q >= 1) {
    // Non-parallel higher cells have an empty hom-set.
    if (!(P.vdom({x, 0}) == P.vdom({y, 0})) || !(P.vcod({x, 0}) == P.vcod({y, 0}))) return H;
  }

  std::set<CellId> member;
  for (int r = 0; r + q + 1 <= P.truncation; ++r)
    for (const auto& id : P.hom_cells(x, y, r)) member.insert(id);

  for (const auto& id : member) {
    const auto& rec = P.record(id);
    CellRecord out;
    out.id = id;
    out.degree = rec.degree - q - 1;
    if (out.degree > 0) {
      out.dom = *rec.dom;
      out.cod = *rec.cod;
    }
    if (rec.identity_of && member.count(*rec.identity_of)) out.identity_of = rec.identity_of;
    H.cells[id] = out;
  }
  for (const auto& [z, ez] : P.identity_map)
    if (member.count(z) && member.count(ez) && H.cells[z].degree < H.truncation)
      H.identity_map[z] = ez;
  for (const auto& [key, res] : P.composition) {
    if (!member.count(key.left) || !member.count(key.right)) continue;
    if (key.k > H.cells.at(key.left).degree) continue;  // joins below the hom-objects
    H.composition[key] = res;
  }
  return H;
}

CategoryPresentation opposite(const CategoryPresentation& P) {
  CategoryPresentation O;
  O.name = P.name + "^op";
  O.truncation = P.truncation;
  O.cells = P.cells;
  O.identity_map = P.identity_map;
  for (auto& [id, rec] : O.cells)
    if (rec.degree == 1) std::swap(rec.dom, rec.cod);
  for (const auto& [key, res] : P.composition) {
    if (key.k == P.degree_of(key.left))
      O.composition[{key.k, key.right, key.left}] = res;
    else
      O.composition[key] = res;
  }
  return O;
}

CategoryPresentation level_category(const CategoryPresentation& P, int n) {
  if (n < 0 || n > P.truncation) throw domain_error("level_category: level out of range");
  CategoryPresentation L;
  L.name = P.name + "|level" + std::to_string(n);
  L.truncation = 1;

  for (const auto& obj : P.objects()) {
    CellRecord rec;
    rec.id = obj;
    L.cells[obj] = rec;
  }
  if (n == 0) {
    // Degenerate level: the discrete category on objects.
    for (const auto& obj : P.objects()) {
      CellRecord rec;
      rec.id = "e(" + obj + ")";
      rec.degree = 1;
      rec.dom = rec.cod = obj;
      rec.identity_of = obj;
      L.cells[rec.id] = rec;
      L.identity_map[obj] = rec.id;
      L.composition[{1, rec.id, rec.id}] = rec.id;
    }
    return L;
  }

  auto arrows = P.cells_of_degree(n);
  for (const auto& a : arrows) {
    CellRecord rec;
    rec.id = a;
    rec.degree = 1;
    rec.dom = P.vdom({a, 0}, n).cell;
    rec.cod = P.vcod({a, 0}, n).cell;
    // a is e^n(z) for an object z iff its identity_of chain descends to degree 0
    CellId cur = a;
    bool tower = true;
    for (int i = 0; i < n && tower; ++i) {
      const auto& r = P.record(cur);
      if (r.identity_of)
        cur = *r.identity_of;
      else
        tower = false;
    }
    if (tower) {
      rec.identity_of = cur;
      L.identity_map[cur] = a;
    }
    L.cells[a] = rec;
  }
  for (const auto& f : arrows)
    for (const auto& g : arrows) {
      auto res = P.try_compose(n, {f, 0}, {g, 0});
      if (res) L.composition[{1, f, g}] = res->cell;
    }
  return L;
}

AmbientExtension ambient_extend(const CategoryPresentation& P) {
  AmbientExtension ext;
  CategoryPresentation& A = ext.category;
  A.name = P.name + "+ambient";
  A.truncation = P.truncation + 1;
  ext.alpha = "@src";
  ext.beta = "@tgt";
  while (P.has_cell(ext.alpha)) ext.alpha += "_";
  while (P.has_cell(ext.beta)) ext.beta += "_";

  for (const auto& [id, rec] : P.cells) {
    CellRecord out = rec;
    out.degree = rec.degree + 1;
    if (rec.degree == 0) {
      out.dom = ext.alpha;
      out.cod = ext.beta;
    }
    A.cells[id] = out;
  }
  A.identity_map = P.identity_map;
  A.composition = P.composition;

  // Identity towers over the two fresh objects.
  auto make_tower = [&](const CellId& base) {
    CellRecord obj;
    obj.id = base;
    A.cells[base] = obj;
    CellId below = base;
    for (int d = 1; d <= A.truncation; ++d) {
      CellRecord rec;
      rec.id = base + ".e" + std::to_string(d);
      rec.degree = d;
      rec.dom = rec.cod = below;
      rec.identity_of = below;
      A.cells[rec.id] = rec;
      A.identity_map[below] = rec.id;
      below = rec.id;
    }
  };
  make_tower(ext.alpha);
  make_tower(ext.beta);

  // Tower self-composites and unit composites with shifted cells.
  for (const CellId& base : {ext.alpha, ext.beta}) {
    CellId cur = base;
    for (int d = 1; d <= A.truncation; ++d) {
      cur = A.identity_map.count(cur) ? A.identity_map.at(cur) : cur + ".e" + std::to_string(d);
      for (int k = 1; k <= d; ++k) A.composition[{k, cur, cur}] = cur;
    }
  }
  for (const auto& [id, rec] : P.cells) {
    const int d = rec.degree + 1;
    CellId ea = ext.alpha, eb = ext.beta;
    for (int i = 1; i <= d; ++i) {
      ea = A.identity_map.at(ea);
      eb = A.identity_map.at(eb);
    }
    A.composition[{d, id, ea}] = id;
    A.composition[{d, eb, id}] = id;
  }
  return ext;
}

CategoryPresentation approximation(const CategoryPresentation& P, int n,
                                   const std::vector<std::vector<CellId>>& level_classes) {
  if (n < 0 || n > P.truncation) throw domain_error("approximation: level out of range");

  std::map<CellId, CellId> cls;  // member -> representative (lexicographic min)
  for (const auto& c : level_classes) {
    if (c.empty()) throw domain_error("approximation: empty class");
    CellId rep = *std::min_element(c.begin(), c.end());
    for (const auto& m : c) {
      if (P.degree_of(m) != n) throw domain_error("approximation: class member off-level");
      if (cls.count(m)) throw domain_error("approximation: overlapping classes");
      cls[m] = rep;
    }
  }
  for (const auto& id : P.cells_of_degree(n))
    if (!cls.count(id)) throw domain_error("approximation: partition misses '" + id + "'");

  CategoryPresentation Q;
  Q.name = P.name + "^(" + std::to_string(n) + ")";
  Q.truncation = n;

  for (const auto& [id, rec] : P.cells) {
    if (rec.degree < n) Q.cells[id] = rec;
  }

  // Class cells at level n. Members must be parallel for boundaries to drop.
  std::map<CellId, CellRecord> class_cells;
  for (const auto& [m, rep] : cls) {
    const auto& rec = P.record(m);
    auto it = class_cells.find(rep);
    if (it == class_cells.end()) {
      CellRecord out;
      out.id = rep;
      out.degree = n;
      if (n > 0) {
        out.dom = rec.dom;
        out.cod = rec.cod;
      }
      class_cells[rep] = out;
    } else if (it->second.dom != rec.dom || it->second.cod != rec.cod) {
      throw domain_error("quotient-not-well-defined: class of '" + rep +
                         "' contains non-parallel cells ('" + m + "')");
    }
  }
  // Identities: the class of e(z) is the identity on z.
  for (const auto& [m, rep] : cls) {
    const auto& rec = P.record(m);
    if (!rec.identity_of) continue;
    auto& out = class_cells[rep];
    if (out.identity_of && *out.identity_of != *rec.identity_of)
      throw domain_error("quotient-not-well-defined: class of '" + rep +
                         "' is an identity of two distinct cells");
    out.identity_of = rec.identity_of;
  }
  for (auto& [rep, rec] : class_cells) {
    Q.cells[rep] = rec;
    if (rec.identity_of) Q.identity_map[*rec.identity_of] = rep;
  }
  for (const auto& [z, ez] : P.identity_map)
    if (P.degree_of(z) < n - 1) Q.identity_map[z] = ez;

  for (const auto& [key, res] : P.composition) {
    const int deg = P.degree_of(key.left);
    if (deg < n) {
      Q.composition[key] = res;
    } else if (deg == n) {
      CompositionKey qk{key.k, cls.at(key.left), cls.at(key.right)};
      CellId qres = cls.at(res);
      auto it = Q.composition.find(qk);
      if (it != Q.composition.end() && it->second != qres)
        throw domain_error("quotient-not-well-defined: [" + key.left + "] o_" +
                           std::to_string(key.k) + " [" + key.right +
                           "] has representatives with inequivalent composites");
      Q.composition[qk] = qres;
    }
  }
  return Q;
}

}  // namespace omegacat
