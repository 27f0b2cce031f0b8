// Assembles finite sub-2-categories of Cat: objects are small concrete
// categories, 1-cells all functors, 2-cells all natural transformations,
// with strict functor composition, vertical and Godement composites.

#include <algorithm>
#include <functional>
#include <memory>

#include "omegacat/fixtures.hpp"

namespace omegacat::fixtures {

namespace {

struct TinyCat {
  std::string name;
  std::vector<std::string> objs;
  struct Arrow {
    std::string id, dom, cod;
  };
  std::vector<Arrow> arrows;                           // identities included
  std::map<std::string, std::string> ident;            // obj -> identity arrow
  std::map<std::pair<std::string, std::string>, std::string> comp;  // (f, g) -> f o g

  const Arrow& arrow(const std::string& id) const {
    for (const auto& a : arrows)
      if (a.id == id) return a;
    throw domain_error("tinycat '" + name + "': unknown arrow '" + id + "'");
  }
  std::string compose(const std::string& f, const std::string& g) const {
    auto it = comp.find({f, g});
    if (it == comp.end())
      throw domain_error("tinycat '" + name + "': no composite " + f + " o " + g);
    return it->second;
  }
};

TinyCat tiny_terminal(const std::string& name, const std::string& obj) {
  TinyCat C;
  C.name = name;
  C.objs = {obj};
  C.arrows = {{"1" + obj, obj, obj}};
  C.ident[obj] = "1" + obj;
  C.comp[{"1" + obj, "1" + obj}] = "1" + obj;
  return C;
}

TinyCat tiny_discrete(const std::string& name, const std::vector<std::string>& objs) {
  TinyCat C;
  C.name = name;
  C.objs = objs;
  for (const auto& o : objs) {
    C.arrows.push_back({"1" + o, o, o});
    C.ident[o] = "1" + o;
    C.comp[{"1" + o, "1" + o}] = "1" + o;
  }
  return C;
}

TinyCat tiny_interval() {
  TinyCat C;
  C.name = "CI";
  C.objs = {"0", "1"};
  C.arrows = {{"10", "0", "0"}, {"11", "1", "1"}, {"s", "0", "1"}};
  C.ident["0"] = "10";
  C.ident["1"] = "11";
  C.comp[{"10", "10"}] = "10";
  C.comp[{"11", "11"}] = "11";
  C.comp[{"s", "10"}] = "s";
  C.comp[{"11", "s"}] = "s";
  return C;
}

TinyCat tiny_z2() {
  TinyCat C;
  C.name = "CG";
  C.objs = {"b"};
  C.arrows = {{"e", "b", "b"}, {"u", "b", "b"}};
  C.ident["b"] = "e";
  C.comp[{"e", "e"}] = "e";
  C.comp[{"e", "u"}] = "u";
  C.comp[{"u", "e"}] = "u";
  C.comp[{"u", "u"}] = "e";
  return C;
}

TinyCat tiny_empty() {
  TinyCat C;
  C.name = "CZ";
  return C;
}

struct TinyFun {
  const TinyCat* src = nullptr;
  const TinyCat* tgt = nullptr;
  std::map<std::string, std::string> o;  // object images
  std::map<std::string, std::string> a;  // arrow images
};

std::string fun_id(const TinyFun& F) {
  std::string id = "F#" + F.src->name + ">" + F.tgt->name + "#";
  for (const auto& [x, y] : F.o) id += y + ",";
  id += "#";
  for (const auto& [x, y] : F.a) id += y + ",";
  return id;
}

std::vector<TinyFun> tiny_functors(const TinyCat& A, const TinyCat& B) {
  std::vector<TinyFun> out;
  std::vector<std::string> nonid;
  for (const auto& ar : A.arrows)
    if (A.ident.at(ar.dom) != ar.id) nonid.push_back(ar.id);

  TinyFun cur;
  cur.src = &A;
  cur.tgt = &B;
  std::function<void(std::size_t)> fill_arrows = [&](std::size_t i) {
    if (i == nonid.size()) {
      // functors preserve identities strictly; composition must match
      for (const auto& o : A.objs) cur.a[A.ident.at(o)] = B.ident.at(cur.o.at(o));
      bool ok = true;
      for (const auto& [fg, h] : A.comp)
        if (cur.a.count(fg.first) && cur.a.count(fg.second) &&
            B.compose(cur.a.at(fg.first), cur.a.at(fg.second)) != cur.a.at(h))
          ok = false;
      if (ok) out.push_back(cur);
      for (const auto& o : A.objs) cur.a.erase(A.ident.at(o));
      return;
    }
    const auto& ar = A.arrow(nonid[i]);
    for (const auto& br : B.arrows) {
      if (br.dom != cur.o.at(ar.dom) || br.cod != cur.o.at(ar.cod)) continue;
      cur.a[ar.id] = br.id;
      fill_arrows(i + 1);
    }
    cur.a.erase(ar.id);
  };
  std::function<void(std::size_t)> fill_objs = [&](std::size_t i) {
    if (i == A.objs.size()) {
      fill_arrows(0);
      return;
    }
    if (B.objs.empty()) return;
    for (const auto& b : B.objs) {
      cur.o[A.objs[i]] = b;
      fill_objs(i + 1);
    }
    cur.o.erase(A.objs[i]);
  };
  if (!A.objs.empty() && B.objs.empty()) return out;  // no functors into the empty category
  fill_objs(0);
  return out;
}

using NTComps = std::map<std::string, std::string>;  // object -> target arrow

std::string nt_id(const std::string& fid, const std::string& gid, const NTComps& c) {
  std::string id = "n#" + fid + "=>" + gid + "#";
  for (const auto& [x, y] : c) id += y + ",";
  return id;
}

std::vector<NTComps> tiny_nts(const TinyFun& F, const TinyFun& G) {
  const TinyCat& A = *F.src;
  const TinyCat& B = *F.tgt;
  std::vector<NTComps> out;
  NTComps cur;
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i == A.objs.size()) {
      for (const auto& ar : A.arrows) {
        // G(f) o tau_x == tau_y o F(f)
        if (B.compose(G.a.at(ar.id), cur.at(ar.dom)) !=
            B.compose(cur.at(ar.cod), F.a.at(ar.id)))
          return;
      }
      out.push_back(cur);
      return;
    }
    const auto& x = A.objs[i];
    for (const auto& br : B.arrows) {
      if (br.dom != F.o.at(x) || br.cod != G.o.at(x)) continue;
      cur[x] = br.id;
      fill(i + 1);
      cur.erase(x);
    }
  };
  fill(0);
  return out;
}

struct Assembled {
  std::vector<TinyCat> cats;  // owns the categories the functor pointers use
  CategoryPresentation P;
  std::map<std::string, std::vector<TinyFun>> funs;        // "A>B" -> functors
  std::map<std::string, CellId> fun_cells;                 // fun_id -> cell
  std::map<std::string, CellId> nt_cells;                  // nt_id -> cell
};

std::unique_ptr<Assembled> assemble(const std::string& name, std::vector<TinyCat> cats_in) {
  auto out_holder = std::make_unique<Assembled>();
  Assembled& out = *out_holder;
  out.cats = std::move(cats_in);
  const auto& cats = out.cats;
  CategoryPresentation& P = out.P;
  P.name = name;
  P.truncation = 2;

  for (const auto& C : cats) {
    CellRecord rec;
    rec.id = C.name;
    P.cells[C.name] = rec;
  }

  // 1-cells: all functors.
  for (const auto& A : cats)
    for (const auto& B : cats) {
      auto fs = tiny_functors(A, B);
      for (const auto& F : fs) {
        CellId id = fun_id(F);
        CellRecord rec;
        rec.id = id;
        rec.degree = 1;
        rec.dom = A.name;
        rec.cod = B.name;
        bool is_ident = A.name == B.name;
        if (is_ident)
          for (const auto& [x, y] : F.o) is_ident = is_ident && x == y;
        if (is_ident)
          for (const auto& [x, y] : F.a) is_ident = is_ident && x == y;
        if (is_ident) {
          rec.identity_of = A.name;
          P.identity_map[A.name] = id;
        }
        P.cells[id] = rec;
        out.fun_cells[id] = id;
      }
      out.funs[A.name + ">" + B.name] = std::move(fs);
    }

  // 2-cells: all natural transformations.
  struct NTCell {
    const TinyFun* F;
    const TinyFun* G;
    NTComps comps;
  };
  std::vector<NTCell> nts;
  for (const auto& [key, fs] : out.funs)
    for (const auto& F : fs)
      for (const auto& G : fs) {
        if (F.src != G.src || F.tgt != G.tgt) continue;
        for (const auto& comps : tiny_nts(F, G)) {
          CellId fid = fun_id(F), gid = fun_id(G);
          CellId id = nt_id(fid, gid, comps);
          CellRecord rec;
          rec.id = id;
          rec.degree = 2;
          rec.dom = fid;
          rec.cod = gid;
          bool is_ident = fid == gid;
          if (is_ident)
            for (const auto& [x, y] : comps)
              is_ident = is_ident && y == F.tgt->ident.at(F.o.at(x));
          if (is_ident) {
            rec.identity_of = fid;
            P.identity_map[fid] = id;
          }
          P.cells[id] = rec;
          out.nt_cells[id] = id;
          nts.push_back({&F, &G, comps});
        }
      }

  // o_1 on functors: composition.
  for (const auto& A : cats)
    for (const auto& B : cats)
      for (const auto& C : cats)
        for (const auto& G : out.funs.at(B.name + ">" + C.name))
          for (const auto& F : out.funs.at(A.name + ">" + B.name)) {
            TinyFun GF;
            GF.src = &A;
            GF.tgt = &C;
            for (const auto& [x, y] : F.o) GF.o[x] = G.o.at(y);
            for (const auto& [x, y] : F.a) GF.a[x] = G.a.at(y);
            P.composition[{1, fun_id(G), fun_id(F)}] = fun_id(GF);
          }

  // o_1 on transformations: vertical, componentwise in the target.
  for (const auto& n2 : nts)
    for (const auto& n1 : nts) {
      if (fun_id(*n2.F) != fun_id(*n1.G)) continue;
      NTComps c;
      for (const auto& [x, y] : n1.comps) c[x] = n1.F->tgt->compose(n2.comps.at(x), y);
      P.composition[{1, nt_id(fun_id(*n2.F), fun_id(*n2.G), n2.comps),
                     nt_id(fun_id(*n1.F), fun_id(*n1.G), n1.comps)}] =
          nt_id(fun_id(*n1.F), fun_id(*n2.G), c);
    }

  // o_2: Godement product (beta * alpha)(x) = beta_{G x} o H(alpha_x).
  for (const auto& nb : nts)
    for (const auto& na : nts) {
      if (nb.F->src != na.F->tgt) continue;
      const TinyFun& H = *nb.F;
      NTComps c;
      for (const auto& [x, y] : na.comps)
        c[x] = nb.F->tgt->compose(nb.comps.at(na.G->o.at(x)), H.a.at(y));
      TinyFun HF, KG;
      HF.src = na.F->src;
      HF.tgt = nb.F->tgt;
      for (const auto& [x, y] : na.F->o) HF.o[x] = nb.F->o.at(y);
      for (const auto& [x, y] : na.F->a) HF.a[x] = nb.F->a.at(y);
      KG.src = na.G->src;
      KG.tgt = nb.G->tgt;
      for (const auto& [x, y] : na.G->o) KG.o[x] = nb.G->o.at(y);
      for (const auto& [x, y] : na.G->a) KG.a[x] = nb.G->a.at(y);
      P.composition[{2, nt_id(fun_id(*nb.F), fun_id(*nb.G), nb.comps),
                     nt_id(fun_id(*na.F), fun_id(*na.G), na.comps)}] =
          nt_id(fun_id(HF), fun_id(KG), c);
    }
  return out_holder;
}

// Resolves the functor with the given object/arrow images to its cell id.
CellId find_fun(const Assembled& A, const std::string& src, const std::string& tgt,
                const std::map<std::string, std::string>& o,
                const std::map<std::string, std::string>& arrows) {
  for (const auto& F : A.funs.at(src + ">" + tgt)) {
    if (F.o != o) continue;
    bool ok = true;
    for (const auto& [x, y] : arrows) ok = ok && F.a.at(x) == y;
    if (ok) return fun_id(F);
  }
  throw domain_error("fixture: functor not found " + src + ">" + tgt);
}

}  // namespace

TwoCatFixture cat2six() {
  const TinyCat CZ = tiny_empty();
  const TinyCat CT = tiny_terminal("CT", "t");
  const TinyCat CU = tiny_terminal("CU", "w");
  const TinyCat CD = tiny_discrete("CD", {"x0", "x1"});
  const TinyCat CI = tiny_interval();
  const TinyCat CG = tiny_z2();
  auto Ap = assemble("Cat2Six", {CZ, CT, CU, CD, CI, CG});
  Assembled& A = *Ap;

  TwoCatFixture out;
  out.named["T"] = "CT";
  out.named["U"] = "CU";
  out.named["I"] = "CI";
  out.named["G"] = "CG";
  out.named["D"] = "CD";
  out.named["Z"] = "CZ";
  out.named["F_e"] = find_fun(A, "CI", "CG", {{"0", "b"}, {"1", "b"}}, {{"s", "e"}});
  out.named["F_u"] = find_fun(A, "CI", "CG", {{"0", "b"}, {"1", "b"}}, {{"s", "u"}});
  // alpha : F_e -> F_u with components (e, u); the equalizer selects object 0
  {
    NTComps comps{{"0", "e"}, {"1", "u"}};
    out.named["alpha"] = nt_id(out.named["F_e"], out.named["F_u"], comps);
    if (!A.P.has_cell(out.named["alpha"])) throw domain_error("fixture: alpha not found");
  }
  out.named["bang_I"] = find_fun(A, "CI", "CT", {{"0", "t"}, {"1", "t"}}, {{"s", "1t"}});
  out.named["id_I"] = A.P.identity_map.at("CI");
  out.named["c0"] = find_fun(A, "CT", "CI", {{"t", "0"}}, {});
  out.named["cb"] = find_fun(A, "CT", "CG", {{"t", "b"}}, {});
  out.category = std::move(A.P);
  return out;
}

TwoCatFixture weak_pb() {
  const TinyCat CT = tiny_terminal("CT", "t");
  const TinyCat CD = tiny_discrete("CD", {"x0", "x1"});
  // the weak pullback of CD -> CT <- CT: 5-tuples (A, B, C, f, g) with A in
  // CD, B = C = t and f, g the only isomorphisms available
  const TinyCat CW = tiny_discrete("CW", {"w(x0.t.t.1.1)", "w(x1.t.t.1.1)"});
  auto Ap = assemble("WeakPB", {CT, CD, CW});
  Assembled& A = *Ap;

  TwoCatFixture out;
  out.named["T"] = "CT";
  out.named["D"] = "CD";
  out.named["W"] = "CW";
  out.named["bang_D"] = find_fun(A, "CD", "CT", {{"x0", "t"}, {"x1", "t"}}, {});
  out.named["id_T"] = A.P.identity_map.at("CT");
  out.named["bang_W"] = find_fun(A, "CW", "CT",
                                 {{"w(x0.t.t.1.1)", "t"}, {"w(x1.t.t.1.1)", "t"}}, {});
  out.named["p1"] = find_fun(A, "CW", "CD",
                             {{"w(x0.t.t.1.1)", "x0"}, {"w(x1.t.t.1.1)", "x1"}}, {});
  out.category = std::move(A.P);
  return out;
}

}  // namespace omegacat::fixtures
