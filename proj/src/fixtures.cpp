#include "omegacat/fixtures.hpp"

#include <algorithm>

namespace omegacat::fixtures {

namespace {

struct Builder {
  CategoryPresentation P;

  Builder(std::string name, int truncation) {
    P.name = std::move(name);
    P.truncation = truncation;
  }
  void obj(const CellId& id) {
    CellRecord rec;
    rec.id = id;
    P.cells[id] = rec;
  }
  void cell(const CellId& id, int degree, const CellId& dom, const CellId& cod) {
    CellRecord rec;
    rec.id = id;
    rec.degree = degree;
    rec.dom = dom;
    rec.cod = cod;
    P.cells[id] = rec;
  }
  void ident(const CellId& id, const CellId& of) {
    CellRecord rec;
    rec.id = id;
    rec.degree = P.cells.at(of).degree + 1;
    rec.dom = of;
    rec.cod = of;
    rec.identity_of = of;
    P.cells[id] = rec;
    P.identity_map[of] = id;
  }
  void comp(int k, const CellId& f, const CellId& g, const CellId& h) {
    P.composition[{k, f, g}] = h;
  }
};

}  // namespace

CategoryPresentation iso1() {
  Builder b("Iso1", 1);
  b.obj("a");
  b.obj("b");
  b.cell("f", 1, "a", "b");
  b.cell("g", 1, "b", "a");
  b.ident("id_a", "a");
  b.ident("id_b", "b");
  b.comp(1, "g", "f", "id_a");
  b.comp(1, "f", "g", "id_b");
  b.comp(1, "f", "id_a", "f");
  b.comp(1, "id_b", "f", "f");
  b.comp(1, "g", "id_b", "g");
  b.comp(1, "id_a", "g", "g");
  b.comp(1, "id_a", "id_a", "id_a");
  b.comp(1, "id_b", "id_b", "id_b");
  return b.P;
}

CategoryPresentation discrete(int n) {
  Builder b("Discrete" + std::to_string(n), 1);
  for (int i = 0; i < n; ++i) {
    CellId o = "o" + std::to_string(i);
    b.obj(o);
    b.ident("e(" + o + ")", o);
    b.comp(1, "e(" + o + ")", "e(" + o + ")", "e(" + o + ")");
  }
  return b.P;
}

CategoryPresentation free_arrow() {
  Builder b("FreeArrow", 1);
  b.obj("a");
  b.obj("b");
  b.cell("h", 1, "a", "b");
  b.ident("id_a", "a");
  b.ident("id_b", "b");
  b.comp(1, "h", "id_a", "h");
  b.comp(1, "id_b", "h", "h");
  b.comp(1, "id_a", "id_a", "id_a");
  b.comp(1, "id_b", "id_b", "id_b");
  return b.P;
}

CategoryPresentation walking2() {
  Builder b("Walking2", 2);
  b.obj("a");
  b.obj("b");
  b.cell("f", 1, "a", "b");
  b.cell("g", 1, "a", "b");
  b.ident("id_a", "a");
  b.ident("id_b", "b");
  b.cell("sigma", 2, "f", "g");
  b.ident("e(f)", "f");
  b.ident("e(g)", "g");
  b.ident("e(id_a)", "id_a");
  b.ident("e(id_b)", "id_b");

  b.comp(1, "f", "id_a", "f");
  b.comp(1, "g", "id_a", "g");
  b.comp(1, "id_b", "f", "f");
  b.comp(1, "id_b", "g", "g");
  b.comp(1, "id_a", "id_a", "id_a");
  b.comp(1, "id_b", "id_b", "id_b");

  b.comp(1, "e(f)", "e(f)", "e(f)");
  b.comp(1, "e(g)", "e(g)", "e(g)");
  b.comp(1, "e(g)", "sigma", "sigma");
  b.comp(1, "sigma", "e(f)", "sigma");
  b.comp(1, "e(id_a)", "e(id_a)", "e(id_a)");
  b.comp(1, "e(id_b)", "e(id_b)", "e(id_b)");

  for (const char* x : {"e(f)", "e(g)", "sigma"}) {
    b.comp(2, x, "e(id_a)", x);
    b.comp(2, "e(id_b)", x, x);
  }
  b.comp(2, "e(id_a)", "e(id_a)", "e(id_a)");
  b.comp(2, "e(id_b)", "e(id_b)", "e(id_b)");
  return b.P;
}

CategoryPresentation bz2() {
  Builder b("BZ2", 2);
  b.obj("star");
  b.ident("i", "star");
  b.ident("one", "i");
  b.cell("t", 2, "i", "i");
  b.comp(1, "i", "i", "i");
  for (int k = 1; k <= 2; ++k) {
    b.comp(k, "one", "one", "one");
    b.comp(k, "one", "t", "t");
    b.comp(k, "t", "one", "t");
    b.comp(k, "t", "t", "one");
  }
  return b.P;
}

CategoryPresentation walk_eq2() {
  Builder b("WalkEq2", 2);
  b.obj("a");
  b.obj("b");
  b.cell("f", 1, "a", "b");
  b.cell("g", 1, "b", "a");
  b.cell("u", 1, "a", "a");  // g o f, idempotent
  b.cell("v", 1, "b", "b");  // f o g, idempotent
  b.ident("1a", "a");
  b.ident("1b", "b");

  // 1-cell composition
  auto c1 = [&](const CellId& x, const CellId& y, const CellId& r) { b.comp(1, x, y, r); };
  c1("1a", "1a", "1a");
  c1("1a", "u", "u");
  c1("u", "1a", "u");
  c1("u", "u", "u");
  c1("1b", "1b", "1b");
  c1("1b", "v", "v");
  c1("v", "1b", "v");
  c1("v", "v", "v");
  c1("f", "1a", "f");
  c1("f", "u", "f");
  c1("1b", "f", "f");
  c1("v", "f", "f");
  c1("g", "1b", "g");
  c1("g", "v", "g");
  c1("1a", "g", "g");
  c1("u", "g", "g");
  c1("g", "f", "u");
  c1("f", "g", "v");

  // Locally thin 2-level: a unique 2-cell p -> q whenever p, q are parallel
  // endo-1-cells (u ~ 1a, v ~ 1b) or p == q.
  std::map<std::pair<CellId, CellId>, CellId> two;
  auto add2 = [&](const CellId& p, const CellId& q) {
    if (p == q) {
      CellId id = "e(" + p + ")";
      b.ident(id, p);
      two[{p, q}] = id;
    } else {
      CellId id = "t(" + p + ">" + q + ")";
      b.cell(id, 2, p, q);
      two[{p, q}] = id;
    }
  };
  for (const char* p : {"1a", "u"})
    for (const char* q : {"1a", "u"}) add2(p, q);
  for (const char* p : {"1b", "v"})
    for (const char* q : {"1b", "v"}) add2(p, q);
  add2("f", "f");
  add2("g", "g");

  // Vertical and horizontal 2-cell tables, forced by thinness.
  for (const auto& [pq1, x] : two)
    for (const auto& [pq2, y] : two) {
      // x : p1 -> q1, y : p2 -> q2
      if (pq2.second == pq1.first) {  // o_1
        auto it = two.find({pq2.first, pq1.second});
        if (it != two.end()) b.comp(1, x, y, it->second);
      }
      const auto& px = b.P.cells.at(pq1.first);
      const auto& py = b.P.cells.at(pq2.first);
      if (*py.cod == *px.dom) {  // o_2
        CellId pp = b.P.composition.at({1, pq1.first, pq2.first});
        CellId qq = b.P.composition.at({1, pq1.second, pq2.second});
        b.comp(2, x, y, two.at({pp, qq}));
      }
    }
  return b.P;
}

namespace {

std::string bits_of(const std::vector<std::vector<int>>& m) {
  std::string bits;
  for (const auto& row : m)
    for (int x : row) bits += (x % 2) ? '1' : '0';
  return bits;
}

}  // namespace

CellId vec_f2_object(int n) { return "V" + std::to_string(n); }

CellId vec_f2_cell(int rows, int cols, const std::vector<std::vector<int>>& entries) {
  return "m" + std::to_string(rows) + "x" + std::to_string(cols) + "_" + bits_of(entries);
}

CategoryPresentation vec_f2(int dim) {
  Builder b("VecF2d" + std::to_string(dim), 1);
  for (int n = 0; n <= dim; ++n) b.obj(vec_f2_object(n));

  // All j x i matrices over F2, encoded row-major.
  auto matrix = [](int rows, int cols, unsigned code) {
    std::vector<std::vector<int>> m(rows, std::vector<int>(cols, 0));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m[r][c] = (code >> (r * cols + c)) & 1u;
    return m;
  };
  for (int i = 0; i <= dim; ++i)
    for (int j = 0; j <= dim; ++j) {
      const int nbits = i * j;
      for (unsigned code = 0; code < (1u << nbits); ++code) {
        auto m = matrix(j, i, code);
        CellId id = vec_f2_cell(j, i, m);
        if (i == j) {
          bool is_id = true;
          for (int r = 0; r < j; ++r)
            for (int c = 0; c < i; ++c)
              if (m[r][c] != (r == c ? 1 : 0)) is_id = false;
          if (is_id) {
            b.ident(id, vec_f2_object(i));
            continue;
          }
        }
        b.cell(id, 1, vec_f2_object(i), vec_f2_object(j));
      }
    }
  // Composition = matrix product mod 2.
  auto decode = [&](const CellId& id, int rows, int cols) {
    std::vector<std::vector<int>> m(rows, std::vector<int>(cols, 0));
    const std::string bits = id.substr(id.find('_') + 1);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m[r][c] = bits[r * cols + c] - '0';
    return m;
  };
  for (int i = 0; i <= dim; ++i)
    for (int j = 0; j <= dim; ++j)
      for (int k = 0; k <= dim; ++k) {
        // A : Vj -> Vk, B : Vi -> Vj, A*B : Vi -> Vk
        for (unsigned ca = 0; ca < (1u << (j * k)); ++ca)
          for (unsigned cb = 0; cb < (1u << (i * j)); ++cb) {
            auto A = matrix(k, j, ca);
            auto B = matrix(j, i, cb);
            std::vector<std::vector<int>> C(k, std::vector<int>(i, 0));
            for (int r = 0; r < k; ++r)
              for (int c = 0; c < i; ++c) {
                int s = 0;
                for (int t = 0; t < j; ++t) s ^= A[r][t] & B[t][c];
                C[r][c] = s;
              }
            b.comp(1, vec_f2_cell(k, j, A), vec_f2_cell(j, i, B), vec_f2_cell(k, i, C));
          }
      }
  (void)decode;
  return b.P;
}

CategoryPresentation one_object(int truncation) {
  Builder b("One" + std::to_string(truncation), truncation);
  b.obj("pt");
  CellId below = "pt";
  for (int d = 1; d <= truncation; ++d) {
    CellId id = "pt.e" + std::to_string(d);
    b.ident(id, below);
    below = id;
  }
  below = "pt";
  for (int d = 1; d <= truncation; ++d) {
    below = b.P.identity_map.at(below);
    for (int k = 1; k <= d; ++k) b.comp(k, below, below, below);
  }
  return b.P;
}

std::map<std::string, CategoryPresentation> corpus(int vecf2_dim) {
  std::map<std::string, CategoryPresentation> out;
  for (auto& P : {iso1(), discrete(2), discrete(3), free_arrow(), walking2(), bz2(),
                  walk_eq2(), vec_f2(std::min(vecf2_dim, 2)), one_object(0), one_object(2)})
    out[P.name] = P;
  if (vecf2_dim != 2 && vecf2_dim >= 0) {
    auto P = vec_f2(vecf2_dim);
    out[P.name] = P;
  }
  out["Cat2Six"] = cat2six().category;
  out["WeakPB"] = weak_pb().category;
  return out;
}

}  // namespace omegacat::fixtures
