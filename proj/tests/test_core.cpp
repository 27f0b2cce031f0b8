#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "omegacat/core.hpp"
#include "omegacat/fixtures.hpp"

using namespace omegacat;

namespace {

bool valid(const CategoryPresentation& P) {
  P.check_wellformed();
  return validate_globular(P).ok() && validate_strict(P).ok();
}

}  // namespace

TEST_CASE("fixtures pass the axiom suite") {
  for (const auto& [name, P] : fixtures::corpus()) {
    CAPTURE(name);
    P.check_wellformed();
    auto g = validate_globular(P);
    auto s = validate_strict(P);
    if (!g.ok()) FAIL(name, ": ", g.violations.front().law, " ", g.violations.front().detail);
    if (!s.ok()) FAIL(name, ": ", s.violations.front().law, " ", s.violations.front().detail);
  }
}

TEST_CASE("globular validation flags a wrong composite boundary") {
  auto P = fixtures::iso1();
  P.composition[{1, "g", "f"}] = "id_b";  // boundary of composite wrong
  auto rep = validate_globular(P);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations.front().law == "composition-boundaries");
}

TEST_CASE("globular validation flags a missing table entry") {
  auto P = fixtures::iso1();
  P.composition.erase({1, "g", "f"});
  auto rep = validate_globular(P);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations.front().law == "composition-totality");
}

TEST_CASE("strict validation flags a broken interchange") {
  auto P = fixtures::bz2();
  P.composition[{2, "t", "t"}] = "t";
  auto rep = validate_strict(P);
  REQUIRE_FALSE(rep.ok());
  bool interchange = false;
  for (const auto& v : rep.violations) interchange |= v.law == "interchange";
  CHECK(interchange);
}

TEST_CASE("compose reads the table and reduces virtual iterates") {
  auto P = fixtures::iso1();
  CHECK(compose(P, 1, {"g", 0}, {"f", 0}) == VirtualCell{"id_a", 0});
  // degree 2 > N: e(g) o_2 e(f) = e(g o_1 f)
  CHECK(compose(P, 2, {"g", 1}, {"f", 1}) == VirtualCell{"id_a", 1});
  auto B = fixtures::bz2();
  CHECK(compose(B, 2, {"t", 0}, {"t", 0}) == VirtualCell{"one", 0});
  CHECK_THROWS_AS(compose(P, 1, {"f", 0}, {"f", 0}), domain_error);
}

TEST_CASE("horizontal composites pad with identities") {
  auto P = fixtures::iso1();
  CHECK(horizontal(P, {"g", 0}, {"f", 0}) == VirtualCell{"id_a", 0});
  auto W = fixtures::walking2();
  CHECK(horizontal(W, {"sigma", 0}, {"e(id_a)", 0}) == VirtualCell{"sigma", 0});
  CHECK(horizontal(W, {"sigma", 0}, {"id_a", 0}) == VirtualCell{"sigma", 0});
  auto B = fixtures::bz2();
  CHECK(horizontal(B, {"t", 0}, {"t", 0}) == VirtualCell{"one", 0});
}

TEST_CASE("hom_category re-grades and restricts") {
  auto W = fixtures::walking2();
  auto H = hom_category(W, "f", "g");
  CHECK(H.truncation == 0);
  CHECK(H.cells.size() == 1);
  CHECK(H.cells.count("sigma") == 1);
  CHECK(H.cells.at("sigma").degree == 0);

  auto Hab = hom_category(W, "a", "b");
  CHECK(Hab.truncation == 1);
  CHECK(Hab.cells.size() == 5);  // f, g, sigma, e(f), e(g)
  CHECK(Hab.cells.at("sigma").degree == 1);
  CHECK(valid(Hab));

  auto I = fixtures::iso1();
  auto empty = hom_category(I, "f", "g");  // non-parallel
  CHECK(empty.cells.empty());
}

TEST_CASE("opposite swaps degree-1 boundaries and the deepest table") {
  auto P = fixtures::iso1();
  auto O = opposite(P);
  CHECK(*O.cells.at("f").dom == "b");
  CHECK(*O.cells.at("f").cod == "a");
  CHECK(compose(O, 1, {"f", 0}, {"g", 0}) == VirtualCell{"id_a", 0});
  CHECK(valid(O));

  auto W = fixtures::walking2();
  auto OW = opposite(W);
  CHECK(*OW.cells.at("sigma").dom == "f");  // degree 2 untouched
  CHECK(valid(OW));

  for (const auto& [name, F] : fixtures::corpus()) {
    CAPTURE(name);
    auto OO = opposite(opposite(F));
    CHECK(OO.cells == F.cells);
    CHECK(OO.composition == F.composition);
    CHECK(OO.identity_map == F.identity_map);
  }
}

TEST_CASE("level_category extracts the 1-category of degree-n arrows") {
  auto I = fixtures::iso1();
  auto L1 = level_category(I, 1);
  CHECK(L1.cells == I.cells);
  CHECK(L1.composition == I.composition);

  auto W = fixtures::walking2();
  auto L2 = level_category(W, 2);
  CHECK(L2.cells_of_degree(0).size() == 2);
  CHECK(L2.cells_of_degree(1).size() == 5);
  CHECK(*L2.cells.at("sigma").dom == "a");
  CHECK(*L2.cells.at("sigma").cod == "b");
  CHECK_FALSE(L2.composition.count({1, "sigma", "sigma"}));
  CHECK(valid(L2));

  auto B = fixtures::bz2();
  auto LB = level_category(B, 2);
  CHECK(LB.cells_of_degree(1).size() == 2);
  CHECK(compose(LB, 1, {"t", 0}, {"t", 0}) == VirtualCell{"one", 0});
  CHECK(compose(LB, 1, {"t", 0}, {"one", 0}) == VirtualCell{"t", 0});
  CHECK(valid(LB));
}

TEST_CASE("ambient_extend realizes P as a hom-set") {
  auto trivial = fixtures::one_object(0);
  auto ext0 = ambient_extend(trivial);
  CHECK(ext0.category.truncation == 1);
  CHECK(ext0.category.cells.at("pt").degree == 1);
  CHECK(valid(ext0.category));

  for (const auto& [name, P] : fixtures::corpus()) {
    CAPTURE(name);
    auto ext = ambient_extend(P);
    CHECK(valid(ext.category));
    auto back = hom_category(ext.category, ext.alpha, ext.beta);
    CHECK(back.truncation == P.truncation);
    CHECK(back.cells == P.cells);
    CHECK(back.composition == P.composition);
    CHECK(back.identity_map == P.identity_map);
  }
}
