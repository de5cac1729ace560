#include <doctest.h>

#include "vnlab/presheaf.hpp"
#include "vnlab/sketch.hpp"

using namespace vnlab;

namespace {

// two objects, one non-identity arrow, as a minimal hand-made category
FiniteCategory arrowCategory() {
  FiniteCategory c;
  int a = c.addObject(), b = c.addObject();
  int ida = c.addArrow(a, a), idb = c.addArrow(b, b), f = c.addArrow(a, b);
  c.setIdentity(a, ida);
  c.setIdentity(b, idb);
  c.setComposite(ida, ida, ida);
  c.setComposite(idb, idb, idb);
  c.setComposite(ida, f, f);
  c.setComposite(f, idb, f);
  return c;
}

}  // namespace

TEST_CASE("category validation catches broken tables") {
  FiniteCategory c = arrowCategory();
  CHECK(c.validate().empty());

  FiniteCategory broken = arrowCategory();
  broken.composition.erase({2, 1});  // drop f . id_b
  CHECK_FALSE(broken.validate().empty());
}

TEST_CASE("truncation of M2 with the full generator") {
  BlockAlgebra m({2});
  TruncatedSketch s = build_truncated_sketch(m, {fullProjection(m)}, 1);
  // 0, C{1}, C{2}, C{1,2}, and the diagonal cut
  CHECK(s.objects.size() == 5);
  CHECK(s.objectId(zeroAlgebra(m)) == s.zeroObject);
  CHECK(s.objectId(spanOf(fullProjection(m))) >= 0);
  StandardSubalgebra diag(m, {{0b01}, {0b10}});
  CHECK(s.objectId(diag) >= 0);
  CHECK(s.cat.validate().empty());

  bool hasEmptyCoproduct = false;
  for (auto& c : s.cocones)
    if (c.kind == CoconeKind::CoproductType && c.diagramObjects.empty()) {
      hasEmptyCoproduct = true;
      CHECK(c.apex == s.zeroObject);
    }
  CHECK(hasEmptyCoproduct);
}

TEST_CASE("empty generator list leaves only the zero algebra") {
  BlockAlgebra m({2, 3});
  TruncatedSketch s = build_truncated_sketch(m, {}, 1);
  CHECK(s.objects.size() == 1);
  CHECK(s.cocones.size() == 1);
  CHECK(s.cocones[0].diagramObjects.empty());
}

TEST_CASE("truncation of M2+M3: all partition algebras, all cocones commute") {
  BlockAlgebra m({2, 3});
  TruncatedSketch s = build_truncated_sketch(m, {fullProjection(m)}, 1);
  // partitions of every subset of the five labels: sum_k C(5,k) B(k)
  CHECK(s.objects.size() == 203);
  CHECK(s.cat.validate().empty());
  for (auto& c : s.cocones) CHECK(check_cocone(c, s.cat));
}

TEST_CASE("check_cocone") {
  BlockAlgebra m({2, 2});
  TruncatedSketch s = build_truncated_sketch(m, {fullProjection(m)}, 1);

  SUBCASE("single-object diagram with identity leg") {
    Cocone c;
    c.kind = CoconeKind::CoproductType;
    int obj = s.objectId(spanOf(fullProjection(m)));
    c.diagramObjects = {obj};
    c.apex = obj;
    c.legs = {s.cat.identityArrow[obj]};
    CHECK(check_cocone(c, s.cat));
  }
  SUBCASE("orthogonal spans into their direct sum") {
    StandardSubalgebra cq = spanOf(StandardProjection(m, {0b01, 0}));
    StandardSubalgebra cr = spanOf(StandardProjection(m, {0b10, 0b11}));
    StandardSubalgebra sum = directSum(cq, cr);
    int a = s.objectId(cq), b = s.objectId(cr), apex = s.objectId(sum);
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    REQUIRE(apex >= 0);
    int legA = -1, legB = -1;
    for (auto& f : s.cat.arrows) {
      if (f.src == a && f.dst == apex) legA = f.id;
      if (f.src == b && f.dst == apex) legB = f.id;
    }
    REQUIRE(legA >= 0);
    REQUIRE(legB >= 0);
    Cocone c;
    c.kind = CoconeKind::CoproductType;
    c.diagramObjects = {a, b};
    c.apex = apex;
    c.legs = {legA, legB};
    CHECK(check_cocone(c, s.cat));
  }
  SUBCASE("a mismatched leg breaks commutation") {
    // take a generated pushout cocone and swap one leg for the apex identity
    for (auto& orig : s.cocones) {
      if (orig.kind != CoconeKind::PushoutType || orig.diagramObjects.size() < 2) continue;
      if (orig.diagramObjects[1] == orig.apex) continue;
      Cocone bad = orig;
      bad.legs[1] = s.cat.identityArrow[bad.apex];
      CHECK_FALSE(check_cocone(bad, s.cat));
      return;
    }
    FAIL("no pushout cocone to mutate");
  }
}

TEST_CASE("limits of hand-made tables") {
  FiniteCategory c = arrowCategory();

  SUBCASE("empty coproduct wants a singleton") {
    Cocone empty;
    empty.kind = CoconeKind::CoproductType;
    empty.apex = 0;
    PresheafTable f;
    f.at = {1, 3};
    f.along = {{0}, {0, 1, 2}, {0, 0, 0}};
    CHECK(check_is_limit(f, empty, c));
    PresheafTable g;
    g.at = {2, 3};
    g.along = {{0, 1}, {0, 1, 2}, {0, 0, 0}};
    CHECK_FALSE(check_is_limit(g, empty, c));
  }
  SUBCASE("the constant singleton presheaf is a sheaf on any sketch") {
    BlockAlgebra m({2, 3});
    TruncatedSketch s = build_truncated_sketch(m, {fullProjection(m)}, 1);
    PresheafTable f;
    f.at.assign(s.objects.size(), 1);
    f.along.assign(s.cat.arrows.size(), {0});
    SheafReport r = check_sheaf(f, s.cat, s.cocones);
    CHECK(r.functorial);
    CHECK(r.pass());
    CHECK(r.coconesChecked == static_cast<int>(s.cocones.size()));
  }
}

TEST_CASE("functoriality failures are reported") {
  FiniteCategory c = arrowCategory();
  PresheafTable f;
  f.at = {2, 2};
  f.along = {{0, 1}, {0, 1}, {1, 0}};
  CHECK(checkFunctorial(f, c).empty());

  PresheafTable broken = f;
  broken.along[0] = {1, 0};  // identity no longer acts as identity
  CHECK_FALSE(checkFunctorial(broken, c).empty());

  PresheafTable outOfRange = f;
  outOfRange.along[2] = {2, 0};  // leaves the target set
  CHECK_FALSE(checkFunctorial(outOfRange, c).empty());
}
