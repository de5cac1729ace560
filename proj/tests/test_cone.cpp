#include <doctest.h>

#include "vnlab/cone.hpp"

using namespace vnlab;

namespace {

ModuliMonoid scalarMonoid() {
  return build_moduli_canonical(BlockAlgebra({2, 3}), BlockAlgebra({1}));
}

int elemOf(const ModuliMonoid& m, std::vector<std::vector<int>> entries) {
  MultiplicityMatrix c = zeroMatrix(m.ambient, m.source);
  c.entries = std::move(entries);
  int idx = m.indexOf(c);
  REQUIRE(idx >= 0);
  return idx;
}

// the same scaling computed through subtraction: sx = x - (1-s)x
ScalingTable complementRoute(const PartialMonoidTable& t, const ScalingTable& canonical) {
  ScalingTable alt = canonical;
  int S = alt.scalarCount() - 1;
  for (int a = 1; a < S; ++a)
    for (int x = 0; x < t.size; ++x) {
      int comp = canonical.at(S - a, x);
      if (canonical.at(a, x) < 0 || comp < 0) continue;
      auto diff = subtract(t, x, comp);
      REQUIRE(diff.has_value());
      alt.set(a, x, *diff);
    }
  return alt;
}

}  // namespace

TEST_CASE("dyadic scalars canonicalize and compare") {
  CHECK(DyadicScalar(4, 3) == DyadicScalar(1, 1));
  CHECK(DyadicScalar(0, 5).isZero());
  CHECK(DyadicScalar(8, 3).isOne());
  CHECK(DyadicScalar(3, 3) < DyadicScalar(1, 1));
  CHECK(dyadicMul(DyadicScalar(3, 2), DyadicScalar(1, 1)) == DyadicScalar(3, 3));
  CHECK(dyadicAdd(DyadicScalar(1, 2), DyadicScalar(1, 2)) == DyadicScalar(1, 1));
  CHECK_THROWS(DyadicScalar(9, 3));  // above one
}

TEST_CASE("trace monoids are cancellative, totally ordered partial monoids") {
  TraceMonoid tm(4, DyadicScalar(1, 0));
  CHECK(tm.size() == 17);
  CHECK(check_monoid(tm.table).passed);
  for (int x = 0; x < tm.size(); ++x)
    for (int y = 0; y < tm.size(); ++y) CHECK(leq(tm.table, x, y) == (x <= y));
}

TEST_CASE("divisibility") {
  SUBCASE("the scalar-source moduli monoid is not divisible, witness (1,0)") {
    ModuliMonoid m = scalarMonoid();
    DivisibilityReport scan = is_divisible(m.table);
    CHECK_FALSE(scan.divisible);
    CHECK(m.table.nameOf(scan.witness) == "(1,0)");
    DivisibilityReport parity = divisibleByParity(m);
    CHECK(scan.divisible == parity.divisible);
    CHECK(scan.witness == parity.witness);
  }
  SUBCASE("the dyadic family is divisible") {
    TraceMonoid tm(4, DyadicScalar(1, 0));
    CHECK(divisibleAsFamily(tm).divisible);
  }
  SUBCASE("the trivial monoid is divisible") {
    ModuliMonoid m = build_moduli_canonical(BlockAlgebra({2, 3}), BlockAlgebra({4}));
    CHECK(is_divisible(m.table).divisible);
  }
}

TEST_CASE("halving") {
  SUBCASE("on the dyadic grid the exponent shifts while it fits") {
    TraceMonoid tm(4, DyadicScalar(1, 0));
    int x = tm.indexOf(DyadicScalar(3, 3));  // 3/8 = 6/16
    REQUIRE(x == 6);
    auto h = half(tm.table, x);
    REQUIRE(h.has_value());
    CHECK(tm.value(*h) == DyadicScalar(3, 4));
    CHECK_FALSE(half(tm.table, *h).has_value());  // 3/16 is odd at this grid
  }
  SUBCASE("matrices halve entrywise when even") {
    ModuliMonoid m = scalarMonoid();
    auto h = half(m.table, elemOf(m, {{2}, {2}}));
    REQUIRE(h.has_value());
    CHECK(*h == elemOf(m, {{1}, {1}}));
    CHECK_FALSE(half(m.table, elemOf(m, {{1}, {0}})).has_value());
  }
  SUBCASE("doubling a half returns the element") {
    TraceMonoid tm(5, DyadicScalar(1, 0));
    for (int x = 0; x < tm.size(); ++x)
      if (auto h = half(tm.table, x)) CHECK(tm.table.add(*h, *h) == x);
  }
}

TEST_CASE("dyadic_scale") {
  TraceMonoid tm(4, DyadicScalar(1, 0));
  SUBCASE("numeric cases on the grid") {
    int one = tm.indexOf(DyadicScalar(1, 0));
    auto r = dyadic_scale(tm.table, DyadicScalar(3, 2), one);
    REQUIRE(std::holds_alternative<int>(r));
    CHECK(tm.value(std::get<int>(r)) == DyadicScalar(3, 2));
    CHECK(std::get<int>(dyadic_scale(tm.table, DyadicScalar(1, 0), 5)) == 5);
    CHECK(std::get<int>(dyadic_scale(tm.table, DyadicScalar(0, 0), 5)) == tm.table.zero);
  }
  SUBCASE("scaling agrees with exact multiplication wherever defined") {
    for (int a = 0; a <= 16; ++a)
      for (int x = 0; x < tm.size(); ++x) {
        auto r = dyadic_scale(tm.table, DyadicScalar(a, 4), x);
        DyadicScalar expect = dyadicMul(DyadicScalar(a, 4), tm.value(x));
        if (auto* v = std::get_if<int>(&r)) CHECK(tm.value(*v) == expect);
        else CHECK(tm.indexOf(expect) < 0);  // fails exactly off the grid
      }
  }
  SUBCASE("matrix halving through the scalar one half") {
    ModuliMonoid m = scalarMonoid();
    auto r = dyadic_scale(m.table, DyadicScalar(1, 1), elemOf(m, {{2}, {2}}));
    REQUIRE(std::holds_alternative<int>(r));
    CHECK(std::get<int>(r) == elemOf(m, {{1}, {1}}));
    auto bad = dyadic_scale(m.table, DyadicScalar(1, 1), elemOf(m, {{1}, {0}}));
    CHECK(std::holds_alternative<NotRepresentable>(bad));
  }
}

TEST_CASE("canonical cones") {
  SUBCASE("the K=6 grid passes every axiom") {
    TraceMonoid tm(6, DyadicScalar(1, 0));
    auto cone = canonical_cone(tm);
    REQUIRE(std::holds_alternative<ScalingTable>(cone));
    ConeReport r = check_cone_axioms(tm.table, std::get<ScalingTable>(cone));
    CHECK(r.passed);
    CHECK(r.checked > 10000);
  }
  SUBCASE("non-divisible monoids are refused with the witness") {
    ModuliMonoid m = scalarMonoid();
    auto cone = canonical_cone(m.table, 6, is_divisible(m.table));
    REQUIRE(std::holds_alternative<NotDivisible>(cone));
    CHECK(m.table.nameOf(std::get<NotDivisible>(cone).witness) == "(1,0)");
  }
  SUBCASE("the trivial monoid gets the trivial cone") {
    ModuliMonoid m = build_moduli_canonical(BlockAlgebra({2, 3}), BlockAlgebra({4}));
    auto cone = canonical_cone(m.table, 6, is_divisible(m.table));
    REQUIRE(std::holds_alternative<ScalingTable>(cone));
    CHECK(check_cone_axioms(m.table, std::get<ScalingTable>(cone)).passed);
  }
}

TEST_CASE("axiom checker catches corrupted tables") {
  TraceMonoid tm(5, DyadicScalar(1, 0));
  auto cone = canonical_cone(tm);
  REQUIRE(std::holds_alternative<ScalingTable>(cone));
  ScalingTable sc = std::get<ScalingTable>(cone);
  REQUIRE(check_cone_axioms(tm.table, sc).passed);

  SUBCASE("a single mutated entry fails, citing the axiom") {
    ScalingTable bad = sc;
    int a = 16, x = 16;  // (1/2) * (1/2) on the grid
    REQUIRE(bad.at(a, x) == 8);
    bad.set(a, x, 9);
    ConeReport r = check_cone_axioms(tm.table, bad);
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.violations.empty());
  }
  SUBCASE("the identity-only table fails scalar additivity") {
    ScalingTable idOnly = sc;
    int S = idOnly.scalarCount() - 1;
    for (int a = 1; a < S; ++a)
      for (int x = 0; x < tm.size(); ++x) idOnly.set(a, x, tm.table.zero);
    ConeReport r = check_cone_axioms(tm.table, idOnly);
    CHECK_FALSE(r.passed);
    bool cited_d = false;
    for (auto& v : r.violations) cited_d |= v.rfind("(d)", 0) == 0;
    CHECK(cited_d);
  }
}

TEST_CASE("cone uniqueness") {
  TraceMonoid tm(6, DyadicScalar(1, 0));
  auto cone = canonical_cone(tm);
  REQUIRE(std::holds_alternative<ScalingTable>(cone));
  const ScalingTable& sc = std::get<ScalingTable>(cone);

  SUBCASE("canonical agrees with itself") {
    CHECK(check_uniqueness(tm.table, sc, sc).passed);
  }
  SUBCASE("the complement evaluation route lands on the same table") {
    ScalingTable alt = complementRoute(tm.table, sc);
    CHECK(check_uniqueness(tm.table, sc, alt).passed);
  }
  SUBCASE("a disagreement is reported as a contradiction") {
    ScalingTable alt = sc;
    alt.set(32, 32, alt.at(32, 32) + 1);
    ConeReport r = check_uniqueness(tm.table, sc, alt);
    CHECK_FALSE(r.passed);
    CHECK(r.violations.front().find("contradiction") != std::string::npos);
  }
}

TEST_CASE("monotonicity and the squeeze at dyadic scalars") {
  TraceMonoid tm(5, DyadicScalar(1, 0));
  auto cone = canonical_cone(tm);
  const ScalingTable& sc = std::get<ScalingTable>(cone);
  OrderData ord = deriveOrder(tm.table);

  SUBCASE("s < t gives sx <= tx") {
    for (int a = 0; a < sc.scalarCount(); ++a)
      for (int b = a; b < sc.scalarCount(); ++b)
        for (int x = 0; x < tm.size(); ++x) {
          int u = sc.at(a, x), v = sc.at(b, x);
          if (u >= 0 && v >= 0) CHECK(ord.leq(u, v));
        }
  }
  SUBCASE("sx is both sup of below-multiples and inf of above-multiples") {
    for (int a = 0; a < sc.scalarCount(); ++a)
      for (int x = 0; x < tm.size(); ++x) {
        int sx = sc.at(a, x);
        if (sx < 0) continue;
        std::vector<int> below, above;
        for (int b = 0; b < sc.scalarCount(); ++b) {
          int v = sc.at(b, x);
          if (v < 0) continue;
          if (b <= a) below.push_back(v);
          if (b >= a) above.push_back(v);
        }
        JoinResult sup = join(tm.table, ord, below);
        REQUIRE(sup.found());
        CHECK(sup.value == sx);
        MeetResult inf = meet(tm.table, ord, above);
        REQUIRE(inf.found);
        CHECK(inf.value == sx);
      }
  }
}

TEST_CASE("the dyadic chain squeezes to the bottom") {
  SUBCASE("full depth on the K=8 grid") {
    TraceMonoid tm(8, DyadicScalar(1, 0));
    int one = tm.indexOf(DyadicScalar(1, 0));
    ConeReport r = glb_dyadic_check(tm.table, one, 8);
    CHECK(r.passed);
    CHECK(r.note.empty());  // residual 1/256 covers zero: no slack
  }
  SUBCASE("zero element") {
    TraceMonoid tm(4, DyadicScalar(1, 0));
    ConeReport r = glb_dyadic_check(tm.table, tm.table.zero, 3);
    CHECK(r.passed);
  }
  SUBCASE("a single halving leaves slack but still checks the meet") {
    TraceMonoid tm(8, DyadicScalar(1, 0));
    int one = tm.indexOf(DyadicScalar(1, 0));
    ConeReport r = glb_dyadic_check(tm.table, one, 1);
    CHECK(r.passed);
    CHECK_FALSE(r.note.empty());
  }
  SUBCASE("insufficient depth is reported") {
    TraceMonoid tm(4, DyadicScalar(1, 0));
    int one = tm.indexOf(DyadicScalar(1, 0));
    ConeReport r = glb_dyadic_check(tm.table, one, 8);
    CHECK_FALSE(r.passed);
  }
}

TEST_CASE("two distinct halves are an internal failure") {
  // a broken table where both 1 and 2 double to 3
  PartialMonoidTable t = PartialMonoidTable::withSize(4, 0);
  for (int x = 0; x < 4; ++x) {
    t.setAdd(0, x, x);
    t.setAdd(x, 0, x);
  }
  t.setAdd(1, 1, 3);
  t.setAdd(2, 2, 3);
  CHECK_THROWS_AS(half(t, 3), InternalCheckFailure);
}
