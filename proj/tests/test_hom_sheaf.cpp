#include <doctest.h>

#include "vnlab/hom_sheaf.hpp"
#include "vnlab/presheaf.hpp"

using namespace vnlab;

TEST_CASE("enumerate_homs") {
  BlockAlgebra m({2, 3});

  SUBCASE("a one-dimensional source gives exactly one homomorphism per corner") {
    BlockAlgebra n({1});
    StandardSubalgebra a = spanOf(StandardProjection(m, {0b11, 0}));
    auto homs = enumerate_homs(n, a);
    REQUIRE(homs.size() == 1);
    MultiplicityMatrix c = multiplicity_of(homs[0]);
    CHECK(c.entries == std::vector<std::vector<int>>{{2}, {0}});
  }
  SUBCASE("a rank-one atom cannot absorb a two-dimensional block") {
    BlockAlgebra n({2});
    StandardSubalgebra a = spanOf(StandardProjection(m, {0b01, 0}));
    CHECK(enumerate_homs(n, a).empty());
  }
  SUBCASE("the zero corner carries exactly the empty homomorphism") {
    BlockAlgebra n({1});
    auto homs = enumerate_homs(n, zeroAlgebra(m));
    REQUIRE(homs.size() == 1);
    CHECK(multiplicity_of(homs[0]) == zeroMatrix(m, n));
  }
  SUBCASE("two scalar source blocks label each point independently") {
    BlockAlgebra n({1, 1});
    StandardSubalgebra a = spanOf(StandardProjection(m, {0b11, 0}));
    CHECK(enumerate_homs(n, a).size() == 4);  // 2 labels, 2 tags each
  }
  SUBCASE("ordered pairs tile a four-point atom twelve ways") {
    BlockAlgebra m4({4});
    BlockAlgebra n({2});
    StandardSubalgebra a = spanOf(fullProjection(m4));
    CHECK(enumerate_homs(n, a).size() == 12);  // 4!/2! sets of ordered pairs
  }
}

TEST_CASE("multiplicity counts tuples per block pair") {
  BlockAlgebra m({2, 3});

  SUBCASE("scalar source covering rank (2,2)") {
    BlockAlgebra n({1});
    StandardSubalgebra a(m, {{0b11, 0b011}});
    auto homs = enumerate_homs(n, a);
    REQUIRE(homs.size() == 1);
    CHECK(multiplicity_of(homs[0]).entries == std::vector<std::vector<int>>{{2}, {2}});
    CHECK(multiplicity_of(homs[0]).supportRank().ranks == std::vector<int>{2, 2});
  }
  SUBCASE("two scalar blocks in block one only") {
    BlockAlgebra n({1, 1});
    StandardHom h;
    h.source = n;
    h.target = spanOf(StandardProjection(m, {0b11, 0}));
    h.grouping = {{{{0}}, {{1}}}, {{}, {}}};  // label 1 tagged j=1, label 2 tagged j=2
    CHECK(multiplicity_of(h).entries == std::vector<std::vector<int>>{{1, 1}, {0, 0}});
  }
  SUBCASE("empty homomorphism has the zero matrix") {
    BlockAlgebra n({2});
    auto homs = enumerate_homs(n, zeroAlgebra(m));
    REQUIRE(homs.size() == 1);
    CHECK(multiplicity_of(homs[0]) == zeroMatrix(m, n));
  }
}

TEST_CASE("unitality: row sums of the invariant match the support") {
  BlockAlgebra m({3, 2});
  for (auto nBlocks : {std::vector<int>{1}, std::vector<int>{1, 1}, std::vector<int>{2}}) {
    BlockAlgebra n(nBlocks);
    TruncatedSketch s = build_truncated_sketch(m, {fullProjection(m)}, 1);
    for (auto& obj : s.objects)
      for (auto& h : enumerate_homs(n, obj))
        CHECK(multiplicity_of(h).supportRank().ranks == rank_of(obj.support()).ranks);
  }
}

TEST_CASE("restriction") {
  BlockAlgebra m({2, 3});
  BlockAlgebra n({1});

  SUBCASE("along the identity it is the identity") {
    StandardSubalgebra a = spanOf(fullProjection(m));
    auto homs = enumerate_homs(n, a);
    auto res = restrict_hom(homs[0], identityIsometry(a.support()), a);
    REQUIRE(std::holds_alternative<StandardHom>(res));
    CHECK(std::get<StandardHom>(res) == homs[0]);
  }
  SUBCASE("scalar sources restrict along any corner embedding") {
    StandardSubalgebra b = spanOf(fullProjection(m));
    auto homs = enumerate_homs(n, b);
    StandardSubalgebra a = spanOf(StandardProjection(m, {0b10, 0b100}));
    PartialPermIsometry u(m, {{{1, 0}}, {{2, 1}}});  // a's labels into b's support
    auto res = restrict_hom(homs[0], u, a);
    REQUIRE(std::holds_alternative<StandardHom>(res));
    CHECK(multiplicity_of(std::get<StandardHom>(res)).supportRank().ranks ==
          rank_of(u.initial()).ranks);
  }
  SUBCASE("a range cutting a tuple is rejected") {
    BlockAlgebra m4({4});
    BlockAlgebra n2({2});
    StandardSubalgebra b = spanOf(StandardProjection(m4, {0b0011}));
    auto homs = enumerate_homs(n2, b);  // single tuple (1,2) and its flip
    REQUIRE(homs.size() == 2);
    StandardSubalgebra a = spanOf(StandardProjection(m4, {0b0001}));
    PartialPermIsometry u(m4, {{{0, 0}}});  // range hits one label of the tuple
    auto res = restrict_hom(homs[0], u, a);
    REQUIRE(std::holds_alternative<NotCompatible>(res));
    CHECK(std::get<NotCompatible>(res).reason.find("cuts a tuple") != std::string::npos);
  }
}

TEST_CASE("hom presheaves are sheaves on the truncation") {
  SUBCASE("M2 with a scalar source") {
    BlockAlgebra m({2});
    BlockAlgebra n({1});
    TruncatedSketch s = build_truncated_sketch(m, {fullProjection(m)}, 1);
    HomPresheaf f = as_presheaf(n, s);
    CHECK(f.droppedArrows.empty());
    SheafReport r = check_sheaf(f.table, s.cat, s.cocones);
    CHECK(r.pass());
  }
  SUBCASE("M2+M3 with a scalar source") {
    BlockAlgebra m({2, 3});
    BlockAlgebra n({1});
    TruncatedSketch s = build_truncated_sketch(m, {fullProjection(m)}, 1);
    HomPresheaf f = as_presheaf(n, s);
    CHECK(f.droppedArrows.empty());
    CHECK(check_sheaf(f.table, s.cat, s.cocones).pass());
  }
  SUBCASE("an oversized source gives empty sets and still a sheaf") {
    BlockAlgebra m({2});
    BlockAlgebra n({3});
    TruncatedSketch s = build_truncated_sketch(m, {fullProjection(m)}, 1);
    HomPresheaf f = as_presheaf(n, s);
    CHECK(f.table.at[s.objectId(spanOf(fullProjection(m)))] == 0);
    CHECK(f.table.at[s.zeroObject] == 1);
    CHECK(check_sheaf(f.table, s.cat, s.cocones).pass());
  }
  SUBCASE("matrix sources pass as well") {
    BlockAlgebra m({4});
    BlockAlgebra n({2});
    TruncatedSketch s = build_truncated_sketch(m, {fullProjection(m)}, 1);
    HomPresheaf f = as_presheaf(n, s);
    CHECK(f.droppedArrows.empty());
    CHECK(check_sheaf(f.table, s.cat, s.cocones).pass());
  }
}

TEST_CASE("deleting one element breaks exactly the cocones over its object") {
  BlockAlgebra m({2});
  BlockAlgebra n({1});
  TruncatedSketch s = build_truncated_sketch(m, {fullProjection(m)}, 1);
  HomPresheaf f = as_presheaf(n, s);

  // delete the single element over the finest full-support object, which is
  // maximal, so no arrow leaves it except its identity
  StandardSubalgebra finest(m, {{0b01}, {0b10}});
  int obj = s.objectId(finest);
  REQUIRE(obj >= 0);
  REQUIRE(f.table.at[obj] == 1);
  PresheafTable mutated = f.table;
  mutated.at[obj] = 0;
  for (auto& arrow : s.cat.arrows)
    if (arrow.dst == obj) mutated.along[arrow.id].clear();

  SheafReport r = check_sheaf(mutated, s.cat, s.cocones);
  CHECK(r.functorial);
  CHECK_FALSE(r.pass());
  REQUIRE_FALSE(r.failedCocones.empty());
  for (int idx : r.failedCocones) CHECK(s.cocones[idx].apex == obj);
  CHECK_FALSE(r.failedNames.front().empty());
}

TEST_CASE("pseudoisomorphism witnesses exist exactly for equal invariants") {
  BlockAlgebra m({2, 2});
  BlockAlgebra n({1, 1});
  TruncatedSketch s = build_truncated_sketch(m, {fullProjection(m)}, 1);

  std::vector<std::pair<StandardSubalgebra, StandardHom>> elems;
  for (auto& obj : s.objects) {
    if (obj.atoms.size() > 1) continue;  // spans are enough to cover every class
    for (auto& h : enumerate_homs(n, obj)) elems.push_back({obj, h});
  }
  int checked = 0;
  for (auto& [a, x] : elems)
    for (auto& [b, y] : elems) {
      if (rank_of(a.support()).ranks != rank_of(b.support()).ranks) continue;
      bool witness = false;
      forEachBijection(m, a.supportMask(), b.supportMask(),
                       [&](const PartialPermIsometry& u) {
                         auto res = restrict_hom(y, u, a);
                         if (auto* h = std::get_if<StandardHom>(&res))
                           if (*h == x) {
                             witness = true;
                             return false;
                           }
                         return true;
                       });
      CHECK(witness == (multiplicity_of(x) == multiplicity_of(y)));
      ++checked;
    }
  CHECK(checked > 100);
}
