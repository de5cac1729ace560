#include "vnlab/moduli.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "vnlab/errors.hpp"

namespace vnlab {

int ModuliMonoid::indexOf(const MultiplicityMatrix& c) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), c,
                             [](const ModuliElement& e, const MultiplicityMatrix& v) {
                               return e.invariant < v;
                             });
  if (it != elements.end() && it->invariant == c) return static_cast<int>(it - elements.begin());
  return -1;
}

bool ModuliMonoid::leqFast(int x, int y) const {
  const auto& a = elements[x].invariant.entries;
  const auto& b = elements[y].invariant.entries;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] > b[i][j]) return false;
  return true;
}

std::optional<int> ModuliMonoid::addFast(int x, int y) const {
  MultiplicityMatrix c = elements[x].invariant;
  const auto& b = elements[y].invariant.entries;
  for (size_t i = 0; i < c.entries.size(); ++i)
    for (size_t j = 0; j < c.entries[i].size(); ++j) c.entries[i][j] += b[i][j];
  if (!c.withinCapacity()) return std::nullopt;
  int idx = indexOf(c);
  if (idx < 0) return std::nullopt;
  return idx;
}

int ModuliMonoid::meetFast(const std::vector<int>& s) const {
  MultiplicityMatrix c = elements[s.front()].invariant;
  for (size_t k = 1; k < s.size(); ++k) {
    const auto& b = elements[s[k]].invariant.entries;
    for (size_t i = 0; i < c.entries.size(); ++i)
      for (size_t j = 0; j < c.entries[i].size(); ++j)
        c.entries[i][j] = std::min(c.entries[i][j], b[i][j]);
  }
  return indexOf(c);
}

std::optional<int> ModuliMonoid::joinFast(const std::vector<int>& s) const {
  MultiplicityMatrix c = elements[s.front()].invariant;
  for (size_t k = 1; k < s.size(); ++k) {
    const auto& b = elements[s[k]].invariant.entries;
    for (size_t i = 0; i < c.entries.size(); ++i)
      for (size_t j = 0; j < c.entries[i].size(); ++j)
        c.entries[i][j] = std::max(c.entries[i][j], b[i][j]);
  }
  if (!c.withinCapacity()) return std::nullopt;
  int idx = indexOf(c);
  if (idx < 0) return std::nullopt;
  return idx;
}

RankTuple support_of(const ModuliMonoid& m, int x) { return m.elements[x].support; }

namespace {

ModuliMonoid assembleFromMatrices(const TruncatedSketch& s, const BlockAlgebra& n,
                                  std::vector<MultiplicityMatrix> matrices) {
  std::sort(matrices.begin(), matrices.end());
  matrices.erase(std::unique(matrices.begin(), matrices.end()), matrices.end());

  ModuliMonoid mm;
  mm.ambient = s.ambient;
  mm.source = n;
  for (auto& c : matrices) mm.elements.push_back(ModuliElement{c, c.supportRank()});

  int sz = static_cast<int>(mm.elements.size());
  int zero = mm.indexOf(zeroMatrix(s.ambient, n));
  if (zero < 0) throw InternalCheckFailure("moduli space lost its zero class");
  mm.table = PartialMonoidTable::withSize(sz, zero);
  for (int x = 0; x < sz; ++x) mm.table.names.push_back(mm.elements[x].invariant.str());
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y) {
      if (!orthogonalizable(mm.elements[x].support, mm.elements[y].support)) continue;
      auto sum = mm.addFast(x, y);
      if (!sum)
        throw InternalCheckFailure("orthogonalizable classes with no sum class; truncation "
                                   "does not realize all supports");
      mm.table.setAdd(x, y, *sum);
    }
  return mm;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::variant<ModuliMonoid, ModuliTimeout> build_moduli(const TruncatedSketch& s,
                                                       const BlockAlgebra& n,
                                                       const HomPresheaf& f, ModuliMode mode,
                                                       const ModuliBuildOptions& opts) {
  if (mode == ModuliMode::Canonical) {
    std::vector<MultiplicityMatrix> matrices;
    for (auto& homsAt : f.homs)
      for (auto& h : homsAt) matrices.push_back(multiplicity_of(h));
    return assembleFromMatrices(s, n, std::move(matrices));
  }

  // orbit search: union elements joined by explicit pseudoisomorphism witnesses
  int numObj = static_cast<int>(s.objects.size());
  std::vector<int> base(numObj + 1, 0);
  for (int o = 0; o < numObj; ++o) base[o + 1] = base[o] + static_cast<int>(f.homs[o].size());
  int universe = base[numObj];
  auto elemId = [&](int obj, int e) { return base[obj] + e; };

  UnionFind uf(universe);
  std::uint64_t tried = 0;

  // hub step: every element is pseudoisomorphic to its coarsening at the
  // one-atom algebra over its own support (restriction along the inclusion)
  std::map<std::string, int> spanObject;
  for (int o = 0; o < numObj; ++o)
    if (s.objects[o].atoms.size() <= 1) spanObject[s.objects[o].str()] = o;
  for (int o = 0; o < numObj; ++o) {
    const StandardSubalgebra& a = s.objects[o];
    StandardSubalgebra span = spanOf(a.support());
    auto it = spanObject.find(span.str());
    if (it == spanObject.end())
      throw InternalCheckFailure("truncation misses the span of a support");
    int so = it->second;
    if (so == o) continue;
    PartialPermIsometry incl = identityIsometry(span.support());
    for (int e = 0; e < static_cast<int>(f.homs[o].size()); ++e) {
      auto res = restrict_hom(f.homs[o][e], incl, span);
      auto* hom = std::get_if<StandardHom>(&res);
      if (!hom) throw InternalCheckFailure("inclusion restriction failed unexpectedly");
      // locate the coarsened element
      int idx = -1;
      for (int e2 = 0; e2 < static_cast<int>(f.homs[so].size()); ++e2)
        if (f.homs[so][e2] == *hom) {
          idx = e2;
          break;
        }
      if (idx < 0) throw InternalCheckFailure("coarsened element missing from its object");
      uf.unite(elemId(o, e), elemId(so, idx));
    }
  }

  // bijection step: witnesses between elements living over one-atom objects
  std::vector<std::pair<int, int>> oneAtom;  // (obj, elem)
  for (auto& [key, o] : spanObject)
    for (int e = 0; e < static_cast<int>(f.homs[o].size()); ++e) oneAtom.push_back({o, e});
  std::map<std::vector<int>, std::vector<int>> buckets;  // support ranks -> indices
  for (size_t k = 0; k < oneAtom.size(); ++k) {
    auto [o, e] = oneAtom[k];
    buckets[rank_of(s.objects[o].support()).ranks].push_back(static_cast<int>(k));
  }
  for (auto& [rank, members] : buckets) {
    for (size_t a = 0; a < members.size(); ++a)
      for (size_t b = a + 1; b < members.size(); ++b) {
        auto [objA, eA] = oneAtom[members[a]];
        auto [objB, eB] = oneAtom[members[b]];
        if (uf.find(elemId(objA, eA)) == uf.find(elemId(objB, eB))) continue;
        const StandardSubalgebra& A = s.objects[objA];
        const StandardSubalgebra& B = s.objects[objB];
        bool linked = false;
        forEachBijection(s.ambient, A.supportMask(), B.supportMask(),
                         [&](const PartialPermIsometry& u) {
                           ++tried;
                           if (tried > opts.witnessBudget) return false;
                           auto res = restrict_hom(f.homs[objB][eB], u, A);
                           if (auto* hom = std::get_if<StandardHom>(&res))
                             if (*hom == f.homs[objA][eA]) {
                               linked = true;
                               return false;
                             }
                           return true;
                         });
        if (tried > opts.witnessBudget) return ModuliTimeout{tried};
        if (linked) uf.unite(elemId(objA, eA), elemId(objB, eB));
      }
  }

  // classes, in a canonical order keyed by the (verified unique) invariant
  std::map<int, std::vector<std::pair<int, int>>> classesByRoot;
  for (int o = 0; o < numObj; ++o)
    for (int e = 0; e < static_cast<int>(f.homs[o].size()); ++e)
      classesByRoot[uf.find(elemId(o, e))].push_back({o, e});

  struct ClassInfo {
    MultiplicityMatrix invariant;
    std::vector<std::pair<int, int>> oneAtomMembers;
    int root;
  };
  std::vector<ClassInfo> classes;
  for (auto& [root, members] : classesByRoot) {
    ClassInfo ci;
    ci.root = root;
    ci.invariant = multiplicity_of(f.homs[members[0].first][members[0].second]);
    for (auto& [o, e] : members) {
      if (!(multiplicity_of(f.homs[o][e]) == ci.invariant))
        throw InternalCheckFailure(
            "pseudoisomorphism witnesses connected elements with different invariants");
      if (s.objects[o].atoms.size() <= 1) ci.oneAtomMembers.push_back({o, e});
    }
    if (ci.oneAtomMembers.empty())
      throw InternalCheckFailure("orbit class has no one-atom representative");
    classes.push_back(std::move(ci));
  }
  std::sort(classes.begin(), classes.end(),
            [](const ClassInfo& a, const ClassInfo& b) { return a.invariant < b.invariant; });
  for (size_t k = 1; k < classes.size(); ++k)
    if (classes[k - 1].invariant == classes[k].invariant)
      throw InternalCheckFailure(
          "two orbit classes share an invariant; witness search under-identified");
  std::map<int, int> classOfRoot;
  for (size_t k = 0; k < classes.size(); ++k) classOfRoot[classes[k].root] = static_cast<int>(k);

  ModuliMonoid mm;
  mm.ambient = s.ambient;
  mm.source = n;
  int sz = static_cast<int>(classes.size());
  for (auto& ci : classes)
    mm.elements.push_back(ModuliElement{ci.invariant, ci.invariant.supportRank()});

  // zero is the class of the single element over the zero algebra
  int zeroClass = classOfRoot.at(uf.find(elemId(s.zeroObject, 0)));
  mm.table = PartialMonoidTable::withSize(sz, zeroClass);
  for (int x = 0; x < sz; ++x) mm.table.names.push_back(mm.elements[x].invariant.str());

  // addition from representative pairs over orthogonal one-atom objects: merge
  // the groupings at the direct sum and read off the class of the result.
  // Consistency across representative choices is verified up to a fixed cap.
  const int repPairCap = 32;
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y) {
      int result = -1;
      int verified = 0;
      for (auto& [oA, eA] : classes[x].oneAtomMembers) {
        if (verified >= repPairCap) break;
        for (auto& [oB, eB] : classes[y].oneAtomMembers) {
          if (verified >= repPairCap) break;
          const StandardSubalgebra& A = s.objects[oA];
          const StandardSubalgebra& B = s.objects[oB];
          if (!maskDisjoint(A.supportMask(), B.supportMask())) continue;
          StandardSubalgebra d = directSum(A, B);
          int objD = s.objectId(d);
          if (objD < 0) throw InternalCheckFailure("direct sum object missing from truncation");
          StandardHom merged;
          merged.source = n;
          merged.target = d;
          const StandardHom& hx = f.homs[oA][eA];
          const StandardHom& hy = f.homs[oB][eB];
          merged.grouping = hx.grouping;
          for (size_t i = 0; i < merged.grouping.size(); ++i)
            for (size_t j = 0; j < merged.grouping[i].size(); ++j) {
              auto& dstT = merged.grouping[i][j];
              dstT.insert(dstT.end(), hy.grouping[i][j].begin(), hy.grouping[i][j].end());
              std::sort(dstT.begin(), dstT.end());
            }
          int idx = -1;
          for (int e2 = 0; e2 < static_cast<int>(f.homs[objD].size()); ++e2)
            if (f.homs[objD][e2] == merged) {
              idx = e2;
              break;
            }
          if (idx < 0) throw InternalCheckFailure("merged element missing from the direct sum");
          int cls = classOfRoot.at(uf.find(elemId(objD, idx)));
          if (result < 0) result = cls;
          else if (result != cls)
            throw InternalCheckFailure("sum class depends on the representatives chosen");
          ++verified;
        }
      }
      if (result >= 0) mm.table.setAdd(x, y, result);
    }
  return mm;
}

ModuliMonoid build_moduli_canonical(const BlockAlgebra& m, const BlockAlgebra& n, int depth) {
  TruncatedSketch s = build_truncated_sketch(m, {fullProjection(m)}, depth);
  HomPresheaf f = as_presheaf(n, s);
  auto r = build_moduli(s, n, f, ModuliMode::Canonical);
  return std::get<ModuliMonoid>(r);
}

AgreementReport check_mode_agreement(const TruncatedSketch& s, const BlockAlgebra& n,
                                     const HomPresheaf& f, const ModuliBuildOptions& opts) {
  AgreementReport rep;

  auto canonicalVar = build_moduli(s, n, f, ModuliMode::Canonical, opts);
  ModuliMonoid canonical = std::get<ModuliMonoid>(canonicalVar);

  auto orbitVar = build_moduli(s, n, f, ModuliMode::OrbitSearch, opts);
  if (std::holds_alternative<ModuliTimeout>(orbitVar)) {
    rep.timedOut = true;
    rep.witnessesTried = std::get<ModuliTimeout>(orbitVar).witnessesTried;
    rep.failure = "orbit search exceeded its witness budget";
    return rep;
  }
  ModuliMonoid orbit = std::get<ModuliMonoid>(orbitVar);

  rep.classes = canonical.table.size;
  if (orbit.table.size != canonical.table.size) {
    rep.failure = "class counts differ: canonical " + std::to_string(canonical.table.size) +
                  " vs orbit " + std::to_string(orbit.table.size);
    return rep;
  }
  // both are sorted by invariant, so agreement is entrywise
  for (int x = 0; x < canonical.table.size; ++x)
    if (!(canonical.elements[x].invariant == orbit.elements[x].invariant)) {
      rep.failure = "class invariants differ at index " + std::to_string(x);
      return rep;
    }
  if (canonical.table.zero != orbit.table.zero) {
    rep.failure = "zero classes differ";
    return rep;
  }
  if (canonical.table.sums != orbit.table.sums) {
    rep.failure = "addition tables differ";
    return rep;
  }
  rep.agree = true;
  return rep;
}

}  // namespace vnlab
