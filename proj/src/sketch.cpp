#include "vnlab/sketch.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vnlab/errors.hpp"

namespace vnlab {

int TruncatedSketch::objectId(const StandardSubalgebra& a) const {
  auto it = std::lower_bound(objects.begin(), objects.end(), a);
  if (it != objects.end() && *it == a) return static_cast<int>(it - objects.begin());
  return -1;
}

TruncatedSketch build_truncated_sketch(const BlockAlgebra& m,
                                       const std::vector<StandardProjection>& generators,
                                       int depth, const SketchOptions& opts) {
  if (depth < 1) throw std::invalid_argument("sketch depth must be at least 1");
  for (auto& g : generators)
    if (g.ambient != m) throw AmbientMismatch("generator lives in a different algebra");

  MaskVec sup(m.numBlocks(), 0);
  for (auto& g : generators) sup = maskOr(sup, g.sel);
  if (totalBits(sup) > 20)
    throw TruncationLimit("generators span too many labels for an exhaustive truncation");

  std::set<StandardSubalgebra> objs;
  auto add = [&](const StandardSubalgebra& a) {
    objs.insert(a);
    if (static_cast<int>(objs.size()) > opts.maxObjects)
      throw TruncationLimit("truncation exceeds the object cap of " +
                            std::to_string(opts.maxObjects));
  };

  add(zeroAlgebra(m));

  // one-atom algebras for every nonzero projection under the generator span
  std::vector<MaskVec> subs;
  forEachSubmask(sup, [&](const MaskVec& q) {
    if (!maskIsZero(q)) subs.push_back(q);
  });
  for (auto& q : subs) add(StandardSubalgebra(m, {q}));

  // cuts: two-atom partitions of every one-atom support
  std::vector<StandardSubalgebra> cuts;
  for (auto& r : subs) {
    if (totalBits(r) < 2) continue;
    forEachSubmask(r, [&](const MaskVec& q) {
      if (maskIsZero(q) || q == r) return;
      StandardSubalgebra cut(m, {q, maskMinus(r, q)});
      if (objs.find(cut) == objs.end()) {
        add(cut);
        cuts.push_back(cut);
      }
    });
  }

  // depth rounds of common refinements of same-support cuts
  std::vector<StandardSubalgebra> frontier = cuts;
  for (int round = 0; round < depth; ++round) {
    std::vector<StandardSubalgebra> next;
    for (auto& a : frontier)
      for (auto& b : cuts) {
        if (a.supportMask() != b.supportMask()) continue;
        StandardSubalgebra j = commonRefinement(a, b);
        if (objs.find(j) == objs.end()) {
          add(j);
          next.push_back(j);
        }
      }
    if (next.empty()) break;
    frontier = std::move(next);
  }

  // closure under direct sums of orthogonal objects
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<StandardSubalgebra> snapshot(objs.begin(), objs.end());
    for (size_t i = 0; i < snapshot.size(); ++i) {
      if (snapshot[i].isZero()) continue;
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        if (snapshot[j].isZero()) continue;
        if (!maskDisjoint(snapshot[i].supportMask(), snapshot[j].supportMask())) continue;
        StandardSubalgebra s = directSum(snapshot[i], snapshot[j]);
        if (objs.find(s) == objs.end()) {
          add(s);
          grew = true;
        }
      }
    }
  }

  TruncatedSketch sk;
  sk.ambient = m;
  sk.objects.assign(objs.begin(), objs.end());
  sk.zeroObject = sk.objectId(zeroAlgebra(m));

  // arrows: subalgebra inclusions, one per comparable pair
  FiniteCategory& cat = sk.cat;
  for (size_t i = 0; i < sk.objects.size(); ++i) cat.addObject();
  std::map<std::pair<int, int>, int> arrowAt;
  for (int a = 0; a < cat.numObjects; ++a)
    for (int b = 0; b < cat.numObjects; ++b)
      if (algebraIncludes(sk.objects[a], sk.objects[b])) {
        int id = cat.addArrow(a, b);
        sk.arrowIso.push_back(identityIsometry(sk.objects[a].support()));
        arrowAt[{a, b}] = id;
        if (a == b) cat.setIdentity(a, id);
      }
  for (auto& [fp, fid] : arrowAt)
    for (auto& [gp, gid] : arrowAt) {
      if (fp.second != gp.first) continue;
      cat.setComposite(fid, gid, arrowAt.at({fp.first, gp.second}));
    }

  // cocones
  auto inclusion = [&](int a, int b) { return arrowAt.at({a, b}); };
  std::set<std::string> seen;
  auto pushCocone = [&](Cocone c) {
    std::string key = std::to_string(static_cast<int>(c.kind)) + ":" +
                      std::to_string(c.apex) + ":";
    for (int o : c.diagramObjects) key += std::to_string(o) + ",";
    key += ";";
    for (int f : c.diagramArrows) key += std::to_string(f) + ",";
    if (seen.insert(key).second) sk.cocones.push_back(std::move(c));
  };

  {
    Cocone empty;
    empty.kind = CoconeKind::CoproductType;
    empty.apex = sk.zeroObject;
    empty.name = "coproduct[] -> 0";
    pushCocone(std::move(empty));
  }
  for (int a = 0; a < cat.numObjects; ++a) {
    if (sk.objects[a].isZero()) continue;
    for (int b = a + 1; b < cat.numObjects; ++b) {
      if (sk.objects[b].isZero()) continue;
      if (!maskDisjoint(sk.objects[a].supportMask(), sk.objects[b].supportMask())) continue;
      int apex = sk.objectId(directSum(sk.objects[a], sk.objects[b]));
      Cocone c;
      c.kind = CoconeKind::CoproductType;
      c.diagramObjects = {a, b};
      c.apex = apex;
      c.legs = {inclusion(a, apex), inclusion(b, apex)};
      c.name = "coproduct[" + sk.objects[a].str() + ", " + sk.objects[b].str() + "]";
      pushCocone(std::move(c));
    }
  }
  for (auto& r : subs) {
    if (totalBits(r) < 2) continue;
    int base = sk.objectId(StandardSubalgebra(m, {r}));
    // unordered pairs of cuts under r, a degenerate pair when the cuts agree
    std::vector<int> cutIds;
    forEachSubmask(r, [&](const MaskVec& q) {
      if (maskIsZero(q) || q == r) return;
      int id = sk.objectId(StandardSubalgebra(m, {q, maskMinus(r, q)}));
      if (std::find(cutIds.begin(), cutIds.end(), id) == cutIds.end()) cutIds.push_back(id);
    });
    std::sort(cutIds.begin(), cutIds.end());
    for (size_t i = 0; i < cutIds.size(); ++i)
      for (size_t j = i; j < cutIds.size(); ++j) {
        int ca = cutIds[i], cb = cutIds[j];
        int apex = (ca == cb) ? ca
                              : sk.objectId(commonRefinement(sk.objects[ca], sk.objects[cb]));
        Cocone c;
        c.kind = CoconeKind::PushoutType;
        c.diagramObjects = {base, ca};
        c.diagramArrows = {inclusion(base, ca)};
        if (cb != ca) {
          c.diagramObjects.push_back(cb);
          c.diagramArrows.push_back(inclusion(base, cb));
        }
        c.apex = apex;
        for (int o : c.diagramObjects) c.legs.push_back(inclusion(o, apex));
        c.name = "pushout[" + sk.objects[base].str() + "; " + sk.objects[ca].str() + ", " +
                 sk.objects[cb].str() + "]";
        pushCocone(std::move(c));
      }
  }

  for (auto& c : sk.cocones)
    if (!check_cocone(c, cat))
      throw InternalCheckFailure("generated cocone fails its commutation check: " + c.name);

  return sk;
}

}  // namespace vnlab
