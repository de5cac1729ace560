#include "vnlab/category.hpp"

#include <algorithm>

namespace vnlab {

int FiniteCategory::addObject() {
  identityArrow.push_back(-1);
  return numObjects++;
}

int FiniteCategory::addArrow(int src, int dst) {
  int id = static_cast<int>(arrows.size());
  arrows.push_back(Arrow{id, src, dst});
  return id;
}

void FiniteCategory::setIdentity(int obj, int arrowId) { identityArrow[obj] = arrowId; }

void FiniteCategory::setComposite(int f, int g, int gof) { composition[{f, g}] = gof; }

int FiniteCategory::compose(int f, int g) const {
  auto it = composition.find({f, g});
  return it == composition.end() ? -1 : it->second;
}

std::string FiniteCategory::validate() const {
  for (int o = 0; o < numObjects; ++o) {
    if (identityArrow[o] < 0) return "object " + std::to_string(o) + " has no identity";
    const Arrow& id = arrows[identityArrow[o]];
    if (id.src != o || id.dst != o) return "identity of object " + std::to_string(o) + " is not an endoarrow";
  }
  for (const Arrow& f : arrows) {
    for (const Arrow& g : arrows) {
      if (f.dst != g.src) continue;
      int h = compose(f.id, g.id);
      if (h < 0)
        return "missing composite of arrows " + std::to_string(f.id) + " and " + std::to_string(g.id);
      if (arrows[h].src != f.src || arrows[h].dst != g.dst)
        return "composite of " + std::to_string(f.id) + " and " + std::to_string(g.id) +
               " has wrong endpoints";
    }
    if (compose(identityArrow[f.src], f.id) != f.id || compose(f.id, identityArrow[f.dst]) != f.id)
      return "identity not neutral on arrow " + std::to_string(f.id);
  }
  // associativity over all composable triples
  for (const Arrow& f : arrows)
    for (const Arrow& g : arrows) {
      if (f.dst != g.src) continue;
      int gf = compose(f.id, g.id);
      for (const Arrow& h : arrows) {
        if (g.dst != h.src) continue;
        int hg = compose(g.id, h.id);
        if (compose(gf, h.id) != compose(f.id, hg))
          return "associativity fails on arrows " + std::to_string(f.id) + "," +
                 std::to_string(g.id) + "," + std::to_string(h.id);
      }
    }
  return {};
}

bool check_cocone(const Cocone& c, const FiniteCategory& cat) {
  auto legOf = [&](int obj) {
    for (size_t k = 0; k < c.diagramObjects.size(); ++k)
      if (c.diagramObjects[k] == obj) return c.legs[k];
    return -1;
  };
  for (size_t k = 0; k < c.diagramObjects.size(); ++k) {
    const Arrow& leg = cat.arrows[c.legs[k]];
    if (leg.src != c.diagramObjects[k] || leg.dst != c.apex) return false;
  }
  for (int f : c.diagramArrows) {
    const Arrow& a = cat.arrows[f];
    int legSrc = legOf(a.src), legDst = legOf(a.dst);
    if (legSrc < 0 || legDst < 0) return false;  // arrow endpoints must be diagram objects
    if (cat.compose(f, legDst) != legSrc) return false;
  }
  return true;
}

}  // namespace vnlab
