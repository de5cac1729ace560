#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace vnlab {

// A finite category given by explicit tables. Objects are dense ids; arrows
// carry (id, src, dst); composition is a total table on composable pairs.

struct Arrow {
  int id = -1;
  int src = -1;
  int dst = -1;
};

struct FiniteCategory {
  int numObjects = 0;
  std::vector<Arrow> arrows;
  std::vector<int> identityArrow;                 // object -> arrow id
  std::map<std::pair<int, int>, int> composition; // (f, g), dst(f)=src(g) -> g after f

  int addObject();
  int addArrow(int src, int dst);
  void setIdentity(int obj, int arrowId);
  void setComposite(int f, int g, int gof);

  // -1 when the composite is missing from the table (a validation failure).
  int compose(int f, int g) const;

  // Checks identities are neutral, the composition table is total on
  // composable pairs, and composition is associative.
  std::string validate() const;
};

enum class CoconeKind { PushoutType, CoproductType };

// A distinguished cocone: a finite diagram (objects plus arrows among them),
// an apex, and one leg per diagram object, each triangle commuting.
struct Cocone {
  CoconeKind kind = CoconeKind::CoproductType;
  std::vector<int> diagramObjects;
  std::vector<int> diagramArrows;
  int apex = -1;
  std::vector<int> legs;  // parallel to diagramObjects
  std::string name;
};

// True when every triangle leg(dst) . f = leg(src) commutes.
bool check_cocone(const Cocone& c, const FiniteCategory& cat);

}  // namespace vnlab
