#include "vnlab/presheaf.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace vnlab {

std::string PresheafTable::elementLabel(int obj, int elem) const {
  if (obj < static_cast<int>(labels.size()) && elem < static_cast<int>(labels[obj].size()))
    return labels[obj][elem];
  return "#" + std::to_string(elem);
}

std::string checkFunctorial(const PresheafTable& f, const FiniteCategory& cat) {
  for (const Arrow& a : cat.arrows) {
    const auto& m = f.along[a.id];
    if (static_cast<int>(m.size()) != f.at[a.dst])
      return "arrow " + std::to_string(a.id) + " action has wrong domain size";
    for (int v : m)
      if (v < 0 || v >= f.at[a.src])
        return "arrow " + std::to_string(a.id) + " action leaves the target set";
  }
  for (int o = 0; o < cat.numObjects; ++o) {
    const auto& m = f.along[cat.identityArrow[o]];
    for (int x = 0; x < f.at[o]; ++x)
      if (m[x] != x) return "identity of object " + std::to_string(o) + " does not act as identity";
  }
  for (const Arrow& a : cat.arrows)
    for (const Arrow& b : cat.arrows) {
      if (a.dst != b.src) continue;
      int c = cat.compose(a.id, b.id);
      if (c < 0) return "composition table incomplete at arrows " + std::to_string(a.id) + "," +
                        std::to_string(b.id);
      for (int x = 0; x < f.at[b.dst]; ++x)
        if (f.along[c][x] != f.along[a.id][f.along[b.id][x]])
          return "contravariant composition fails on arrows " + std::to_string(a.id) + "," +
                 std::to_string(b.id) + " at element " + std::to_string(x);
    }
  return {};
}

namespace {

// Enumerates compatible families x_d over the diagram: along(f)(x_dst) = x_src
// for every diagram arrow f. Families are tuples parallel to diagramObjects.
void enumerateFamilies(const PresheafTable& f, const Cocone& c, const FiniteCategory& cat,
                       std::vector<std::vector<int>>& out) {
  size_t n = c.diagramObjects.size();
  std::vector<int> cur(n, 0);
  auto posOf = [&](int obj) {
    for (size_t k = 0; k < n; ++k)
      if (c.diagramObjects[k] == obj) return static_cast<int>(k);
    return -1;
  };
  std::vector<std::pair<int, std::pair<int, int>>> constraints;  // arrow, (srcPos, dstPos)
  for (int aid : c.diagramArrows) {
    const Arrow& a = cat.arrows[aid];
    constraints.push_back({aid, {posOf(a.src), posOf(a.dst)}});
  }
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == n) {
      for (auto& [aid, pos] : constraints)
        if (f.along[aid][cur[pos.second]] != cur[pos.first]) return;
      out.push_back(cur);
      return;
    }
    int size = f.at[c.diagramObjects[k]];
    for (int x = 0; x < size; ++x) {
      cur[k] = x;
      rec(k + 1);
    }
  };
  rec(0);
}

}  // namespace

bool check_is_limit(const PresheafTable& f, const Cocone& c, const FiniteCategory& cat) {
  std::vector<std::vector<int>> families;
  enumerateFamilies(f, c, cat, families);
  std::set<std::vector<int>> familySet(families.begin(), families.end());

  std::set<std::vector<int>> image;
  for (int x = 0; x < f.at[c.apex]; ++x) {
    std::vector<int> tuple(c.diagramObjects.size());
    for (size_t k = 0; k < c.diagramObjects.size(); ++k) tuple[k] = f.along[c.legs[k]][x];
    if (familySet.find(tuple) == familySet.end()) return false;  // lands outside the limit
    if (!image.insert(std::move(tuple)).second) return false;    // not injective
  }
  return image.size() == familySet.size();  // surjective onto compatible families
}

std::string SheafReport::summary() const {
  std::ostringstream os;
  if (pass()) {
    os << "sheaf: pass (" << coconesChecked << " cocones)";
  } else if (!functorial) {
    os << "sheaf: fail (not functorial: " << functorialFailure << ")";
  } else {
    os << "sheaf: fail (" << failedCocones.size() << " of " << coconesChecked
       << " cocones, first: " << (failedNames.empty() ? "?" : failedNames.front()) << ")";
  }
  return os.str();
}

SheafReport check_sheaf(const PresheafTable& f, const FiniteCategory& cat,
                        const std::vector<Cocone>& cocones) {
  SheafReport r;
  r.functorialFailure = checkFunctorial(f, cat);
  r.functorial = r.functorialFailure.empty();
  r.checks += static_cast<long>(cat.arrows.size());
  for (size_t i = 0; i < cocones.size(); ++i) {
    ++r.coconesChecked;
    ++r.checks;
    if (!check_is_limit(f, cocones[i], cat)) {
      r.failedCocones.push_back(static_cast<int>(i));
      r.failedNames.push_back(cocones[i].name);
    }
  }
  return r;
}

}  // namespace vnlab
