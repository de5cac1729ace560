#include "vnlab/cone.hpp"

#include <algorithm>
#include <sstream>

#include "vnlab/errors.hpp"

namespace vnlab {

DivisibilityReport is_divisible(const PartialMonoidTable& t) {
  DivisibilityReport r;
  r.method = "scan";
  r.divisible = true;
  for (int x = 0; x < t.size; ++x) {
    ++r.checked;
    if (!half(t, x)) {
      r.divisible = false;
      r.witness = x;
      return r;
    }
  }
  return r;
}

DivisibilityReport divisibleByParity(const ModuliMonoid& m) {
  DivisibilityReport r;
  r.method = "parity";
  r.divisible = true;
  for (int x = 0; x < m.table.size; ++x) {
    ++r.checked;
    for (auto& row : m.elements[x].invariant.entries)
      for (int c : row)
        if (c & 1) {
          r.divisible = false;
          r.witness = x;
          return r;
        }
  }
  return r;
}

DivisibilityReport divisibleAsFamily(const TraceMonoid& tm) {
  DivisibilityReport r;
  r.method = "family";
  r.checked = tm.size();
  r.divisible = tm.divisible();
  if (!r.divisible && tm.size() > 1) r.witness = 1;  // smallest positive grid step
  return r;
}

std::optional<int> half(const PartialMonoidTable& t, int x) {
  int found = -1;
  for (int y = 0; y < t.size; ++y)
    if (t.add(y, y) == x) {
      if (found >= 0)
        throw InternalCheckFailure("two distinct halves of " + t.nameOf(x) + ": " +
                                   t.nameOf(found) + " and " + t.nameOf(y));
      found = y;
    }
  if (found < 0) return std::nullopt;
  return found;
}

std::variant<int, NotRepresentable> dyadic_scale(const PartialMonoidTable& t,
                                                 const DyadicScalar& s, int x) {
  if (s.isZero()) return t.zero;
  if (s.isOne()) return x;
  // walk the binary expansion of s, halving x one level per bit
  int cur = x;
  int acc = -1;  // -1 encodes "no summand yet"
  for (int k = 1; k <= s.exp; ++k) {
    auto h = half(t, cur);
    if (!h)
      return NotRepresentable{"no half of " + t.nameOf(cur) + " at depth " + std::to_string(k)};
    cur = *h;
    if (s.num >> (s.exp - k) & 1) {
      if (acc < 0) {
        acc = cur;
      } else {
        int sum = t.add(acc, cur);
        if (sum < 0)
          return NotRepresentable{"partial sum undefined at depth " + std::to_string(k)};
        acc = sum;
      }
    }
  }
  return acc < 0 ? t.zero : acc;
}

std::variant<ScalingTable, NotDivisible> canonical_cone(const PartialMonoidTable& t,
                                                        int resolution,
                                                        const DivisibilityReport& div) {
  if (!div.divisible) return NotDivisible{div.witness};
  if (resolution < 0 || resolution > 16)
    throw std::invalid_argument("cone resolution out of range");
  ScalingTable sc;
  sc.resolution = resolution;
  sc.size = t.size;
  sc.entries.assign(static_cast<size_t>(sc.scalarCount()) * t.size, -1);
  for (int a = 0; a < sc.scalarCount(); ++a) {
    DyadicScalar s(static_cast<std::uint64_t>(a), resolution);
    for (int x = 0; x < t.size; ++x) {
      auto v = dyadic_scale(t, s, x);
      if (auto* e = std::get_if<int>(&v)) sc.set(a, x, *e);
    }
  }
  return sc;
}

std::variant<ScalingTable, NotDivisible> canonical_cone(const TraceMonoid& tm) {
  return canonical_cone(tm.table, tm.resolution, divisibleAsFamily(tm));
}

std::string ConeReport::summary() const {
  std::ostringstream os;
  os << (passed ? "pass" : "fail") << " (checked " << checked << ")";
  for (auto& v : violations) os << "; " << v;
  return os.str();
}

ConeReport check_cone_axioms(const PartialMonoidTable& t, const ScalingTable& sc) {
  ConeReport r;
  auto flag = [&](const std::string& msg) {
    if (r.violations.size() < 8) r.violations.push_back(msg);
  };
  int S = sc.scalarCount() - 1;  // scalar numerators run 0..2^R

  // (a), (b)
  for (int x = 0; x < t.size; ++x) {
    ++r.checked;
    if (sc.at(0, x) != t.zero) flag("(a) 0*" + t.nameOf(x) + " != 0");
    ++r.checked;
    if (sc.at(S, x) != x) flag("(b) 1*" + t.nameOf(x) + " != " + t.nameOf(x));
  }

  // (c) distributivity over defined sums
  for (int a = 0; a <= S; ++a)
    for (int g = 0; g < t.size; ++g) {
      int sg = sc.at(a, g);
      if (sg < 0) continue;
      for (int h = 0; h < t.size; ++h) {
        int gh = t.add(g, h);
        if (gh < 0) continue;
        int sh = sc.at(a, h);
        if (sh < 0) continue;
        ++r.checked;
        int lhs = sc.at(a, gh);
        int rhs = t.add(sg, sh);
        if (lhs < 0 || rhs < 0 || lhs != rhs)
          flag("(c) " + sc.scalar(a).str() + "*(" + t.nameOf(g) + "+" + t.nameOf(h) + ")");
      }
    }

  // (d) additivity in the scalar
  for (int a = 0; a <= S; ++a)
    for (int b = a; a + b <= S; ++b)
      for (int g = 0; g < t.size; ++g) {
        int sg = sc.at(a, g), tg = sc.at(b, g);
        if (sg < 0 || tg < 0) continue;
        ++r.checked;
        int lhs = sc.at(a + b, g);
        int rhs = t.add(sg, tg);
        if (lhs < 0 || rhs < 0 || lhs != rhs)
          flag("(d) (" + sc.scalar(a).str() + "+" + sc.scalar(b).str() + ")*" + t.nameOf(g));
      }

  // (e) multiplicativity in the scalar, when the product stays on the grid
  for (int a = 0; a <= S; ++a)
    for (int b = 0; b <= S; ++b) {
      DyadicScalar prod = dyadicMul(sc.scalar(a), sc.scalar(b));
      int p = sc.scalarIndex(prod);
      if (p < 0) continue;
      for (int g = 0; g < t.size; ++g) {
        int tg = sc.at(b, g);
        if (tg < 0) continue;
        int stg = sc.at(a, tg);
        if (stg < 0) continue;
        ++r.checked;
        int pg = sc.at(p, g);
        if (pg < 0 || pg != stg)
          flag("(e) (" + sc.scalar(a).str() + "*" + sc.scalar(b).str() + ")*" + t.nameOf(g));
      }
    }

  r.passed = r.violations.empty();
  return r;
}

ConeReport check_uniqueness(const PartialMonoidTable& t, const ScalingTable& canonical,
                            const ScalingTable& alt) {
  ConeReport r;
  if (canonical.resolution != alt.resolution || canonical.size != alt.size) {
    r.violations.push_back("tables have different shapes");
    return r;
  }
  for (int a = 0; a < canonical.scalarCount(); ++a)
    for (int x = 0; x < canonical.size; ++x) {
      ++r.checked;
      int c = canonical.at(a, x), o = alt.at(a, x);
      if (c != o && r.violations.size() < 8)
        r.violations.push_back("contradiction with uniqueness at (" + canonical.scalar(a).str() +
                               ", " + t.nameOf(x) + "): " +
                               (c < 0 ? "-" : t.nameOf(c)) + " vs " +
                               (o < 0 ? "-" : t.nameOf(o)));
    }
  r.passed = r.violations.empty();
  return r;
}

ConeReport glb_dyadic_check(const PartialMonoidTable& t, int x, int nMax) {
  ConeReport r;
  OrderData ord = deriveOrder(t);

  std::vector<int> chain;
  int cur = x;
  for (int n = 1; n <= nMax; ++n) {
    auto h = half(t, cur);
    if (!h) {
      r.violations.push_back("element not divisible " + std::to_string(nMax) + " times");
      return r;
    }
    cur = *h;
    chain.push_back(cur);
  }
  ++r.checked;
  MeetResult m = meet(t, ord, chain);
  if (!m.found || m.value != chain.back()) {
    r.violations.push_back("meet of the chain is not the last term");
    return r;
  }

  // no nonzero element halves below itself
  for (int y = 0; y < t.size; ++y) {
    ++r.checked;
    int yy = t.add(y, y);
    if (yy >= 0 && ord.leq(yy, y) && y != t.zero) {
      r.violations.push_back("nonzero " + t.nameOf(y) + " satisfies y+y <= y");
      return r;
    }
  }

  // strictly below the whole chain = strictly below the residual
  int residual = chain.back();
  std::vector<int> strictlyBelow;
  for (int y = 0; y < t.size; ++y)
    if (y != residual && ord.leq(y, residual)) strictlyBelow.push_back(y);
  ++r.checked;
  if (residual == t.zero) {
    if (!strictlyBelow.empty()) {
      r.violations.push_back("elements strictly below zero");
      return r;
    }
  } else if (strictlyBelow.size() == 1 && strictlyBelow.front() == t.zero) {
    // residual covers zero: the squeeze is complete at this resolution
  } else {
    // the chain stopped short of the granularity floor; record the slack
    r.note = "residual " + t.nameOf(residual) + " leaves " +
             std::to_string(strictlyBelow.size() - 1) + " nonzero elements below the chain";
  }
  r.passed = true;
  return r;
}

}  // namespace vnlab
