#include "vnlab/trace_monoid.hpp"

namespace vnlab {

TraceMonoid::TraceMonoid(int k, DyadicScalar t) : resolution(k), cap(t) {
  if (k < 0 || k > 24) throw std::invalid_argument("trace monoid resolution out of range");
  if (!t.representableAt(k)) throw std::invalid_argument("cap not representable at resolution");
  int n = static_cast<int>(t.numeratorAt(k)) + 1;
  table = PartialMonoidTable::withSize(n, 0);
  for (int a = 0; a < n; ++a) table.names.push_back(DyadicScalar(a, k).str());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a + b < n) table.setAdd(a, b, a + b);
}

DyadicScalar TraceMonoid::value(int idx) const {
  return DyadicScalar(static_cast<std::uint64_t>(idx), resolution);
}

int TraceMonoid::indexOf(const DyadicScalar& v) const {
  if (!v.representableAt(resolution)) return -1;
  std::uint64_t a = v.numeratorAt(resolution);
  if (a >= static_cast<std::uint64_t>(table.size)) return -1;
  return static_cast<int>(a);
}

}  // namespace vnlab
