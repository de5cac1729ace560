#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vnlab/dyadic.hpp"
#include "vnlab/moduli.hpp"
#include "vnlab/monoid.hpp"
#include "vnlab/trace_monoid.hpp"

namespace vnlab {

struct DivisibilityReport {
  bool divisible = false;
  int witness = -1;  // an element with no half, when not divisible
  long checked = 0;
  std::string method;
};

// Scans for an in-table half of every element. For multiplicity monoids this
// coincides with every entry of every matrix being even.
DivisibilityReport is_divisible(const PartialMonoidTable& t);

// Parity oracle for moduli monoids; must agree with the scan.
DivisibilityReport divisibleByParity(const ModuliMonoid& m);

// Family-level divisibility for the dyadic grid: halves shift the exponent,
// so they are value-representable whenever the grid has any depth at all.
DivisibilityReport divisibleAsFamily(const TraceMonoid& tm);

// The unique y with y+y = x, by exhaustive search. Two distinct halves
// contradict a structural guarantee and throw.
std::optional<int> half(const PartialMonoidTable& t, int x);

struct NotRepresentable {
  std::string reason;
};

// Binary expansion of the scalar drives repeated halving and partial sums.
std::variant<int, NotRepresentable> dyadic_scale(const PartialMonoidTable& t,
                                                 const DyadicScalar& s, int x);

// Scalar action table at a fixed resolution: entry (a, x) holds the element
// (a/2^R) x, or -1 where the required halving chain leaves the table.
struct ScalingTable {
  int resolution = 0;
  int size = 0;
  std::vector<int> entries;  // (2^R + 1) * size

  int scalarCount() const { return (1 << resolution) + 1; }
  int at(int a, int x) const { return entries[static_cast<size_t>(a) * size + x]; }
  void set(int a, int x, int v) { entries[static_cast<size_t>(a) * size + x] = v; }
  DyadicScalar scalar(int a) const {
    return DyadicScalar(static_cast<std::uint64_t>(a), resolution);
  }
  // -1 when the value is not on the scalar grid
  int scalarIndex(const DyadicScalar& s) const {
    return s.representableAt(resolution) ? static_cast<int>(s.numeratorAt(resolution)) : -1;
  }
};

struct NotDivisible {
  int witness = -1;
};

// Builds the table of dyadic_scale values. The divisibility verdict comes
// from the oracle appropriate to the monoid (scan, parity, or family).
std::variant<ScalingTable, NotDivisible> canonical_cone(const PartialMonoidTable& t,
                                                        int resolution,
                                                        const DivisibilityReport& div);
std::variant<ScalingTable, NotDivisible> canonical_cone(const TraceMonoid& tm);

struct ConeReport {
  bool passed = false;
  long checked = 0;
  std::vector<std::string> violations;  // first few, labelled by axiom
  std::string note;

  std::string summary() const;
};

// Axioms over every combination of present table entries:
//   (a) 0g = 0, (b) 1g = g,
//   (c) s(g+h) = sg+sh whenever g+h is defined and sg, sh are present
//       (when g+h itself is undefined the left side does not denote at this
//        resolution, so nothing is asserted),
//   (d) (s+t)g = sg+tg for s+t <= 1,
//   (e) (st)g = s(tg) whenever st stays on the scalar grid.
ConeReport check_cone_axioms(const PartialMonoidTable& t, const ScalingTable& sc);

// Any axiom-satisfying table must agree with the canonical one entry by
// entry; a disagreement is a contradiction diagnostic, not a discovery.
ConeReport check_uniqueness(const PartialMonoidTable& t, const ScalingTable& canonical,
                            const ScalingTable& alt);

// Finite shadow of "the dyadic multiples of x squeeze to zero":
//   - the meet of { x/2^n : 1 <= n <= n_max } is x/2^n_max,
//   - no nonzero element satisfies y+y <= y,
//   - when x/2^n_max sits directly above zero, nothing but zero lies
//     strictly below the whole chain (otherwise the slack is reported).
ConeReport glb_dyadic_check(const PartialMonoidTable& t, int x, int nMax);

}  // namespace vnlab
