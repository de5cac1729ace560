#pragma once

#include <vector>

#include "vnlab/dyadic.hpp"
#include "vnlab/monoid.hpp"

namespace vnlab {

// The dyadic grid on [0, T] at a fixed resolution: elements a/2^K with sums
// defined when they stay at or below the cap. A totally ordered cancellative
// partial monoid; the stand-in instance on which cone structures exist.
struct TraceMonoid {
  int resolution = 0;  // K
  DyadicScalar cap;    // T <= 1
  PartialMonoidTable table;

  TraceMonoid(int k, DyadicScalar t);

  int size() const { return table.size; }
  DyadicScalar value(int idx) const;  // idx / 2^K
  int indexOf(const DyadicScalar& v) const;  // -1 when off the grid

  // Halves are value-representable for every element (the exponent shifts),
  // so the family is divisible as soon as the grid is finer than the
  // integers; realizing a specific half inside the table still needs the
  // numerator to be even at resolution K.
  bool divisible() const { return resolution >= 1; }
};

}  // namespace vnlab
