#pragma once

#include <vector>

#include "vnlab/category.hpp"
#include "vnlab/fd_algebra.hpp"

namespace vnlab {

// A finite fragment of the subalgebra category of a block algebra, with the
// distinguished cocones instantiated on it. Arrows are the subalgebra
// inclusions (as partial isometries, the identity on the source support),
// which is exactly what the cocones are made of.
struct TruncatedSketch {
  BlockAlgebra ambient;
  std::vector<StandardSubalgebra> objects;  // canonically sorted; zero algebra first
  FiniteCategory cat;
  std::vector<PartialPermIsometry> arrowIso;  // parallel to cat.arrows
  std::vector<Cocone> cocones;
  int zeroObject = 0;

  int objectId(const StandardSubalgebra& a) const;  // -1 when absent
};

struct SketchOptions {
  int maxObjects = 5000;
};

// Builds the truncation generated by the given projections:
//   - the zero algebra and the one-atom algebra Cq for every nonzero
//     q below the join of the generators,
//   - the two-atom cut algebras Cq + C(r-q) under every one-atom object,
//   - `depth` rounds of common refinements of same-support cuts,
//   - closure under direct sums of orthogonal objects.
// Cocones: one pushout-type per one-atom object and pair of cuts under it
// (apex their refinement), one coproduct-type per orthogonal pair (apex the
// direct sum), and the empty coproduct with the zero algebra as apex.
TruncatedSketch build_truncated_sketch(const BlockAlgebra& m,
                                       const std::vector<StandardProjection>& generators,
                                       int depth, const SketchOptions& opts = {});

}  // namespace vnlab
