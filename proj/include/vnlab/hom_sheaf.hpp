#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vnlab/fd_algebra.hpp"
#include "vnlab/presheaf.hpp"
#include "vnlab/sketch.hpp"

namespace vnlab {

// The unitary-equivalence invariant of a standard homomorphism: entry (i, j)
// counts the copies of source block j sitting inside ambient block i.
struct MultiplicityMatrix {
  std::vector<std::vector<int>> entries;  // [mBlock][nBlock]
  std::vector<int> mSizes;
  std::vector<int> nSizes;

  RankTuple supportRank() const;  // row i adds up to sum_j c_ij * m_j
  bool withinCapacity() const;
  bool operator==(const MultiplicityMatrix&) const = default;
  // colexicographic: earlier blocks vary fastest, so (1,0) precedes (0,1)
  bool operator<(const MultiplicityMatrix& o) const;
  std::string str() const;
};

MultiplicityMatrix zeroMatrix(const BlockAlgebra& m, const BlockAlgebra& n);

// A unital homomorphism from a block algebra N onto the corner cut out by a
// subalgebra's support, commuting with that subalgebra. In standard position
// it is a family of disjoint ordered label tuples: tuple (i, j, t) embeds
// source block j into ambient block i along the labels of t, and every tuple
// sits inside a single atom. The tuples cover the support exactly.
struct StandardHom {
  BlockAlgebra source;
  StandardSubalgebra target;
  // grouping[i][j] = sorted list of ordered tuples of labels in block i
  std::vector<std::vector<std::vector<std::vector<int>>>> grouping;

  std::string str() const;
  bool operator==(const StandardHom&) const = default;
  bool operator<(const StandardHom& o) const { return grouping < o.grouping; }
};

// All standard homomorphisms from n onto the corner of a, in canonical order.
// Empty when some atom piece cannot be tiled by source block sizes.
std::vector<StandardHom> enumerate_homs(const BlockAlgebra& n, const StandardSubalgebra& a);

MultiplicityMatrix multiplicity_of(const StandardHom& phi);

struct NotCompatible {
  std::string reason;
};

// Compression x -> u* phi(x) u along u : A -> B. Tuples inside the range of
// u pull back through the inverse label map; a tuple cut by the range means
// the compression is not multiplicative and yields NotCompatible.
std::variant<StandardHom, NotCompatible> restrict_hom(const StandardHom& phi,
                                                      const PartialPermIsometry& u,
                                                      const StandardSubalgebra& a);

struct HomPresheaf {
  PresheafTable table;
  std::vector<std::vector<StandardHom>> homs;  // per object, parallel to table.at
  std::vector<int> droppedArrows;              // arrows whose action was not total
};

// Instantiates the homomorphism sheaf of n on a truncated sketch.
HomPresheaf as_presheaf(const BlockAlgebra& n, const TruncatedSketch& s);

}  // namespace vnlab
