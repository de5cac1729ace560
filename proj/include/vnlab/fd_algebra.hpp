#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vnlab/errors.hpp"

namespace vnlab {

// A finite-dimensional von Neumann algebra is a direct sum of full matrix
// blocks; everything here works with its block-size vector and with diagonal
// (standard position) projections, stored as one bitmask of basis labels per
// block. Labels are 0-based internally and printed 1-based.

using Mask = std::uint64_t;

int popcount(Mask m);

struct BlockAlgebra {
  std::vector<int> blocks;

  BlockAlgebra() = default;
  explicit BlockAlgebra(std::vector<int> sizes);

  int numBlocks() const { return static_cast<int>(blocks.size()); }
  int totalLabels() const;
  Mask fullMask(int block) const { return (Mask{1} << blocks[block]) - 1; }

  bool operator==(const BlockAlgebra&) const = default;
};

// Per-block label sets; the raw payload of a standard projection.
using MaskVec = std::vector<Mask>;

int totalBits(const MaskVec& m);
bool maskLeq(const MaskVec& a, const MaskVec& b);      // a subset of b, blockwise
bool maskDisjoint(const MaskVec& a, const MaskVec& b);
MaskVec maskAnd(const MaskVec& a, const MaskVec& b);
MaskVec maskOr(const MaskVec& a, const MaskVec& b);
MaskVec maskMinus(const MaskVec& a, const MaskVec& b);  // a \ b
bool maskIsZero(const MaskVec& a);

struct RankTuple {
  std::vector<int> ranks;
  std::vector<int> sizes;  // ambient block sizes

  bool operator==(const RankTuple&) const = default;
  bool operator<(const RankTuple& o) const { return ranks < o.ranks; }
  std::string str() const;
};

struct StandardProjection {
  BlockAlgebra ambient;
  MaskVec sel;

  StandardProjection() = default;
  StandardProjection(BlockAlgebra m, MaskVec selected);

  bool isZero() const { return maskIsZero(sel); }
  std::string str() const;

  bool operator==(const StandardProjection&) const = default;
};

StandardProjection zeroProjection(const BlockAlgebra& m);
StandardProjection fullProjection(const BlockAlgebra& m);

RankTuple rank_of(const StandardProjection& p);
RankTuple rankOfMask(const BlockAlgebra& m, const MaskVec& sel);
RankTuple zeroRank(const BlockAlgebra& m);

// Murray-von Neumann equivalence of standard projections: equal rank tuples.
bool equivalent(const StandardProjection& p, const StandardProjection& q);

// Whether projections of these ranks can be realized on disjoint labels.
bool orthogonalizable(const RankTuple& a, const RankTuple& b);

// Place a projection of rank r under p, disjoint from q <= p.
// Throws CapacityExceeded when p cannot accommodate q plus r.
StandardProjection move_orthogonal(const StandardProjection& q, const RankTuple& r,
                                   const StandardProjection& p);

// A partial isometry that permutes basis labels within each block. Stored as
// sorted injective (from, to) pairs per block.
struct PartialPermIsometry {
  BlockAlgebra ambient;
  std::vector<std::vector<std::pair<int, int>>> map;

  PartialPermIsometry() = default;
  PartialPermIsometry(BlockAlgebra m, std::vector<std::vector<std::pair<int, int>>> pairs);

  MaskVec domainMask() const;  // labels of u*u
  MaskVec rangeMask() const;   // labels of uu*
  StandardProjection initial() const;
  StandardProjection final() const;

  // Image of a label under the permutation; -1 when outside the domain.
  int apply(int block, int label) const;
  int applyInverse(int block, int label) const;

  std::string str() const;
  bool operator==(const PartialPermIsometry&) const = default;
};

PartialPermIsometry identityIsometry(const StandardProjection& p);
PartialPermIsometry adjoint(const PartialPermIsometry& u);
// v after u; requires range(u) inside domain(v) on every block it touches.
PartialPermIsometry compose(const PartialPermIsometry& u, const PartialPermIsometry& v);
// Image of a label set under u; requires sel inside the domain.
MaskVec conjugateMask(const PartialPermIsometry& u, const MaskVec& sel);

// An abelian subalgebra in standard position: a list of pairwise disjoint
// nonzero label sets (its minimal projections). The empty list is the zero
// algebra. Atoms are kept sorted, so equality is structural identity.
struct StandardSubalgebra {
  BlockAlgebra ambient;
  std::vector<MaskVec> atoms;

  StandardSubalgebra() = default;
  StandardSubalgebra(BlockAlgebra m, std::vector<MaskVec> atomList);

  bool isZero() const { return atoms.empty(); }
  MaskVec supportMask() const;
  StandardProjection support() const;
  std::string str() const;

  bool operator==(const StandardSubalgebra&) const = default;
  bool operator<(const StandardSubalgebra& o) const;
};

StandardSubalgebra zeroAlgebra(const BlockAlgebra& m);
StandardSubalgebra spanOf(const StandardProjection& p);  // one-atom algebra Cp

// Subalgebra inclusion: every atom of a is a union of atoms of b.
bool algebraIncludes(const StandardSubalgebra& a, const StandardSubalgebra& b);

// Direct sum of orthogonal subalgebras.
StandardSubalgebra directSum(const StandardSubalgebra& a, const StandardSubalgebra& b);

// Algebra generated by two commuting partition algebras with equal support:
// atoms are the nonzero pairwise intersections.
StandardSubalgebra commonRefinement(const StandardSubalgebra& a, const StandardSubalgebra& b);

struct MorphismCheck {
  bool initialMatches = false;   // u*u equals the source support exactly
  bool finalDominated = false;   // uu* below the target support
  bool conjugatesInto = false;   // u maps source atoms into unions of target atoms
  std::string failure;

  bool ok() const { return initialMatches && finalDominated && conjugatesInto; }
  explicit operator bool() const { return ok(); }
};

MorphismCheck check_morphism(const PartialPermIsometry& u, const StandardSubalgebra& a,
                             const StandardSubalgebra& b);

// Pseudoisomorphism: a morphism whose final space is exactly the target support.
bool isPseudoisomorphism(const PartialPermIsometry& u, const StandardSubalgebra& a,
                         const StandardSubalgebra& b);

// --- enumeration helpers (exact, tiny instances only) ---

// All per-block submask combinations of the given label set.
void forEachSubmask(const MaskVec& sel, const std::function<void(const MaskVec&)>& fn);

// All label bijections from one projection onto another of equal rank.
void forEachBijection(const BlockAlgebra& m, const MaskVec& from, const MaskVec& to,
                      const std::function<bool(const PartialPermIsometry&)>& fn);

std::string maskStr(const BlockAlgebra& m, const MaskVec& sel);

}  // namespace vnlab
