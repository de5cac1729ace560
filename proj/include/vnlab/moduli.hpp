#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vnlab/hom_sheaf.hpp"
#include "vnlab/monoid.hpp"

namespace vnlab {

// One class of sheaf elements under pseudoisomorphism. For homomorphism
// sheaves the multiplicity matrix is a complete invariant and doubles as the
// canonical representative.
struct ModuliElement {
  MultiplicityMatrix invariant;
  RankTuple support;
};

// The moduli space of a homomorphism sheaf as a finite cancellative partial
// abelian monoid. Addition is defined exactly when the supports fit side by
// side in the ambient algebra, and then adds invariants entrywise.
struct ModuliMonoid {
  BlockAlgebra ambient;
  BlockAlgebra source;
  std::vector<ModuliElement> elements;  // sorted by invariant; zero first
  PartialMonoidTable table;

  int indexOf(const MultiplicityMatrix& c) const;  // -1 when absent
  int zeroIndex() const { return table.zero; }

  // fast paths on invariants
  bool leqFast(int x, int y) const;                       // entrywise comparison
  std::optional<int> addFast(int x, int y) const;         // entrywise sum within capacity
  int meetFast(const std::vector<int>& s) const;          // entrywise minimum
  std::optional<int> joinFast(const std::vector<int>& s) const;  // entrywise maximum
};

enum class ModuliMode { Canonical, OrbitSearch };

struct ModuliTimeout {
  std::uint64_t witnessesTried = 0;
};

struct ModuliBuildOptions {
  std::uint64_t witnessBudget = 200'000'000;
};

// Groups the presheaf's elements into classes. Canonical mode keys classes by
// multiplicity matrix; orbit-search mode unions elements connected by
// explicit pseudoisomorphism witnesses and never consults the invariant.
std::variant<ModuliMonoid, ModuliTimeout> build_moduli(const TruncatedSketch& s,
                                                       const BlockAlgebra& n,
                                                       const HomPresheaf& f, ModuliMode mode,
                                                       const ModuliBuildOptions& opts = {});

// Convenience: full-projection truncation, hom presheaf, canonical monoid.
ModuliMonoid build_moduli_canonical(const BlockAlgebra& m, const BlockAlgebra& n,
                                    int depth = 1);

// Whether canonical and orbit-search builds agree as monoids: identical
// element partitions of the presheaf, matching zero, matching addition.
struct AgreementReport {
  bool agree = false;
  std::string failure;
  int classes = 0;
  std::uint64_t witnessesTried = 0;
  bool timedOut = false;
};

AgreementReport check_mode_agreement(const TruncatedSketch& s, const BlockAlgebra& n,
                                     const HomPresheaf& f,
                                     const ModuliBuildOptions& opts = {});

RankTuple support_of(const ModuliMonoid& m, int x);

}  // namespace vnlab
