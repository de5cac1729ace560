#pragma once

#include <string>
#include <vector>

#include "vnlab/category.hpp"

namespace vnlab {

// A contravariant set-valued functor given by tables. F(A) is the index set
// 0..at[A]-1 (with optional element labels for diagnostics); an arrow
// f : A -> B acts as along[f] : F(B) -> F(A).
struct PresheafTable {
  std::vector<int> at;
  std::vector<std::vector<std::string>> labels;  // optional, may be empty
  std::vector<std::vector<int>> along;           // arrow id -> map indexed by F(dst)

  std::string elementLabel(int obj, int elem) const;
};

// Functoriality: identities act as identities, along(g.f) = along(f).along(g),
// and every table entry is a valid element index. Empty string when it holds.
std::string checkFunctorial(const PresheafTable& f, const FiniteCategory& cat);

// Whether the canonical map from F(apex) to the limit of F over the cocone's
// diagram (enumerated as compatible families) is a bijection.
bool check_is_limit(const PresheafTable& f, const Cocone& c, const FiniteCategory& cat);

struct SheafReport {
  bool functorial = false;
  std::string functorialFailure;
  int coconesChecked = 0;
  std::vector<int> failedCocones;          // indices into the sketch's cocone list
  std::vector<std::string> failedNames;
  long checks = 0;

  bool pass() const { return functorial && failedCocones.empty(); }
  std::string summary() const;
};

// Runs the functoriality check, then every cocone's limit check.
SheafReport check_sheaf(const PresheafTable& f, const FiniteCategory& cat,
                        const std::vector<Cocone>& cocones);

}  // namespace vnlab
