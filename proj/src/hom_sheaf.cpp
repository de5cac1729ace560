#include "vnlab/hom_sheaf.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace vnlab {

RankTuple MultiplicityMatrix::supportRank() const {
  RankTuple r;
  r.sizes = mSizes;
  r.ranks.resize(mSizes.size(), 0);
  for (size_t i = 0; i < entries.size(); ++i)
    for (size_t j = 0; j < entries[i].size(); ++j) r.ranks[i] += entries[i][j] * nSizes[j];
  return r;
}

bool MultiplicityMatrix::withinCapacity() const {
  RankTuple r = supportRank();
  for (size_t i = 0; i < r.ranks.size(); ++i)
    if (r.ranks[i] > mSizes[i]) return false;
  return true;
}

bool MultiplicityMatrix::operator<(const MultiplicityMatrix& o) const {
  for (size_t i = entries.size(); i-- > 0;)
    for (size_t j = entries[i].size(); j-- > 0;)
      if (entries[i][j] != o.entries[i][j]) return entries[i][j] < o.entries[i][j];
  return false;
}

std::string MultiplicityMatrix::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ',';
    for (size_t j = 0; j < entries[i].size(); ++j) {
      if (j) os << ' ';
      os << entries[i][j];
    }
  }
  os << ')';
  return os.str();
}

MultiplicityMatrix zeroMatrix(const BlockAlgebra& m, const BlockAlgebra& n) {
  MultiplicityMatrix c;
  c.mSizes = m.blocks;
  c.nSizes = n.blocks;
  c.entries.assign(m.numBlocks(), std::vector<int>(n.numBlocks(), 0));
  return c;
}

std::string StandardHom::str() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (size_t i = 0; i < grouping.size(); ++i)
    for (size_t j = 0; j < grouping[i].size(); ++j)
      for (auto& t : grouping[i][j]) {
        if (!first) os << ' ';
        first = false;
        os << 'b' << (i + 1) << 'n' << (j + 1) << ':';
        for (size_t k = 0; k < t.size(); ++k) {
          if (k) os << ',';
          os << (t[k] + 1);
        }
      }
  os << ']';
  return os.str();
}

namespace {

// All ways to tile one (atom, block) piece with ordered tuples, each tagged by
// a source block of matching size. Pieces combine by cross product.
void tilePiece(const std::vector<int>& labels, const std::vector<int>& nSizes,
               std::vector<std::vector<std::pair<int, std::vector<int>>>>& out) {
  if (labels.empty()) {
    out.push_back({});
    return;
  }
  int head = labels[0];
  std::vector<int> rest(labels.begin() + 1, labels.end());
  for (size_t j = 0; j < nSizes.size(); ++j) {
    int len = nSizes[j];
    if (len > static_cast<int>(labels.size())) continue;
    // choose the other members of head's tuple from the remaining labels
    std::vector<int> pick(len - 1);
    std::function<void(int, int)> choose = [&](int start, int k) {
      if (k == len - 1) {
        std::vector<int> group = {head};
        group.insert(group.end(), pick.begin(), pick.end());
        std::sort(group.begin() + 1, group.end());
        std::vector<int> remaining;
        for (int l : rest)
          if (std::find(group.begin(), group.end(), l) == group.end()) remaining.push_back(l);
        std::vector<std::vector<std::pair<int, std::vector<int>>>> tails;
        tilePiece(remaining, nSizes, tails);
        std::vector<int> ordered = group;
        std::sort(ordered.begin(), ordered.end());
        do {
          for (auto& tail : tails) {
            std::vector<std::pair<int, std::vector<int>>> full;
            full.push_back({static_cast<int>(j), ordered});
            full.insert(full.end(), tail.begin(), tail.end());
            out.push_back(std::move(full));
          }
        } while (std::next_permutation(ordered.begin(), ordered.end()));
        return;
      }
      for (int idx = start; idx < static_cast<int>(rest.size()); ++idx) {
        pick[k] = rest[idx];
        choose(idx + 1, k + 1);
      }
    };
    choose(0, 0);
  }
}

}  // namespace

std::vector<StandardHom> enumerate_homs(const BlockAlgebra& n, const StandardSubalgebra& a) {
  const BlockAlgebra& m = a.ambient;
  // per-piece tilings; a piece is the part of one atom in one block
  struct Piece {
    int block;
    std::vector<std::vector<std::pair<int, std::vector<int>>>> tilings;
  };
  std::vector<Piece> pieces;
  for (auto& atom : a.atoms)
    for (int i = 0; i < m.numBlocks(); ++i) {
      if (!atom[i]) continue;
      std::vector<int> labels;
      for (int l = 0; l < m.blocks[i]; ++l)
        if (atom[i] & (Mask{1} << l)) labels.push_back(l);
      Piece p;
      p.block = i;
      tilePiece(labels, n.blocks, p.tilings);
      if (p.tilings.empty()) return {};  // piece size not expressible in source block sizes
      pieces.push_back(std::move(p));
    }

  std::vector<StandardHom> result;
  std::vector<size_t> idx(pieces.size(), 0);
  while (true) {
    StandardHom h;
    h.source = n;
    h.target = a;
    h.grouping.assign(m.numBlocks(),
                      std::vector<std::vector<std::vector<int>>>(n.numBlocks()));
    for (size_t p = 0; p < pieces.size(); ++p)
      for (auto& [j, tuple] : pieces[p].tilings[idx[p]])
        h.grouping[pieces[p].block][j].push_back(tuple);
    for (auto& perBlock : h.grouping)
      for (auto& tuples : perBlock) std::sort(tuples.begin(), tuples.end());
    result.push_back(std::move(h));

    size_t p = 0;
    while (p < pieces.size() && ++idx[p] == pieces[p].tilings.size()) idx[p++] = 0;
    if (p == pieces.size()) break;
    if (pieces.empty()) break;
  }
  if (pieces.empty()) {
    // the zero corner carries exactly one (empty) homomorphism
    StandardHom h;
    h.source = n;
    h.target = a;
    h.grouping.assign(m.numBlocks(),
                      std::vector<std::vector<std::vector<int>>>(n.numBlocks()));
    result = {h};
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

MultiplicityMatrix multiplicity_of(const StandardHom& phi) {
  MultiplicityMatrix c = zeroMatrix(phi.target.ambient, phi.source);
  for (size_t i = 0; i < phi.grouping.size(); ++i)
    for (size_t j = 0; j < phi.grouping[i].size(); ++j)
      c.entries[i][j] = static_cast<int>(phi.grouping[i][j].size());
  return c;
}

std::variant<StandardHom, NotCompatible> restrict_hom(const StandardHom& phi,
                                                      const PartialPermIsometry& u,
                                                      const StandardSubalgebra& a) {
  const BlockAlgebra& m = a.ambient;
  if (u.domainMask() != a.supportMask())
    return NotCompatible{"initial space of u differs from the target support"};
  if (!maskLeq(u.rangeMask(), phi.target.supportMask()))
    return NotCompatible{"final space of u leaves the support carrying the homomorphism"};

  MaskVec range = u.rangeMask();
  StandardHom out;
  out.source = phi.source;
  out.target = a;
  out.grouping.assign(m.numBlocks(),
                      std::vector<std::vector<std::vector<int>>>(phi.source.numBlocks()));
  for (size_t i = 0; i < phi.grouping.size(); ++i)
    for (size_t j = 0; j < phi.grouping[i].size(); ++j)
      for (auto& t : phi.grouping[i][j]) {
        Mask tm = 0;
        for (int l : t) tm |= Mask{1} << l;
        Mask kept = tm & range[i];
        if (!kept) continue;
        if (kept != tm)
          return NotCompatible{"range of u cuts a tuple in block " + std::to_string(i + 1)};
        std::vector<int> pulled(t.size());
        for (size_t k = 0; k < t.size(); ++k)
          pulled[k] = u.applyInverse(static_cast<int>(i), t[k]);
        out.grouping[i][j].push_back(std::move(pulled));
      }
  for (auto& perBlock : out.grouping)
    for (auto& tuples : perBlock) std::sort(tuples.begin(), tuples.end());

  // the pulled-back tuples must decompose along the atoms of a and cover it
  MaskVec covered(m.numBlocks(), 0);
  for (size_t i = 0; i < out.grouping.size(); ++i)
    for (auto& tuples : out.grouping[i])
      for (auto& t : tuples) {
        Mask tm = 0;
        for (int l : t) tm |= Mask{1} << l;
        bool inside = false;
        for (auto& atom : a.atoms)
          if ((tm & ~atom[i]) == 0) {
            inside = true;
            break;
          }
        if (!inside)
          return NotCompatible{"pulled-back tuple does not sit inside a single atom"};
        covered[i] |= tm;
      }
  if (covered != a.supportMask())
    return NotCompatible{"pulled-back tuples do not cover the support"};
  return out;
}

HomPresheaf as_presheaf(const BlockAlgebra& n, const TruncatedSketch& s) {
  HomPresheaf hp;
  int numObj = static_cast<int>(s.objects.size());
  hp.homs.resize(numObj);
  hp.table.at.resize(numObj);
  hp.table.labels.resize(numObj);
  std::vector<std::map<std::string, int>> index(numObj);
  for (int o = 0; o < numObj; ++o) {
    hp.homs[o] = enumerate_homs(n, s.objects[o]);
    hp.table.at[o] = static_cast<int>(hp.homs[o].size());
    for (int e = 0; e < hp.table.at[o]; ++e) {
      hp.table.labels[o].push_back(hp.homs[o][e].str());
      index[o][hp.homs[o][e].str()] = e;
    }
  }
  hp.table.along.resize(s.cat.arrows.size());
  for (const Arrow& f : s.cat.arrows) {
    auto& m = hp.table.along[f.id];
    m.resize(hp.table.at[f.dst]);
    bool total = true;
    for (int e = 0; e < hp.table.at[f.dst]; ++e) {
      auto res = restrict_hom(hp.homs[f.dst][e], s.arrowIso[f.id], s.objects[f.src]);
      if (auto* hom = std::get_if<StandardHom>(&res)) {
        auto it = index[f.src].find(hom->str());
        if (it == index[f.src].end())
          throw InternalCheckFailure("restriction landed outside the enumerated set");
        m[e] = it->second;
      } else {
        total = false;
        break;
      }
    }
    if (!total) {
      hp.droppedArrows.push_back(f.id);
      m.assign(hp.table.at[f.dst], 0);
    }
  }
  return hp;
}

}  // namespace vnlab
