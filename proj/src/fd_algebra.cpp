#include "vnlab/fd_algebra.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace vnlab {

int popcount(Mask m) { return std::popcount(m); }

BlockAlgebra::BlockAlgebra(std::vector<int> sizes) : blocks(std::move(sizes)) {
  if (blocks.empty()) throw std::invalid_argument("block algebra needs at least one block");
  for (int n : blocks) {
    if (n < 1) throw std::invalid_argument("block sizes must be positive");
    if (n > 62) throw std::invalid_argument("block sizes above 62 are not supported");
  }
}

int BlockAlgebra::totalLabels() const {
  int t = 0;
  for (int n : blocks) t += n;
  return t;
}

int totalBits(const MaskVec& m) {
  int t = 0;
  for (Mask x : m) t += popcount(x);
  return t;
}

bool maskLeq(const MaskVec& a, const MaskVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool maskDisjoint(const MaskVec& a, const MaskVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return false;
  return true;
}

MaskVec maskAnd(const MaskVec& a, const MaskVec& b) {
  MaskVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
  return r;
}

MaskVec maskOr(const MaskVec& a, const MaskVec& b) {
  MaskVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] | b[i];
  return r;
}

MaskVec maskMinus(const MaskVec& a, const MaskVec& b) {
  MaskVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] & ~b[i];
  return r;
}

bool maskIsZero(const MaskVec& a) {
  for (Mask x : a)
    if (x) return false;
  return true;
}

std::string RankTuple::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < ranks.size(); ++i) {
    if (i) os << ',';
    os << ranks[i];
  }
  os << ')';
  return os.str();
}

StandardProjection::StandardProjection(BlockAlgebra m, MaskVec selected)
    : ambient(std::move(m)), sel(std::move(selected)) {
  if (sel.size() != static_cast<size_t>(ambient.numBlocks()))
    throw std::invalid_argument("projection needs one label set per block");
  for (int i = 0; i < ambient.numBlocks(); ++i)
    if (sel[i] & ~ambient.fullMask(i))
      throw std::invalid_argument("projection selects labels outside its block");
}

std::string StandardProjection::str() const { return maskStr(ambient, sel); }

StandardProjection zeroProjection(const BlockAlgebra& m) {
  return StandardProjection(m, MaskVec(m.numBlocks(), 0));
}

StandardProjection fullProjection(const BlockAlgebra& m) {
  MaskVec s(m.numBlocks());
  for (int i = 0; i < m.numBlocks(); ++i) s[i] = m.fullMask(i);
  return StandardProjection(m, s);
}

RankTuple rankOfMask(const BlockAlgebra& m, const MaskVec& sel) {
  RankTuple r;
  r.sizes = m.blocks;
  r.ranks.reserve(sel.size());
  for (Mask x : sel) r.ranks.push_back(popcount(x));
  return r;
}

RankTuple rank_of(const StandardProjection& p) { return rankOfMask(p.ambient, p.sel); }

RankTuple zeroRank(const BlockAlgebra& m) {
  return RankTuple{std::vector<int>(m.numBlocks(), 0), m.blocks};
}

bool equivalent(const StandardProjection& p, const StandardProjection& q) {
  if (p.ambient != q.ambient) throw AmbientMismatch("projections live in different algebras");
  return rank_of(p).ranks == rank_of(q).ranks;
}

bool orthogonalizable(const RankTuple& a, const RankTuple& b) {
  if (a.sizes != b.sizes) throw AmbientMismatch("rank tuples have different ambient sizes");
  for (size_t i = 0; i < a.ranks.size(); ++i)
    if (a.ranks[i] + b.ranks[i] > a.sizes[i]) return false;
  return true;
}

StandardProjection move_orthogonal(const StandardProjection& q, const RankTuple& r,
                                   const StandardProjection& p) {
  if (q.ambient != p.ambient) throw AmbientMismatch("projections live in different algebras");
  if (!maskLeq(q.sel, p.sel)) throw std::invalid_argument("q must lie under p");
  MaskVec out(q.sel.size(), 0);
  for (size_t i = 0; i < q.sel.size(); ++i) {
    Mask room = p.sel[i] & ~q.sel[i];
    int need = r.ranks[i];
    if (popcount(room) < need)
      throw CapacityExceeded("block " + std::to_string(i + 1) + ": needs " + std::to_string(need) +
                             " free labels under p, has " + std::to_string(popcount(room)));
    // deterministic placement: lowest free labels first
    while (need-- > 0) {
      Mask bit = room & (~room + 1);
      out[i] |= bit;
      room &= ~bit;
    }
  }
  return StandardProjection(p.ambient, out);
}

PartialPermIsometry::PartialPermIsometry(BlockAlgebra m,
                                         std::vector<std::vector<std::pair<int, int>>> pairs)
    : ambient(std::move(m)), map(std::move(pairs)) {
  if (map.size() != static_cast<size_t>(ambient.numBlocks()))
    throw std::invalid_argument("isometry needs one mapping per block");
  for (int i = 0; i < ambient.numBlocks(); ++i) {
    auto& blk = map[i];
    std::sort(blk.begin(), blk.end());
    Mask dom = 0, rng = 0;
    for (auto [s, t] : blk) {
      if (s < 0 || s >= ambient.blocks[i] || t < 0 || t >= ambient.blocks[i])
        throw std::invalid_argument("isometry maps labels outside the block");
      if (dom & (Mask{1} << s)) throw std::invalid_argument("isometry domain repeats a label");
      if (rng & (Mask{1} << t)) throw std::invalid_argument("isometry is not injective");
      dom |= Mask{1} << s;
      rng |= Mask{1} << t;
    }
  }
}

MaskVec PartialPermIsometry::domainMask() const {
  MaskVec d(ambient.numBlocks(), 0);
  for (int i = 0; i < ambient.numBlocks(); ++i)
    for (auto [s, t] : map[i]) d[i] |= Mask{1} << s;
  return d;
}

MaskVec PartialPermIsometry::rangeMask() const {
  MaskVec r(ambient.numBlocks(), 0);
  for (int i = 0; i < ambient.numBlocks(); ++i)
    for (auto [s, t] : map[i]) r[i] |= Mask{1} << t;
  return r;
}

StandardProjection PartialPermIsometry::initial() const {
  return StandardProjection(ambient, domainMask());
}

StandardProjection PartialPermIsometry::final() const {
  return StandardProjection(ambient, rangeMask());
}

int PartialPermIsometry::apply(int block, int label) const {
  for (auto [s, t] : map[block])
    if (s == label) return t;
  return -1;
}

int PartialPermIsometry::applyInverse(int block, int label) const {
  for (auto [s, t] : map[block])
    if (t == label) return s;
  return -1;
}

std::string PartialPermIsometry::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < ambient.numBlocks(); ++i) {
    if (i) os << '|';
    for (size_t k = 0; k < map[i].size(); ++k) {
      if (k) os << ' ';
      os << (map[i][k].first + 1) << "->" << (map[i][k].second + 1);
    }
  }
  os << ']';
  return os.str();
}

PartialPermIsometry identityIsometry(const StandardProjection& p) {
  std::vector<std::vector<std::pair<int, int>>> pairs(p.ambient.numBlocks());
  for (int i = 0; i < p.ambient.numBlocks(); ++i)
    for (int l = 0; l < p.ambient.blocks[i]; ++l)
      if (p.sel[i] & (Mask{1} << l)) pairs[i].push_back({l, l});
  return PartialPermIsometry(p.ambient, std::move(pairs));
}

PartialPermIsometry adjoint(const PartialPermIsometry& u) {
  std::vector<std::vector<std::pair<int, int>>> pairs(u.ambient.numBlocks());
  for (int i = 0; i < u.ambient.numBlocks(); ++i)
    for (auto [s, t] : u.map[i]) pairs[i].push_back({t, s});
  return PartialPermIsometry(u.ambient, std::move(pairs));
}

PartialPermIsometry compose(const PartialPermIsometry& u, const PartialPermIsometry& v) {
  if (u.ambient != v.ambient) throw AmbientMismatch("isometries live in different algebras");
  std::vector<std::vector<std::pair<int, int>>> pairs(u.ambient.numBlocks());
  for (int i = 0; i < u.ambient.numBlocks(); ++i)
    for (auto [s, t] : u.map[i]) {
      int w = v.apply(i, t);
      if (w >= 0) pairs[i].push_back({s, w});
    }
  return PartialPermIsometry(u.ambient, std::move(pairs));
}

MaskVec conjugateMask(const PartialPermIsometry& u, const MaskVec& sel) {
  MaskVec out(sel.size(), 0);
  for (size_t i = 0; i < sel.size(); ++i)
    for (int l = 0; l < u.ambient.blocks[i]; ++l)
      if (sel[i] & (Mask{1} << l)) {
        int t = u.apply(static_cast<int>(i), l);
        if (t < 0) throw std::invalid_argument("label set leaves the isometry domain");
        out[i] |= Mask{1} << t;
      }
  return out;
}

StandardSubalgebra::StandardSubalgebra(BlockAlgebra m, std::vector<MaskVec> atomList)
    : ambient(std::move(m)), atoms(std::move(atomList)) {
  MaskVec seen(ambient.numBlocks(), 0);
  for (auto& a : atoms) {
    if (a.size() != static_cast<size_t>(ambient.numBlocks()))
      throw std::invalid_argument("atom needs one label set per block");
    if (maskIsZero(a)) throw std::invalid_argument("atoms must be nonzero");
    if (!maskDisjoint(a, seen)) throw std::invalid_argument("atoms must be pairwise disjoint");
    seen = maskOr(seen, a);
  }
  std::sort(atoms.begin(), atoms.end());
}

MaskVec StandardSubalgebra::supportMask() const {
  MaskVec s(ambient.numBlocks(), 0);
  for (auto& a : atoms) s = maskOr(s, a);
  return s;
}

StandardProjection StandardSubalgebra::support() const {
  return StandardProjection(ambient, supportMask());
}

std::string StandardSubalgebra::str() const {
  if (atoms.empty()) return "0";
  std::string s;
  for (size_t k = 0; k < atoms.size(); ++k) {
    if (k) s += "+";
    s += maskStr(ambient, atoms[k]);
  }
  return s;
}

bool StandardSubalgebra::operator<(const StandardSubalgebra& o) const {
  int sa = totalBits(supportMask()), sb = totalBits(o.supportMask());
  if (sa != sb) return sa < sb;
  if (atoms.size() != o.atoms.size()) return atoms.size() < o.atoms.size();
  return atoms < o.atoms;
}

StandardSubalgebra zeroAlgebra(const BlockAlgebra& m) { return StandardSubalgebra(m, {}); }

StandardSubalgebra spanOf(const StandardProjection& p) {
  if (p.isZero()) return zeroAlgebra(p.ambient);
  return StandardSubalgebra(p.ambient, {p.sel});
}

bool algebraIncludes(const StandardSubalgebra& a, const StandardSubalgebra& b) {
  if (a.ambient != b.ambient) throw AmbientMismatch("algebras live in different ambients");
  for (auto& atom : a.atoms) {
    MaskVec covered(atom.size(), 0);
    for (auto& cell : b.atoms) {
      if (maskDisjoint(cell, atom)) continue;
      if (!maskLeq(cell, atom)) return false;  // cell straddles the atom boundary
      covered = maskOr(covered, cell);
    }
    if (covered != atom) return false;
  }
  return true;
}

StandardSubalgebra directSum(const StandardSubalgebra& a, const StandardSubalgebra& b) {
  if (a.ambient != b.ambient) throw AmbientMismatch("algebras live in different ambients");
  if (!maskDisjoint(a.supportMask(), b.supportMask()))
    throw std::invalid_argument("direct sum needs orthogonal supports");
  auto atoms = a.atoms;
  atoms.insert(atoms.end(), b.atoms.begin(), b.atoms.end());
  return StandardSubalgebra(a.ambient, std::move(atoms));
}

StandardSubalgebra commonRefinement(const StandardSubalgebra& a, const StandardSubalgebra& b) {
  if (a.ambient != b.ambient) throw AmbientMismatch("algebras live in different ambients");
  if (a.supportMask() != b.supportMask())
    throw std::invalid_argument("refinement needs equal supports");
  std::vector<MaskVec> atoms;
  for (auto& x : a.atoms)
    for (auto& y : b.atoms) {
      MaskVec c = maskAnd(x, y);
      if (!maskIsZero(c)) atoms.push_back(c);
    }
  return StandardSubalgebra(a.ambient, std::move(atoms));
}

MorphismCheck check_morphism(const PartialPermIsometry& u, const StandardSubalgebra& a,
                             const StandardSubalgebra& b) {
  MorphismCheck r;
  MaskVec dom = u.domainMask(), rng = u.rangeMask();
  r.initialMatches = (dom == a.supportMask());
  if (!r.initialMatches) r.failure = "initial space differs from the source support";
  r.finalDominated = maskLeq(rng, b.supportMask());
  if (!r.finalDominated && r.failure.empty())
    r.failure = "final space not dominated by the target support";

  r.conjugatesInto = true;
  if (r.initialMatches) {
    for (auto& atom : a.atoms) {
      MaskVec img = conjugateMask(u, atom);
      MaskVec covered(img.size(), 0);
      bool ok = true;
      for (auto& cell : b.atoms) {
        if (maskDisjoint(cell, img)) continue;
        if (!maskLeq(cell, img)) {
          ok = false;
          break;
        }
        covered = maskOr(covered, cell);
      }
      if (!ok || covered != img) {
        r.conjugatesInto = false;
        if (r.failure.empty())
          r.failure = "image of atom " + maskStr(a.ambient, atom) + " is not a union of target atoms";
        break;
      }
    }
  } else {
    r.conjugatesInto = false;  // not evaluable without the right domain
  }
  return r;
}

bool isPseudoisomorphism(const PartialPermIsometry& u, const StandardSubalgebra& a,
                         const StandardSubalgebra& b) {
  return check_morphism(u, a, b).ok() && u.rangeMask() == b.supportMask();
}

static void forEachSubmaskRec(const MaskVec& sel, size_t i, MaskVec& cur,
                              const std::function<void(const MaskVec&)>& fn) {
  if (i == sel.size()) {
    fn(cur);
    return;
  }
  Mask m = sel[i];
  // iterate all submasks of m, including 0 and m itself
  Mask sub = 0;
  while (true) {
    cur[i] = sub;
    forEachSubmaskRec(sel, i + 1, cur, fn);
    if (sub == m) break;
    sub = (sub - m) & m;
  }
}

void forEachSubmask(const MaskVec& sel, const std::function<void(const MaskVec&)>& fn) {
  MaskVec cur(sel.size(), 0);
  forEachSubmaskRec(sel, 0, cur, fn);
}

static bool forEachBijectionRec(const BlockAlgebra& m, const MaskVec& from, const MaskVec& to,
                                int block, std::vector<std::vector<std::pair<int, int>>>& acc,
                                const std::function<bool(const PartialPermIsometry&)>& fn) {
  if (block == m.numBlocks()) return fn(PartialPermIsometry(m, acc));
  std::vector<int> src, dst;
  for (int l = 0; l < m.blocks[block]; ++l) {
    if (from[block] & (Mask{1} << l)) src.push_back(l);
    if (to[block] & (Mask{1} << l)) dst.push_back(l);
  }
  if (src.size() != dst.size()) return true;  // no bijection on this block; nothing to visit
  std::sort(dst.begin(), dst.end());
  do {
    acc[block].clear();
    for (size_t k = 0; k < src.size(); ++k) acc[block].push_back({src[k], dst[k]});
    if (!forEachBijectionRec(m, from, to, block + 1, acc, fn)) return false;
  } while (std::next_permutation(dst.begin(), dst.end()));
  return true;
}

void forEachBijection(const BlockAlgebra& m, const MaskVec& from, const MaskVec& to,
                      const std::function<bool(const PartialPermIsometry&)>& fn) {
  std::vector<std::vector<std::pair<int, int>>> acc(m.numBlocks());
  forEachBijectionRec(m, from, to, 0, acc, fn);
}

std::string maskStr(const BlockAlgebra& m, const MaskVec& sel) {
  std::ostringstream os;
  os << '{';
  for (int i = 0; i < m.numBlocks(); ++i) {
    if (i) os << '|';
    bool first = true;
    for (int l = 0; l < m.blocks[i]; ++l)
      if (sel[i] & (Mask{1} << l)) {
        if (!first) os << ',';
        os << (l + 1);
        first = false;
      }
  }
  os << '}';
  return os.str();
}

}  // namespace vnlab
