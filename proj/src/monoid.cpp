#include "vnlab/monoid.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace vnlab {

std::string PartialMonoidTable::nameOf(int x) const {
  if (x >= 0 && x < static_cast<int>(names.size()) && !names[x].empty()) return names[x];
  return "#" + std::to_string(x);
}

PartialMonoidTable PartialMonoidTable::withSize(int n, int zeroIndex) {
  PartialMonoidTable t;
  t.size = n;
  t.zero = zeroIndex;
  t.sums.assign(static_cast<size_t>(n) * n, -1);
  return t;
}

bool leq(const PartialMonoidTable& t, int x, int y) {
  for (int z = 0; z < t.size; ++z)
    if (t.add(x, z) == y) return true;
  return false;
}

std::optional<int> subtract(const PartialMonoidTable& t, int y, int x) {
  for (int z = 0; z < t.size; ++z)
    if (t.add(x, z) == y) return z;
  return std::nullopt;
}

OrderData deriveOrder(const PartialMonoidTable& t) {
  OrderData o;
  o.size = t.size;
  o.words = (t.size + 63) / 64;
  o.upset.assign(static_cast<size_t>(t.size) * o.words, 0);
  o.downset.assign(static_cast<size_t>(t.size) * o.words, 0);
  o.diff.assign(static_cast<size_t>(t.size) * t.size, -1);
  for (int x = 0; x < t.size; ++x)
    for (int z = 0; z < t.size; ++z) {
      int y = t.add(x, z);
      if (y < 0) continue;
      o.upset[static_cast<size_t>(x) * o.words + y / 64] |= std::uint64_t{1} << (y % 64);
      o.downset[static_cast<size_t>(y) * o.words + x / 64] |= std::uint64_t{1} << (x % 64);
      o.diff[static_cast<size_t>(y) * t.size + x] = z;
    }
  return o;
}

namespace {

// Intersection of the given bitset rows; out has `words` words.
void intersectRows(const std::vector<std::uint64_t>& rows, int words,
                   const std::vector<int>& which, std::vector<std::uint64_t>& out) {
  out.assign(words, ~std::uint64_t{0});
  for (int x : which)
    for (int w = 0; w < words; ++w) out[w] &= rows[static_cast<size_t>(x) * words + w];
}

}  // namespace

MeetResult meet(const PartialMonoidTable& t, const OrderData& ord, const std::vector<int>& s) {
  MeetResult r;
  if (s.empty()) {
    r.failure = "meet of the empty set is undefined";
    return r;
  }
  std::vector<std::uint64_t> lb;
  intersectRows(ord.downset, ord.words, s, lb);
  // the greatest lower bound dominates every lower bound
  int best = -1;
  for (int y = 0; y < t.size && best < 0; ++y) {
    if (!(lb[y / 64] >> (y % 64) & 1)) continue;
    bool dominatesAll = true;
    for (int w = 0; w < ord.words; ++w)
      if (lb[w] & ~ord.downset[static_cast<size_t>(y) * ord.words + w]) {
        dominatesAll = false;
        break;
      }
    if (dominatesAll) best = y;
  }
  if (best < 0) {
    r.failure = "lower bounds have no greatest element";
    return r;
  }
  r.found = true;
  r.value = best;
  return r;
}

JoinResult join(const PartialMonoidTable& t, const OrderData& ord, const std::vector<int>& s) {
  JoinResult r;
  if (s.empty()) {
    r.failure = "join of the empty set is undefined";
    return r;
  }
  std::vector<std::uint64_t> ub;
  intersectRows(ord.upset, ord.words, s, ub);
  std::vector<int> uppers;
  for (int y = 0; y < t.size; ++y)
    if (ub[y / 64] >> (y % 64) & 1) uppers.push_back(y);
  if (uppers.empty()) {
    r.status = JoinResult::Status::NoUpperBound;
    return r;
  }
  // candidate = x - meet{ x - s_i }, independent of the chosen upper bound x
  int candidate = -1;
  for (int x : uppers) {
    std::vector<int> diffs;
    diffs.reserve(s.size());
    for (int si : s) diffs.push_back(ord.subtract(x, si));
    MeetResult m = meet(t, ord, diffs);
    if (!m.found) {
      r.status = JoinResult::Status::Ambiguous;
      r.failure = "meet of complements failed at upper bound " + t.nameOf(x);
      return r;
    }
    int y = ord.subtract(x, m.value);
    if (y < 0) {
      r.status = JoinResult::Status::Ambiguous;
      r.failure = "complement not below its upper bound at " + t.nameOf(x);
      return r;
    }
    if (candidate < 0) candidate = y;
    else if (candidate != y) {
      r.status = JoinResult::Status::Ambiguous;
      r.failure = "formula value depends on the upper bound: " + t.nameOf(candidate) + " vs " +
                  t.nameOf(y) + " at " + t.nameOf(x);
      return r;
    }
  }
  // least upper bound: an upper bound below every upper bound
  bool isUpper = std::find(uppers.begin(), uppers.end(), candidate) != uppers.end();
  if (!isUpper) {
    r.status = JoinResult::Status::NotLeast;
    r.failure = "formula value " + t.nameOf(candidate) + " is not an upper bound";
    return r;
  }
  for (int x : uppers)
    if (!ord.leq(candidate, x)) {
      r.status = JoinResult::Status::NotLeast;
      r.failure = "upper bound " + t.nameOf(x) + " does not dominate " + t.nameOf(candidate);
      return r;
    }
  r.status = JoinResult::Status::Found;
  r.value = candidate;
  return r;
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  os << name << ": " << (passed ? "pass" : "fail") << " (checked " << checked << ")";
  if (!passed && !failure.empty()) os << " first: " << failure;
  return os.str();
}

CheckReport check_monoid(const PartialMonoidTable& t) {
  CheckReport r;
  r.name = "monoid";
  for (int x = 0; x < t.size; ++x) {
    ++r.checked;
    if (t.add(t.zero, x) != x || t.add(x, t.zero) != x) {
      r.failure = "zero law fails at " + t.nameOf(x);
      return r;
    }
  }
  for (int x = 0; x < t.size; ++x)
    for (int y = 0; y < t.size; ++y) {
      ++r.checked;
      if (t.add(x, y) != t.add(y, x)) {
        r.failure = "commutativity fails at " + t.nameOf(x) + "," + t.nameOf(y);
        return r;
      }
    }
  for (int x = 0; x < t.size; ++x)
    for (int y = 0; y < t.size; ++y)
      for (int z = 0; z < t.size; ++z) {
        ++r.checked;
        int xy = t.add(x, y), yz = t.add(y, z);
        int left = xy < 0 ? -1 : t.add(xy, z);
        int right = yz < 0 ? -1 : t.add(x, yz);
        if (left != right) {
          r.failure = "associativity fails at " + t.nameOf(x) + "," + t.nameOf(y) + "," +
                      t.nameOf(z);
          return r;
        }
      }
  for (int x = 0; x < t.size; ++x)
    for (int y = 0; y < t.size; ++y)
      for (int z = y + 1; z < t.size; ++z) {
        ++r.checked;
        int xy = t.add(x, y), xz = t.add(x, z);
        if (xy >= 0 && xy == xz) {
          r.failure = "cancellation fails: " + t.nameOf(x) + "+" + t.nameOf(y) + " = " +
                      t.nameOf(x) + "+" + t.nameOf(z);
          return r;
        }
      }
  r.passed = true;
  return r;
}

CheckReport check_poset(const PartialMonoidTable& t) {
  std::vector<std::uint8_t> le(static_cast<size_t>(t.size) * t.size, 0);
  for (int x = 0; x < t.size; ++x)
    for (int y = 0; y < t.size; ++y)
      le[static_cast<size_t>(x) * t.size + y] = leq(t, x, y) ? 1 : 0;
  return check_poset_over(t, le);
}

CheckReport check_poset_over(const PartialMonoidTable& t,
                             const std::vector<std::uint8_t>& le) {
  CheckReport r;
  r.name = "poset";
  auto at = [&](int x, int y) { return le[static_cast<size_t>(x) * t.size + y] != 0; };
  for (int x = 0; x < t.size; ++x) {
    ++r.checked;
    if (!at(x, x)) {
      r.failure = "reflexivity fails at " + t.nameOf(x);
      return r;
    }
  }
  for (int x = 0; x < t.size; ++x)
    for (int y = 0; y < t.size; ++y) {
      ++r.checked;
      if (x != y && at(x, y) && at(y, x)) {
        r.failure = "antisymmetry fails at " + t.nameOf(x) + "," + t.nameOf(y);
        return r;
      }
    }
  for (int x = 0; x < t.size; ++x)
    for (int y = 0; y < t.size; ++y) {
      if (!at(x, y)) continue;
      for (int z = 0; z < t.size; ++z) {
        ++r.checked;
        if (at(y, z) && !at(x, z)) {
          r.failure = "transitivity fails at " + t.nameOf(x) + "," + t.nameOf(y) + "," +
                      t.nameOf(z);
          return r;
        }
      }
    }
  r.passed = true;
  return r;
}

namespace {

bool dedekindSubset(const PartialMonoidTable& t, const OrderData& ord,
                    const std::vector<int>& subset, const DedekindOptions& opts,
                    std::string& failure) {
  MeetResult m = meet(t, ord, subset);
  if (!m.found) {
    failure = "subset has no greatest lower bound: " + m.failure;
    return false;
  }
  JoinResult j = join(t, ord, subset);
  if (j.status != JoinResult::Status::Found && j.status != JoinResult::Status::NoUpperBound) {
    failure = "bounded subset has no least upper bound: " + j.failure;
    return false;
  }
  if (opts.crossCheck) {
    std::string err = opts.crossCheck(subset, m.value, j);
    if (!err.empty()) {
      failure = err;
      return false;
    }
  }
  return true;
}

}  // namespace

CheckReport check_dedekind(const PartialMonoidTable& t, const DedekindOptions& opts) {
  CheckReport r;
  r.name = "complete";
  OrderData ord = deriveOrder(t);
  bool exhaustive = t.size < 63 && (std::uint64_t{1} << t.size) <= opts.subsetBudget;
  if (exhaustive) {
    std::uint64_t total = std::uint64_t{1} << t.size;
    std::vector<int> subset;
    for (std::uint64_t bits = 1; bits < total; ++bits) {
      subset.clear();
      for (int i = 0; i < t.size; ++i)
        if (bits >> i & 1) subset.push_back(i);
      ++r.checked;
      if (!dedekindSubset(t, ord, subset, opts, r.failure)) return r;
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    std::vector<int> subset;
    for (int k = 0; k < opts.sampleCount; ++k) {
      subset.clear();
      while (subset.empty()) {
        subset.clear();
        for (int i = 0; i < t.size; ++i)
          if (rng() & 1) subset.push_back(i);
      }
      ++r.checked;
      if (!dedekindSubset(t, ord, subset, opts, r.failure)) return r;
    }
  }
  r.passed = true;
  return r;
}

CheckReport check_wedge_vee(const PartialMonoidTable& t) {
  CheckReport r;
  r.name = "wedge-vee";
  OrderData ord = deriveOrder(t);
  for (int y = 0; y < t.size; ++y)
    for (int z = 0; z < t.size; ++z) {
      JoinResult j = join(t, ord, {y, z});
      if (j.status == JoinResult::Status::NoUpperBound) continue;
      ++r.checked;
      if (!j.found()) {
        r.failure = "pair " + t.nameOf(y) + "," + t.nameOf(z) + ": " + j.failure;
        return r;
      }
      MeetResult m = meet(t, ord, {y, z});
      if (!m.found) {
        r.failure = "pair " + t.nameOf(y) + "," + t.nameOf(z) + " has no meet";
        return r;
      }
      int left = ord.subtract(j.value, y);        // y v z - y
      int right = ord.subtract(z, m.value);       // z - y ^ z
      if (left < 0 || right < 0 || left != right) {
        r.failure = "identity fails at " + t.nameOf(y) + "," + t.nameOf(z);
        return r;
      }
      if (m.value == t.zero) {
        int sum = t.add(y, z);
        if (sum < 0 || sum != j.value) {
          r.failure = "disjoint pair " + t.nameOf(y) + "," + t.nameOf(z) +
                      " has join different from sum";
          return r;
        }
      }
    }
  r.passed = true;
  return r;
}

}  // namespace vnlab
