#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace vnlab {

// A finite partial abelian monoid as an explicit table: elements 0..size-1,
// a zero, and a partial addition (-1 marks undefined sums). The induced
// order, meets and joins are computed from the table alone; callers with a
// richer representation can cross-check against their fast paths.
struct PartialMonoidTable {
  int size = 0;
  int zero = 0;
  std::vector<int> sums;  // size*size, -1 = undefined
  std::vector<std::string> names;

  int add(int x, int y) const { return sums[static_cast<size_t>(x) * size + y]; }
  void setAdd(int x, int y, int v) { sums[static_cast<size_t>(x) * size + y] = v; }
  std::string nameOf(int x) const;

  static PartialMonoidTable withSize(int n, int zeroIndex);
};

// Derived order data: adjacency bitsets for fast dominance scans.
struct OrderData {
  int size = 0;
  int words = 0;
  std::vector<std::uint64_t> upset;    // upset[x] = { y : x <= y }
  std::vector<std::uint64_t> downset;  // downset[x] = { y : y <= x }
  std::vector<int> diff;               // diff[y*size+x] = unique z with x+z=y, else -1

  bool leq(int x, int y) const {
    return upset[static_cast<size_t>(x) * words + y / 64] >> (y % 64) & 1;
  }
  int subtract(int y, int x) const { return diff[static_cast<size_t>(y) * size + x]; }
};

OrderData deriveOrder(const PartialMonoidTable& t);

// x <= y iff some z has x + z = y.
bool leq(const PartialMonoidTable& t, int x, int y);

// The unique z with x + z = y; nullopt when x is not below y (NotDominated).
std::optional<int> subtract(const PartialMonoidTable& t, int y, int x);

struct MeetResult {
  bool found = false;
  int value = -1;
  std::string failure;  // set when no greatest lower bound exists
};

// Greatest lower bound by enumerating lower bounds and verifying a maximum.
MeetResult meet(const PartialMonoidTable& t, const OrderData& ord, const std::vector<int>& s);

struct JoinResult {
  enum class Status { Found, NoUpperBound, NotLeast, Ambiguous };
  Status status = Status::NoUpperBound;
  int value = -1;
  std::string failure;

  bool found() const { return status == Status::Found; }
};

// Least upper bound via the subtraction formula x - meet{x - s}: evaluated at
// every upper bound x, required to agree across choices and to be least.
JoinResult join(const PartialMonoidTable& t, const OrderData& ord, const std::vector<int>& s);

struct CheckReport {
  std::string name;
  bool passed = false;
  long checked = 0;
  std::string failure;

  std::string summary() const;
};

// Commutativity, associativity, the zero law, and cancellation, exhaustively.
CheckReport check_monoid(const PartialMonoidTable& t);

// Reflexivity, transitivity, antisymmetry of the induced order. The order
// can be overridden (e.g. a mutated table) to exercise the failure paths.
CheckReport check_poset(const PartialMonoidTable& t);
CheckReport check_poset_over(const PartialMonoidTable& t,
                             const std::vector<std::uint8_t>& leqTable);

struct DedekindOptions {
  std::uint64_t subsetBudget = 1u << 20;  // exhaustive when 2^size fits
  int sampleCount = 10000;
  std::uint64_t seed = 0;
  // optional hook comparing each subset's meet/join with an external oracle;
  // returns a failure description or the empty string
  std::function<std::string(const std::vector<int>&, int, const JoinResult&)> crossCheck;
};

// Every sampled non-empty subset has a greatest lower bound, and a least
// upper bound whenever it is bounded above. Join well-definedness (the same
// value for every choice of upper bound in the formula) is checked on every
// subset; the report notes whether sampling was exhaustive.
CheckReport check_dedekind(const PartialMonoidTable& t, const DedekindOptions& opts);

// For every pair with a common upper bound: join - y = z - meet, and when the
// meet is zero the join is the sum.
CheckReport check_wedge_vee(const PartialMonoidTable& t);

}  // namespace vnlab
