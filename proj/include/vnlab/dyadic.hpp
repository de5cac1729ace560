#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vnlab {

// A dyadic rational in [0, 1], kept canonical: the numerator is odd unless
// the value is zero, in which case the exponent is zero too.
struct DyadicScalar {
  std::uint64_t num = 0;
  int exp = 0;  // value = num / 2^exp

  DyadicScalar() = default;
  DyadicScalar(std::uint64_t numerator, int exponent) : num(numerator), exp(exponent) {
    if (exp < 0 || exp > 62) throw std::invalid_argument("dyadic exponent out of range");
    if (num > (std::uint64_t{1} << exp)) throw std::invalid_argument("dyadic value above 1");
    normalize();
  }

  void normalize() {
    if (num == 0) {
      exp = 0;
      return;
    }
    while (exp > 0 && (num & 1) == 0) {
      num >>= 1;
      --exp;
    }
  }

  bool isZero() const { return num == 0; }
  bool isOne() const { return num == 1 && exp == 0; }

  // numerator at a coarser-or-equal resolution; requires exp <= k
  std::uint64_t numeratorAt(int k) const { return num << (k - exp); }
  bool representableAt(int k) const { return exp <= k; }

  bool operator==(const DyadicScalar&) const = default;
  bool operator<(const DyadicScalar& o) const {
    int e = exp > o.exp ? exp : o.exp;
    return numeratorAt(e) < o.numeratorAt(e);
  }
  bool operator<=(const DyadicScalar& o) const { return *this == o || *this < o; }

  std::string str() const {
    if (exp == 0) return std::to_string(num);
    return std::to_string(num) + "/2^" + std::to_string(exp);
  }
};

inline DyadicScalar dyadicMul(const DyadicScalar& a, const DyadicScalar& b) {
  if (a.exp + b.exp > 62) throw std::overflow_error("dyadic product exponent too large");
  return DyadicScalar(a.num * b.num, a.exp + b.exp);
}

// Sum when it stays within [0, 1]; throws otherwise.
inline DyadicScalar dyadicAdd(const DyadicScalar& a, const DyadicScalar& b) {
  int e = a.exp > b.exp ? a.exp : b.exp;
  std::uint64_t n = a.numeratorAt(e) + b.numeratorAt(e);
  if (n > (std::uint64_t{1} << e)) throw std::overflow_error("dyadic sum above 1");
  return DyadicScalar(n, e);
}

inline DyadicScalar dyadicHalf(const DyadicScalar& a) {
  if (a.isZero()) return a;
  return DyadicScalar(a.num, a.exp + 1);
}

}  // namespace vnlab
