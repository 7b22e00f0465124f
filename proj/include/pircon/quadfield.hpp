#pragma once

#include <array>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "pircon/error.hpp"

namespace pircon {

/// Element of Q(sqrt2, sqrt3, sqrt5), the smallest field containing
/// 2cos(pi/m) for m up to 6.  Coordinates are rationals over the basis
/// sqrt(2^a 3^b 5^c) indexed by the bitmask a | b<<1 | c<<2.  All
/// arithmetic is exact; sign() decides order comparisons by descending
/// the quadratic tower, so no floating point enters geometry decisions.
class QuadField {
public:
  using Rat = boost::multiprecision::cpp_rational;

  QuadField() = default;
  static QuadField rational(const Rat& r) {
    QuadField x;
    x.c_[0] = r;
    return x;
  }
  static QuadField integer(long long v) { return rational(Rat(v)); }
  static QuadField rational(long long num, long long den) { return rational(Rat(num, den)); }
  static QuadField sqrt2() { return basis(1); }
  static QuadField sqrt3() { return basis(2); }
  static QuadField sqrt5() { return basis(4); }

  /// 2cos(pi/m) for m in 2..6: 0, 1, sqrt2, (1+sqrt5)/2, sqrt3.
  static QuadField two_cos_pi_over(int m) {
    switch (m) {
      case 2:
        return QuadField();
      case 3:
        return integer(1);
      case 4:
        return sqrt2();
      case 5: {
        QuadField x;
        x.c_[0] = Rat(1, 2);
        x.c_[4] = Rat(1, 2);
        return x;
      }
      case 6:
        return sqrt3();
      default:
        throw Error("UnsupportedEdgeLabel",
                    "2cos(pi/m) is only available for m between 2 and 6, got m = " +
                        std::to_string(m));
    }
  }

  bool is_zero() const {
    for (const auto& r : c_)
      if (r != 0) return false;
    return true;
  }
  bool is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < 8; ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  friend QuadField operator+(const QuadField& a, const QuadField& b) {
    QuadField r;
    for (size_t i = 0; i < 8; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend QuadField operator-(const QuadField& a, const QuadField& b) {
    QuadField r;
    for (size_t i = 0; i < 8; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  QuadField operator-() const {
    QuadField r;
    for (size_t i = 0; i < 8; ++i) r.c_[i] = -c_[i];
    return r;
  }
  friend QuadField operator*(const QuadField& a, const QuadField& b) {
    QuadField r;
    for (size_t i = 0; i < 8; ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < 8; ++j) {
        if (b.c_[j] == 0) continue;
        // sqrt(radicand i) * sqrt(radicand j) = common * sqrt(radicand i^j)
        size_t common_bits = i & j;
        long long common = 1;
        if (common_bits & 1) common *= 2;
        if (common_bits & 2) common *= 3;
        if (common_bits & 4) common *= 5;
        r.c_[i ^ j] += a.c_[i] * b.c_[j] * common;
      }
    }
    return r;
  }
  QuadField& operator+=(const QuadField& o) { return *this = *this + o; }
  QuadField& operator-=(const QuadField& o) { return *this = *this - o; }
  QuadField& operator*=(const QuadField& o) { return *this = *this * o; }

  friend bool operator==(const QuadField& a, const QuadField& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QuadField& a, const QuadField& b) { return !(a == b); }

  /// -1, 0 or +1.  Splits off sqrt5, then sqrt3, then sqrt2: the sign of
  /// A + sqrt(p) B follows from the signs of A, B and of A^2 - p B^2 in
  /// the subfield.
  int sign() const { return sign_masked(c_, 3); }

  bool positive() const { return sign() > 0; }
  bool negative() const { return sign() < 0; }

private:
  static QuadField basis(size_t idx) {
    QuadField x;
    x.c_[idx] = 1;
    return x;
  }

  // `levels` counts how many square roots are still in play: the live
  // basis indices are those below 1 << levels.
  static int sign_masked(const std::array<Rat, 8>& v, int levels) {
    if (levels == 0) return v[0] == 0 ? 0 : (v[0] < 0 ? -1 : 1);
    size_t half = size_t{1} << (levels - 1);
    std::array<Rat, 8> a{}, b{};
    bool a_zero = true, b_zero = true;
    for (size_t i = 0; i < half; ++i) {
      a[i] = v[i];
      b[i] = v[i + half];
      if (a[i] != 0) a_zero = false;
      if (b[i] != 0) b_zero = false;
    }
    if (b_zero) return sign_masked(a, levels - 1);
    if (a_zero) return sign_masked(b, levels - 1);
    int sa = sign_masked(a, levels - 1);
    int sb = sign_masked(b, levels - 1);
    if (sa >= 0 && sb >= 0) return 1;
    if (sa <= 0 && sb <= 0) return -1;
    long long p = levels == 3 ? 5 : (levels == 2 ? 3 : 2);
    // mixed signs: compare a^2 against p b^2 inside the subfield
    std::array<Rat, 8> a2 = mul(a, a, levels - 1);
    std::array<Rat, 8> b2 = mul(b, b, levels - 1);
    for (size_t i = 0; i < 8; ++i) a2[i] -= p * b2[i];
    int s = sign_masked(a2, levels - 1);
    return sa > 0 ? s : -s;
  }

  static std::array<Rat, 8> mul(const std::array<Rat, 8>& x, const std::array<Rat, 8>& y,
                                int levels) {
    size_t n = size_t{1} << levels;
    std::array<Rat, 8> r{};
    for (size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (size_t j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        size_t common_bits = i & j;
        long long common = 1;
        if (common_bits & 1) common *= 2;
        if (common_bits & 2) common *= 3;
        if (common_bits & 4) common *= 5;
        r[i ^ j] += x[i] * y[j] * common;
      }
    }
    return r;
  }

  std::array<Rat, 8> c_{};
};

}  // namespace pircon
