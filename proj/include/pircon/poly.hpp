#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pircon {

/// Polynomial in q with integer coefficients, stored densely in
/// ascending order of exponent.  The zero polynomial has an empty
/// coefficient vector; all operations keep the representation
/// normalized (no trailing zero coefficients).
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial one() { return constant(1); }
  static IntPolynomial constant(long long v) {
    IntPolynomial p;
    if (v != 0) p.c_.push_back(v);
    return p;
  }
  /// The monomial c * q^k.
  static IntPolynomial monomial(long long c, int k) {
    IntPolynomial p;
    if (c != 0) {
      p.c_.assign(static_cast<size_t>(k) + 1, 0);
      p.c_.back() = c;
    }
    return p;
  }
  static IntPolynomial q() { return monomial(1, 1); }
  static IntPolynomial q_minus_one() { return IntPolynomial({-1, 1}); }

  bool is_zero() const { return c_.empty(); }
  /// Degree in q; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  long long coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(k)];
  }
  const std::vector<long long>& coeffs() const { return c_; }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<long long> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<long long> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return IntPolynomial(std::move(r));
  }
  IntPolynomial operator-() const {
    IntPolynomial r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<long long> r(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(r));
  }
  IntPolynomial& operator+=(const IntPolynomial& o) { return *this = *this + o; }
  IntPolynomial& operator-=(const IntPolynomial& o) { return *this = *this - o; }
  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) {
    return !(a == b);
  }

  /// q^k * p(1/q), which is again an ordinary polynomial when k >= degree.
  IntPolynomial reflect(int k) const {
    if (is_zero()) return zero();
    if (k < degree())
      throw std::invalid_argument("reflect: exponent shift below degree");
    std::vector<long long> r(static_cast<size_t>(k) + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
      r[static_cast<size_t>(k) - i] = c_[i];
    return IntPolynomial(std::move(r));
  }

  long long eval(long long x) const {
    long long v = 0;
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      long long v = coeff(k);
      if (v == 0) continue;
      if (s.empty()) {
        if (v < 0) s += "-";
      } else {
        s += v < 0 ? " - " : " + ";
      }
      long long a = v < 0 ? -v : v;
      if (a != 1 || k == 0) s += std::to_string(a);
      if (k >= 1) {
        if (a != 1) s += "*";
        s += "q";
        if (k > 1) s += "^" + std::to_string(k);
      }
    }
    return s;
  }

private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<long long> c_;
};

/// The distinguished specialization parameter: the polynomial families
/// computed here come in two variants, obtained by substituting either q
/// or -1 for the parameter x.
enum class XParam { Q, MinusOne };

inline IntPolynomial x_value(XParam x) {
  return x == XParam::Q ? IntPolynomial::q() : IntPolynomial::constant(-1);
}

/// The coefficient q - 1 - x of the fixed-element branch: -1 when x = q,
/// and q when x = -1.
inline IntPolynomial fixed_branch_factor(XParam x) {
  return IntPolynomial::q_minus_one() - x_value(x);
}

inline const char* x_name(XParam x) { return x == XParam::Q ? "q" : "-1"; }

inline XParam parse_x(const std::string& s) {
  if (s == "q") return XParam::Q;
  if (s == "-1") return XParam::MinusOne;
  throw std::invalid_argument("x must be 'q' or '-1', got '" + s + "'");
}

/// Laurent polynomial in q with integer coefficients.  Stored as the
/// lowest exponent plus a dense ascending coefficient vector whose
/// first and last entries are nonzero (empty for the zero element).
class LaurentPolynomial {
public:
  LaurentPolynomial() = default;
  LaurentPolynomial(int low, std::vector<long long> coeffs)
      : low_(low), c_(std::move(coeffs)) {
    normalize();
  }
  LaurentPolynomial(const IntPolynomial& p) : low_(0), c_(p.coeffs()) { normalize(); }

  static LaurentPolynomial zero() { return LaurentPolynomial(); }
  static LaurentPolynomial one() { return constant(1); }
  static LaurentPolynomial constant(long long v) { return monomial(v, 0); }
  /// The monomial c * q^k, with k of either sign.
  static LaurentPolynomial monomial(long long c, int k) {
    LaurentPolynomial p;
    if (c != 0) {
      p.low_ = k;
      p.c_.push_back(c);
    }
    return p;
  }
  static LaurentPolynomial q() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  long long coeff(int k) const {
    int i = k - low_;
    if (c_.empty() || i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(i)];
  }

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int low = std::min(a.low_, b.low_);
    int high = std::max(a.high(), b.high());
    std::vector<long long> r(static_cast<size_t>(high - low) + 1, 0);
    for (int k = a.low_; k <= a.high(); ++k) r[static_cast<size_t>(k - low)] += a.coeff(k);
    for (int k = b.low_; k <= b.high(); ++k) r[static_cast<size_t>(k - low)] += b.coeff(k);
    return LaurentPolynomial(low, std::move(r));
  }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a + (-b);
  }
  LaurentPolynomial operator-() const {
    LaurentPolynomial r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<long long> r(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] += a.c_[i] * b.c_[j];
    return LaurentPolynomial(a.low_ + b.low_, std::move(r));
  }
  LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return *this = *this + o; }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return *this = *this - o; }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.c_ == b.c_ && (a.c_.empty() || a.low_ == b.low_);
  }
  friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return !(a == b);
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = high(); k >= low_; --k) {
      long long v = coeff(k);
      if (v == 0) continue;
      if (s.empty()) {
        if (v < 0) s += "-";
      } else {
        s += v < 0 ? " - " : " + ";
      }
      long long a = v < 0 ? -v : v;
      if (a != 1 || k == 0) s += std::to_string(a);
      if (k != 0) {
        if (a != 1) s += "*";
        s += "q";
        if (k != 1) s += "^" + std::to_string(k);
      }
    }
    return s;
  }

private:
  void normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
      low_ += static_cast<int>(lead);
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (c_.empty()) low_ = 0;
  }
  int low_ = 0;
  std::vector<long long> c_;
};

}  // namespace pircon
