#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "bihom/errors.hpp"

namespace bihom {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. Always kept canonical: den > 0, gcd(|num|, den) = 1,
// zero is 0/1. All arithmetic is exact; there is no floating-point path.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long n) : num_(n), den_(1) {} // NOLINT: implicit on purpose
  explicit Rational(Int n) : num_(std::move(n)), den_(1) {}
  Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw SingularMatrix("division by zero rational");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
  friend Rational abs(const Rational& a) { return a.num_ < 0 ? -a : a; }

private:
  void normalize() {
    if (den_ == 0) throw SingularMatrix("rational with zero denominator");
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_, den_;
};

// Canonical serialization: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Strict parse of the canonical form. Rejects anything that would not
// round-trip bit-exactly ("2/4", "4/1", "1/-2", "+3", "007", ...).
Rational parse_rational(std::string_view text);

} // namespace bihom

namespace Eigen {

template <> struct NumTraits<bihom::Rational> {
  using Real = bihom::Rational;
  using NonInteger = bihom::Rational;
  using Literal = bihom::Rational;
  using Nested = bihom::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60
  };
  static inline Real epsilon() { return bihom::Rational(0); }
  static inline Real dummy_precision() { return bihom::Rational(0); }
  static inline int digits10() { return 0; }
};

} // namespace Eigen
