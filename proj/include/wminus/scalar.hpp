#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>

namespace wminus {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Element of the field Q(sqrt2), stored as a + b*sqrt(2) with exact rationals.
// Equality of representations is equality of values: (a,b) is unique because
// sqrt(2) is irrational.
struct Scalar {
  Rat a{};  // rational part
  Rat b{};  // coefficient of sqrt(2)

  Scalar() = default;
  Scalar(int v) : a(v) {}
  Scalar(long long v) : a(v) {}
  Scalar(Rat v) : a(std::move(v)) {}
  Scalar(Rat ra, Rat rb) : a(std::move(ra)), b(std::move(rb)) {}

  static Scalar sqrt2() { return Scalar(Rat(0), Rat(1)); }
  static Scalar ratio(long long n, long long d) { return Scalar(Rat(n) / d); }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }

  Scalar operator-() const { return Scalar(-a, -b); }
  Scalar& operator+=(const Scalar& o) { a += o.a; b += o.b; return *this; }
  Scalar& operator-=(const Scalar& o) { a -= o.a; b -= o.b; return *this; }

  friend Scalar operator+(Scalar x, const Scalar& y) { x += y; return x; }
  friend Scalar operator-(Scalar x, const Scalar& y) { x -= y; return x; }
  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    return Scalar(x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a);
  }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

  // (a + b s)^-1 = (a - b s) / (a^2 - 2 b^2); the norm vanishes only at 0.
  Scalar inverse() const;
  friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

  friend bool operator==(const Scalar& x, const Scalar& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
  friend bool operator<(const Scalar& x, const Scalar& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;  // ordering for container keys only, not a field order
  }
};

// Canonical text form: "0", "3/2", "-1*s2", "3/2 + -1*s2".
std::string render(const Scalar& s);
// Coefficient position in a term: composite values are parenthesized.
std::string render_coeff(const Scalar& s);
std::string render(const Rat& r);

}  // namespace wminus
