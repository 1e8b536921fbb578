#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace minklab {

// Arbitrary-precision rational, always in lowest terms with denominator > 0.
// The only numeric type on exact code paths; doubles appear solely at
// Monte-Carlo boundaries and are rationalized before any exact check.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(static_cast<long>(n)) {}
  Rational(long n) : v_(n) {}
  Rational(long long n) : v_(static_cast<long>(n)) {}
  Rational(long num, long den);

  // Accepts "p" or "p/q" with optional leading sign on p. Anything else
  // (notably decimal or scientific literals) yields nullopt.
  static std::optional<Rational> parse(std::string_view s);

  // "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }

  Rational abs() const;
  Rational reciprocal() const;  // throws on zero

  // base^e for integer e; e < 0 inverts (throws on zero base).
  static Rational pow(const Rational& base, long e);

  // Conversion for Monte-Carlo sampling boundaries only.
  double to_double() const { return v_.get_d(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  const mpq_class& raw() const { return v_; }
  explicit Rational(mpq_class v) : v_(std::move(v)) {}

 private:
  mpq_class v_;  // canonical by construction and under gmpxx arithmetic
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// floor(r) as an exact integer rational.
Rational floor_rational(const Rational& r);

// sqrt(q) when q is the square of a rational; nullopt otherwise. q >= 0.
std::optional<Rational> exact_sqrt(const Rational& q);

// [lo, hi] with lo^2 <= q <= hi^2 and hi - lo <= tol (dyadic bisection from
// an integer bracket, so endpoint denominators stay small). q >= 0, tol > 0.
std::pair<Rational, Rational> sqrt_enclosure(const Rational& q, const Rational& tol);

}  // namespace minklab
