#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "terrainguard/errors.hpp"

namespace terrainguard {

// Exact arbitrary-precision rational in canonical form: denominator > 0 and
// gcd(|numerator|, denominator) = 1. Thin value wrapper over GMP's mpq_class;
// every operation is exact, there is no rounding anywhere in the core.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}  // NOLINT: implicit by design, enables `Rational r = 1`
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
  Rational(long num, long den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  // Accepts "p" or "p/q" with integer p and q > 0. Anything else is an error.
  static Rational parse(std::string_view text);

  // Canonical text form, "p" or "p/q"; parse(str()) round-trips exactly.
  std::string str() const { return v_.get_str(); }

  // Lossy; for rendering only, never used in a predicate.
  double to_double() const { return v_.get_d(); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw ValidationError("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  friend Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw ParseError("invalid rational '" + std::string(text) + "' (expected \"p\" or \"p/q\" with q > 0)");
  };
  const auto slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  std::string_view den_part =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

  auto digits_only = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view mag = num_part;
  if (!mag.empty() && mag.front() == '-') mag.remove_prefix(1);
  if (!digits_only(mag)) return fail();
  if (slash != std::string_view::npos && !digits_only(den_part)) return fail();

  mpz_class num(std::string(num_part), 10);
  mpz_class den = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den_part), 10);
  if (den == 0) throw ParseError("invalid rational '" + std::string(text) + "': zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

}  // namespace terrainguard
