#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "ta/errors.hpp"

namespace ta {

/// Arbitrary-precision rational number, always kept in canonical form:
/// gcd(|numerator|, denominator) = 1 and denominator >= 1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(long n, long d) { init(mpz_class(n), mpz_class(d)); }
  Rat(const mpz_class& n, const mpz_class& d) { init(n, d); }
  explicit Rat(const mpz_class& n) : v_(n) {}

  /// Accepts "p", "p/q", optional sign, no whitespace inside the number.
  static Rat parse(std::string_view s);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  mpz_class ceil_z() const;
  mpz_class floor_z() const;
  long ceil_long() const;
  long to_long() const;  // requires is_integer()

  double to_double() const { return v_.get_d(); }

  /// "p" when the denominator is 1, else "p/q".
  std::string str() const;

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw ComputeError("division by zero");
    return Rat(mpq_class(a.v_ / b.v_));
  }
  Rat operator-() const { return Rat(mpq_class(-v_)); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  void init(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw ComputeError("division by zero");
    v_ = mpq_class(n);
    v_ /= mpq_class(d);
  }

  mpq_class v_;
};

/// Positive generator of the additive group a*Z + b*Z inside Q
/// (the "gcd" of two rationals); 0 when both are 0.
Rat rational_gcd(const Rat& a, const Rat& b);

mpz_class lcm_z(const mpz_class& a, const mpz_class& b);

}  // namespace ta
