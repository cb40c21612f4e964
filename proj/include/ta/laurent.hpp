#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ta/rat.hpp"

namespace ta {

/// Element of Q[x, x^-1, y]: the x-exponent may be negative, the y-exponent
/// may not. Sparse map representation with no stored zero coefficients.
class LaurentPoly2 {
 public:
  using Key = std::pair<long, long>;  // (x-exponent, y-exponent)

  LaurentPoly2() = default;

  static LaurentPoly2 constant(const Rat& c) { return monomial(0, 0, c); }
  static LaurentPoly2 x() { return monomial(1, 0, Rat(1)); }
  static LaurentPoly2 y() { return monomial(0, 1, Rat(1)); }
  static LaurentPoly2 monomial(long a, long b, const Rat& c);

  bool is_zero() const { return t_.empty(); }
  bool is_polynomial() const;  // no negative x-exponents
  bool y_free() const;
  long deg_y() const;  // -1 for zero
  long ord_y() const;  // smallest y-exponent; -1 for zero

  /// Total degree max(a + b); requires a polynomial (a >= 0).
  long total_degree() const;

  /// max over terms of wx*a + wy*b; throws on zero input.
  Rat weighted_degree(const Rat& wx, const Rat& wy) const;
  /// Sub-polynomial supported on the terms of maximal (wx, wy)-weight.
  LaurentPoly2 leading_part(const Rat& wx, const Rat& wy) const;

  const std::map<Key, Rat>& terms() const { return t_; }
  Rat coeff(long a, long b) const;
  /// Coefficient of y^b as a Laurent polynomial in x.
  std::map<long, Rat> coeff_of_y(long b) const;

  void add_term(long a, long b, const Rat& c);

  friend LaurentPoly2 operator+(const LaurentPoly2& a, const LaurentPoly2& b);
  friend LaurentPoly2 operator-(const LaurentPoly2& a, const LaurentPoly2& b);
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  LaurentPoly2 operator-() const;
  LaurentPoly2 scaled(const Rat& c) const;
  LaurentPoly2 pow(long e) const;

  friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) { return a.t_ == b.t_; }
  friend bool operator!=(const LaurentPoly2& a, const LaurentPoly2& b) { return a.t_ != b.t_; }

  double eval(double xv, double yv) const;

  /// Substitutes y -> r(x, y); x is left alone.
  LaurentPoly2 compose_y(const LaurentPoly2& r) const;

  /// Canonical rendering: terms sorted by y-exponent descending, then
  /// x-exponent descending, e.g. "y^2-x^5-2*x".
  std::string str() const;

 private:
  std::map<Key, Rat> t_;
};

}  // namespace ta
