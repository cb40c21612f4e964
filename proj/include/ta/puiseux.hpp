#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "ta/laurent.hpp"
#include "ta/xipoly.hpp"

namespace ta {

/// Finite Laurent-Puiseux series in x with XiPoly coefficients: a sum of
/// terms P(xi) * x^e with rational exponents e, kept in strictly descending
/// exponent order. `ram` is a positive integer N such that every exponent
/// lies in (1/N)*Z.
class PuiseuxSeries {
 public:
  PuiseuxSeries() = default;

  static PuiseuxSeries zero() { return {}; }
  static PuiseuxSeries term(const Rat& e, XiPoly c);
  static PuiseuxSeries constant(const Rat& c) { return term(Rat(0), XiPoly(c)); }
  /// Reads f(x, y) as a series in x with xi playing the role of y.
  static PuiseuxSeries from_laurent_as_xi(const LaurentPoly2& f);
  /// A Laurent polynomial in x alone, as a series with constant coefficients.
  static PuiseuxSeries from_x_laurent(const std::map<long, Rat>& coeffs);

  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  const mpz_class& ram() const { return ram_; }

  const std::map<Rat, XiPoly, std::greater<Rat>>& terms() const { return t_; }

  /// Highest exponent and its coefficient; throws "no leading term" on zero.
  std::pair<Rat, XiPoly> leading_term() const;
  Rat leading_exponent() const { return leading_term().first; }
  /// Smallest stored exponent; requires nonzero.
  Rat trailing_exponent() const;

  XiPoly coeff(const Rat& e) const;
  void add_term(const Rat& e, const XiPoly& c);

  bool xi_free() const;
  int max_xi_degree() const;  // -1 for zero
  int min_xi_order() const;   // smallest xi-order over all terms; -1 for zero

  /// Substitutes xi -> c * x^mu + xi.
  PuiseuxSeries shift_xi(const Rat& c, const Rat& mu) const;
  /// Substitutes xi -> value (a rational constant).
  PuiseuxSeries eval_xi(const Rat& value) const;
  /// Divides every coefficient by xi^k.
  PuiseuxSeries shift_xi_down(int k) const;
  /// Multiplies by x^delta.
  PuiseuxSeries shift_exponents(const Rat& delta) const;

  double eval_double(double x) const;  // requires xi_free()

  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
  PuiseuxSeries operator-() const;
  PuiseuxSeries scaled(const XiPoly& c) const;

  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a.t_ == b.t_; }
  friend bool operator!=(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a.t_ != b.t_; }

  /// "(2)*x + (2*xi) + (xi^2)*x^-3"-style rendering, descending exponents.
  std::string str() const;

 private:
  void absorb_ram(const Rat& e);

  std::map<Rat, XiPoly, std::greater<Rat>> t_;
  mpz_class ram_{1};
};

enum class SeriesOp { add, mul };

/// Exact sum or product; the ram of the result is the lcm of the input rams.
PuiseuxSeries series_combine(const PuiseuxSeries& a, const PuiseuxSeries& b, SeriesOp op);

/// Exact expansion of f(x, y_series), collected by x-exponent.
PuiseuxSeries substitute(const LaurentPoly2& f, const PuiseuxSeries& y_series);

}  // namespace ta
