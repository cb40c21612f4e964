#pragma once

#include <string>
#include <vector>

#include "ta/rat.hpp"

namespace ta {

/// Polynomial in the generic parameter xi with rational coefficients.
/// Dense representation; trailing zeros trimmed so the leading coefficient
/// of a nonzero polynomial is nonzero.
class XiPoly {
 public:
  XiPoly() = default;
  explicit XiPoly(const Rat& c) {
    if (!c.is_zero()) c_.push_back(c);
  }
  explicit XiPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static XiPoly xi() { return XiPoly(std::vector<Rat>{Rat(0), Rat(1)}); }
  static XiPoly xi_power(int k, const Rat& c);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Smallest k with a nonzero xi^k coefficient; -1 for zero.
  int order() const;

  const Rat& coeff(size_t k) const {
    static const Rat kZero(0);
    return k < c_.size() ? c_[k] : kZero;
  }
  const Rat& leading() const;
  const Rat& constant_term() const { return coeff(0); }

  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& x) const;
  double eval(double x) const;

  XiPoly shifted_down(int k) const;  // divide by xi^k; requires order() >= k

  friend XiPoly operator+(const XiPoly& a, const XiPoly& b);
  friend XiPoly operator-(const XiPoly& a, const XiPoly& b);
  friend XiPoly operator*(const XiPoly& a, const XiPoly& b);
  XiPoly operator-() const;
  XiPoly scaled(const Rat& c) const;

  friend bool operator==(const XiPoly& a, const XiPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const XiPoly& a, const XiPoly& b) { return a.c_ != b.c_; }

  /// "0", "2", "2*xi", "xi^2+3/2*xi+1" (descending powers).
  std::string str() const;

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

}  // namespace ta
