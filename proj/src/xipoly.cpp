#include "ta/xipoly.hpp"

#include <algorithm>

namespace ta {

XiPoly XiPoly::xi_power(int k, const Rat& c) {
  std::vector<Rat> v(static_cast<size_t>(k) + 1, Rat(0));
  v.back() = c;
  return XiPoly(std::move(v));
}

int XiPoly::order() const {
  for (size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<int>(k);
  return -1;
}

const Rat& XiPoly::leading() const {
  if (c_.empty()) throw ComputeError("leading coefficient of zero polynomial");
  return c_.back();
}

Rat XiPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

double XiPoly::eval(double x) const {
  double acc = 0.0;
  for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k].to_double();
  return acc;
}

XiPoly XiPoly::shifted_down(int k) const {
  if (k == 0) return *this;
  if (order() < k) throw ComputeError("xi order too small for shift");
  return XiPoly(std::vector<Rat>(c_.begin() + k, c_.end()));
}

XiPoly operator+(const XiPoly& a, const XiPoly& b) {
  std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
  return XiPoly(std::move(v));
}

XiPoly operator-(const XiPoly& a, const XiPoly& b) { return a + (-b); }

XiPoly operator*(const XiPoly& a, const XiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return XiPoly(std::move(v));
}

XiPoly XiPoly::operator-() const { return scaled(Rat(-1)); }

XiPoly XiPoly::scaled(const Rat& c) const {
  if (c.is_zero()) return {};
  std::vector<Rat> v(c_);
  for (auto& x : v) x *= c;
  return XiPoly(std::move(v));
}

std::string XiPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t k = c_.size(); k-- > 0;) {
    const Rat& c = c_[k];
    if (c.is_zero()) continue;
    bool first = out.empty();
    if (c.sign() < 0)
      out += first ? "-" : "-";
    else if (!first)
      out += "+";
    Rat a = c.abs();
    if (k == 0) {
      out += a.str();
    } else {
      if (a != Rat(1)) out += a.str() + "*";
      out += "xi";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace ta
