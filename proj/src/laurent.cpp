#include "ta/laurent.hpp"

#include <algorithm>
#include <cmath>

namespace ta {

LaurentPoly2 LaurentPoly2::monomial(long a, long b, const Rat& c) {
  LaurentPoly2 p;
  p.add_term(a, b, c);
  return p;
}

bool LaurentPoly2::is_polynomial() const {
  for (const auto& [k, c] : t_)
    if (k.first < 0) return false;
  return true;
}

bool LaurentPoly2::y_free() const {
  for (const auto& [k, c] : t_)
    if (k.second != 0) return false;
  return true;
}

long LaurentPoly2::deg_y() const {
  long d = -1;
  for (const auto& [k, c] : t_) d = std::max(d, k.second);
  return d;
}

long LaurentPoly2::ord_y() const {
  if (t_.empty()) return -1;
  long d = t_.begin()->second;
  for (const auto& [k, c] : t_) d = std::min(d, k.second);
  return d;
}

long LaurentPoly2::total_degree() const {
  if (t_.empty()) throw ComputeError("degree of zero polynomial");
  if (!is_polynomial()) throw ComputeError("total degree of a Laurent polynomial");
  long d = 0;
  for (const auto& [k, c] : t_) d = std::max(d, k.first + k.second);
  return d;
}

Rat LaurentPoly2::weighted_degree(const Rat& wx, const Rat& wy) const {
  if (t_.empty()) throw ComputeError("degree of zero polynomial");
  bool first = true;
  Rat best(0);
  for (const auto& [k, c] : t_) {
    Rat w = wx * Rat(k.first) + wy * Rat(k.second);
    if (first || w > best) best = w;
    first = false;
  }
  return best;
}

LaurentPoly2 LaurentPoly2::leading_part(const Rat& wx, const Rat& wy) const {
  Rat top = weighted_degree(wx, wy);
  LaurentPoly2 out;
  for (const auto& [k, c] : t_)
    if (wx * Rat(k.first) + wy * Rat(k.second) == top) out.add_term(k.first, k.second, c);
  return out;
}

Rat LaurentPoly2::coeff(long a, long b) const {
  auto it = t_.find({a, b});
  return it == t_.end() ? Rat(0) : it->second;
}

std::map<long, Rat> LaurentPoly2::coeff_of_y(long b) const {
  std::map<long, Rat> out;
  for (const auto& [k, c] : t_)
    if (k.second == b) out.emplace(k.first, c);
  return out;
}

void LaurentPoly2::add_term(long a, long b, const Rat& c) {
  if (c.is_zero()) return;
  if (b < 0) throw ComputeError("negative y-exponent");
  auto [it, inserted] = t_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

LaurentPoly2 operator+(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 out = a;
  for (const auto& [k, c] : b.t_) out.add_term(k.first, k.second, c);
  return out;
}

LaurentPoly2 operator-(const LaurentPoly2& a, const LaurentPoly2& b) { return a + (-b); }

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 out;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

LaurentPoly2 LaurentPoly2::operator-() const { return scaled(Rat(-1)); }

LaurentPoly2 LaurentPoly2::scaled(const Rat& c) const {
  LaurentPoly2 out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : t_) out.t_.emplace(k, v * c);
  return out;
}

LaurentPoly2 LaurentPoly2::pow(long e) const {
  if (e < 0) throw ComputeError("negative power");
  LaurentPoly2 out = constant(Rat(1));
  for (long i = 0; i < e; ++i) out = out * *this;
  return out;
}

double LaurentPoly2::eval(double xv, double yv) const {
  double acc = 0.0;
  for (const auto& [k, c] : t_)
    acc += c.to_double() * std::pow(xv, static_cast<double>(k.first)) *
           std::pow(yv, static_cast<double>(k.second));
  return acc;
}

LaurentPoly2 LaurentPoly2::compose_y(const LaurentPoly2& r) const {
  // Horner in y.
  long dy = deg_y();
  LaurentPoly2 acc;
  for (long b = dy; b >= 0; --b) {
    acc = acc * r;
    for (const auto& [a, c] : coeff_of_y(b)) acc.add_term(a, 0, c);
  }
  return acc;
}

std::string LaurentPoly2::str() const {
  if (t_.empty()) return "0";
  std::vector<std::pair<Key, Rat>> v(t_.begin(), t_.end());
  std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) {
    if (l.first.second != r.first.second) return l.first.second > r.first.second;
    return l.first.first > r.first.first;
  });
  std::string out;
  for (const auto& [k, c] : v) {
    bool first = out.empty();
    if (c.sign() < 0)
      out += "-";
    else if (!first)
      out += "+";
    Rat a = c.abs();
    std::string vars;
    if (k.first != 0) {
      vars += "x";
      if (k.first != 1) vars += "^" + std::to_string(k.first);
    }
    if (k.second != 0) {
      if (!vars.empty()) vars += "*";
      vars += "y";
      if (k.second != 1) vars += "^" + std::to_string(k.second);
    }
    if (vars.empty()) {
      out += a.str();
    } else {
      if (a != Rat(1)) out += a.str() + "*";
      out += vars;
    }
  }
  return out;
}

}  // namespace ta
