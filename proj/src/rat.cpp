#include "ta/rat.hpp"

#include <ostream>

namespace ta {

Rat Rat::parse(std::string_view s) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  s = trim(s);
  if (s.empty()) throw InputError("empty rational literal");
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = trim(s.substr(0, slash));
    den = trim(s.substr(slash + 1));
  }
  auto check = [](std::string_view v) {
    if (v.empty()) throw InputError("malformed rational literal");
    size_t i = (v[0] == '+' || v[0] == '-') ? 1 : 0;
    if (i == v.size()) throw InputError("malformed rational literal");
    for (; i < v.size(); ++i)
      if (v[i] < '0' || v[i] > '9')
        throw InputError("malformed rational literal: '" + std::string(v) + "'");
  };
  check(num);
  check(den);
  return Rat(mpz_class(std::string(num)), mpz_class(std::string(den)));
}

mpz_class Rat::ceil_z() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return q;
}

mpz_class Rat::floor_z() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return q;
}

long Rat::ceil_long() const {
  mpz_class c = ceil_z();
  if (!c.fits_slong_p()) throw ComputeError("value out of range");
  return c.get_si();
}

long Rat::to_long() const {
  if (!is_integer()) throw ComputeError("not an integer");
  mpz_class n = num();
  if (!n.fits_slong_p()) throw ComputeError("value out of range");
  return n.get_si();
}

std::string Rat::str() const {
  std::string out = num().get_str();
  if (!is_integer()) {
    out += '/';
    out += den().get_str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat rational_gcd(const Rat& a, const Rat& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  mpz_class l = lcm_z(a.den(), b.den());
  mpz_class na = a.num() * (l / a.den());
  mpz_class nb = b.num() * (l / b.den());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
  return Rat(g, l);
}

mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace ta
