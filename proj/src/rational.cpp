#include "solang/rational.hpp"

#include <sstream>

namespace solang {

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << num(r);
  if (den(r) != 1) os << "/" << den(r);
  return os.str();
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ValidationError("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw ValidationError("zero denominator in rational literal: " + s);
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw ValidationError("malformed rational literal: " + s);
  }
}

Int floor_rat(const Rational& r) {
  Int q = num(r) / den(r);
  if (num(r) < 0 && q * den(r) != num(r)) --q;
  return q;
}

Int ceil_rat(const Rational& r) { return -floor_rat(-r); }

bool is_integer_point(const RVec& p) {
  for (const auto& c : p)
    if (!is_integer(c)) return false;
  return true;
}

Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  Int g = gcd_int(a, b);
  Int l = (a / g) * b;
  return l < 0 ? Int(-l) : l;
}

Int lcm_of_denominators(const std::vector<RVec>& pts) {
  Int l = 1;
  for (const auto& p : pts)
    for (const auto& c : p) l = lcm_int(l, den(c));
  return l;
}

Rational dot(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw ShapeError("dot: size mismatch");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RVec sub(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw ShapeError("sub: size mismatch");
  RVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RVec add(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw ShapeError("add: size mismatch");
  RVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RVec scale(const RVec& a, const Rational& c) {
  RVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

bool is_zero_vec(const RVec& a) {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

std::vector<double> to_double_vec(const RVec& a) {
  std::vector<double> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = to_double(a[i]);
  return r;
}

RVec primitive_integer_direction(const RVec& a) {
  Int l = 1;
  for (const auto& c : a) l = lcm_int(l, den(c));
  Int g = 0;
  for (const auto& c : a) g = gcd_int(g, num(c) * (l / den(c)));
  if (g == 0) return RVec(a.size(), Rational(0));
  RVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * Rational(l, g);
  return r;
}

}  // namespace solang
