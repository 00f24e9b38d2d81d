#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "solang/errors.hpp"

namespace solang {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values in lowest
// terms with a positive denominator, which is exactly the invariant we need.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RVec = std::vector<Rational>;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Serializes as "p/q", or "p" when q == 1.
std::string rational_to_string(const Rational& r);

// Accepts "p", "p/q", and optional leading '-'; throws ValidationError on
// malformed input or zero denominator.
Rational parse_rational(const std::string& s);

Int floor_rat(const Rational& r);
Int ceil_rat(const Rational& r);

// True when the value has denominator 1.
inline bool is_integer(const Rational& r) { return den(r) == 1; }
bool is_integer_point(const RVec& p);

Int gcd_int(Int a, Int b);
Int lcm_int(const Int& a, const Int& b);

// lcm of all coordinate denominators over a point set (1 for lattice points).
Int lcm_of_denominators(const std::vector<RVec>& pts);

// Elementwise vector helpers.
Rational dot(const RVec& a, const RVec& b);
RVec sub(const RVec& a, const RVec& b);
RVec add(const RVec& a, const RVec& b);
RVec scale(const RVec& a, const Rational& c);
bool is_zero_vec(const RVec& a);
std::vector<double> to_double_vec(const RVec& a);

// Divides out the gcd of the (integer-cleared) entries, preserving sign.
// Result has coprime integer entries.
RVec primitive_integer_direction(const RVec& a);

}  // namespace solang
