#pragma once

// Exact rational scalars. GMP's mpq_class keeps every value canonical
// (positive denominator, reduced), which is the invariant the rest of the
// library relies on when comparing or hashing coefficients.

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symlab {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

// num/den reduced. mpq_class(num, den) alone does not canonicalize, and GMP
// arithmetic on non-canonical operands gives wrong comparisons.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p/q", "-p/q" or a plain integer. Throws DomainError otherwise.
Rational parse_rational(std::string_view text);

// Comma separated list of rationals, e.g. "4,1/2,3".
RationalVector parse_rational_list(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(std::span<const Rational> v);

// r^e for any integer e; r must be nonzero when e < 0.
Rational pow(const Rational& r, long e);

// Exact image of a finite double.
Rational from_double(double v);

inline double to_double(const Rational& r) { return r.get_d(); }

long double to_long_double(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace symlab
