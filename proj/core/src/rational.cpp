#include "symlab/rational.hpp"

#include <cmath>
#include <sstream>

#include "symlab/errors.hpp"

namespace symlab {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

RationalVector parse_rational_list(std::string_view text) {
  RationalVector out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

std::string to_string(std::span<const Rational> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += to_string(v[i]);
  }
  return s;
}

Rational pow(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (r == 0) throw DomainError("zero to a negative power");
    Rational inv = 1 / r;
    return pow(inv, -e);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

Rational from_double(double v) {
  if (!std::isfinite(v)) throw DomainError("non-finite value cannot be made exact");
  Rational r;
  mpq_set_d(r.get_mpq_t(), v);
  return r;
}

long double to_long_double(const Rational& r) {
  // Split off a power of two so huge numerators and denominators do not
  // overflow the intermediate doubles.
  long num_exp = 0, den_exp = 0;
  const double nm = mpz_get_d_2exp(&num_exp, r.get_num_mpz_t());
  const double dm = mpz_get_d_2exp(&den_exp, r.get_den_mpz_t());
  return std::ldexp(static_cast<long double>(nm) / static_cast<long double>(dm),
                    static_cast<int>(num_exp - den_exp));
}

}  // namespace symlab
