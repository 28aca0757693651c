#pragma once

// Sparse symmetric polynomials in the monomial basis with exact rational
// coefficients.
//
// m_lambda(x) is the sum of x^eta over the *distinct* rearrangements eta of
// lambda, so m_lambda(1,...,1) is the number of distinct permutations of the
// parts (not n!). Some references normalize differently; every formula in
// this library uses the distinct-orbit convention.

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symlab/partition.hpp"
#include "symlab/rational.hpp"

namespace symlab {

class SymPoly {
 public:
  using Terms = std::map<Partition, Rational>;

  explicit SymPoly(std::size_t n = 0) : n_(n) {}

  static SymPoly monomial(const Partition& lambda, const Rational& coeff = 1);
  static SymPoly constant(std::size_t n, const Rational& c);

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Partition& nu) const;

  // Adds c * m_nu; drops the entry if it cancels to zero.
  void add_term(const Partition& nu, const Rational& c);

  SymPoly& operator+=(const SymPoly& other);
  SymPoly& operator-=(const SymPoly& other);
  SymPoly& operator*=(const Rational& c);

  friend bool operator==(const SymPoly&, const SymPoly&) = default;

  // One term per line: "nu : num/den", terms in decreasing partition order.
  std::string serialize() const;
  // Inverse of serialize. Also accepts "m(nu):c" lines and blank lines.
  // Throws DomainError on malformed input; n is taken from the partitions,
  // or from `n` when the text has no terms.
  static SymPoly parse(std::string_view text, std::size_t n = 0);

 private:
  std::size_t n_;
  Terms terms_;
};

SymPoly operator+(SymPoly a, const SymPoly& b);
SymPoly operator-(SymPoly a, const SymPoly& b);
SymPoly operator*(const Rational& c, SymPoly p);

// Distinct rearrangements of lambda, each as an exponent vector.
std::vector<std::vector<int>> orbit(const Partition& lambda);
// Number of distinct rearrangements, n! / prod(multiplicity!).
Integer orbit_size(const Partition& lambda);

Rational monomial_eval(const Partition& lambda, std::span<const Rational> x);
Rational poly_eval(const SymPoly& p, std::span<const Rational> x);
long double poly_eval(const SymPoly& p, std::span<const long double> x);

SymPoly poly_combine(std::span<const std::pair<Rational, SymPoly>> terms);
SymPoly poly_multiply(const SymPoly& p, const SymPoly& q);

// Caches monomial values at a fixed point; cheap when many polynomials are
// evaluated at the same x (sweeps).
class PointEvaluator {
 public:
  explicit PointEvaluator(std::span<const Rational> x);

  std::span<const Rational> point() const { return x_; }
  const Rational& monomial(const Partition& lambda);
  Rational operator()(const SymPoly& p);

 private:
  const Rational& power(std::size_t i, int e);

  RationalVector x_;
  std::vector<RationalVector> powers_;
  std::map<Partition, Rational> cache_;
};

}  // namespace symlab
