#pragma once

// Classical symmetric bases (monomial, elementary, power sum) and the
// Muirhead / power-sum comparisons built on them.

#include <span>
#include <string>
#include <string_view>

#include "symlab/partition.hpp"
#include "symlab/rational.hpp"
#include "symlab/sympoly.hpp"

namespace symlab {

enum class ClassicalFamily { Monomial, Elementary, PowerSum };

ClassicalFamily parse_classical_family(std::string_view name);
std::string to_string(ClassicalFamily f);

// Monomial:   m_lambda.
// Elementary: e_lambda = prod_i e_{lambda_i}; every part must be <= n
//             (DomainError otherwise). Pass the conjugate partition to get
//             e_{lambda'}.
// PowerSum:   p_lambda = prod_i p_{lambda_i} over all n parts, p_0 = n.
SymPoly expand_classical(ClassicalFamily family, const Partition& lambda);

// e_{lambda'} for an n-part lambda; the columns of lambda never exceed n.
SymPoly elementary_of_conjugate(const Partition& lambda);

// m_lambda(x) / m_lambda(1). Negative coordinates are a DomainError.
Rational muirhead_eval(const Partition& lambda, std::span<const Rational> x);

// p_lambda(x) evaluated directly as a product of power sums.
Rational powersum_eval(const Partition& lambda, std::span<const Rational> x);

struct Comparison {
  Rational lhs;
  Rational rhs;
  int sign = 0;  // sign(lhs - rhs)
};

// (p_lambda(x), p_mu(x), sign of the difference). Requires x >= 0 and
// |lambda| = |mu|.
Comparison powersum_compare(const Partition& lambda, const Partition& mu, std::span<const Rational> x);

void require_nonnegative(std::span<const Rational> x, const char* what);

}  // namespace symlab
