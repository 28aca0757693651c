#include "symlab/classical.hpp"

namespace symlab {

ClassicalFamily parse_classical_family(std::string_view name) {
  if (name == "monomial") return ClassicalFamily::Monomial;
  if (name == "elementary") return ClassicalFamily::Elementary;
  if (name == "powersum") return ClassicalFamily::PowerSum;
  throw DomainError("unknown classical family '" + std::string(name) + "'");
}

std::string to_string(ClassicalFamily f) {
  switch (f) {
    case ClassicalFamily::Monomial:
      return "monomial";
    case ClassicalFamily::Elementary:
      return "elementary";
    case ClassicalFamily::PowerSum:
      return "powersum";
  }
  return "?";
}

namespace {

SymPoly elementary_single(int k, std::size_t n) {
  if (k < 0 || static_cast<std::size_t>(k) > n) {
    throw DomainError("elementary polynomial e_" + std::to_string(k) + " needs at most " + std::to_string(n) +
                      " as degree");
  }
  std::vector<int> parts(n, 0);
  for (int i = 0; i < k; ++i) parts[static_cast<std::size_t>(i)] = 1;
  return SymPoly::monomial(Partition(parts));
}

SymPoly powersum_single(int k, std::size_t n) {
  if (k == 0) return SymPoly::constant(n, Rational(static_cast<long>(n)));
  std::vector<int> parts(n, 0);
  parts[0] = k;
  return SymPoly::monomial(Partition(parts));
}

template <typename Factor>
SymPoly product_over_parts(std::span<const int> parts, std::size_t n, Factor factor) {
  SymPoly out = SymPoly::constant(n, 1);
  for (int k : parts) out = poly_multiply(out, factor(k, n));
  return out;
}

}  // namespace

SymPoly expand_classical(ClassicalFamily family, const Partition& lambda) {
  const std::size_t n = lambda.size();
  switch (family) {
    case ClassicalFamily::Monomial:
      return SymPoly::monomial(lambda);
    case ClassicalFamily::Elementary:
      return product_over_parts(lambda.parts(), n, elementary_single);
    case ClassicalFamily::PowerSum:
      return product_over_parts(lambda.parts(), n, powersum_single);
  }
  throw DomainError("unknown classical family");
}

SymPoly elementary_of_conjugate(const Partition& lambda) {
  const std::size_t n = lambda.size();
  const std::size_t columns = n ? static_cast<std::size_t>(lambda[0]) : 0;
  const Partition conj = conjugate(lambda, columns);
  return product_over_parts(conj.parts(), n, elementary_single);
}

void require_nonnegative(std::span<const Rational> x, const char* what) {
  for (const auto& v : x) {
    if (v < 0) throw DomainError(std::string(what) + ": negative coordinate " + to_string(v));
  }
}

Rational muirhead_eval(const Partition& lambda, std::span<const Rational> x) {
  require_nonnegative(x, "muirhead_eval");
  return monomial_eval(lambda, x) / Rational(orbit_size(lambda));
}

Rational powersum_eval(const Partition& lambda, std::span<const Rational> x) {
  detail::require_same_length(lambda.size(), x.size(), "powersum_eval");
  Rational out = 1;
  for (int k : lambda.parts()) {
    Rational pk = 0;
    for (const auto& xi : x) pk += pow(xi, k);
    out *= pk;
  }
  return out;
}

Comparison powersum_compare(const Partition& lambda, const Partition& mu, std::span<const Rational> x) {
  require_nonnegative(x, "powersum_compare");
  detail::require_same_length(lambda.size(), mu.size(), "powersum_compare");
  if (lambda.weight() != mu.weight()) throw DomainError("powersum_compare: partitions of different weight");
  Comparison c{powersum_eval(lambda, x), powersum_eval(mu, x), 0};
  c.sign = sgn(c.lhs - c.rhs);
  return c;
}

}  // namespace symlab
