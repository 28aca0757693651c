#pragma once

// Triangular eigen-solves in the monomial basis.
//
// Both the Macdonald q-difference operator and the Jack Laplace-Beltrami
// type operator preserve degree and act triangularly on {m_nu} with respect
// to dominance. The matrix of such an operator on the weight-w block is
// recovered exactly by evaluating D m_nu at sample points and solving
// against the monomial values; the monic eigenvector for lambda then follows
// from the usual triangular recursion
//
//   c_kappa (e_lambda - e_kappa) = sum_{kappa < nu <= lambda} c_nu D[nu][kappa].

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "symlab/linsolve.hpp"
#include "symlab/partition.hpp"
#include "symlab/sympoly.hpp"

namespace symlab::detail {

// (D m_nu)(x) at a point with pairwise distinct, nonzero coordinates.
using MonomialAction = std::function<Rational(const Partition& nu, std::span<const Rational> x)>;

struct OperatorMatrix {
  std::vector<Partition> basis;  // partitions_of(weight, n), decreasing lex
  RationalMatrix entries;        // entries[i][j]: coefficient of m_basis[j] in D m_basis[i]
};

// Computes the block and checks it is dominance-triangular (a violation is
// a logic_error: the supplied action is not the operator it claims to be).
OperatorMatrix operator_matrix(std::size_t n, int weight, const MonomialAction& action);

// Same, memoized under `key` (which must identify the operator and its
// parameters). Safe for concurrent use.
const OperatorMatrix& cached_operator_matrix(const std::string& key, std::size_t n, int weight,
                                             const MonomialAction& action);

// Monic eigenvector with leading term m_lambda. Throws DegeneracyError on
// an eigenvalue collision between lambda and some kappa below it; `context`
// is included in the message.
SymPoly triangular_eigenvector(const OperatorMatrix& op, const Partition& lambda, const std::string& context);

// Sum over the distinct rearrangements eta of nu of x^eta * multiplier(eta).
template <typename Multiplier>
Rational orbit_sum(const Partition& nu, std::span<const Rational> x, Multiplier multiplier) {
  Rational total = 0, term;
  for (const auto& eta : orbit(nu)) {
    term = multiplier(eta);
    if (term == 0) continue;
    for (std::size_t i = 0; i < eta.size(); ++i) {
      if (eta[i]) term *= pow(x[i], eta[i]);
    }
    total += term;
  }
  return total;
}

}  // namespace symlab::detail
