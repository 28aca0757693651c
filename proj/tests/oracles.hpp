#pragma once

// Independent reference computations used only by the tests. None of these
// go through the eigen-solve engine.

#include <span>
#include <vector>

#include "symlab/partition.hpp"
#include "symlab/rational.hpp"
#include "symlab/sympoly.hpp"

namespace oracle {

using symlab::Partition;
using symlab::Rational;
using symlab::RationalVector;

inline Rational determinant(std::vector<RationalVector> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// Schur polynomial as a ratio of alternants; x needs distinct entries.
inline Rational schur_bialternant(const Partition& lambda, std::span<const Rational> x) {
  const std::size_t n = x.size();
  std::vector<RationalVector> num(n, RationalVector(n)), den(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      num[i][j] = symlab::pow(x[i], lambda[j] + static_cast<long>(n - 1 - j));
      den[i][j] = symlab::pow(x[i], static_cast<long>(n - 1 - j));
    }
  }
  return determinant(num) / determinant(den);
}

inline std::vector<int> conjugate_parts(const Partition& lambda) {
  std::vector<int> c(lambda.size() ? lambda[0] : 0, 0);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) ++c[j];
  }
  return c;
}

// P_lambda(1, t, ..., t^{n-1}; q, t) from the hook-type product
// t^{n(lambda)} prod_s (1 - q^{a'} t^{n - l'}) / (1 - q^{a} t^{l + 1}).
inline Rational macdonald_principal(const Partition& lambda, const Rational& q, const Rational& t) {
  const auto conj = conjugate_parts(lambda);
  const long n = static_cast<long>(lambda.size());
  Rational out = 1;
  long n_lambda = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    n_lambda += static_cast<long>(i) * lambda[i];
    for (int j = 0; j < lambda[i]; ++j) {
      const long arm = lambda[i] - j - 1, leg = conj[j] - static_cast<long>(i) - 1;
      const long coarm = j, coleg = static_cast<long>(i);
      out *= (1 - symlab::pow(q, coarm) * symlab::pow(t, n - coleg)) /
             (1 - symlab::pow(q, arm) * symlab::pow(t, leg + 1));
    }
  }
  return out * symlab::pow(t, n_lambda);
}

// P_lambda(1^n; theta) = prod_s (n - l' + a'/theta) / (a/theta + l + 1).
inline Rational jack_at_ones(const Partition& lambda, const Rational& theta) {
  const auto conj = conjugate_parts(lambda);
  const Rational alpha = 1 / theta;
  const long n = static_cast<long>(lambda.size());
  Rational out = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      const long arm = lambda[i] - j - 1, leg = conj[j] - static_cast<long>(i) - 1;
      out *= (n - static_cast<long>(i) + alpha * j) / (alpha * arm + leg + 1);
    }
  }
  return out;
}

// (D P)(x) for D = sum_i A_i T_{q,x_i}, evaluated by shifting the point.
inline Rational macdonald_operator_at(const symlab::SymPoly& p, const Rational& q, const Rational& t,
                                      std::span<const Rational> x) {
  const std::size_t n = x.size();
  Rational total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational a = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) a *= (t * x[i] - x[j]) / (x[i] - x[j]);
    }
    RationalVector y(x.begin(), x.end());
    y[i] *= q;
    total += a * symlab::poly_eval(p, y);
  }
  return total;
}

}  // namespace oracle
