#pragma once

// Jack polynomials P_lambda(x; theta) at rational theta, theta = infinity
// as a sentinel, and the Macdonald -> Jack limit probe.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symlab/partition.hpp"
#include "symlab/rational.hpp"
#include "symlab/sympoly.hpp"

namespace symlab {

struct JackParam {
  Rational theta = 1;
  bool infinite = false;

  static JackParam finite(const Rational& theta);
  static JackParam infinity();
  // "inf", "infinity" or a nonnegative rational.
  static JackParam parse(std::string_view text);
  std::string to_string() const;
};

// Monic P_lambda(x; theta). theta = 0 gives m_lambda. For the infinite
// sentinel this returns e_{lambda'}, which is monic with the same leading
// monomial.
SymPoly jack_expand(const Partition& lambda, const JackParam& theta);

// P_lambda(x; theta) / P_lambda(1; theta); x >= 0.
Rational omega_jack_eval(const Partition& lambda, const JackParam& theta, std::span<const Rational> x);

struct LimitProbeRow {
  long k = 0;
  std::vector<int> label;          // mu(k)
  std::vector<long double> point;  // x^(k)
  long double macdonald = 0;       // Omega_lambda(x^(k); e^{-1/k}, e^{-theta/k})
  long double jack = 0;            // Omega_lambda(x; theta)
  long double gap = 0;             // |macdonald - jack|
  long double relative_gap = 0;
  long double point_error = 0;     // max_j |x^(k)_j - x_j|
};

// x strictly decreasing and positive; a = x_n / 2.
std::vector<LimitProbeRow> jack_limit_probe(const Partition& lambda, const Rational& theta,
                                            std::span<const Rational> x, std::span<const long> ks);

}  // namespace symlab
