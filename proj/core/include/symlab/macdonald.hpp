#pragma once

// Monic Macdonald polynomials P_lambda(x; q, t) at fixed rational (q, t),
// their normalization Omega_lambda = P_lambda / P_lambda(t^delta), the
// scaled dominant q-lattice, shifted Macdonald interpolation polynomials and the
// identities built on them.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symlab/partition.hpp"
#include "symlab/rational.hpp"
#include "symlab/sympoly.hpp"

namespace symlab {

struct MacdonaldParams {
  std::size_t n = 0;
  Rational q;
  Rational t;
  Rational a = 1;
  // Set when t = q^theta exactly, i.e. q = r^d and t = r^p for theta = p/d.
  std::optional<Rational> theta;
  std::optional<Rational> base;

  // Validates 0 < q, t < 1 and a > 0 (ParameterError otherwise).
  static MacdonaldParams make(std::size_t n, const Rational& q, const Rational& t, const Rational& a = 1);
  // Coupled form: q = base^d, t = base^p for theta = p/d > 0, 0 < base < 1.
  static MacdonaldParams coupled(std::size_t n, const Rational& base, const Rational& theta, const Rational& a = 1);

  std::vector<int> delta() const;
  // (t^{n-1}, ..., t, 1)
  RationalVector principal() const;
  std::string to_string() const;
};

struct LatticePoint {
  std::vector<int> mu;
  RationalVector coords;
};

// Inverse: coords = a q^{-mu} t^{-delta}, i.e. a q^{-mu_i} t^{i-n}. This is
// the lattice on which lambda -> Omega_lambda(x) is Schur- and log-convex.
// Principal: a q^{-mu} t^{delta}. That set contains points where convexity
// fails (at q = t, mu = (1,0) gives x = (1,1) and Omega_(2,0) < Omega_(1,1)),
// so it is kept only for comparison.
enum class LatticeShift { Inverse, Principal };

// mu must be weakly decreasing (negative entries allowed).
LatticePoint lattice_point(std::span<const int> mu, const MacdonaldParams& params,
                           LatticeShift shift = LatticeShift::Inverse);

SymPoly macdonald_expand(const Partition& lambda, const MacdonaldParams& params);

// P_lambda(t^delta), by direct evaluation of the expansion.
Rational macdonald_principal_value(const Partition& lambda, const MacdonaldParams& params);

Rational omega_mac_eval(const Partition& lambda, const MacdonaldParams& params, std::span<const Rational> x);

struct InversionResult {
  Rational lhs;  // Omega_lambda(x; 1/q, 1/t)
  Rational rhs;  // t^{(n-1)|lambda|} Omega_lambda(x; q, t)
  bool equal = false;
};

InversionResult inversion_check(const Partition& lambda, const MacdonaldParams& params, std::span<const Rational> x);

// Shifted Macdonald polynomial, stored as a (non-homogeneous) symmetric
// polynomial in z_i = x_i t^{n-i}. Normalized so that P*_mu(q^mu) = 1.
class ShiftedMacdonald {
 public:
  ShiftedMacdonald(Partition mu, Rational t, SymPoly in_z) : mu_(std::move(mu)), t_(std::move(t)), z_(std::move(in_z)) {}

  const Partition& mu() const { return mu_; }
  const SymPoly& in_shifted_variables() const { return z_; }

  Rational eval(std::span<const Rational> x) const;
  // Evaluation directly at shifted coordinates z.
  Rational eval_shifted(std::span<const Rational> z) const;
  // Degree-|mu| homogeneous part, as a polynomial in z.
  SymPoly top_degree() const;

 private:
  Partition mu_;
  Rational t_;
  SymPoly z_;
};

// (q^{lambda_1}, ..., q^{lambda_n})
RationalVector q_power_point(const Partition& lambda, const Rational& q);

ShiftedMacdonald shifted_macdonald(const Partition& mu, const MacdonaldParams& params);

struct BinomialResult {
  Rational lhs;  // Omega_lambda(x)
  Rational rhs;  // the binomial sum
  Rational residual;
};

// Binomial expansion of Omega_lambda(x) over mu contained in lambda. See
// README for the argument and normalization conventions.
BinomialResult binomial_check(const Partition& lambda, const MacdonaldParams& params, std::span<const Rational> x);

namespace detail {
// No range checks on (q, t); used for the inverted parameters.
SymPoly macdonald_expand_unchecked(const Partition& lambda, const Rational& q, const Rational& t);

// The binomial sum under either argument convention (x t^{-delta} when
// inverse_shift, else x t^delta) and with or without rescaling each P*_mu
// to leading term t^{(1-n)|mu|} m_mu(z). binomial_check uses (true, true).
Rational binomial_sum(const Partition& lambda, const MacdonaldParams& params, std::span<const Rational> x,
                      bool inverse_shift, bool leading_normalization);
}  // namespace detail

}  // namespace symlab
