#pragma once

// Type-A Heckman-Opdam hypergeometric function F_{k,s}(x), evaluated by the
// recursive interlacing integral with tensor Gauss-Legendre quadrature.
// This is the only floating-point module of the library.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symlab/partition.hpp"
#include "symlab/rational.hpp"

namespace symlab {

struct HOParams {
  std::size_t n = 1;
  double k = 1;

  static HOParams make(std::size_t n, double k);
  // rho = (n-1, n-3, ..., -(n-1)) / 2
  std::vector<double> rho() const;
};

enum class SingularityRule { PlainGauss, EndpointSubstitution };

SingularityRule parse_singularity_rule(std::string_view name);
std::string to_string(SingularityRule rule);

struct QuadratureConfig {
  int nodes_per_dimension = 32;
  SingularityRule singularity_rule = SingularityRule::EndpointSubstitution;
  double min_gap = 1e-9;

  void validate() const;
};

struct HOResult {
  double value = 0;
  // Relative difference between the rule with N nodes and with N - N/4.
  double error_estimate = 0;
  // Plain Gauss was used with k in (0,1): endpoint singularities unresolved.
  bool singularity_warning = false;
};

// F_{k,s}(x). x is sorted internally; after sorting, adjacent coordinates
// closer than cfg.min_gap raise TieError. k = 0 is routed to the closed
// form.
HOResult ho_eval(const HOParams& params, std::span<const double> s, std::span<const double> x,
                 const QuadratureConfig& cfg);

// k = 0: (1/n!) sum_sigma exp(<s, sigma x>). n = 1: exp(s x).
double ho_closed_forms(const HOParams& params, std::span<const double> s, std::span<const double> x);

struct JackConsistency {
  double ho = 0;
  double jack = 0;
  double relative_error = 0;
  HOResult detail;
};

// Compares F_{k, lambda + k rho}(x) with Omega_lambda(e^x; theta = k).
JackConsistency ho_jack_consistency(const Partition& lambda, const Rational& k, std::span<const double> x,
                                    const QuadratureConfig& cfg);

// |(F(x + h1) - F(x - h1)) / 2h - (sum s) F(x)| / |F(x)|
double ho_direction_residual(const HOParams& params, std::span<const double> s, std::span<const double> x, double h,
                             const QuadratureConfig& cfg);

struct Perturbed {
  std::vector<double> x;
  bool changed = false;
};

// Splits runs of (near-)equal coordinates symmetrically so adjacent gaps are
// at least min_gap; the mean of each run is preserved.
Perturbed perturb_ties(std::span<const double> x, double min_gap);

}  // namespace symlab
