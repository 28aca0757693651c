#pragma once

// Inequality laboratory: Schur-convexity and log-convexity sweeps, witnesses
// for non-majorized pairs, and the off-lattice Macdonald hunter.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symlab/heckman_opdam.hpp"
#include "symlab/jack.hpp"
#include "symlab/macdonald.hpp"
#include "symlab/partition.hpp"
#include "symlab/rational.hpp"

namespace symlab {

inline constexpr const char* kVersion = "1.0.0";

enum class FamilyKind { Muirhead, PowerSum, Jack, MacdonaldLattice, HeckmanOpdam };

struct Family {
  FamilyKind kind = FamilyKind::Muirhead;
  JackParam theta;
  Rational q, t, a = 1;
  double k = 1;
  QuadratureConfig quad;

  static Family muirhead();
  static Family powersum();
  static Family jack(const JackParam& theta);
  static Family macdonald_lattice(const Rational& q, const Rational& t, const Rational& a = 1);
  static Family heckman_opdam(double k, const QuadratureConfig& cfg = {});

  std::string name() const;
  std::vector<std::pair<std::string, std::string>> params() const;
  bool exact() const { return kind != FamilyKind::HeckmanOpdam; }
  MacdonaldParams macdonald_params(std::size_t n) const;
};

// Uniform rationals on [lo, hi] with denominator 2^16, or for the lattice
// family all labels with entries in [0, max_label].
struct SamplerSpec {
  int samples = 100;
  Rational lo = 0;
  Rational hi = 10;
  int max_label = 4;
};

struct SweepSpec {
  std::size_t n = 2;
  int max_weight = 4;
  SamplerSpec sampler;
  std::uint64_t seed = 0;
  // When nonempty, replaces the enumerated pairs.
  std::vector<std::pair<Partition, Partition>> pairs;
};

struct Witness {
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;
  Partition lambda;
  Partition mu;
  // Exact families.
  RationalVector x;
  Rational lhs;
  Rational rhs;
  // Heckman-Opdam (and the spectral vectors it compares).
  bool exact = true;
  std::vector<double> x_real;
  double lhs_real = 0;
  double rhs_real = 0;
  std::vector<double> s_lhs, s_rhs;
  std::string construction;

  Rational margin() const { return rhs - lhs; }
};

struct InequalityReport {
  std::string command;
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;
  std::size_t n = 0;
  int max_weight = 0;
  std::uint64_t seed = 0;
  std::size_t pairs_checked = 0;
  std::size_t samples = 0;
  std::size_t comparisons = 0;
  std::size_t skipped = 0;
  std::size_t violation_count = 0;
  std::vector<Witness> violations;  // at most kMaxStored
  std::vector<Witness> near_misses;
  std::map<std::string, std::string> notes;
  double elapsed_ms = 0;

  static constexpr std::size_t kMaxStored = 64;

  bool passed() const { return violation_count == 0; }
  std::string to_json(bool include_elapsed = true) const;
  std::string to_table() const;
};

// Omega_lambda(x) for the family (p_lambda(x) for power sums).
Rational family_value(const Family& family, const Partition& lambda, std::span<const Rational> x);

// Omega_lambda(x) >= Omega_mu(x) over same-weight comparable pairs.
InequalityReport check_schur_convexity(const Family& family, const SweepSpec& spec);

// Omega_lambda Omega_mu >= Omega_mid^2 over midpoint-integral pairs.
InequalityReport check_log_convexity(const Family& family, const SweepSpec& spec);

// Jack families over weak-comparable pairs; the sampler must stay in
// [1, infinity) (DomainError otherwise).
InequalityReport check_weak_majorization(const JackParam& theta, const SweepSpec& spec);

// Random spectral triples (s, s', x): midpoint log-convexity and
// Schur-convexity of s -> F_{k,s}(x) within the quadrature tolerance.
InequalityReport ho_spectral_sweep(const HOParams& params, int triples, std::uint64_t seed,
                                   const QuadratureConfig& cfg);

// Separating point for a pair with lambda not majorizing mu (DomainError
// otherwise, or for the Heckman-Opdam family).
Witness find_witness(const Partition& lambda, const Partition& mu, const Family& family);

// Recomputes both sides of an exact witness from scratch.
bool reverify(const Witness& w);

struct HuntSpec {
  Rational q;
  Rational t;
  std::size_t n = 2;
  int max_weight = 4;
  long budget = 100000;
  std::uint64_t seed = 0;
  bool lattice_only = false;
};

// Searches positive rational points for Omega_lambda(x) < Omega_mu(x) with
// lambda majorizing mu. At most one violation is returned; failure within
// the budget is inconclusive.
InequalityReport hunt_violation(const HuntSpec& spec);

// Counter-based generator shared by every sampler: value depends only on
// (seed, index), never on call order.
std::uint64_t counter_random(std::uint64_t seed, std::uint64_t index);
Rational sample_rational(std::uint64_t seed, std::uint64_t index, const Rational& lo, const Rational& hi);

}  // namespace symlab
