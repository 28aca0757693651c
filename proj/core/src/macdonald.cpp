#include "symlab/macdonald.hpp"

#include <stdexcept>

#include "symlab/cache.hpp"
#include "symlab/eigen_expand.hpp"
#include "symlab/errors.hpp"
#include "symlab/linsolve.hpp"

namespace symlab {

namespace {

void require_unit_interval(const Rational& v, const char* name) {
  if (v <= 0 || v >= 1) throw ParameterError(std::string(name) + " must lie in (0,1), got " + to_string(v));
}

// D = sum_i A_i(x) T_{q,x_i} with A_i = prod_{j != i} (t x_i - x_j) / (x_i - x_j).
// On a monomial x^eta, T_{q,x_i} multiplies by q^{eta_i}.
detail::MonomialAction macdonald_action(const Rational& q, const Rational& t) {
  return [q, t](const Partition& nu, std::span<const Rational> x) {
    const std::size_t n = x.size();
    RationalVector coef(n, Rational(1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) coef[i] *= (t * x[i] - x[j]) / (x[i] - x[j]);
      }
    }
    return detail::orbit_sum(nu, x, [&](const std::vector<int>& eta) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i) s += coef[i] * pow(q, eta[i]);
      return s;
    });
  };
}

}  // namespace

MacdonaldParams MacdonaldParams::make(std::size_t n, const Rational& q, const Rational& t, const Rational& a) {
  if (n == 0) throw DimensionError("Macdonald parameters need n >= 1");
  require_unit_interval(q, "q");
  require_unit_interval(t, "t");
  if (a <= 0) throw ParameterError("a must be positive, got " + symlab::to_string(a));
  MacdonaldParams p;
  p.n = n;
  p.q = q;
  p.t = t;
  p.a = a;
  return p;
}

MacdonaldParams MacdonaldParams::coupled(std::size_t n, const Rational& base, const Rational& theta,
                                         const Rational& a) {
  if (theta <= 0) throw ParameterError("coupled form needs theta > 0");
  require_unit_interval(base, "base");
  const Rational th = theta;
  if (!th.get_num().fits_slong_p() || !th.get_den().fits_slong_p()) throw ParameterError("theta too large");
  auto p = make(n, pow(base, th.get_den().get_si()), pow(base, th.get_num().get_si()), a);
  p.theta = theta;
  p.base = base;
  return p;
}

std::vector<int> MacdonaldParams::delta() const {
  std::vector<int> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<int>(n - 1 - i);
  return d;
}

RationalVector MacdonaldParams::principal() const {
  RationalVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = pow(t, static_cast<long>(n - 1 - i));
  return v;
}

std::string MacdonaldParams::to_string() const {
  std::string s = "q=" + symlab::to_string(q) + ",t=" + symlab::to_string(t) + ",a=" + symlab::to_string(a);
  if (theta) s += ",theta=" + symlab::to_string(*theta);
  return s;
}

LatticePoint lattice_point(std::span<const int> mu, const MacdonaldParams& params, LatticeShift shift) {
  detail::require_same_length(mu.size(), params.n, "lattice_point");
  for (std::size_t i = 1; i < mu.size(); ++i) {
    if (mu[i - 1] < mu[i]) throw DomainError("lattice label must be weakly decreasing");
  }
  LatticePoint lp;
  lp.mu.assign(mu.begin(), mu.end());
  lp.coords.resize(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const long e = static_cast<long>(params.n - 1 - i);
    lp.coords[i] = params.a * pow(params.q, -mu[i]) * pow(params.t, shift == LatticeShift::Inverse ? -e : e);
  }
  return lp;
}

namespace detail {

SymPoly macdonald_expand_unchecked(const Partition& lambda, const Rational& q, const Rational& t) {
  const CacheKey key{"macdonald", lambda, {to_string(q), to_string(t)}};
  if (auto hit = default_cache().find(key)) return *hit;
  const std::string ctx = "macdonald q=" + to_string(q) + " t=" + to_string(t);
  const auto& op = cached_operator_matrix(ctx, lambda.size(), lambda.weight(), macdonald_action(q, t));
  SymPoly p = triangular_eigenvector(op, lambda, ctx);
  default_cache().insert(key, p);
  return p;
}

}  // namespace detail

SymPoly macdonald_expand(const Partition& lambda, const MacdonaldParams& params) {
  detail::require_same_length(lambda.size(), params.n, "macdonald_expand");
  require_unit_interval(params.q, "q");
  require_unit_interval(params.t, "t");
  return detail::macdonald_expand_unchecked(lambda, params.q, params.t);
}

Rational macdonald_principal_value(const Partition& lambda, const MacdonaldParams& params) {
  return poly_eval(macdonald_expand(lambda, params), params.principal());
}

Rational omega_mac_eval(const Partition& lambda, const MacdonaldParams& params, std::span<const Rational> x) {
  detail::require_same_length(x.size(), params.n, "omega_mac_eval");
  const SymPoly p = macdonald_expand(lambda, params);
  const Rational denom = poly_eval(p, params.principal());
  if (denom == 0) throw std::logic_error("P_lambda(t^delta) vanished");
  return poly_eval(p, x) / denom;
}

InversionResult inversion_check(const Partition& lambda, const MacdonaldParams& params, std::span<const Rational> x) {
  detail::require_same_length(x.size(), params.n, "inversion_check");
  const Rational qi = 1 / params.q;
  const Rational ti = 1 / params.t;
  const SymPoly inv = detail::macdonald_expand_unchecked(lambda, qi, ti);
  RationalVector inv_principal(params.n);
  for (std::size_t i = 0; i < params.n; ++i) inv_principal[i] = pow(ti, static_cast<long>(params.n - 1 - i));
  InversionResult r;
  r.lhs = poly_eval(inv, x) / poly_eval(inv, inv_principal);
  r.rhs = pow(params.t, static_cast<long>((params.n - 1) * lambda.weight())) * omega_mac_eval(lambda, params, x);
  r.equal = r.lhs == r.rhs;
  return r;
}

RationalVector q_power_point(const Partition& lambda, const Rational& q) {
  RationalVector v(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) v[i] = pow(q, lambda[i]);
  return v;
}

namespace {

RationalVector shift(std::span<const Rational> x, const Rational& t) {
  RationalVector z(x.begin(), x.end());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] *= pow(t, static_cast<long>(z.size() - 1 - i));
  return z;
}

}  // namespace

Rational ShiftedMacdonald::eval(std::span<const Rational> x) const {
  detail::require_same_length(x.size(), mu_.size(), "shifted Macdonald evaluation");
  return poly_eval(z_, shift(x, t_));
}

Rational ShiftedMacdonald::eval_shifted(std::span<const Rational> z) const {
  detail::require_same_length(z.size(), mu_.size(), "shifted Macdonald evaluation");
  return poly_eval(z_, z);
}

SymPoly ShiftedMacdonald::top_degree() const {
  SymPoly top(mu_.size());
  for (const auto& [nu, c] : z_.terms()) {
    if (nu.weight() == mu_.weight()) top.add_term(nu, c);
  }
  return top;
}

ShiftedMacdonald shifted_macdonald(const Partition& mu, const MacdonaldParams& params) {
  detail::require_same_length(mu.size(), params.n, "shifted_macdonald");
  const auto basis = partitions_up_to(mu.weight(), params.n);
  const std::size_t k = basis.size();
  RationalMatrix a(k, RationalVector(k));
  RationalVector b(k);
  // The conditions are indexed by the same partitions as the basis: vanish
  // at q^lambda for lambda != mu, value 1 at q^mu.
  for (std::size_t r = 0; r < k; ++r) {
    PointEvaluator ev(shift(q_power_point(basis[r], params.q), params.t));
    for (std::size_t c = 0; c < k; ++c) a[r][c] = ev.monomial(basis[c]);
    b[r] = basis[r] == mu ? 1 : 0;
  }
  RationalVector coeffs;
  try {
    coeffs = solve_exact(std::move(a), b);
  } catch (const DegeneracyError&) {
    throw DegeneracyError("shifted Macdonald system is singular for mu=" + mu.to_string() + " at " +
                          params.to_string());
  }
  SymPoly z(params.n);
  for (std::size_t c = 0; c < k; ++c) z.add_term(basis[c], coeffs[c]);
  return ShiftedMacdonald(mu, params.t, std::move(z));
}

namespace detail {

Rational binomial_sum(const Partition& lambda, const MacdonaldParams& params, std::span<const Rational> x,
                      bool inverse_shift, bool leading_normalization) {
  const std::size_t n = params.n;
  RationalVector arg(x.begin(), x.end());
  for (std::size_t i = 0; i < n; ++i) {
    const long e = static_cast<long>(n - 1 - i);
    arg[i] *= pow(params.t, inverse_shift ? -e : e);
  }
  RationalVector inv_principal(n);
  for (std::size_t i = 0; i < n; ++i) inv_principal[i] = pow(params.t, -static_cast<long>(i));

  const RationalVector q_lambda = q_power_point(lambda, params.q);
  Rational total = 0;
  for (const auto& mu : partitions_up_to(lambda.weight(), n)) {
    if (!contains(lambda, mu)) continue;
    const ShiftedMacdonald ps = shifted_macdonald(mu, params);
    const Rational p_inv = poly_eval(macdonald_expand(mu, params), inv_principal);
    if (p_inv == 0) throw DegeneracyError("P_mu(1, 1/t, ...) vanished for mu=" + mu.to_string());
    Rational term = ps.eval(q_lambda) / ps.eval(q_power_point(mu, params.q)) / p_inv * ps.eval(arg);
    if (leading_normalization) {
      // Rescale so the top-degree part in z is t^{(1-n)|mu|} P_mu(z).
      term *= pow(params.t, -static_cast<long>((n - 1) * mu.weight())) / ps.in_shifted_variables().coeff(mu);
    }
    total += term;
  }
  return total;
}

}  // namespace detail

BinomialResult binomial_check(const Partition& lambda, const MacdonaldParams& params, std::span<const Rational> x) {
  detail::require_same_length(x.size(), params.n, "binomial_check");
  BinomialResult r;
  r.lhs = omega_mac_eval(lambda, params, x);
  r.rhs = detail::binomial_sum(lambda, params, x, true, true);
  r.residual = r.lhs - r.rhs;
  return r;
}

}  // namespace symlab
