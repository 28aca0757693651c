#include "symlab/jack.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "symlab/cache.hpp"
#include "symlab/classical.hpp"
#include "symlab/eigen_expand.hpp"
#include "symlab/errors.hpp"
#include "symlab/macdonald.hpp"

namespace symlab {

namespace {

// L = sum_i x_i^2 d_i^2 + 2 theta sum_{i != j} x_i^2 / (x_i - x_j) d_i.
// On x^eta the first part gives eta_i (eta_i - 1) x^eta and the second
// 2 theta x_i eta_i / (x_i - x_j) x^eta.
detail::MonomialAction jack_action(const Rational& theta) {
  return [theta](const Partition& nu, std::span<const Rational> x) {
    const std::size_t n = x.size();
    RationalVector rowsum(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) rowsum[i] += x[i] / (x[i] - x[j]);
      }
    }
    return detail::orbit_sum(nu, x, [&](const std::vector<int>& eta) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (eta[i] == 0) continue;
        s += eta[i] * (eta[i] - 1) + 2 * theta * eta[i] * rowsum[i];
      }
      return s;
    });
  };
}

}  // namespace

JackParam JackParam::finite(const Rational& theta) {
  if (theta < 0) throw ParameterError("theta must be nonnegative, got " + symlab::to_string(theta));
  JackParam p;
  p.theta = theta;
  return p;
}

JackParam JackParam::infinity() {
  JackParam p;
  p.infinite = true;
  p.theta = 0;
  return p;
}

JackParam JackParam::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  return finite(parse_rational(text));
}

std::string JackParam::to_string() const { return infinite ? "inf" : symlab::to_string(theta); }

SymPoly jack_expand(const Partition& lambda, const JackParam& theta) {
  if (theta.infinite) return elementary_of_conjugate(lambda);
  if (theta.theta < 0) throw ParameterError("theta must be nonnegative");
  // At theta = 0 the operator is diagonal and distinct partitions can share
  // an eigenvalue, so the limit m_lambda is returned directly.
  if (theta.theta == 0) return SymPoly::monomial(lambda);
  const CacheKey key{"jack", lambda, {theta.to_string()}};
  if (auto hit = default_cache().find(key)) return *hit;
  const std::string ctx = "jack theta=" + theta.to_string();
  const auto& op = detail::cached_operator_matrix(ctx, lambda.size(), lambda.weight(), jack_action(theta.theta));
  SymPoly p = detail::triangular_eigenvector(op, lambda, ctx);
  default_cache().insert(key, p);
  return p;
}

Rational omega_jack_eval(const Partition& lambda, const JackParam& theta, std::span<const Rational> x) {
  detail::require_same_length(x.size(), lambda.size(), "omega_jack_eval");
  require_nonnegative(x, "omega_jack_eval");
  const SymPoly p = jack_expand(lambda, theta);
  const RationalVector ones(lambda.size(), Rational(1));
  return poly_eval(p, x) / poly_eval(p, ones);
}

namespace {

using BigFloat = boost::multiprecision::cpp_bin_float_100;

// floor(k * log(x / a)), recomputed at higher precision when the long
// double value sits within 2^-40 of an integer.
long guarded_floor(long k, const Rational& x, const Rational& a) {
  const long double v = static_cast<long double>(k) * std::log(to_long_double(x) / to_long_double(a));
  const long double f = std::floor(v);
  if (v - f > std::ldexp(1.0L, -40) && f + 1 - v > std::ldexp(1.0L, -40)) return static_cast<long>(f);
  const Rational ratio = x / a;
  BigFloat r = BigFloat(ratio.get_num().get_str()) / BigFloat(ratio.get_den().get_str());
  BigFloat w = BigFloat(k) * boost::multiprecision::log(r);
  return static_cast<long>(boost::multiprecision::floor(w));
}

}  // namespace

std::vector<LimitProbeRow> jack_limit_probe(const Partition& lambda, const Rational& theta,
                                            std::span<const Rational> x, std::span<const long> ks) {
  const std::size_t n = lambda.size();
  detail::require_same_length(x.size(), n, "jack_limit_probe");
  if (theta <= 0) throw ParameterError("jack_limit_probe needs theta > 0");
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] <= 0) throw DomainError("jack_limit_probe needs positive coordinates");
    if (i > 0 && x[i - 1] <= x[i]) throw DomainError("jack_limit_probe needs strictly decreasing coordinates");
  }
  const Rational a = x[n - 1] / 2;
  const long double jack = to_long_double(omega_jack_eval(lambda, JackParam::finite(theta), x));
  const long double th = to_long_double(theta);

  std::vector<LimitProbeRow> rows;
  for (const long k : ks) {
    if (k <= 0) throw DomainError("probe indices must be positive");
    LimitProbeRow row;
    row.k = k;
    // q and t are rounded to doubles and then handled exactly.
    const Rational q = from_double(std::exp(-1.0 / static_cast<double>(k)));
    const Rational t = from_double(std::exp(-static_cast<double>(th) / static_cast<double>(k)));
    const MacdonaldParams params = MacdonaldParams::make(n, q, t, a);
    const SymPoly p = macdonald_expand(lambda, params);
    std::vector<long double> principal(n), point(n);
    const long double ql = to_long_double(q), tl = to_long_double(t), al = to_long_double(a);
    for (std::size_t j = 0; j < n; ++j) {
      const long mu = guarded_floor(k, x[j], a);
      row.label.push_back(static_cast<int>(mu));
      principal[j] = std::pow(tl, static_cast<long double>(n - 1 - j));
      // Same orientation as lattice_point: x^(k) = a q^{-mu(k)} t^{-delta}.
      point[j] = al * std::pow(ql, -static_cast<long double>(mu)) / principal[j];
      row.point_error = std::max(row.point_error, std::fabs(point[j] - to_long_double(x[j])));
    }
    row.point = point;
    row.macdonald = poly_eval(p, std::span<const long double>(point)) /
                    poly_eval(p, std::span<const long double>(principal));
    row.jack = jack;
    row.gap = std::fabs(row.macdonald - jack);
    row.relative_gap = jack != 0 ? row.gap / std::fabs(jack) : row.gap;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace symlab
