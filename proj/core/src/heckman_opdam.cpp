#include "symlab/heckman_opdam.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "symlab/errors.hpp"
#include "symlab/jack.hpp"
#include "symlab/quadrature.hpp"

namespace symlab {

namespace {

struct Node {
  double nu;
  double w;
};

// |e^a - e^b| for a >= b, without cancellation.
double exp_gap(double a, double b) { return std::exp(b) * std::expm1(a - b); }

// e^{base} expm1(d) / d, the smooth part of |e^{base + d} - e^{base}| / d.
double smooth_gap(double base, double d) {
  return d == 0 ? std::exp(base) : std::exp(base) * std::expm1(d) / d;
}

// 1-D rule on [lo, hi] that absorbs |e^hi - e^nu|^{k-1} |e^nu - e^lo|^{k-1}.
std::vector<Node> interval_rule(double lo, double hi, double k, int n_nodes, SingularityRule rule, bool& warn) {
  std::vector<Node> out;
  const double h = hi - lo;
  if (k < 1 && rule == SingularityRule::EndpointSubstitution) {
    // nu = lo + h u^{1/k} on the left half and nu = hi - h u^{1/k} on the
    // right half; the Jacobian cancels the power singularity exactly.
    const auto& g = quad::gauss_legendre(std::max(2, (n_nodes + 1) / 2));
    const double u_max = std::pow(0.5, k);
    const double scale = std::pow(h, k) / k * u_max / 2;
    out.reserve(2 * g.nodes.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      const double u = u_max * (g.nodes[i] + 1) / 2;
      const double d = h * std::pow(u, 1 / k);
      const double nl = lo + d;
      const double wl = std::pow(smooth_gap(lo, d), k - 1) * std::pow(exp_gap(hi, nl), k - 1);
      out.push_back({nl, g.weights[i] * scale * wl});
      const double nr = hi - d;
      const double wr = std::pow(smooth_gap(nr, d), k - 1) * std::pow(exp_gap(nr, lo), k - 1);
      out.push_back({nr, g.weights[i] * scale * wr});
    }
    return out;
  }
  if (k < 1) warn = true;
  const auto& g = quad::gauss_legendre(n_nodes);
  out.reserve(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const double nu = lo + h * (g.nodes[i] + 1) / 2;
    double w = g.weights[i] * h / 2;
    if (k != 1) w *= std::pow(exp_gap(hi, nu) * exp_gap(nu, lo), k - 1);
    out.push_back({nu, w});
  }
  return out;
}

double closed_form_k0(std::span<const double> s, std::span<const double> x) {
  std::vector<std::size_t> perm(x.size());
  std::iota(perm.begin(), perm.end(), 0);
  double total = 0;
  long count = 0;
  do {
    double e = 0;
    for (std::size_t i = 0; i < s.size(); ++i) e += s[i] * x[perm[i]];
    total += std::exp(e);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / static_cast<double>(count);
}

// Recursive interlacing integral; x sorted decreasing.
double eval_rec(double k, const std::vector<double>& s, const std::vector<double>& x, int n_nodes,
                SingularityRule rule, bool& warn) {
  const std::size_t n = x.size();
  if (n == 1) return std::exp(s[0] * x[0]);
  const double s_sum = std::accumulate(s.begin(), s.end(), 0.0);
  const double x_mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  const double factor = std::exp(s_sum * x_mean);
  if (x.front() == x.back()) return factor;

  std::vector<double> xc(n);
  for (std::size_t i = 0; i < n; ++i) xc[i] = x[i] - x_mean;
  // F is unchanged by s -> s + c 1 once x sums to zero; shifting so that
  // s_n = 0 puts the recursion's |s| in its translation-invariant form.
  std::vector<double> inner_s(n - 1);
  double inner_sum = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    inner_s[i] = s[i] - s[n - 1];
    inner_sum += inner_s[i];
  }
  const double nk = static_cast<double>(n) * k;
  const double c = 1 - nk / 2 + inner_sum / static_cast<double>(n - 1);

  double log_v = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) log_v += xc[j] + std::log(std::expm1(xc[i] - xc[j]));
  }
  const double log_pre = std::lgamma(nk) - static_cast<double>(n) * std::lgamma(k) - (2 * k - 1) * log_v;

  std::vector<std::vector<Node>> rules(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) rules[j] = interval_rule(xc[j + 1], xc[j], k, n_nodes, rule, warn);

  std::vector<double> nu(n - 1), centered(n - 1);
  double total = 0;
  std::function<void(std::size_t, double)> walk = [&](std::size_t dim, double weight) {
    if (dim + 1 < n) {
      for (const auto& node : rules[dim]) {
        nu[dim] = node.nu;
        walk(dim + 1, weight * node.w);
      }
      return;
    }
    double g = weight;
    double nu_sum = 0;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      nu_sum += nu[j];
      for (std::size_t i = 0; i < n; ++i) {
        if (i == j || i == j + 1 || k == 1) continue;
        g *= std::pow(i < j ? exp_gap(xc[i], nu[j]) : exp_gap(nu[j], xc[i]), k - 1);
      }
      for (std::size_t i = j + 1; i + 1 < n; ++i) g *= exp_gap(nu[j], nu[i]);
    }
    const double nu_mean = nu_sum / static_cast<double>(n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) centered[j] = nu[j] - nu_mean;
    std::vector<double> inner_x = centered;
    g *= std::exp(nu_sum * c) * eval_rec(k, inner_s, inner_x, n_nodes, rule, warn);
    total += g;
  };
  walk(0, 1.0);
  return factor * std::exp(log_pre) * total;
}

}  // namespace

HOParams HOParams::make(std::size_t n, double k) {
  if (n == 0) throw DimensionError("Heckman-Opdam parameters need n >= 1");
  if (!(k >= 0) || !std::isfinite(k)) throw ParameterError("multiplicity k must be a finite value >= 0");
  return HOParams{n, k};
}

std::vector<double> HOParams::rho() const {
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = (static_cast<double>(n) - 1 - 2 * static_cast<double>(i)) / 2;
  return r;
}

SingularityRule parse_singularity_rule(std::string_view name) {
  if (name == "plain-gauss") return SingularityRule::PlainGauss;
  if (name == "endpoint-substitution") return SingularityRule::EndpointSubstitution;
  throw DomainError("unknown singularity rule '" + std::string(name) + "'");
}

std::string to_string(SingularityRule rule) {
  return rule == SingularityRule::PlainGauss ? "plain-gauss" : "endpoint-substitution";
}

void QuadratureConfig::validate() const {
  if (nodes_per_dimension < 4) throw ParameterError("nodes_per_dimension must be >= 4");
  if (!(min_gap > 0)) throw ParameterError("min_gap must be positive");
}

double ho_closed_forms(const HOParams& params, std::span<const double> s, std::span<const double> x) {
  detail::require_same_length(s.size(), params.n, "ho_closed_forms");
  detail::require_same_length(x.size(), params.n, "ho_closed_forms");
  if (params.n == 1) return std::exp(s[0] * x[0]);
  if (params.k != 0) throw DomainError("closed form needs k = 0 or n = 1");
  return closed_form_k0(s, x);
}

HOResult ho_eval(const HOParams& params, std::span<const double> s, std::span<const double> x,
                 const QuadratureConfig& cfg) {
  cfg.validate();
  detail::require_same_length(s.size(), params.n, "ho_eval");
  detail::require_same_length(x.size(), params.n, "ho_eval");
  if (params.k < 0) throw ParameterError("multiplicity k must be >= 0");
  HOResult r;
  if (params.k == 0 || params.n == 1) {
    r.value = ho_closed_forms(params, s, x);
    return r;
  }
  std::vector<double> xs(x.begin(), x.end());
  std::sort(xs.begin(), xs.end(), std::greater<>());
  if (xs.front() != xs.back()) {
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      if (xs[i] - xs[i + 1] < cfg.min_gap) {
        throw TieError("coordinates " + std::to_string(xs[i]) + " and " + std::to_string(xs[i + 1]) +
                       " are closer than min_gap; use perturbation to split ties");
      }
    }
  }
  const std::vector<double> sv(s.begin(), s.end());
  const int n1 = cfg.nodes_per_dimension;
  const int n2 = n1 - n1 / 4;
  bool warn = false;
  r.value = eval_rec(params.k, sv, xs, n1, cfg.singularity_rule, warn);
  const double coarse = eval_rec(params.k, sv, xs, n2, cfg.singularity_rule, warn);
  r.error_estimate = r.value != 0 ? std::fabs(r.value - coarse) / std::fabs(r.value) : std::fabs(coarse);
  r.singularity_warning = warn;
  return r;
}

JackConsistency ho_jack_consistency(const Partition& lambda, const Rational& k, std::span<const double> x,
                                    const QuadratureConfig& cfg) {
  const std::size_t n = lambda.size();
  detail::require_same_length(x.size(), n, "ho_jack_consistency");
  const HOParams params = HOParams::make(n, to_double(k));
  const auto rho = params.rho();
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = lambda[i] + params.k * rho[i];

  JackConsistency out;
  out.detail = ho_eval(params, s, x, cfg);
  out.ho = out.detail.value;
  const SymPoly p = jack_expand(lambda, JackParam::finite(k));
  std::vector<long double> y(n), ones(n, 1.0L);
  for (std::size_t i = 0; i < n; ++i) y[i] = std::exp(static_cast<long double>(x[i]));
  out.jack = static_cast<double>(poly_eval(p, std::span<const long double>(y)) /
                                 poly_eval(p, std::span<const long double>(ones)));
  out.relative_error = std::fabs(out.ho - out.jack) / std::fabs(out.jack);
  return out;
}

double ho_direction_residual(const HOParams& params, std::span<const double> s, std::span<const double> x, double h,
                             const QuadratureConfig& cfg) {
  if (!(h > 0)) throw DomainError("step h must be positive");
  std::vector<double> up(x.begin(), x.end()), down(x.begin(), x.end());
  for (auto& v : up) v += h;
  for (auto& v : down) v -= h;
  const double f = ho_eval(params, s, x, cfg).value;
  const double fu = ho_eval(params, s, up, cfg).value;
  const double fd = ho_eval(params, s, down, cfg).value;
  const double s_sum = std::accumulate(s.begin(), s.end(), 0.0);
  return std::fabs((fu - fd) / (2 * h) - s_sum * f) / std::fabs(f);
}

Perturbed perturb_ties(std::span<const double> x, double min_gap) {
  Perturbed p;
  p.x.assign(x.begin(), x.end());
  std::sort(p.x.begin(), p.x.end(), std::greater<>());
  if (p.x.size() < 2 || p.x.front() == p.x.back()) return p;
  // Spreading a run can close a gap to its neighbours; repeat until stable.
  for (int pass = 0; pass < 64; ++pass) {
    bool changed = false;
    std::size_t i = 0;
    while (i + 1 < p.x.size()) {
      std::size_t j = i;
      while (j + 1 < p.x.size() && p.x[j] - p.x[j + 1] < min_gap) ++j;
      if (j > i) {
        const double mean = std::accumulate(p.x.begin() + i, p.x.begin() + j + 1, 0.0) / static_cast<double>(j - i + 1);
        const double half = static_cast<double>(j - i) / 2;
        for (std::size_t m = i; m <= j; ++m) p.x[m] = mean + (half - static_cast<double>(m - i)) * min_gap * 1.5;
        changed = true;
      }
      i = j + 1;
    }
    if (!changed) break;
    p.changed = true;
  }
  return p;
}

}  // namespace symlab
