#include "symlab/lab.hpp"

#include <chrono>
#include <functional>
#include <cmath>
#include <nlohmann/json.hpp>
#include <sstream>

#include "symlab/classical.hpp"
#include "symlab/errors.hpp"

namespace symlab {

namespace {

using Clock = std::chrono::steady_clock;
using Json = nlohmann::ordered_json;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string join(std::span<const double> v) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// Evaluates Omega_lambda for one family at many points, keeping expansions
// and normalizers.
class Evaluator {
 public:
  Evaluator(const Family& f, std::size_t n) : f_(f), n_(n) {
    if (f.kind == FamilyKind::MacdonaldLattice) mac_ = f.macdonald_params(n);
  }

  Rational value(const Partition& lambda, PointEvaluator& ev) {
    switch (f_.kind) {
      case FamilyKind::Muirhead:
        return ev.monomial(lambda) / Rational(orbit_size(lambda));
      case FamilyKind::PowerSum:
        return powersum_eval(lambda, ev.point());
      case FamilyKind::Jack:
      case FamilyKind::MacdonaldLattice: {
        const auto& [p, norm] = entry(lambda);
        return ev(p) / norm;
      }
      case FamilyKind::HeckmanOpdam:
        break;
    }
    throw DomainError("exact evaluation is not available for " + f_.name());
  }

 private:
  const std::pair<SymPoly, Rational>& entry(const Partition& lambda) {
    auto it = polys_.find(lambda);
    if (it != polys_.end()) return it->second;
    SymPoly p;
    Rational norm;
    if (f_.kind == FamilyKind::Jack) {
      p = jack_expand(lambda, f_.theta);
      norm = poly_eval(p, RationalVector(n_, Rational(1)));
    } else {
      p = macdonald_expand(lambda, *mac_);
      norm = poly_eval(p, mac_->principal());
    }
    return polys_.emplace(lambda, std::make_pair(std::move(p), std::move(norm))).first->second;
  }

  Family f_;
  std::size_t n_;
  std::optional<MacdonaldParams> mac_;
  std::map<Partition, std::pair<SymPoly, Rational>> polys_;
};

std::vector<std::vector<int>> decreasing_labels(std::size_t n, int max_entry) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int bound) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int v = bound; v >= 0; --v) {
      cur[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, max_entry);
  return out;
}

std::vector<RationalVector> sample_points(const Family& f, const SweepSpec& spec) {
  std::vector<RationalVector> pts;
  if (f.kind == FamilyKind::MacdonaldLattice) {
    const auto params = f.macdonald_params(spec.n);
    for (const auto& label : decreasing_labels(spec.n, spec.sampler.max_label)) {
      pts.push_back(lattice_point(label, params).coords);
    }
    return pts;
  }
  if (f.exact() && spec.sampler.lo < 0) throw DomainError("sampler lower bound must be >= 0 for " + f.name());
  if (spec.sampler.lo > spec.sampler.hi) throw DomainError("sampler needs lo <= hi");
  for (int p = 0; p < spec.sampler.samples; ++p) {
    RationalVector x(spec.n);
    for (std::size_t j = 0; j < spec.n; ++j) {
      x[j] = sample_rational(spec.seed, static_cast<std::uint64_t>(p) * spec.n + j, spec.sampler.lo, spec.sampler.hi);
    }
    pts.push_back(std::move(x));
  }
  return pts;
}

InequalityReport base_report(const std::string& command, const Family& f, const SweepSpec& spec) {
  InequalityReport r;
  r.command = command;
  r.family = f.name();
  r.params = f.params();
  r.n = spec.n;
  r.max_weight = spec.max_weight;
  r.seed = spec.seed;
  return r;
}

void record(InequalityReport& r, Witness w) {
  ++r.violation_count;
  if (r.violations.size() < InequalityReport::kMaxStored) r.violations.push_back(std::move(w));
}

Witness make_witness(const Family& f, const Partition& lambda, const Partition& mu, const RationalVector& x,
                     const Rational& lhs, const Rational& rhs, std::string construction) {
  Witness w;
  w.family = f.name();
  w.params = f.params();
  w.lambda = lambda;
  w.mu = mu;
  w.x = x;
  w.lhs = lhs;
  w.rhs = rhs;
  w.construction = std::move(construction);
  return w;
}

std::vector<double> to_doubles(std::span<const Rational> x) {
  std::vector<double> out;
  for (const auto& v : x) out.push_back(to_double(v));
  return out;
}

std::vector<double> to_doubles(const Partition& p) {
  return std::vector<double>(p.vec().begin(), p.vec().end());
}

// Exact sweep over pairs and points. `mode` 0 compares lambda with mu,
// 1 compares Omega_lambda Omega_mu with Omega_mid^2.
InequalityReport exact_sweep(const std::string& command, const Family& f, const SweepSpec& spec,
                             const std::vector<std::pair<Partition, Partition>>& pairs, bool log_convex) {
  const auto start = Clock::now();
  InequalityReport r = base_report(command, f, spec);
  const auto points = sample_points(f, spec);
  r.pairs_checked = pairs.size();
  r.samples = points.size();
  Evaluator eval(f, spec.n);
  for (const auto& x : points) {
    PointEvaluator ev(x);
    std::map<Partition, Rational> memo;
    auto value = [&](const Partition& p) -> const Rational& {
      auto it = memo.find(p);
      if (it == memo.end()) it = memo.emplace(p, eval.value(p, ev)).first;
      return it->second;
    };
    for (const auto& [lambda, mu] : pairs) {
      Rational lhs, rhs;
      std::string construction;
      if (log_convex) {
        Partition mid;
        if (!midpoint(lambda, mu, mid)) throw std::logic_error("pair has no integral midpoint");
        lhs = value(lambda) * value(mu);
        rhs = value(mid) * value(mid);
        construction = "midpoint " + mid.to_string();
      } else {
        lhs = value(lambda);
        rhs = value(mu);
      }
      ++r.comparisons;
      if (lhs < rhs) record(r, make_witness(f, lambda, mu, x, lhs, rhs, construction));
    }
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

double tolerance(std::initializer_list<double> errors) {
  double s = 0;
  for (double e : errors) s += e;
  return 10 * s + 1e-12;
}

Witness ho_witness(const Family& f, std::vector<double> x, double lhs, double rhs, std::vector<double> sl,
                   std::vector<double> sr, std::string construction) {
  Witness w;
  w.family = f.name();
  w.params = f.params();
  w.exact = false;
  w.x_real = std::move(x);
  w.lhs_real = lhs;
  w.rhs_real = rhs;
  w.s_lhs = std::move(sl);
  w.s_rhs = std::move(sr);
  w.construction = std::move(construction);
  return w;
}

// Heckman-Opdam sweep over partition pairs used as spectral vectors.
InequalityReport ho_sweep(const std::string& command, const Family& f, const SweepSpec& spec,
                          const std::vector<std::pair<Partition, Partition>>& pairs, bool log_convex) {
  const auto start = Clock::now();
  InequalityReport r = base_report(command, f, spec);
  const auto points = sample_points(f, spec);
  r.pairs_checked = pairs.size();
  r.samples = points.size();
  const HOParams params = HOParams::make(spec.n, f.k);
  for (const auto& xr : points) {
    const auto x = to_doubles(xr);
    std::map<Partition, HOResult> memo;
    auto value = [&](const Partition& p) -> const HOResult& {
      auto it = memo.find(p);
      if (it == memo.end()) it = memo.emplace(p, ho_eval(params, to_doubles(p), x, f.quad)).first;
      return it->second;
    };
    for (const auto& [lambda, mu] : pairs) {
      try {
        double lhs, rhs, eps;
        std::vector<double> sr;
        if (log_convex) {
          Partition mid;
          if (!midpoint(lambda, mu, mid)) throw std::logic_error("pair has no integral midpoint");
          const auto &a = value(lambda), &b = value(mu), &m = value(mid);
          lhs = a.value * b.value;
          rhs = m.value * m.value;
          eps = tolerance({a.error_estimate, b.error_estimate, 2 * m.error_estimate});
          sr = to_doubles(mid);
        } else {
          const auto &a = value(lambda), &b = value(mu);
          lhs = a.value;
          rhs = b.value;
          eps = tolerance({a.error_estimate, b.error_estimate});
          sr = to_doubles(mu);
        }
        ++r.comparisons;
        if (lhs < rhs * (1 - eps)) {
          auto w = ho_witness(f, x, lhs, rhs, to_doubles(lambda), sr, "");
          w.lambda = lambda;
          w.mu = mu;
          record(r, std::move(w));
        } else if (lhs < rhs) {
          auto w = ho_witness(f, x, lhs, rhs, to_doubles(lambda), sr, "within quadrature tolerance");
          w.lambda = lambda;
          w.mu = mu;
          if (r.near_misses.size() < InequalityReport::kMaxStored) r.near_misses.push_back(std::move(w));
        }
      } catch (const TieError&) {
        ++r.skipped;
      }
    }
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

std::vector<std::pair<Partition, Partition>> pairs_for(const SweepSpec& spec, PairMode mode) {
  if (!spec.pairs.empty()) return spec.pairs;
  return enumerate_pairs(spec.n, spec.max_weight, mode);
}

}  // namespace

Family Family::muirhead() { return Family{}; }

Family Family::powersum() {
  Family f;
  f.kind = FamilyKind::PowerSum;
  return f;
}

Family Family::jack(const JackParam& theta) {
  Family f;
  f.kind = FamilyKind::Jack;
  f.theta = theta;
  return f;
}

Family Family::macdonald_lattice(const Rational& q, const Rational& t, const Rational& a) {
  MacdonaldParams::make(1, q, t, a);
  Family f;
  f.kind = FamilyKind::MacdonaldLattice;
  f.q = q;
  f.t = t;
  f.a = a;
  return f;
}

Family Family::heckman_opdam(double k, const QuadratureConfig& cfg) {
  HOParams::make(1, k);
  cfg.validate();
  Family f;
  f.kind = FamilyKind::HeckmanOpdam;
  f.k = k;
  f.quad = cfg;
  return f;
}

std::string Family::name() const {
  switch (kind) {
    case FamilyKind::Muirhead:
      return "muirhead";
    case FamilyKind::PowerSum:
      return "powersum";
    case FamilyKind::Jack:
      return "jack";
    case FamilyKind::MacdonaldLattice:
      return "macdonald-lattice";
    case FamilyKind::HeckmanOpdam:
      return "heckman-opdam";
  }
  return "unknown";
}

std::vector<std::pair<std::string, std::string>> Family::params() const {
  switch (kind) {
    case FamilyKind::Jack:
      return {{"theta", theta.to_string()}};
    case FamilyKind::MacdonaldLattice:
      return {{"q", to_string(q)}, {"t", to_string(t)}, {"a", to_string(a)}};
    case FamilyKind::HeckmanOpdam: {
      std::ostringstream os;
      os.precision(17);
      os << k;
      return {{"k", os.str()},
              {"nodes", std::to_string(quad.nodes_per_dimension)},
              {"singularity_rule", to_string(quad.singularity_rule)}};
    }
    default:
      return {};
  }
}

MacdonaldParams Family::macdonald_params(std::size_t n) const { return MacdonaldParams::make(n, q, t, a); }

std::uint64_t counter_random(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Rational sample_rational(std::uint64_t seed, std::uint64_t index, const Rational& lo, const Rational& hi) {
  constexpr std::uint64_t kDen = 1ull << 16;
  const std::uint64_t r = counter_random(seed, index) % (kDen + 1);
  Rational u(static_cast<unsigned long>(r), static_cast<unsigned long>(kDen));
  u.canonicalize();
  return lo + (hi - lo) * u;
}

Rational family_value(const Family& family, const Partition& lambda, std::span<const Rational> x) {
  switch (family.kind) {
    case FamilyKind::Muirhead:
      return muirhead_eval(lambda, x);
    case FamilyKind::PowerSum:
      return powersum_eval(lambda, x);
    case FamilyKind::Jack:
      return omega_jack_eval(lambda, family.theta, x);
    case FamilyKind::MacdonaldLattice:
      return omega_mac_eval(lambda, family.macdonald_params(lambda.size()), x);
    case FamilyKind::HeckmanOpdam:
      break;
  }
  throw DomainError("exact evaluation is not available for " + family.name());
}

InequalityReport check_schur_convexity(const Family& family, const SweepSpec& spec) {
  const auto pairs = pairs_for(spec, PairMode::SameWeightComparable);
  if (family.kind == FamilyKind::HeckmanOpdam) return ho_sweep("check schur", family, spec, pairs, false);
  return exact_sweep("check schur", family, spec, pairs, false);
}

InequalityReport check_log_convexity(const Family& family, const SweepSpec& spec) {
  const auto pairs = pairs_for(spec, PairMode::MidpointIntegral);
  if (family.kind == FamilyKind::HeckmanOpdam) return ho_sweep("check logconvex", family, spec, pairs, true);
  return exact_sweep("check logconvex", family, spec, pairs, true);
}

InequalityReport check_weak_majorization(const JackParam& theta, const SweepSpec& spec) {
  if (spec.sampler.lo < 1) throw DomainError("weak-majorization sampler must stay in [1, infinity)");
  if (spec.sampler.hi < spec.sampler.lo) throw DomainError("sampler upper bound below lower bound");
  return exact_sweep("check weak", Family::jack(theta), spec, pairs_for(spec, PairMode::WeakComparable), false);
}

InequalityReport ho_spectral_sweep(const HOParams& params, int triples, std::uint64_t seed,
                                   const QuadratureConfig& cfg) {
  if (params.n < 2) throw DimensionError("spectral sweeps need n >= 2");
  const auto start = Clock::now();
  const Family f = Family::heckman_opdam(params.k, cfg);
  InequalityReport r;
  r.command = "ho sweep";
  r.family = f.name();
  r.params = f.params();
  r.n = params.n;
  r.seed = seed;
  r.samples = static_cast<std::size_t>(triples);
  const std::size_t n = params.n;
  const Rational lo_s(-2), hi_s(2), lo_x(-1), hi_x(1);
  for (int i = 0; i < triples; ++i) {
    const std::uint64_t base = static_cast<std::uint64_t>(i) * 8 * n;
    std::vector<double> s(n), s2(n), x(n), mid(n);
    for (std::size_t j = 0; j < n; ++j) {
      s[j] = to_double(sample_rational(seed, base + j, lo_s, hi_s));
      s2[j] = to_double(sample_rational(seed, base + n + j, lo_s, hi_s));
      x[j] = to_double(sample_rational(seed, base + 2 * n + j, lo_x, hi_x));
      mid[j] = (s[j] + s2[j]) / 2;
    }
    // T-transform of s: averages two coordinates, so s majorizes it.
    const std::size_t a = counter_random(seed, base + 3 * n) % n;
    const std::size_t b = (a + 1 + counter_random(seed, base + 3 * n + 1) % (n - 1)) % n;
    const double alpha = to_double(sample_rational(seed, base + 3 * n + 2, Rational(0), Rational(1)));
    std::vector<double> st = s;
    st[a] = alpha * s[a] + (1 - alpha) * s[b];
    st[b] = alpha * s[b] + (1 - alpha) * s[a];
    try {
      const HOResult fs = ho_eval(params, s, x, cfg), fs2 = ho_eval(params, s2, x, cfg),
                     fm = ho_eval(params, mid, x, cfg), ft = ho_eval(params, st, x, cfg);
      struct Check {
        double lhs, rhs, eps;
        std::vector<double> sl, sr;
        const char* what;
      };
      const Check checks[] = {
          {fs.value * fs2.value, fm.value * fm.value,
           tolerance({fs.error_estimate, fs2.error_estimate, 2 * fm.error_estimate}), s, mid, "log-convexity"},
          {fs.value, ft.value, tolerance({fs.error_estimate, ft.error_estimate}), s, st, "schur-convexity"}};
      for (const auto& c : checks) {
        ++r.comparisons;
        if (c.lhs < c.rhs * (1 - c.eps)) {
          record(r, ho_witness(f, x, c.lhs, c.rhs, c.sl, c.sr, c.what));
        } else if (c.lhs < c.rhs && r.near_misses.size() < InequalityReport::kMaxStored) {
          r.near_misses.push_back(ho_witness(f, x, c.lhs, c.rhs, c.sl, c.sr, c.what));
        }
      }
    } catch (const TieError&) {
      ++r.skipped;
    }
  }
  r.pairs_checked = r.comparisons;
  r.elapsed_ms = ms_since(start);
  return r;
}

Witness find_witness(const Partition& lambda, const Partition& mu, const Family& family) {
  detail::require_same_length(lambda.size(), mu.size(), "find_witness");
  if (family.kind == FamilyKind::HeckmanOpdam) throw DomainError("find_witness does not support heckman-opdam");
  if (majorizes(lambda, mu)) {
    throw DomainError(lambda.to_string() + " majorizes " + mu.to_string() + "; no separating point exists");
  }
  const std::size_t n = lambda.size();
  std::vector<std::size_t> rs;
  int pl = 0, pm = 0;
  for (std::size_t r = 1; r <= n; ++r) {
    pl += lambda[r - 1];
    pm += mu[r - 1];
    if (pm > pl) {
      rs.push_back(r);
      break;
    }
  }
  for (std::size_t r = 1; r <= n; ++r) {
    if (rs.empty() || rs.front() != r) rs.push_back(r);
  }

  Evaluator eval(family, n);
  auto attempt = [&](const RationalVector& x, const std::string& construction) -> std::optional<Witness> {
    PointEvaluator ev(x);
    const Rational lhs = eval.value(lambda, ev);
    const Rational rhs = eval.value(mu, ev);
    if (rhs > lhs) return make_witness(family, lambda, mu, x, lhs, rhs, construction);
    return std::nullopt;
  };

  for (const std::size_t r : rs) {
    if (family.kind == FamilyKind::MacdonaldLattice) {
      const auto params = family.macdonald_params(n);
      // Exact lattice points grow like q^{-k}; the degree argument settles
      // the comparison long before this bound.
      for (long k = 1; k <= (1L << 12); k *= 2) {
        std::vector<int> label(n, 0);
        for (std::size_t i = 0; i < r; ++i) label[i] = static_cast<int>(k);
        auto w = attempt(lattice_point(label, params).coords,
                         "lattice r=" + std::to_string(r) + " k=" + std::to_string(k));
        if (w) return *w;
      }
    } else {
      for (int e = 0; e <= 60; ++e) {
        const Rational t = pow(Rational(2), e);
        RationalVector x(n, Rational(1));
        for (std::size_t i = 0; i < r; ++i) x[i] = t;
        auto w = attempt(x, "ray r=" + std::to_string(r) + " t=" + to_string(t));
        if (w) return *w;
      }
    }
  }
  throw DomainError("no separating point found for " + lambda.to_string() + " vs " + mu.to_string() +
                    " below the parameter ceiling");
}

bool reverify(const Witness& w) {
  if (!w.exact) return false;
  Family f;
  if (w.family == "muirhead") {
    f = Family::muirhead();
  } else if (w.family == "powersum") {
    f = Family::powersum();
  } else {
    std::map<std::string, std::string> p(w.params.begin(), w.params.end());
    if (w.family == "jack") {
      f = Family::jack(JackParam::parse(p.at("theta")));
    } else if (w.family == "macdonald-lattice" || w.family == "macdonald") {
      f = Family::macdonald_lattice(parse_rational(p.at("q")), parse_rational(p.at("t")), parse_rational(p.at("a")));
    } else {
      return false;
    }
  }
  Rational lhs, rhs;
  if (w.construction.rfind("midpoint ", 0) == 0) {
    Partition mid;
    if (!midpoint(w.lambda, w.mu, mid)) return false;
    lhs = family_value(f, w.lambda, w.x) * family_value(f, w.mu, w.x);
    const Rational m = family_value(f, mid, w.x);
    rhs = m * m;
  } else {
    lhs = family_value(f, w.lambda, w.x);
    rhs = family_value(f, w.mu, w.x);
  }
  return lhs == w.lhs && rhs == w.rhs && lhs < rhs;
}

InequalityReport hunt_violation(const HuntSpec& spec) {
  const auto start = Clock::now();
  const MacdonaldParams params = MacdonaldParams::make(spec.n, spec.q, spec.t, 1);
  const Family f = Family::macdonald_lattice(spec.q, spec.t, 1);
  InequalityReport r;
  r.command = "hunt";
  r.family = "macdonald";
  r.params = {{"q", to_string(spec.q)}, {"t", to_string(spec.t)}, {"budget", std::to_string(spec.budget)},
              {"search", spec.lattice_only ? "lattice" : "off-lattice"}};
  r.n = spec.n;
  r.max_weight = spec.max_weight;
  r.seed = spec.seed;
  const auto pairs = enumerate_pairs(spec.n, spec.max_weight, PairMode::SameWeightComparable);
  r.pairs_checked = pairs.size();

  // Probe points: lattice labels when restricted to the lattice; otherwise
  // the all-ones point, then near-degenerate points 1 + j/m on a few
  // coordinates, then uniform rationals in [1/2, 2].
  const auto labels = decreasing_labels(spec.n, 4);
  auto point = [&](std::uint64_t i) -> std::optional<RationalVector> {
    if (spec.lattice_only) {
      if (i >= labels.size()) return std::nullopt;
      return lattice_point(labels[i], params).coords;
    }
    RationalVector x(spec.n, Rational(1));
    if (i == 0) return x;
    if (i <= 64) {
      const long m = 1L << ((i - 1) % 16);
      for (std::size_t j = 0; j < spec.n; ++j) {
        const long step = static_cast<long>((i - 1) / 16 + 1) * static_cast<long>(j);
        x[j] = 1 + make_rational(step, m);
      }
      return x;
    }
    for (std::size_t j = 0; j < spec.n; ++j) {
      x[j] = sample_rational(spec.seed, i * spec.n + j, Rational(1, 2), Rational(2));
    }
    return x;
  };

  Evaluator eval(f, spec.n);
  long probes = 0;
  std::optional<Witness> found;
  for (std::uint64_t i = 0; probes < spec.budget && !found && !pairs.empty(); ++i) {
    const auto x = point(i);
    if (!x) break;
    ++r.samples;
    PointEvaluator ev(*x);
    std::map<Partition, Rational> memo;
    auto value = [&](const Partition& p) -> const Rational& {
      auto it = memo.find(p);
      if (it == memo.end()) it = memo.emplace(p, eval.value(p, ev)).first;
      return it->second;
    };
    for (const auto& [lambda, mu] : pairs) {
      if (probes >= spec.budget) break;
      ++probes;
      const Rational& lhs = value(lambda);
      const Rational& rhs = value(mu);
      if (lhs < rhs) {
        found = make_witness(f, lambda, mu, *x, lhs, rhs, "off-lattice probe " + std::to_string(i));
        found->family = "macdonald";
        break;
      }
    }
  }
  r.comparisons = static_cast<std::size_t>(probes);
  r.notes["probes"] = std::to_string(probes);
  if (found) {
    Witness check = *found;
    check.family = "macdonald-lattice";
    const bool ok = reverify(check);
    r.notes["outcome"] = "violation found";
    r.notes["reverified"] = ok ? "true" : "false";
    record(r, std::move(*found));
  } else {
    r.notes["outcome"] = "none found within budget (inconclusive)";
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

namespace {

Json witness_json(const Witness& w) {
  Json j;
  j["lambda"] = w.exact || w.s_lhs.empty() ? w.lambda.to_string() : join(w.s_lhs);
  j["mu"] = w.exact || w.s_rhs.empty() ? w.mu.to_string() : join(w.s_rhs);
  if (w.exact) {
    Json xs = Json::array();
    for (const auto& v : w.x) xs.push_back(to_string(v));
    j["x"] = xs;
    j["lhs"] = to_string(w.lhs);
    j["rhs"] = to_string(w.rhs);
    j["margin"] = to_string(w.margin());
  } else {
    j["x"] = w.x_real;
    j["lhs"] = w.lhs_real;
    j["rhs"] = w.rhs_real;
    j["margin"] = w.rhs_real - w.lhs_real;
  }
  if (!w.construction.empty()) j["construction"] = w.construction;
  return j;
}

}  // namespace

std::string InequalityReport::to_json(bool include_elapsed) const {
  Json j;
  j["command"] = command;
  j["family"] = family;
  Json p = Json::object();
  for (const auto& [k, v] : params) p[k] = v;
  j["params"] = p;
  j["n"] = n;
  j["max_weight"] = max_weight;
  j["seed"] = seed;
  j["pairs_checked"] = pairs_checked;
  j["samples"] = samples;
  j["comparisons"] = comparisons;
  j["skipped"] = skipped;
  j["violation_count"] = violation_count;
  Json v = Json::array();
  for (const auto& w : violations) v.push_back(witness_json(w));
  j["violations"] = v;
  Json nm = Json::array();
  for (const auto& w : near_misses) nm.push_back(witness_json(w));
  j["near_misses"] = nm;
  if (!notes.empty()) {
    Json o = Json::object();
    for (const auto& [k, val] : notes) o[k] = val;
    j["notes"] = o;
  }
  if (include_elapsed) j["elapsed_ms"] = elapsed_ms;
  j["version"] = kVersion;
  return j.dump(2);
}

std::string InequalityReport::to_table() const {
  std::ostringstream os;
  os << command << "  family=" << family;
  for (const auto& [k, v] : params) os << " " << k << "=" << v;
  os << "  n=" << n << " max_weight=" << max_weight << " seed=" << seed << "\n";
  os << "pairs " << pairs_checked << ", samples " << samples << ", comparisons " << comparisons;
  if (skipped) os << ", skipped " << skipped;
  os << "\n";
  for (const auto& [k, v] : notes) os << k << ": " << v << "\n";
  os << "violations: " << violation_count << (passed() ? "  PASS" : "  FAIL") << "\n";
  for (const auto& w : violations) {
    os << "  " << witness_json(w).dump() << "\n";
  }
  if (!near_misses.empty()) os << "near misses: " << near_misses.size() << "\n";
  return os.str();
}

}  // namespace symlab
