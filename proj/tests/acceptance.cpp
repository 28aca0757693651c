// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "symlab/classical.hpp"
#include "symlab/heckman_opdam.hpp"
#include "symlab/jack.hpp"
#include "symlab/lab.hpp"
#include "symlab/macdonald.hpp"

using namespace symlab;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "FIRST FAILURE: " << what << "; ";
      pass = false;
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

SweepSpec sweep(std::size_t n, int max_weight, int samples, const Rational& lo, const Rational& hi,
                std::uint64_t seed) {
  SweepSpec s;
  s.n = n;
  s.max_weight = max_weight;
  s.sampler.samples = samples;
  s.sampler.lo = lo;
  s.sampler.hi = hi;
  s.seed = seed;
  return s;
}

// Ordered same-weight pairs (lambda, mu), lambda != mu, weights 1..max_weight.
std::vector<std::pair<Partition, Partition>> ordered_pairs(std::size_t n, int max_weight) {
  std::vector<std::pair<Partition, Partition>> out;
  for (int w = 1; w <= max_weight; ++w) {
    const auto ps = partitions_of(w, n);
    for (const auto& a : ps) {
      for (const auto& b : ps) {
        if (a != b) out.emplace_back(a, b);
      }
    }
  }
  return out;
}

RationalVector rational_point(std::uint64_t seed, std::uint64_t index, std::size_t n, const Rational& lo,
                              const Rational& hi) {
  RationalVector x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = sample_rational(seed, index * n + j, lo, hi);
  return x;
}

// Sweep plus a witness for every incomparable ordered pair.
void equivalence(Outcome& o, const Family& f, std::size_t n, int max_weight) {
  const auto r = check_schur_convexity(f, sweep(n, max_weight, 100, 0, 10, 1));
  o.require(r.passed(), f.name() + " sweep has " + std::to_string(r.violation_count) + " violations");
  std::size_t witnesses = 0;
  for (const auto& [lambda, mu] : ordered_pairs(n, max_weight)) {
    if (majorizes(lambda, mu)) continue;
    bool ok = false;
    try {
      ok = reverify(find_witness(lambda, mu, f));
    } catch (const Error&) {
    }
    o.require(ok, "no witness for " + lambda.to_string() + " vs " + mu.to_string());
    witnesses += ok;
  }
  o.detail << f.name() << ": " << r.comparisons << " comparisons, 0 violations required, " << witnesses
           << " witnesses; ";
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  equivalence(o, Family::muirhead(), 3, 6);
  const double s = seconds_since(t0);
  o.require(s <= 300, "runtime above 5 minutes");
  o.detail << s << " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto ps = Family::powersum();
  const auto r = check_schur_convexity(ps, sweep(3, 6, 100, 0, 10, 1));
  o.require(r.passed(), "power-sum Schur sweep violated");
  const auto l = check_log_convexity(ps, sweep(3, 6, 100, 0, 10, 2));
  o.require(l.passed(), "power-sum midpoint log-convexity violated");
  o.detail << r.comparisons << " Schur comparisons, " << l.comparisons << " midpoint comparisons";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const std::vector<JackParam> thetas{JackParam::finite(0), JackParam::finite(Rational(1, 3)),
                                      JackParam::finite(Rational(1, 2)), JackParam::finite(1),
                                      JackParam::finite(2), JackParam::finite(5), JackParam::infinity()};
  std::size_t comparisons = 0, coefficients = 0;
  for (const auto& theta : thetas) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto r = check_schur_convexity(Family::jack(theta), sweep(n, 6, 100, 0, 10, 3 + n));
      o.require(r.passed(), "jack theta=" + theta.to_string() + " n=" + std::to_string(n) + " violated");
      comparisons += r.comparisons;
      for (const auto& lambda : partitions_up_to(6, n)) {
        const SymPoly p = jack_expand(lambda, theta);
        o.require(p.coeff(lambda) == 1, "jack expansion not monic");
        for (const auto& [nu, c] : p.terms()) {
          ++coefficients;
          o.require(c >= 0 && majorizes(lambda, nu), "negative or non-triangular coefficient at theta=" +
                                                         theta.to_string() + " lambda=" + lambda.to_string());
        }
      }
    }
  }
  o.detail << comparisons << " comparisons, " << coefficients << " coefficients checked";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::pair<Rational, Rational> qts[] = {{Rational(1, 2), Rational(1, 3)},
                                               {Rational(2, 3), Rational(1, 2)},
                                               {Rational(1, 3), Rational(2, 3)},
                                               {Rational(9, 10), Rational(1, 2)}};
  std::size_t comparisons = 0;
  for (const auto& [q, t] : qts) {
    for (const Rational& a : {Rational(1), Rational(1, 2)}) {
      const auto f = Family::macdonald_lattice(q, t, a);
      for (std::size_t n = 1; n <= 3; ++n) {
        SweepSpec s;
        s.n = n;
        s.max_weight = 6;
        s.sampler.max_label = 4;
        const auto r = check_schur_convexity(f, s);
        const auto l = check_log_convexity(f, s);
        const std::string tag = "q=" + to_string(q) + " t=" + to_string(t) + " a=" + to_string(a) + " n=" +
                                std::to_string(n);
        o.require(r.passed(), "lattice Schur violated at " + tag);
        o.require(l.passed(), "lattice log-convexity violated at " + tag);
        comparisons += r.comparisons + l.comparisons;
      }
    }
  }
  const double s = seconds_since(t0);
  o.require(s <= 600, "runtime above 10 minutes");
  o.detail << comparisons << " lattice comparisons, " << s << " s";
  return o;
}

const std::pair<Rational, Rational> kTwoPairs[] = {{Rational(1, 2), Rational(1, 3)}, {Rational(2, 3), Rational(1, 2)}};

Outcome criterion5() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& [q, t] : kTwoPairs) {
    for (std::size_t n = 2; n <= 3; ++n) {
      const auto params = MacdonaldParams::make(n, q, t);
      std::uint64_t idx = 0;
      for (const auto& lambda : partitions_up_to(4, n)) {
        for (int i = 0; i < 5; ++i) {
          const auto x = rational_point(5, idx++, n, Rational(-3), Rational(3));
          const auto r = binomial_check(lambda, params, x);
          o.require(r.residual == 0, "nonzero residual for lambda=" + lambda.to_string());
          ++checks;
        }
      }
    }
  }
  o.detail << checks << " exact residuals";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& [q, t] : kTwoPairs) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto params = MacdonaldParams::make(n, q, t);
      std::uint64_t idx = 0;
      for (const auto& lambda : partitions_up_to(4, n)) {
        for (int i = 0; i < 3; ++i) {
          const auto x = rational_point(6, idx++, n, Rational(-3), Rational(3));
          o.require(inversion_check(lambda, params, x).equal, "inversion fails for lambda=" + lambda.to_string());
          ++checks;
        }
      }
    }
  }
  o.detail << checks << " exact identities";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const std::vector<long> ks{10, 1000};
  for (const Rational& theta : {Rational(1, 2), Rational(1), Rational(2)}) {
    const auto rows = jack_limit_probe(Partition({2, 1}), theta, RationalVector{4, 1}, ks);
    const std::string tag = "theta=" + to_string(theta);
    o.require(rows[1].gap < rows[0].gap, "gap not shrinking at " + tag);
    o.require(rows[1].relative_gap < 1e-2, "relative gap at k=1000 above 1e-2 at " + tag);
    o.detail << tag << ": " << static_cast<double>(rows[0].relative_gap) << " -> "
             << static_cast<double>(rows[1].relative_gap) << "; ";
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t comparisons = 0;
  for (const auto& theta : {JackParam::finite(0), JackParam::finite(1), JackParam::infinity()}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto r = check_weak_majorization(theta, sweep(n, 5, 100, 1, 10, 8 + n));
      o.require(r.passed(), "weak majorization violated at theta=" + theta.to_string());
      comparisons += r.comparisons;
    }
    const RationalVector half{Rational(1, 2), Rational(1, 2)};
    const Rational lhs = omega_jack_eval(Partition({1, 0}), theta, half);
    const Rational rhs = omega_jack_eval(Partition({0, 0}), theta, half);
    o.require(lhs == Rational(1, 2) && rhs == 1 && lhs < rhs, "necessity example wrong");
  }
  o.detail << comparisons << " comparisons; (1,0) vs (0,0) at (1/2,1/2): 1/2 < 1";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const double xs[2][2] = {{std::log(4.0), 0}, {1, -1}};
  double worst_slow = 0, worst_k1 = 0, worst_half = 0;
  for (const Rational& k : {Rational(1, 2), Rational(1), Rational(2)}) {
    for (const Partition& lambda : {Partition({1, 0}), Partition({2, 0}), Partition({2, 1})}) {
      for (const auto& x : xs) {
        QuadratureConfig cfg;
        cfg.nodes_per_dimension = 64;
        cfg.singularity_rule = SingularityRule::EndpointSubstitution;
        const auto t0 = Clock::now();
        const auto jc = ho_jack_consistency(lambda, k, x, cfg);
        const double s = seconds_since(t0);
        worst_slow = std::max(worst_slow, s);
        const double tol = k >= 1 ? 1e-6 : 1e-3;
        (k >= 1 ? worst_k1 : worst_half) = std::max(k >= 1 ? worst_k1 : worst_half, jc.relative_error);
        o.require(jc.relative_error <= tol, "k=" + to_string(k) + " lambda=" + lambda.to_string() +
                                                " relative error " + std::to_string(jc.relative_error));
        o.require(s <= 30, "evaluation above 30 s");
      }
    }
  }
  QuadratureConfig cfg;
  cfg.nodes_per_dimension = 48;
  const double x3[] = {1, 0.2, -0.7};
  const auto t0 = Clock::now();
  const auto jc = ho_jack_consistency(Partition({1, 0, 0}), Rational(1), x3, cfg);
  worst_slow = std::max(worst_slow, seconds_since(t0));
  o.require(jc.relative_error <= 1e-3, "n=3 relative error " + std::to_string(jc.relative_error));
  o.require(seconds_since(t0) <= 30, "n=3 evaluation above 30 s");
  o.detail << "max rel err k>=1 " << worst_k1 << ", k=1/2 " << worst_half << ", n=3 " << jc.relative_error
           << ", slowest " << worst_slow << " s";
  return o;
}

Outcome criterion10() {
  Outcome o;
  QuadratureConfig cfg;
  cfg.nodes_per_dimension = 32;
  const std::vector<double> s2{1.3, -0.4}, s3{1.1, -0.6, 0.4};
  const std::vector<double> z2(2, 0), z3(3, 0);
  double worst_norm = 0, worst_sym = 0, worst_res = 0, worst_k0 = 0;
  for (double k : {0.0, 0.5, 1.0, 2.0}) {
    worst_norm = std::max(worst_norm, std::fabs(ho_eval(HOParams::make(2, k), s2, z2, cfg).value - 1));
    worst_norm = std::max(worst_norm, std::fabs(ho_eval(HOParams::make(3, k), s3, z3, cfg).value - 1));
  }
  o.require(worst_norm <= 1e-8, "normalization at x=0");

  const std::vector<double> x3{0.9, -0.3, 0.1};
  for (double k : {1.0, 2.0}) {
    const auto p = HOParams::make(3, k);
    const double base = ho_eval(p, s3, x3, cfg).value;
    std::vector<double> sp = s3;
    std::sort(sp.begin(), sp.end());
    do {
      worst_sym = std::max(worst_sym, std::fabs(ho_eval(p, sp, x3, cfg).value - base) / base);
    } while (std::next_permutation(sp.begin(), sp.end()));
  }
  o.require(worst_sym <= 1e-6, "s-permutation symmetry");

  QuadratureConfig fine;
  fine.nodes_per_dimension = 64;
  const std::vector<double> x2{0.4, -0.9};
  for (double k : {0.0, 1.0, 2.0}) {
    worst_res = std::max(worst_res, ho_direction_residual(HOParams::make(2, k), s2, x2, 1e-3, fine));
  }
  worst_res = std::max(worst_res, ho_direction_residual(HOParams::make(3, 1), s3, x3, 1e-3, cfg));
  o.require(worst_res <= 1e-4, "1-direction residual");

  // k = 0: explicit average over S_n versus the evaluator entry point.
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto& s = n == 2 ? s2 : s3;
    const auto& x = n == 2 ? x2 : x3;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    double sum = 0, count = 0;
    do {
      double e = 0;
      for (std::size_t i = 0; i < n; ++i) e += s[i] * x[perm[i]];
      sum += std::exp(e);
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    const auto p = HOParams::make(n, 0);
    worst_k0 = std::max(worst_k0, std::fabs(ho_closed_forms(p, s, x) - sum / count));
    worst_k0 = std::max(worst_k0, std::fabs(ho_eval(p, s, x, cfg).value - ho_closed_forms(p, s, x)));
  }
  o.require(worst_k0 <= 1e-10, "k=0 closed form");

  std::size_t comparisons = 0, near = 0;
  for (double k : {0.0, 1.0, 2.0}) {
    for (std::size_t n = 2; n <= 3; ++n) {
      const auto r = ho_spectral_sweep(HOParams::make(n, k), 50, 100 + n, cfg);
      o.require(r.passed() && r.skipped == 0, "spectral sweep k=" + std::to_string(k) + " n=" + std::to_string(n));
      comparisons += r.comparisons;
      near += r.near_misses.size();
    }
  }
  o.detail << "norm " << worst_norm << ", symmetry " << worst_sym << ", residual " << worst_res << ", k=0 "
           << worst_k0 << ", spectral comparisons " << comparisons << " (near misses within tolerance " << near
           << ")";
  return o;
}

Outcome criterion11() {
  Outcome o;
  const std::pair<Rational, Rational> qts[] = {
      {Rational(1, 2), Rational(1, 3)}, {Rational(9, 10), Rational(1, 100)}, {Rational(1, 100), Rational(9, 10)}};
  std::size_t found = 0, runs = 0;
  std::ostringstream outcomes;
  for (const auto& [q, t] : qts) {
    for (std::size_t n = 2; n <= 3; ++n) {
      HuntSpec spec;
      spec.q = q;
      spec.t = t;
      spec.n = n;
      spec.max_weight = 6;
      spec.budget = 100000;
      spec.seed = 11;
      const auto r = hunt_violation(spec);
      ++runs;
      if (!r.violations.empty()) {
        ++found;
        Witness w = r.violations.front();
        w.family = "macdonald-lattice";
        o.require(reverify(w) && r.notes.at("reverified") == "true", "hunter witness failed to re-verify");
        o.require(majorizes(w.lambda, w.mu) && w.lambda != w.mu, "hunter witness pair not majorized");
        outcomes << " [q=" << to_string(q) << " t=" << to_string(t) << " n=" << n << ": " << w.lambda.to_string()
                 << " vs " << w.mu.to_string() << " at (" << to_string(std::span<const Rational>(w.x))
                 << "), margin " << to_string(w.margin()) << "]";
      } else {
        outcomes << " [q=" << to_string(q) << " t=" << to_string(t) << " n=" << n << ": none found after "
                 << r.notes.at("probes") << " probes]";
      }
    }
  }
  o.detail << "DISCOVERY: " << found << "/" << runs << " runs found an exact off-lattice violation;"
           << outcomes.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Muirhead equivalence", criterion1},
      {"power-sum Schur-convexity and log-convexity", criterion2},
      {"Jack Schur-convexity and coefficient positivity", criterion3},
      {"Macdonald lattice Schur- and log-convexity", criterion4},
      {"binomial formula residual", criterion5},
      {"parameter inversion identity", criterion6},
      {"Macdonald to Jack limit probe", criterion7},
      {"weak majorization", criterion8},
      {"Heckman-Opdam Jack consistency", criterion9},
      {"Heckman-Opdam structure", criterion10},
      {"off-lattice hunter soundness", criterion11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failures += !o.pass;
    std::printf("criterion %2zu: %s  %s  (%s) [%.1f s]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.str().c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures ? 1 : 0;
}
