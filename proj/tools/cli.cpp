#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "symlab/cache.hpp"
#include "symlab/classical.hpp"
#include "symlab/errors.hpp"
#include "symlab/heckman_opdam.hpp"
#include "symlab/jack.hpp"
#include "symlab/lab.hpp"
#include "symlab/macdonald.hpp"

namespace symlab::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Globals {
  std::uint64_t seed = 0;
  std::string out;
  std::string cache;
  bool quiet = false;
};

struct FamilyOpts {
  std::string family;
  std::string basis = "monomial";
  std::string theta = "1";
  std::string q = "1/2";
  std::string t = "1/3";
  std::string a = "1";
  double k = 1;
  int nodes = 32;
  std::string rule = "endpoint-substitution";
  double min_gap = 1e-9;
};

void add_family_opts(CLI::App* cmd, FamilyOpts& f) {
  cmd->add_option("--theta", f.theta, "Jack parameter (rational or inf)");
  cmd->add_option("--q", f.q, "Macdonald q in (0,1)");
  cmd->add_option("--t", f.t, "Macdonald t in (0,1)");
  cmd->add_option("--a", f.a, "lattice scale a > 0");
}

void add_quad_opts(CLI::App* cmd, FamilyOpts& f) {
  cmd->add_option("--k", f.k, "multiplicity k >= 0");
  cmd->add_option("--nodes", f.nodes, "Gauss-Legendre nodes per dimension (>= 4)");
  cmd->add_option("--rule", f.rule, "plain-gauss or endpoint-substitution");
  cmd->add_option("--min-gap", f.min_gap, "minimum coordinate gap");
}

QuadratureConfig quad_config(const FamilyOpts& f) {
  QuadratureConfig cfg;
  cfg.nodes_per_dimension = f.nodes;
  cfg.singularity_rule = parse_singularity_rule(f.rule);
  cfg.min_gap = f.min_gap;
  cfg.validate();
  return cfg;
}

Family make_family(const FamilyOpts& f) {
  if (f.family == "muirhead" || f.family == "monomial") return Family::muirhead();
  if (f.family == "powersum") return Family::powersum();
  if (f.family == "jack") return Family::jack(JackParam::parse(f.theta));
  if (f.family == "macdonald" || f.family == "macdonald-lattice") {
    return Family::macdonald_lattice(parse_rational(f.q), parse_rational(f.t), parse_rational(f.a));
  }
  if (f.family == "ho" || f.family == "heckman-opdam") return Family::heckman_opdam(f.k, quad_config(f));
  throw DomainError("unknown family '" + f.family + "'");
}

Partition parse_partition(const std::string& text, std::size_t n) {
  Partition p = Partition::parse(text);
  if (n == 0 || p.size() == n) return p;
  if (p.size() > n) throw DimensionError("partition " + text + " has more than n=" + std::to_string(n) + " parts");
  std::vector<int> parts = p.vec();
  parts.resize(n, 0);
  return Partition(parts);
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      if (item.find('/') != std::string::npos) {
        v = to_double(parse_rational(item));
        used = item.size();
      } else {
        v = std::stod(item, &used);
      }
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != item.size() || item.empty() || !std::isfinite(v)) throw DomainError("malformed number '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("empty vector");
  return out;
}

std::string format_real(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Output of expand / eval / majorize in either table or JSON form.
void emit(std::ostream& out, const Globals& g, const Json& j, const std::string& table) {
  if (g.out == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << table;
  }
}

void emit_report(std::ostream& out, const Globals& g, const InequalityReport& r, const Json& config) {
  if (g.out == "table") {
    out << r.to_table();
    return;
  }
  Json j = Json::parse(r.to_json());
  j["config"] = config;
  out << j.dump(2) << "\n";
}

Json config_json(const Globals& g, const FamilyOpts& f) {
  Json c;
  c["seed"] = g.seed;
  c["out"] = g.out.empty() ? "json" : g.out;
  c["cache"] = g.cache;
  c["family"] = f.family;
  c["theta"] = f.theta;
  c["q"] = f.q;
  c["t"] = f.t;
  c["a"] = f.a;
  c["k"] = f.k;
  c["nodes"] = f.nodes;
  c["rule"] = f.rule;
  c["min_gap"] = f.min_gap;
  return c;
}

SymPoly expand_for(const FamilyOpts& f, const Partition& lambda) {
  if (f.family == "classical") return expand_classical(parse_classical_family(f.basis), lambda);
  if (f.family == "jack") return jack_expand(lambda, JackParam::parse(f.theta));
  if (f.family == "macdonald") {
    return macdonald_expand(lambda, MacdonaldParams::make(lambda.size(), parse_rational(f.q), parse_rational(f.t)));
  }
  throw DomainError("expand supports --family classical|jack|macdonald, got '" + f.family + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact symmetric-function engine and inequality laboratory", "symlab"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "seed for every sampler");
  app.add_option("--out", g.out, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--cache", g.cache, "expansion cache file");
  app.add_flag("--quiet", g.quiet, "suppress warnings");

  FamilyOpts f;

  // majorize
  std::string maj_a, maj_b;
  std::string maj_mode = "majorize";
  auto* majorize = app.add_subcommand("majorize", "order relation between two vectors");
  majorize->add_option("a", maj_a)->required();
  majorize->add_option("b", maj_b)->required();
  majorize->add_option("--mode", maj_mode, "majorize, weak or contains")
      ->check(CLI::IsMember({"majorize", "weak", "contains"}));

  // expand / eval
  std::string lambda_text, x_text;
  std::size_t n = 0;
  bool normalized = false;
  auto* expand = app.add_subcommand("expand", "monomial expansion");
  expand->add_option("--family", f.family, "classical, jack or macdonald")->required();
  expand->add_option("--basis", f.basis, "classical basis: monomial, elementary or powersum");
  expand->add_option("--lambda", lambda_text)->required();
  expand->add_option("--n", n, "number of variables (pads lambda)");
  add_family_opts(expand, f);

  auto* eval = app.add_subcommand("eval", "exact evaluation");
  eval->add_option("--family", f.family, "classical, jack or macdonald")->required();
  eval->add_option("--basis", f.basis, "classical basis");
  eval->add_option("--lambda", lambda_text)->required();
  eval->add_option("--n", n);
  eval->add_option("--x", x_text)->required();
  eval->add_flag("--normalized", normalized, "print the normalized value Omega instead of P");
  add_family_opts(eval, f);

  // check
  std::string check_kind;
  int max_weight = 4;
  SamplerSpec sampler;
  std::string lo = "0", hi = "10";
  bool lo_set = false;
  auto* check = app.add_subcommand("check", "inequality sweep");
  check->add_option("kind", check_kind, "schur, logconvex, weak or muirhead")
      ->required()
      ->check(CLI::IsMember({"schur", "logconvex", "weak", "muirhead"}));
  check->add_option("--family", f.family, "muirhead, powersum, jack, macdonald or ho");
  check->add_option("--n", n)->required();
  check->add_option("--max-weight", max_weight);
  check->add_option("--samples", sampler.samples);
  check->add_option("--lo", lo)->each([&](const std::string&) { lo_set = true; });
  check->add_option("--hi", hi);
  check->add_option("--max-label", sampler.max_label, "lattice label bound for macdonald");
  add_family_opts(check, f);
  add_quad_opts(check, f);

  // witness
  std::string mu_text;
  auto* witness = app.add_subcommand("witness", "separating point for a non-majorized pair");
  witness->add_option("--family", f.family)->required();
  witness->add_option("--lambda", lambda_text)->required();
  witness->add_option("--mu", mu_text)->required();
  witness->add_option("--n", n);
  add_family_opts(witness, f);

  // hunt
  long budget = 100000;
  bool lattice_only = false;
  auto* hunt = app.add_subcommand("hunt", "off-lattice Macdonald violation search");
  hunt->add_option("--q", f.q);
  hunt->add_option("--t", f.t);
  hunt->add_option("--n", n)->required();
  hunt->add_option("--max-weight", max_weight);
  hunt->add_option("--budget", budget);
  hunt->add_flag("--lattice-only", lattice_only);

  // ho
  std::string s_text;
  double h = 1e-4, tol = 1e-6;
  bool perturb = false;
  auto* ho = app.add_subcommand("ho", "Heckman-Opdam hypergeometric function");
  ho->require_subcommand(1);
  auto* ho_eval_cmd = ho->add_subcommand("eval", "F_{k,s}(x)");
  auto* ho_verify = ho->add_subcommand("verify", "compare with the normalized Jack polynomial");
  auto* ho_residual = ho->add_subcommand("residual", "1-direction eigen-equation residual");
  for (auto* sub : {ho_eval_cmd, ho_verify, ho_residual}) {
    sub->add_option("--x", x_text)->required();
    sub->add_flag("--perturb", perturb, "split coordinate ties by min-gap");
    add_quad_opts(sub, f);
  }
  ho_eval_cmd->add_option("--s", s_text)->required();
  ho_residual->add_option("--s", s_text)->required();
  ho_residual->add_option("--step", h, "finite-difference step");
  ho_verify->add_option("--lambda", lambda_text)->required();
  ho_verify->add_option("--tol", tol, "relative error bound for exit status");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!g.cache.empty()) {
      std::ostringstream warn;
      default_cache().attach_file(g.cache, warn);
      if (!g.quiet) err << warn.str();
    }
    struct Detach {
      ~Detach() { default_cache().detach_file(); }
    } detach;

    if (majorize->parsed()) {
      bool result;
      if (maj_mode == "majorize") {
        const auto a = parse_rational_list(maj_a);
        const auto b = parse_rational_list(maj_b);
        result = majorizes(a, b);
      } else {
        const Partition a = Partition::parse(maj_a), b = Partition::parse(maj_b);
        result = maj_mode == "weak" ? weakly_majorizes(a, b) : contains(a, b);
      }
      Json j;
      j["command"] = "majorize";
      j["mode"] = maj_mode;
      j["a"] = maj_a;
      j["b"] = maj_b;
      j["result"] = result;
      emit(out, g, j, std::string(result ? "true" : "false") + "\n");
      return result ? 0 : 1;
    }

    if (expand->parsed()) {
      const Partition lambda = parse_partition(lambda_text, n);
      const SymPoly p = expand_for(f, lambda);
      Json j;
      j["command"] = "expand";
      j["family"] = f.family;
      j["lambda"] = lambda.to_string();
      j["n"] = lambda.size();
      Json terms = Json::object();
      std::string table;
      for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        terms[it->first.to_string()] = to_string(it->second);
        table += "m(" + it->first.to_string() + "):" + to_string(it->second) + "\n";
      }
      j["terms"] = terms;
      emit(out, g, j, table);
      return 0;
    }

    if (eval->parsed()) {
      const Partition lambda = parse_partition(lambda_text, n);
      const RationalVector x = parse_rational_list(x_text);
      detail::require_same_length(x.size(), lambda.size(), "eval");
      const SymPoly p = expand_for(f, lambda);
      Rational v = poly_eval(p, x);
      if (normalized) {
        RationalVector base(lambda.size(), Rational(1));
        if (f.family == "macdonald") {
          base = MacdonaldParams::make(lambda.size(), parse_rational(f.q), parse_rational(f.t)).principal();
        }
        const Rational d = poly_eval(p, base);
        if (d == 0) throw DomainError("normalizer vanishes for this family");
        v /= d;
      }
      Json j;
      j["command"] = "eval";
      j["family"] = f.family;
      j["lambda"] = lambda.to_string();
      j["x"] = x_text;
      j["normalized"] = normalized;
      j["value"] = to_string(v);
      emit(out, g, j, to_string(v) + "\n");
      return 0;
    }

    if (check->parsed()) {
      SweepSpec spec;
      spec.n = n;
      spec.max_weight = max_weight;
      spec.seed = g.seed;
      spec.sampler = sampler;
      if (check_kind == "weak" && !lo_set) lo = "1";
      spec.sampler.lo = parse_rational(lo);
      spec.sampler.hi = parse_rational(hi);
      if (check_kind == "muirhead") f.family = "muirhead";
      if (f.family.empty()) throw DomainError("check needs --family");
      InequalityReport r;
      if (check_kind == "weak") {
        if (f.family != "jack") throw DomainError("check weak supports --family jack only");
        r = check_weak_majorization(JackParam::parse(f.theta), spec);
      } else if (check_kind == "logconvex") {
        r = check_log_convexity(make_family(f), spec);
      } else {
        r = check_schur_convexity(make_family(f), spec);
      }
      Json config = config_json(g, f);
      config["kind"] = check_kind;
      config["n"] = n;
      config["max_weight"] = max_weight;
      config["samples"] = sampler.samples;
      config["lo"] = lo;
      config["hi"] = hi;
      config["max_label"] = sampler.max_label;
      emit_report(out, g, r, config);
      return r.passed() ? 0 : 1;
    }

    if (witness->parsed()) {
      const Partition lambda = parse_partition(lambda_text, n);
      const Partition mu = parse_partition(mu_text, lambda.size());
      const Family fam = make_family(f);
      const Witness w = find_witness(lambda, mu, fam);
      InequalityReport r;
      r.command = "witness";
      r.family = fam.name();
      r.params = fam.params();
      r.n = lambda.size();
      r.seed = g.seed;
      r.pairs_checked = 1;
      r.samples = 1;
      r.comparisons = 1;
      r.violation_count = 1;
      r.violations.push_back(w);
      r.notes["reverified"] = reverify(w) ? "true" : "false";
      emit_report(out, g, r, config_json(g, f));
      return 0;
    }

    if (hunt->parsed()) {
      HuntSpec spec;
      spec.q = parse_rational(f.q);
      spec.t = parse_rational(f.t);
      spec.n = n;
      spec.max_weight = max_weight;
      spec.budget = budget;
      spec.seed = g.seed;
      spec.lattice_only = lattice_only;
      const InequalityReport r = hunt_violation(spec);
      Json config = config_json(g, f);
      config["n"] = n;
      config["max_weight"] = max_weight;
      config["budget"] = budget;
      config["lattice_only"] = lattice_only;
      emit_report(out, g, r, config);
      return r.passed() ? 0 : 1;
    }

    if (ho->parsed()) {
      const QuadratureConfig cfg = quad_config(f);
      std::vector<double> x = parse_reals(x_text);
      bool perturbed = false;
      if (perturb) {
        auto p = perturb_ties(x, cfg.min_gap);
        x = p.x;
        perturbed = p.changed;
        if (perturbed && !g.quiet) err << "note: ties in x were split by min-gap " << cfg.min_gap << "\n";
      }
      Json j;
      j["command"] = "ho";
      j["k"] = f.k;
      j["nodes"] = cfg.nodes_per_dimension;
      j["rule"] = to_string(cfg.singularity_rule);
      j["x"] = x;
      j["perturbed"] = perturbed;
      std::ostringstream table;
      int code = 0;
      if (ho_eval_cmd->parsed() || ho_residual->parsed()) {
        const std::vector<double> s = parse_reals(s_text);
        const HOParams params = HOParams::make(x.size(), f.k);
        j["s"] = s;
        if (ho_eval_cmd->parsed()) {
          const HOResult r = ho_eval(params, s, x, cfg);
          j["mode"] = "eval";
          j["value"] = r.value;
          j["error_estimate"] = r.error_estimate;
          j["singularity_warning"] = r.singularity_warning;
          table << "F = " << format_real(r.value) << "  (error estimate " << r.error_estimate << ")\n";
          if (r.singularity_warning) table << "warning: plain Gauss with k < 1, endpoint singularity unresolved\n";
        } else {
          const double res = ho_direction_residual(params, s, x, h, cfg);
          j["mode"] = "residual";
          j["h"] = h;
          j["residual"] = res;
          table << "residual = " << res << "\n";
        }
      } else {
        const Partition lambda = parse_partition(lambda_text, x.size());
        const Rational k = from_double(f.k);
        const JackConsistency jc = ho_jack_consistency(lambda, k, x, cfg);
        j["mode"] = "verify";
        j["lambda"] = lambda.to_string();
        j["ho"] = jc.ho;
        j["jack"] = jc.jack;
        j["relative_error"] = jc.relative_error;
        j["tolerance"] = tol;
        table << "F = " << format_real(jc.ho) << "  Omega = " << format_real(jc.jack)
              << "  relative error " << jc.relative_error << "\n";
        code = jc.relative_error <= tol ? 0 : 1;
      }
      j["version"] = kVersion;
      if (g.out == "table") {
        out << table.str();
      } else {
        out << j.dump(2) << "\n";
      }
      return code;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace symlab::cli
