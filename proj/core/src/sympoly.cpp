#include "symlab/sympoly.hpp"

#include <algorithm>
#include <sstream>

namespace symlab {

SymPoly SymPoly::monomial(const Partition& lambda, const Rational& coeff) {
  SymPoly p(lambda.size());
  p.add_term(lambda, coeff);
  return p;
}

SymPoly SymPoly::constant(std::size_t n, const Rational& c) { return monomial(Partition::zeros(n), c); }

Rational SymPoly::coeff(const Partition& nu) const {
  const auto it = terms_.find(nu);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymPoly::add_term(const Partition& nu, const Rational& c) {
  detail::require_same_length(nu.size(), n_, "SymPoly::add_term");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(nu, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
  detail::require_same_length(n_, other.n_, "SymPoly::+");
  for (const auto& [nu, c] : other.terms_) add_term(nu, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other) {
  detail::require_same_length(n_, other.n_, "SymPoly::-");
  for (const auto& [nu, c] : other.terms_) add_term(nu, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [nu, v] : terms_) v *= c;
  return *this;
}

SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
SymPoly operator*(const Rational& c, SymPoly p) { return p *= c; }

std::string SymPoly::serialize() const {
  std::ostringstream os;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    os << it->first.to_string() << " : " << to_string(it->second) << '\n';
  }
  return os.str();
}

SymPoly SymPoly::parse(std::string_view text, std::size_t n) {
  std::vector<std::pair<Partition, Rational>> parsed;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw DomainError("polynomial term without ':' : " + std::string(line));
    std::string_view key = line.substr(0, colon);
    while (!key.empty() && key.back() == ' ') key.remove_suffix(1);
    if (key.size() >= 3 && key.substr(0, 2) == "m(" && key.back() == ')') key = key.substr(2, key.size() - 3);
    parsed.emplace_back(Partition::parse(key), parse_rational(line.substr(colon + 1)));
  }
  if (!parsed.empty()) n = parsed.front().first.size();
  SymPoly p(n);
  for (const auto& [nu, c] : parsed) p.add_term(nu, c);
  return p;
}

std::vector<std::vector<int>> orbit(const Partition& lambda) {
  std::vector<int> v = lambda.vec();
  std::sort(v.begin(), v.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Integer orbit_size(const Partition& lambda) {
  Integer num;
  mpz_fac_ui(num.get_mpz_t(), lambda.size());
  std::size_t i = 0;
  while (i < lambda.size()) {
    std::size_t j = i;
    while (j < lambda.size() && lambda[j] == lambda[i]) ++j;
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), j - i);
    num /= f;
    i = j;
  }
  return num;
}

Rational monomial_eval(const Partition& lambda, std::span<const Rational> x) {
  detail::require_same_length(lambda.size(), x.size(), "monomial_eval");
  Rational total = 0;
  for (const auto& eta : orbit(lambda)) {
    Rational term = 1;
    for (std::size_t i = 0; i < eta.size(); ++i) {
      if (eta[i]) term *= pow(x[i], eta[i]);
    }
    total += term;
  }
  return total;
}

Rational poly_eval(const SymPoly& p, std::span<const Rational> x) {
  detail::require_same_length(p.nvars(), x.size(), "poly_eval");
  PointEvaluator ev(x);
  return ev(p);
}

long double poly_eval(const SymPoly& p, std::span<const long double> x) {
  detail::require_same_length(p.nvars(), x.size(), "poly_eval");
  long double total = 0;
  for (const auto& [nu, c] : p.terms()) {
    long double m = 0;
    for (const auto& eta : orbit(nu)) {
      long double term = 1;
      for (std::size_t i = 0; i < eta.size(); ++i) {
        for (int e = 0; e < eta[i]; ++e) term *= x[i];
      }
      m += term;
    }
    total += to_long_double(c) * m;
  }
  return total;
}

SymPoly poly_combine(std::span<const std::pair<Rational, SymPoly>> terms) {
  if (terms.empty()) return SymPoly(0);
  SymPoly out(terms.front().second.nvars());
  for (const auto& [c, p] : terms) {
    detail::require_same_length(out.nvars(), p.nvars(), "poly_combine");
    for (const auto& [nu, v] : p.terms()) out.add_term(nu, c * v);
  }
  return out;
}

SymPoly poly_multiply(const SymPoly& p, const SymPoly& q) {
  detail::require_same_length(p.nvars(), q.nvars(), "poly_multiply");
  const std::size_t n = p.nvars();
  SymPoly out(n);
  // The coefficient of m_kappa in a symmetric product equals the coefficient
  // of the single monomial x^kappa, so only sorted-decreasing exponent sums
  // are kept.
  std::vector<int> sum(n);
  for (const auto& [nu1, c1] : p.terms()) {
    const auto o1 = orbit(nu1);
    for (const auto& [nu2, c2] : q.terms()) {
      const auto o2 = orbit(nu2);
      const Rational c = c1 * c2;
      for (const auto& a : o1) {
        for (const auto& b : o2) {
          bool decreasing = true;
          for (std::size_t i = 0; i < n; ++i) {
            sum[i] = a[i] + b[i];
            if (i && sum[i] > sum[i - 1]) {
              decreasing = false;
              break;
            }
          }
          if (decreasing) out.add_term(Partition(sum), c);
        }
      }
    }
  }
  return out;
}

PointEvaluator::PointEvaluator(std::span<const Rational> x) : x_(x.begin(), x.end()), powers_(x.size()) {
  for (std::size_t i = 0; i < x_.size(); ++i) powers_[i].push_back(Rational(1));
}

const Rational& PointEvaluator::power(std::size_t i, int e) {
  auto& row = powers_[i];
  while (static_cast<int>(row.size()) <= e) row.push_back(row.back() * x_[i]);
  return row[static_cast<std::size_t>(e)];
}

const Rational& PointEvaluator::monomial(const Partition& lambda) {
  detail::require_same_length(lambda.size(), x_.size(), "monomial_eval");
  const auto it = cache_.find(lambda);
  if (it != cache_.end()) return it->second;
  Rational total = 0, term;
  for (const auto& eta : orbit(lambda)) {
    term = 1;
    for (std::size_t i = 0; i < eta.size(); ++i) {
      if (eta[i]) term *= power(i, eta[i]);
    }
    total += term;
  }
  return cache_.emplace(lambda, std::move(total)).first->second;
}

Rational PointEvaluator::operator()(const SymPoly& p) {
  detail::require_same_length(p.nvars(), x_.size(), "poly_eval");
  Rational total = 0;
  for (const auto& [nu, c] : p.terms()) total += c * monomial(nu);
  return total;
}

}  // namespace symlab
