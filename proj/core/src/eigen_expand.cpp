#include "symlab/eigen_expand.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <stdexcept>

#include "symlab/errors.hpp"

namespace symlab::detail {

namespace {

// Integer points with distinct nonzero coordinates. The generator is fixed
// so expansions never depend on run order.
std::vector<RationalVector> sample_points(std::size_t n, std::size_t count, std::mt19937_64& rng) {
  std::vector<RationalVector> pts;
  const long range = static_cast<long>(4 * n + 12);
  std::uniform_int_distribution<long> dist(1, range);
  while (pts.size() < count) {
    RationalVector x(n);
    std::vector<long> used;
    for (std::size_t i = 0; i < n; ++i) {
      long v;
      do {
        v = dist(rng);
      } while (std::find(used.begin(), used.end(), v) != used.end());
      used.push_back(v);
      x[i] = v;
    }
    pts.push_back(std::move(x));
  }
  return pts;
}

}  // namespace

OperatorMatrix operator_matrix(std::size_t n, int weight, const MonomialAction& action) {
  OperatorMatrix op;
  op.basis = partitions_of(weight, n);
  const std::size_t k = op.basis.size();

  std::mt19937_64 rng(0x5eed0000u + 131u * n + static_cast<unsigned>(weight));
  RationalMatrix sample_rows;
  std::vector<RationalVector> points;
  // Grow the sample set until the monomial evaluation matrix has full
  // column rank, then add two rows that the solve must also satisfy.
  while (true) {
    auto fresh = sample_points(n, 1, rng);
    RationalVector row(k);
    PointEvaluator ev(fresh.front());
    for (std::size_t j = 0; j < k; ++j) row[j] = ev.monomial(op.basis[j]);
    sample_rows.push_back(std::move(row));
    points.push_back(std::move(fresh.front()));
    if (sample_rows.size() >= k && exact_rank(sample_rows) == k) break;
    if (sample_rows.size() > 8 * k + 32) throw DegeneracyError("could not find unisolvent sample points");
  }
  for (int extra = 0; extra < 2; ++extra) {
    auto fresh = sample_points(n, 1, rng);
    RationalVector row(k);
    PointEvaluator ev(fresh.front());
    for (std::size_t j = 0; j < k; ++j) row[j] = ev.monomial(op.basis[j]);
    sample_rows.push_back(std::move(row));
    points.push_back(std::move(fresh.front()));
  }

  RationalMatrix rhs(points.size(), RationalVector(k));
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t i = 0; i < k; ++i) rhs[p][i] = action(op.basis[i], points[p]);
  }
  // Solution column i holds the expansion of D m_basis[i].
  const RationalMatrix sol = solve_exact(sample_rows, rhs);
  op.entries.assign(k, RationalVector(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      op.entries[i][j] = sol[j][i];
      if (op.entries[i][j] != 0 && !majorizes(op.basis[i], op.basis[j])) {
        throw std::logic_error("operator is not dominance-triangular at (" + op.basis[i].to_string() + ", " +
                               op.basis[j].to_string() + ")");
      }
    }
  }
  return op;
}

const OperatorMatrix& cached_operator_matrix(const std::string& key, std::size_t n, int weight,
                                             const MonomialAction& action) {
  static std::shared_mutex mutex;
  static std::map<std::string, std::unique_ptr<OperatorMatrix>> cache;
  const std::string full_key = key + "|" + std::to_string(n) + "|" + std::to_string(weight);
  {
    std::shared_lock lock(mutex);
    const auto it = cache.find(full_key);
    if (it != cache.end()) return *it->second;
  }
  auto op = std::make_unique<OperatorMatrix>(operator_matrix(n, weight, action));
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.try_emplace(full_key, std::move(op));
  return *it->second;
}

SymPoly triangular_eigenvector(const OperatorMatrix& op, const Partition& lambda, const std::string& context) {
  const auto& basis = op.basis;
  const std::size_t k = basis.size();
  std::size_t top = k;
  for (std::size_t i = 0; i < k; ++i) {
    if (basis[i] == lambda) top = i;
  }
  if (top == k) throw std::logic_error("partition missing from operator basis");

  RationalVector c(k);
  c[top] = 1;
  const Rational& eigenvalue = op.entries[top][top];
  for (std::size_t j = top + 1; j < k; ++j) {
    if (!majorizes(lambda, basis[j])) continue;
    Rational num = 0;
    for (std::size_t i = top; i < j; ++i) {
      if (c[i] != 0 && op.entries[i][j] != 0) num += c[i] * op.entries[i][j];
    }
    const Rational gap = eigenvalue - op.entries[j][j];
    if (gap == 0) {
      throw DegeneracyError("eigenvalue collision between " + lambda.to_string() + " and " + basis[j].to_string() +
                            " (" + context + ")");
    }
    c[j] = num / gap;
  }
  SymPoly p(lambda.size());
  for (std::size_t j = 0; j < k; ++j) p.add_term(basis[j], c[j]);
  return p;
}

}  // namespace symlab::detail
