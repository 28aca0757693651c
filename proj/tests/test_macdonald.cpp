#include <gtest/gtest.h>

#include "oracles.hpp"
#include "symlab/lab.hpp"
#include "symlab/macdonald.hpp"

using namespace symlab;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

const Rational kHalf(1, 2), kThird(1, 3);

MacdonaldParams mp(std::size_t n, const Rational& q = kHalf, const Rational& t = kThird) {
  return MacdonaldParams::make(n, q, t);
}

RationalVector point(std::uint64_t seed, std::uint64_t i, std::size_t n, const Rational& lo = Rational(1, 5),
                     const Rational& hi = Rational(5)) {
  RationalVector x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = sample_rational(seed, i * n + j, lo, hi);
  return x;
}

std::vector<std::pair<Rational, Rational>> grid9() {
  std::vector<std::pair<Rational, Rational>> g;
  for (const Rational& q : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
    for (const Rational& t : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) g.emplace_back(q, t);
  }
  return g;
}

}  // namespace

TEST(MacdonaldExpand, Examples) {
  const SymPoly p = macdonald_expand(P({2, 0}), mp(2));
  EXPECT_EQ(p.coeff(P({2, 0})), 1);
  EXPECT_EQ(p.coeff(P({1, 1})), Rational(6, 5));
  EXPECT_EQ(p.terms().size(), 2u);
  EXPECT_EQ(macdonald_expand(P({1, 0}), mp(2)), SymPoly::monomial(P({1, 0})));
  EXPECT_EQ(macdonald_expand(P({1, 1}), mp(2)), SymPoly::monomial(P({1, 1})));
  EXPECT_THROW(MacdonaldParams::make(2, Rational(1), kThird), ParameterError);
  EXPECT_THROW(MacdonaldParams::make(2, kHalf, Rational(0)), ParameterError);
  EXPECT_THROW(MacdonaldParams::make(2, kHalf, kThird, Rational(-1)), ParameterError);
  EXPECT_THROW(macdonald_expand(P({1, 0, 0}), mp(2)), DimensionError);
}

TEST(MacdonaldExpand, TriangularAndNonnegativeOnGrid) {
  for (const auto& [q, t] : grid9()) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto params = mp(n, q, t);
      for (const auto& lambda : partitions_up_to(6, n)) {
        const SymPoly p = macdonald_expand(lambda, params);
        EXPECT_EQ(p.coeff(lambda), 1);
        for (const auto& [nu, c] : p.terms()) {
          EXPECT_EQ(nu.weight(), lambda.weight());
          EXPECT_TRUE(majorizes(lambda, nu));
          EXPECT_GT(c, 0);
        }
      }
    }
  }
}

TEST(MacdonaldExpand, QEqualsTGivesSchur) {
  for (std::size_t n = 2; n <= 3; ++n) {
    for (const auto& lambda : partitions_up_to(5, n)) {
      const SymPoly a = macdonald_expand(lambda, mp(n, Rational(1, 3), Rational(1, 3)));
      const SymPoly b = macdonald_expand(lambda, mp(n, Rational(3, 5), Rational(3, 5)));
      EXPECT_EQ(a, b);
      for (int i = 0; i < 3; ++i) {
        const auto x = point(21, i, n);
        EXPECT_EQ(poly_eval(a, x), oracle::schur_bialternant(lambda, x));
      }
    }
  }
}

TEST(MacdonaldExpand, PrincipalValueMatchesProductFormula) {
  for (const auto& [q, t] : grid9()) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const auto& lambda : partitions_up_to(5, n)) {
        EXPECT_EQ(macdonald_principal_value(lambda, mp(n, q, t)), oracle::macdonald_principal(lambda, q, t))
            << lambda.to_string();
      }
    }
  }
}

TEST(MacdonaldExpand, EigenEquationAtFreshPoints) {
  const Rational q(2, 3), t(1, 2);
  for (std::size_t n = 2; n <= 3; ++n) {
    for (const auto& lambda : partitions_up_to(5, n)) {
      const SymPoly p = macdonald_expand(lambda, mp(n, q, t));
      Rational eig = 0;
      for (std::size_t i = 0; i < n; ++i) eig += pow(q, lambda[i]) * pow(t, static_cast<long>(n - 1 - i));
      for (int s = 0; s < 3; ++s) {
        const auto x = point(77, s, n);
        EXPECT_EQ(oracle::macdonald_operator_at(p, q, t, x), eig * poly_eval(p, x));
      }
    }
  }
}

TEST(OmegaMac, Examples) {
  const auto params = mp(2);
  const RationalVector ones{1, 1};
  EXPECT_EQ(omega_mac_eval(P({1, 0}), params, ones), Rational(3, 2));
  // Hand evaluation: (2 + 6/5) / ((1/9 + 1) + (6/5)(1/3)) = (16/5) / (68/45).
  EXPECT_EQ(omega_mac_eval(P({2, 0}), params, ones), Rational(36, 17));
  for (const auto& lambda : partitions_up_to(4, 2)) {
    EXPECT_EQ(omega_mac_eval(lambda, params, params.principal()), 1);
  }
}

TEST(OmegaMac, MonotoneInEachCoordinate) {
  const auto params = mp(3, Rational(2, 3), Rational(1, 2));
  for (int s = 0; s < 20; ++s) {
    const auto x = point(5, s, 3);
    for (const auto& lambda : partitions_up_to(4, 3)) {
      const Rational base = omega_mac_eval(lambda, params, x);
      for (std::size_t j = 0; j < 3; ++j) {
        auto y = x;
        y[j] += sample_rational(6, s * 3 + j, Rational(0), Rational(2));
        EXPECT_GE(omega_mac_eval(lambda, params, y), base);
      }
    }
  }
}

TEST(LatticePoint, Examples) {
  const auto params = mp(2);
  const std::vector<int> mu{1, 0};
  EXPECT_EQ(lattice_point(mu, params).coords, (RationalVector{6, 1}));
  EXPECT_EQ(lattice_point(mu, params, LatticeShift::Principal).coords, (RationalVector{Rational(2, 3), 1}));
  const Rational a(7, 3);
  const auto p2 = MacdonaldParams::make(2, Rational(3, 4), Rational(2, 5), a);
  EXPECT_EQ(lattice_point(std::vector<int>{0, 0}, p2).coords, (RationalVector{a * Rational(5, 2), a}));
  EXPECT_EQ(lattice_point(std::vector<int>{0, 0}, p2, LatticeShift::Principal).coords,
            (RationalVector{a * Rational(2, 5), a}));
  const auto shifted = lattice_point(std::vector<int>{3, 3}, p2).coords;
  const auto base = lattice_point(std::vector<int>{0, 0}, p2).coords;
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(shifted[i], pow(Rational(3, 4), -3) * base[i]);
  EXPECT_EQ(lattice_point(std::vector<int>{2, -1}, params).coords, (RationalVector{12, Rational(1, 2)}));
  EXPECT_THROW(lattice_point(std::vector<int>{0, 1}, params), DomainError);
}

TEST(LatticePoint, PrincipalShiftBreaksConvexity) {
  // q = t: the principal-shift label (1,0) with a = 1 is the all-ones point.
  const auto params = mp(2, Rational(1, 2), Rational(1, 2));
  const auto x = lattice_point(std::vector<int>{1, 0}, params, LatticeShift::Principal).coords;
  EXPECT_EQ(x, (RationalVector{1, 1}));
  EXPECT_LT(omega_mac_eval(P({2, 0}), params, x), omega_mac_eval(P({1, 1}), params, x));
  const auto y = lattice_point(std::vector<int>{1, 0}, mp(2), LatticeShift::Principal).coords;
  EXPECT_LT(omega_mac_eval(P({2, 0}), mp(2), y), omega_mac_eval(P({1, 1}), mp(2), y));
}

TEST(LatticeSweep, SchurAndLogConvex) {
  for (const auto& [q, t] : {std::pair{Rational(1, 2), Rational(1, 3)}, std::pair{Rational(9, 10), Rational(1, 2)}}) {
    for (const Rational& a : {Rational(1), Rational(1, 2)}) {
      SweepSpec spec;
      spec.n = 2;
      spec.max_weight = 5;
      spec.sampler.max_label = 3;
      const Family f = Family::macdonald_lattice(q, t, a);
      EXPECT_TRUE(check_schur_convexity(f, spec).passed());
      EXPECT_TRUE(check_log_convexity(f, spec).passed());
    }
  }
}

TEST(Inversion, Examples) {
  const auto params = mp(2);
  const auto r = inversion_check(P({1, 0}), params, RationalVector{1, 1});
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.lhs, r.rhs);
  const auto z = inversion_check(P({0, 0}), params, RationalVector{3, 7});
  EXPECT_EQ(z.lhs, 1);
  EXPECT_EQ(z.rhs, 1);
  EXPECT_TRUE(inversion_check(P({1, 1}), params, RationalVector{Rational(5, 2), Rational(1, 7)}).equal);
}

TEST(Inversion, HoldsOnSmallPartitions) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto params = mp(n, Rational(2, 3), Rational(1, 2));
    for (const auto& lambda : partitions_up_to(3, n)) {
      const auto x = point(8, lambda.weight(), n, Rational(-3), Rational(3));
      EXPECT_TRUE(inversion_check(lambda, params, x).equal) << lambda.to_string();
    }
  }
}

TEST(ShiftedMacdonald, Examples) {
  const auto params = mp(2);
  const auto zero = shifted_macdonald(P({0, 0}), params);
  EXPECT_EQ(zero.in_shifted_variables(), SymPoly::constant(2, 1));
  // Hand solve: c0 + c1 (z1 + z2) with z = (x1 t, x2) vanishing at (1, 1)
  // and equal to 1 at (q, 1) gives 8 - 2 x1 - 6 x2.
  const auto p10 = shifted_macdonald(P({1, 0}), params);
  const RationalVector xs[] = {{0, 0}, {1, 0}, {0, 1}, {Rational(3, 7), Rational(-2, 5)}};
  for (const auto& x : xs) EXPECT_EQ(p10.eval(x), 8 - 2 * x[0] - 6 * x[1]);
  const auto p20 = shifted_macdonald(P({2, 0}), params);
  EXPECT_EQ(p20.eval(q_power_point(P({1, 1}), params.q)), 0);
}

TEST(ShiftedMacdonald, VanishingAndNormalization) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto params = mp(n, Rational(2, 3), Rational(1, 2));
    for (const auto& mu : partitions_up_to(3, n)) {
      const auto ps = shifted_macdonald(mu, params);
      EXPECT_EQ(ps.eval(q_power_point(mu, params.q)), 1);
      for (const auto& lambda : partitions_up_to(mu.weight(), n)) {
        if (lambda != mu) EXPECT_EQ(ps.eval(q_power_point(lambda, params.q)), 0);
      }
      // Extra vanishing: any lambda not containing mu.
      for (const auto& lambda : partitions_up_to(mu.weight() + 2, n)) {
        if (!contains(lambda, mu)) EXPECT_EQ(ps.eval(q_power_point(lambda, params.q)), 0);
      }
    }
  }
}

TEST(ShiftedMacdonald, SymmetricInShiftedCoordinatesCoupledMode) {
  // theta = 1/2 with base 1/2: q = 1/4, t = 1/2.
  const auto params = MacdonaldParams::coupled(3, kHalf, kHalf);
  EXPECT_EQ(params.q, Rational(1, 4));
  EXPECT_EQ(params.t, kHalf);
  const auto tp = params.principal();
  for (const auto& mu : partitions_up_to(3, 3)) {
    const auto ps = shifted_macdonald(mu, params);
    for (int s = 0; s < 4; ++s) {
      const auto x = point(31, s, 3, Rational(-2), Rational(2));
      const Rational v = ps.eval(x);
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
          RationalVector z(3);
          for (std::size_t k = 0; k < 3; ++k) z[k] = x[k] * tp[k];
          std::swap(z[i], z[j]);
          RationalVector y(3);
          for (std::size_t k = 0; k < 3; ++k) y[k] = z[k] / tp[k];
          EXPECT_EQ(ps.eval(y), v);
        }
      }
    }
  }
}

TEST(ShiftedMacdonald, TopDegreeIsProportionalToMacdonald) {
  const auto params = mp(3, Rational(2, 3), Rational(1, 2));
  for (const auto& mu : partitions_up_to(3, 3)) {
    const SymPoly top = shifted_macdonald(mu, params).top_degree();
    const SymPoly p = macdonald_expand(mu, params);
    ASSERT_EQ(top.terms().size(), p.terms().size());
    const Rational ratio = top.coeff(mu);
    EXPECT_NE(ratio, 0);
    for (const auto& [nu, c] : p.terms()) EXPECT_EQ(top.coeff(nu), ratio * c);
  }
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial_check(P({0, 0}), mp(2), RationalVector{3, 5}).residual, 0);
  const auto r = binomial_check(P({1, 0}), mp(2), RationalVector{2, 1});
  EXPECT_EQ(r.residual, 0);
  EXPECT_EQ(r.lhs, r.rhs);
  const auto params = mp(2, Rational(2, 3), kHalf);
  for (int s = 0; s < 3; ++s) {
    EXPECT_EQ(binomial_check(P({2, 1}), params, point(13, s, 2, Rational(-4), Rational(4))).residual, 0);
  }
}

TEST(Binomial, ResidualZeroAndConventionIsForced) {
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto params = mp(n, Rational(2, 3), Rational(1, 3));
    for (const auto& lambda : partitions_up_to(3, n)) {
      const auto x = point(4, lambda.weight(), n, Rational(-2), Rational(3));
      EXPECT_EQ(binomial_check(lambda, params, x).residual, 0);
      if (lambda.weight() == 0) continue;
      const Rational omega = omega_mac_eval(lambda, params, x);
      EXPECT_NE(detail::binomial_sum(lambda, params, x, false, false), omega);
      EXPECT_NE(detail::binomial_sum(lambda, params, x, false, true), omega);
      EXPECT_NE(detail::binomial_sum(lambda, params, x, true, false), omega);
    }
  }
}
