#include "corpus.hpp"

#include "phk/errors.hpp"
#include "phk/ext_value.hpp"
#include "phk/linalg.hpp"
#include "phk/lp.hpp"
#include "phk/oracles/fourier_motzkin.hpp"

#include <gtest/gtest.h>

using namespace phk;
using phk::testing::v;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return {n, d}; }

bool satisfies(std::span<const StrictRow> rows, const Vec &x) {
  for (const auto &r : rows) {
    Rational lhs = dot(r.normal, x);
    if (r.strict ? !(lhs < r.offset) : !(lhs <= r.offset))
      return false;
  }
  return true;
}

} // namespace

TEST(Rational, CanonicalForm) {
  Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational(0, 5).str(), "0");
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
}

TEST(Rational, ParseRoundTrip) {
  for (const char *s : {"0", "7", "-7", "3/4", "-3/4", "12345678901234567890/7"})
    EXPECT_EQ(Rational::parse(s).str(), s);
  EXPECT_EQ(Rational::parse("6/8").str(), "3/4");
  EXPECT_EQ(Rational::parse("+5").str(), "5");
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char *s : {"", "1/0", "abc", "1.5", "1/", "/2", "1//2", " 1"})
    EXPECT_THROW(Rational::parse(s), InputError) << s;
  EXPECT_THROW(Rational(1, 0), InputError);
}

TEST(Rational, ArithmeticIsExact) {
  EXPECT_EQ(q(1, 3) + q(1, 6), q(1, 2));
  EXPECT_EQ(q(1, 3) * q(3, 7), q(1, 7));
  EXPECT_EQ(q(1, 3) / q(2, 3), q(1, 2));
  EXPECT_LT(q(1, 3), q(1, 2));
  EXPECT_EQ((-q(2, 5)).abs(), q(2, 5));
}

TEST(Rational, VectorHelpers) {
  EXPECT_EQ(dot(v({1, 2}), v({3, 4})), q(11));
  EXPECT_THROW(dot(v({1}), v({1, 2})), InputError);
  EXPECT_EQ(primitive(Vec{q(2, 3), q(4, 3)}), v({1, 2}));
  EXPECT_EQ(primitive(Vec{q(-2), q(0)}), v({-1, 0}));
}

TEST(ExtValue, InfinityConventions) {
  auto pinf = ExtValue::pos_inf();
  auto ninf = ExtValue::neg_inf();
  EXPECT_EQ(pinf + ninf, pinf);
  EXPECT_EQ(ninf + pinf, pinf);
  EXPECT_EQ(ninf + ExtValue(q(3)), ninf);
  EXPECT_EQ(ExtValue(q(1)) + ExtValue(q(2)), ExtValue(q(3)));
  EXPECT_LT(ninf, ExtValue(q(-1000)));
  EXPECT_LT(ExtValue(q(1000)), pinf);
  EXPECT_THROW((void)pinf.value(), DomainError);
}

TEST(ExtValue, EmptySupAndInf) {
  EXPECT_TRUE(Sup{}.value().is_neg_inf());
  EXPECT_TRUE(Inf{}.value().is_pos_inf());
  Sup s;
  s.add(q(1));
  s.add(q(3));
  s.add(q(2));
  EXPECT_EQ(s.value(), ExtValue(q(3)));
}

TEST(ExtValue, StringRoundTrip) {
  for (const char *s : {"+inf", "-inf", "0", "-5/3"})
    EXPECT_EQ(ExtValue::parse(s).str(), s);
}

TEST(LpSolve, BoundedMaximum) {
  LPProblem p{v({1}), {{v({1}), q(1)}, {v({-1}), q(0)}}};
  auto o = lp_solve(p);
  ASSERT_TRUE(o.optimal());
  EXPECT_EQ(o.value, q(1));
  EXPECT_EQ(o.primal, v({1}));
  EXPECT_TRUE(verify_certificate(p, o));
}

TEST(LpSolve, UnboundedRay) {
  LPProblem p{v({1}), {{v({-1}), q(0)}}};
  auto o = lp_solve(p);
  ASSERT_TRUE(o.unbounded());
  EXPECT_EQ(o.ray, v({1}));
  EXPECT_TRUE(verify_certificate(p, o));
}

TEST(LpSolve, InfeasibleFarkas) {
  LPProblem p{v({0}), {{v({1}), q(-1)}, {v({-1}), q(0)}}};
  auto o = lp_solve(p);
  ASSERT_TRUE(o.infeasible());
  EXPECT_EQ(o.farkas, v({1, 1}));
  EXPECT_TRUE(verify_certificate(p, o));
}

TEST(LpSolve, DimensionMismatchIsInputError) {
  LPProblem p{v({1, 0}), {{v({1}), q(1)}}};
  EXPECT_THROW(lp_solve(p), InputError);
}

TEST(LpSolve, TamperedCertificateFailsVerification) {
  LPProblem p{v({1}), {{v({1}), q(1)}, {v({-1}), q(0)}}};
  auto o = lp_solve(p);
  o.value = q(2);
  EXPECT_FALSE(verify_certificate(p, o));
}

TEST(LpSolve, Deterministic) {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    auto p = phk::testing::random_lp(rng);
    auto a = lp_solve(p);
    auto b = lp_solve(p);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.primal, b.primal);
    EXPECT_EQ(a.dual, b.dual);
    EXPECT_EQ(a.farkas, b.farkas);
    EXPECT_EQ(a.ray, b.ray);
  }
}

TEST(LpSolve, AgreesWithFourierMotzkinOnRandomSystems) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    auto p = phk::testing::random_lp(rng);
    auto o = lp_solve(p);
    ASSERT_TRUE(verify_certificate(p, o));
    auto fm = oracles::fm_maximize(p.objective, p.rows);
    ASSERT_EQ(fm.feasible, !o.infeasible()) << "system " << i;
    if (!fm.feasible)
      continue;
    if (o.unbounded())
      EXPECT_TRUE(fm.value.is_pos_inf()) << "system " << i;
    else
      EXPECT_EQ(fm.value, ExtValue(o.value)) << "system " << i;
  }
}

TEST(StrictSystem, OpenIntervalWitness) {
  std::vector<StrictRow> rows{{v({1}), q(0), true}, {v({-1}), q(1), true}};
  auto f = strict_system_feasible(1, rows);
  ASSERT_TRUE(f.feasible);
  ASSERT_TRUE(f.witness);
  EXPECT_EQ(*f.witness, Vec{q(-1, 2)});
}

TEST(StrictSystem, EmptyHalfOpen) {
  std::vector<StrictRow> rows{{v({1}), q(0), true}, {v({-1}), q(0), false}};
  EXPECT_FALSE(strict_system_feasible(1, rows).feasible);
}

TEST(StrictSystem, HalfOpenUnitInterval) {
  std::vector<StrictRow> rows{{v({-1}), q(0), true}, {v({1}), q(1), false}};
  auto f = strict_system_feasible(1, rows);
  ASSERT_TRUE(f.feasible);
  ASSERT_TRUE(f.witness);
  EXPECT_TRUE(satisfies(rows, *f.witness));
}

TEST(StrictSystem, NoStrictRowsMatchesClosedFeasibility) {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    auto p = phk::testing::random_lp(rng);
    std::vector<StrictRow> rows;
    for (const auto &h : p.rows)
      rows.push_back({h.normal, h.offset, false});
    auto f = strict_system_feasible(p.dim(), rows);
    EXPECT_EQ(f.feasible, !lp_solve(LPProblem{zeros(p.dim()), p.rows}).infeasible());
    if (f.feasible)
      EXPECT_TRUE(satisfies(rows, *f.witness));
  }
}

TEST(StrictSystem, AgreesWithFourierMotzkinOnRandomMixedSystems) {
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    auto p = phk::testing::random_lp(rng);
    std::vector<StrictRow> rows;
    for (const auto &h : p.rows)
      rows.push_back({h.normal, h.offset, rng.coin()});
    auto f = strict_system_feasible(p.dim(), rows);
    EXPECT_EQ(f.feasible, oracles::fm_feasible(p.dim(), rows)) << "system " << i;
    if (f.feasible)
      EXPECT_TRUE(satisfies(rows, *f.witness));
  }
}

TEST(AffineRank, Examples) {
  EXPECT_EQ(affine_rank({v({1, 0}), v({0, 1})}), 2u);
  EXPECT_EQ(affine_rank({v({1, 1}), v({2, 2})}), 1u);
  EXPECT_EQ(affine_rank({v({0, 0})}), 0u);
  EXPECT_THROW(affine_rank({}), InputError);
}

TEST(Linalg, NullSpaceAndSolve) {
  auto ns = null_space({v({1, 1, 0})}, 3);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto &d : ns)
    EXPECT_EQ(dot(v({1, 1, 0}), d), q(0));
  auto x = solve_square({v({2, 1}), v({1, 3})}, v({3, 5}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (Vec{q(4, 5), q(7, 5)}));
  EXPECT_FALSE(solve_square({v({1, 2}), v({2, 4})}, v({1, 1})));
}
