#include "corpus.hpp"

#include "phk/errors.hpp"
#include "phk/polyhedra.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>

using namespace phk;
using phk::testing::v;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return {n, d}; }

std::vector<Halfspace> rows_of(std::initializer_list<std::pair<std::initializer_list<std::int64_t>, std::int64_t>> rs) {
  std::vector<Halfspace> out;
  for (const auto &[a, b] : rs)
    out.push_back({v(a), q(b)});
  return out;
}

bool has_vertex(const VRep &r, const Vec &p) {
  return std::find(r.vertices.begin(), r.vertices.end(), p) != r.vertices.end();
}

// A point of the carrier: the first vertex shifted along rays and lineality.
std::vector<Vec> carrier_points(const VRep &r) {
  std::vector<Vec> out = r.vertices;
  for (const auto &p : r.vertices) {
    for (const auto &d : r.rays)
      out.push_back(add(p, d));
    for (const auto &l : r.lineality) {
      out.push_back(add(p, l));
      out.push_back(sub(p, l));
    }
  }
  return out;
}

} // namespace

TEST(Canonicalize, DropsRedundantRow) {
  auto c = canonicalize(1, rows_of({{{1}, 1}, {{1}, 2}}));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->rows(), rows_of({{{1}, 1}}));
}

TEST(Canonicalize, KeepsImplicitEquality) {
  auto c = canonicalize(1, rows_of({{{1}, 0}, {{-1}, 0}}));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->size(), 2u);
  EXPECT_TRUE(c->contains(v({0})));
  EXPECT_FALSE(c->contains(v({1})));
}

TEST(Canonicalize, DetectsEmpty) {
  EXPECT_FALSE(canonicalize(1, rows_of({{{1}, -1}, {{-1}, 0}})));
}

TEST(Canonicalize, ZeroNormalRows) {
  EXPECT_FALSE(canonicalize(1, rows_of({{{0}, -1}})));
  auto c = canonicalize(1, rows_of({{{0}, 3}, {{1}, 1}}));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->rows(), rows_of({{{1}, 1}}));
}

TEST(Canonicalize, DimensionMismatch) {
  EXPECT_THROW(canonicalize(2, rows_of({{{1}, 1}})), InputError);
}

TEST(Canonicalize, IdempotentAndSetPreservingOnCorpus) {
  Rng rng(21);
  for (int i = 0; i < 60; ++i) {
    auto dim = static_cast<std::size_t>(1 + i % 3);
    std::vector<Halfspace> raw;
    for (int k = 0; k < 6; ++k) {
      Vec a(dim);
      for (auto &x : a)
        x = rng.integer(-2, 2);
      if (is_zero(a))
        a[0] = 1;
      raw.push_back({a, Rational(rng.integer(-1, 3))});
    }
    auto c = canonicalize(dim, raw);
    ClosedPolyhedron raw_p(dim, raw);
    if (!c) {
      EXPECT_TRUE(raw_p.is_empty());
      continue;
    }
    auto again = canonicalize(dim, c->rows());
    ASSERT_TRUE(again);
    EXPECT_EQ(again->rows(), c->rows());
    EXPECT_TRUE(same_set(*c, raw_p));
  }
}

TEST(Validate, Examples) {
  auto half_open = phk::testing::half_open_interval();
  auto r = validate(half_open);
  EXPECT_TRUE(r.nonempty);
  EXPECT_TRUE(r.closure_is_carrier);

  auto bad = PartiallyOpenPolyhedron::unchecked(ClosedPolyhedron(1, rows_of({{{-1}, 0}, {{1}, -1}})),
                                               {false, false});
  EXPECT_FALSE(validate(bad).nonempty);
  EXPECT_FALSE(validate(bad).closure_is_carrier);

  auto closed = phk::testing::interval(q(0), q(1));
  EXPECT_TRUE(validate(closed).nonempty);
  EXPECT_TRUE(validate(closed).closure_is_carrier);
}

TEST(Validate, ConstructorRejectsEmptySystems) {
  std::vector<StrictRow> rows{{v({1}), q(0), true}, {v({-1}), q(0), false}};
  EXPECT_THROW(PartiallyOpenPolyhedron::from_rows(1, rows), InvalidSet);
}

TEST(Contains, HalfOpenInterval) {
  auto c = phk::testing::half_open_interval();
  EXPECT_FALSE(contains(c, v({0})));
  EXPECT_TRUE(contains(c, v({1})));
  EXPECT_TRUE(contains(c, Vec{q(1, 1000)}));
}

TEST(Contains, SpaceAndEmpty) {
  EXPECT_TRUE(contains(PartiallyOpenPolyhedron::space(3), v({5, -7, 2})));
  EXPECT_FALSE(contains(PartiallyOpenPolyhedron::empty(2), v({0, 0})));
}

TEST(Contains, ImpliesClosureMembership) {
  Rng rng(4);
  for (const auto &[name, c] : phk::testing::corpus(30, 1)) {
    for (int k = 0; k < 20; ++k) {
      Vec x(c.dim());
      for (auto &e : x)
        e = rng.rational(q(-3), q(3), 2);
      if (contains(c, x))
        EXPECT_TRUE(c.carrier().contains(x)) << name;
    }
  }
}

TEST(HToV, UnitSquare) {
  auto r = h_to_v(phk::testing::unit_square().carrier());
  EXPECT_EQ(r.vertices.size(), 4u);
  for (const auto &p : {v({0, 0}), v({1, 0}), v({0, 1}), v({1, 1})})
    EXPECT_TRUE(has_vertex(r, p));
  EXPECT_TRUE(r.rays.empty());
  EXPECT_TRUE(r.lineality.empty());
}

TEST(HToV, HalfLine) {
  auto r = h_to_v(ClosedPolyhedron(1, rows_of({{{-1}, 0}})));
  EXPECT_EQ(r.vertices, std::vector<Vec>{v({0})});
  EXPECT_EQ(r.rays, std::vector<Vec>{v({1})});
}

TEST(HToV, WholeLine) {
  auto r = h_to_v(ClosedPolyhedron::space(1));
  EXPECT_EQ(r.lineality, std::vector<Vec>{v({1})});
  EXPECT_EQ(r.vertices.size(), 1u);
}

TEST(HToV, EmptyPolyhedron) {
  auto r = h_to_v(ClosedPolyhedron(1, rows_of({{{1}, -1}, {{-1}, 0}})));
  EXPECT_TRUE(r.is_empty());
}

TEST(HToV, RoundTripOnCorpus) {
  for (const auto &[name, c] : phk::testing::corpus(45, 2)) {
    auto r = h_to_v(c.carrier());
    auto back = v_to_h(c.dim(), r);
    EXPECT_TRUE(same_set(back, c.carrier())) << name;
    for (const auto &p : carrier_points(r))
      EXPECT_TRUE(c.carrier().contains(p)) << name;
  }
}

TEST(HToV, ScaleLimitFromEnvironment) {
  ::setenv("PHK_MAX_DIM", "2", 1);
  EXPECT_THROW(h_to_v(phk::testing::box(3, q(0), q(1)).carrier()), UnsupportedScale);
  ::unsetenv("PHK_MAX_DIM");
  EXPECT_EQ(double_description_limit(), 6u);
  EXPECT_THROW(h_to_v(ClosedPolyhedron::space(7)), UnsupportedScale);
  EXPECT_NO_THROW(h_to_v(phk::testing::box(3, q(0), q(1)).carrier()));
}

TEST(ClosedSubsetOf, Examples) {
  auto half_open = phk::testing::half_open_interval();
  EXPECT_FALSE(closed_subset_of(ClosedPolyhedron(1, rows_of({{{1}, 1}})), half_open));
  auto unit = phk::testing::interval(q(0), q(1));
  EXPECT_TRUE(closed_subset_of(unit.carrier(), unit));
  EXPECT_TRUE(closed_subset_of(ClosedPolyhedron(1, rows_of({{{1}, 1}, {{-1}, -1}})), half_open));
}

TEST(ClosedSubsetOf, ClosedIntervalNotInsideHalfOpen) {
  auto half_open = phk::testing::half_open_interval();
  EXPECT_FALSE(closed_subset_of(phk::testing::interval(q(0), q(1)).carrier(), half_open));
  EXPECT_TRUE(closed_subset_of(ClosedPolyhedron(1, rows_of({{{1}, -1}, {{-1}, 0}})), half_open))
      << "the empty polyhedron is inside every set";
}

TEST(Lineality, Examples) {
  EXPECT_TRUE(lineality_space(phk::testing::unit_square().carrier()).empty());
  auto l = lineality_space(ClosedPolyhedron(2, rows_of({{{1, 0}, 0}})));
  ASSERT_EQ(l.size(), 1u);
  EXPECT_TRUE(l[0] == v({0, 1}) || l[0] == v({0, -1}));
  EXPECT_EQ(lineality_space(ClosedPolyhedron::space(1)).size(), 1u);
  EXPECT_THROW(lineality_space(ClosedPolyhedron(1, rows_of({{{1}, -1}, {{-1}, 0}}))), InputError);
}

TEST(GeneratedCone, Membership) {
  GeneratedCone k(2, {v({1, 0}), v({0, 1})});
  EXPECT_TRUE(k.contains(v({2, 3})));
  EXPECT_FALSE(k.contains(v({-1, 3})));
  GeneratedCone trivial(2, {});
  EXPECT_TRUE(trivial.is_trivial());
  EXPECT_TRUE(trivial.contains(v({0, 0})));
  EXPECT_FALSE(trivial.contains(v({0, 1})));
  EXPECT_TRUE(trivial.subset_of(k));
  EXPECT_FALSE(k.subset_of(trivial));
  EXPECT_TRUE(k.same_cone(GeneratedCone(2, {v({0, 2}), v({3, 0}), v({1, 1})})));
}
