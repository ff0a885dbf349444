#include "corpus.hpp"

#include "phk/errors.hpp"
#include "phk/normal_cones.hpp"

#include <gtest/gtest.h>

using namespace phk;
using phk::testing::v;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return {n, d}; }

// Definition of x* ∈ N_{cl C}(x) read off the carrier's generators.
bool definitional_normal(const VRep &r, const Vec &x, const Vec &xstar) {
  for (const auto &p : r.vertices)
    if (dot(sub(p, x), xstar) > 0)
      return false;
  for (const auto &d : r.rays)
    if (dot(d, xstar) > 0)
      return false;
  for (const auto &l : r.lineality)
    if (dot(l, xstar) != 0)
      return false;
  return true;
}

Vec random_combination(Rng &rng, const std::vector<Vec> &gens, std::size_t dim) {
  Vec out = zeros(dim);
  for (const auto &g : gens)
    out = add(out, scale(rng.rational(q(0), q(3), 3), g));
  return out;
}

} // namespace

TEST(Sigma, ClosedIntervalAttained) {
  auto s = sigma(phk::testing::interval(q(0), q(1)), v({1}));
  EXPECT_EQ(s.value, ExtValue(q(1)));
  EXPECT_TRUE(s.attained_in_c);
  ASSERT_TRUE(s.witness);
  EXPECT_EQ(*s.witness, v({1}));
}

TEST(Sigma, HalfOpenIntervalNotAttained) {
  auto s = sigma(phk::testing::half_open_interval(), v({-1}));
  EXPECT_EQ(s.value, ExtValue(q(0)));
  EXPECT_FALSE(s.attained_in_c);
}

TEST(Sigma, UnboundedDirection) {
  EXPECT_TRUE(sigma(phk::testing::ray_from(q(0)), v({1})).value.is_pos_inf());
}

TEST(Sigma, EmptySetIsMinusInfinity) {
  auto s = sigma(PartiallyOpenPolyhedron::empty(2), v({1, 0}));
  EXPECT_TRUE(s.value.is_neg_inf());
  EXPECT_FALSE(s.attained_in_c);
}

TEST(Sigma, DimensionMismatch) {
  EXPECT_THROW(sigma(phk::testing::unit_square(), v({1})), InputError);
}

TEST(Sigma, WitnessInvariantOnCorpus) {
  SampleSpec spec{.seed = 3};
  for (const auto &[name, c] : phk::testing::corpus(30, 6)) {
    for (const auto &xs : dual_samples(c, spec)) {
      auto s = sigma(c, xs);
      EXPECT_EQ(s.value, support_value(c, xs)) << name;
      if (!s.attained_in_c)
        continue;
      ASSERT_TRUE(s.witness) << name;
      EXPECT_TRUE(contains(c, *s.witness)) << name;
      EXPECT_EQ(ExtValue(dot(*s.witness, xs)), s.value) << name;
    }
  }
}

TEST(Sigma, PositivelyHomogeneous) {
  Rng rng(8);
  SampleSpec spec{.seed = 1};
  for (const auto &[name, c] : phk::testing::corpus(30, 7)) {
    for (const auto &xs : dual_samples(c, spec)) {
      Rational t = rng.rational(q(1, 4), q(4), 4);
      auto base = support_value(c, xs);
      auto scaled = support_value(c, scale(t, xs));
      if (base.is_finite())
        EXPECT_EQ(scaled, ExtValue(t * base.value())) << name;
      else
        EXPECT_EQ(scaled, base) << name;
    }
  }
}

TEST(NormalConeAt, InteriorPointHasTrivialCone) {
  EXPECT_TRUE(normal_cone_at(phk::testing::interval(q(0), q(1)), Vec{q(1, 2)}).is_trivial());
}

TEST(NormalConeAt, EndPoint) {
  auto k = normal_cone_at(phk::testing::interval(q(0), q(1)), v({1}));
  EXPECT_TRUE(k.same_cone(GeneratedCone(1, {v({1})})));
}

TEST(NormalConeAt, SquareCorner) {
  auto k = normal_cone_at(phk::testing::unit_square(), v({1, 1}));
  EXPECT_TRUE(k.same_cone(GeneratedCone(2, {v({1, 0}), v({0, 1})})));
}

TEST(NormalConeAt, OutsidePointIsDomainError) {
  EXPECT_THROW(normal_cone_at(phk::testing::half_open_interval(), v({0})), DomainError);
  EXPECT_THROW(normal_cone_at(phk::testing::unit_square(), v({2, 0})), DomainError);
}

TEST(NormalConeAt, MatchesDefinitionOnCorpus) {
  Rng rng(12);
  SampleSpec spec{.seed = 2, .random_points = 16};
  for (const auto &[name, c] : phk::testing::corpus(45, 3)) {
    auto r = h_to_v(c.carrier());
    for (const auto &x : primal_samples(c, spec)) {
      if (!contains(c, x))
        continue;
      auto k = normal_cone_at(c, x);
      for (int t = 0; t < 3; ++t) {
        auto xs = random_combination(rng, k.generators(), c.dim());
        EXPECT_TRUE(in_normal_cone(c, x, xs)) << name;
        EXPECT_TRUE(definitional_normal(r, x, xs)) << name;
      }
      for (const auto &xs : dual_samples(c, spec))
        EXPECT_EQ(k.contains(xs), definitional_normal(r, x, xs)) << name;
    }
  }
}

TEST(InNormalCone, Examples) {
  auto c = phk::testing::half_open_interval();
  EXPECT_TRUE(in_normal_cone(c, v({1}), v({5})));
  EXPECT_FALSE(in_normal_cone(c, Vec{q(1, 2)}, v({1})));
  EXPECT_FALSE(in_normal_cone(c, v({0}), v({-1})));
  for (const auto &[name, s] : phk::testing::fixed_sets()) {
    auto x = h_to_v(s.carrier()).vertices.front();
    if (contains(s, x))
      EXPECT_TRUE(in_normal_cone(s, x, zeros(s.dim()))) << name;
  }
}

TEST(SupportingRows, HalfOpenInterval) {
  auto c = phk::testing::half_open_interval();
  auto rows = supporting_rows(c);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(c.rows()[rows[0]].normal, v({1}));
  EXPECT_EQ(c.rows()[rows[0]].offset, q(1));
}

TEST(SupportingRows, OpenSquareHasNone) {
  EXPECT_TRUE(supporting_rows(phk::testing::unit_square(true)).empty());
}

TEST(SupportingRows, ClosedSquareHasAll) {
  EXPECT_EQ(supporting_rows(phk::testing::unit_square()).size(), 4u);
}

TEST(SupportingRows, ContactPointsLieInSet) {
  for (const auto &[name, c] : phk::testing::corpus(30, 9)) {
    auto rows = supporting_rows(c);
    for (std::size_t i = 0; i < c.rows().size(); ++i) {
      auto p = contact_point(c, i);
      bool listed = std::find(rows.begin(), rows.end(), i) != rows.end();
      EXPECT_EQ(p.has_value(), listed) << name;
      if (p) {
        EXPECT_TRUE(contains(c, *p)) << name;
        EXPECT_EQ(dot(c.rows()[i].normal, *p), c.rows()[i].offset) << name;
      }
    }
  }
}

TEST(SupportPoints, NonzeroGeneratorIffSupportPoint) {
  SampleSpec spec{.seed = 5, .random_points = 8};
  for (const auto &[name, c] : phk::testing::corpus(30, 10)) {
    for (const auto &x : boundary_samples(c, spec)) {
      if (!contains(c, x))
        continue;
      auto k = normal_cone_at(c, x);
      bool nonzero = std::any_of(k.generators().begin(), k.generators().end(),
                                 [](const Vec &g) { return !is_zero(g); });
      EXPECT_EQ(is_support_point(c, x), nonzero) << name;
    }
  }
}

TEST(InRangeN, Examples) {
  auto c = phk::testing::half_open_interval();
  auto m = in_range_N(c, v({1}));
  EXPECT_TRUE(m.member);
  ASSERT_TRUE(m.witness);
  EXPECT_EQ(*m.witness, v({1}));
  EXPECT_FALSE(in_range_N(c, v({-1})).member);
  for (const auto &[name, s] : phk::testing::fixed_sets()) {
    auto z = in_range_N(s, zeros(s.dim()));
    EXPECT_TRUE(z.member) << name;
    ASSERT_TRUE(z.witness) << name;
    EXPECT_TRUE(in_normal_cone(s, *z.witness, zeros(s.dim()))) << name;
  }
}

TEST(GraphNormalCone, SampledPairsAreMonotone) {
  Rng rng(14);
  SampleSpec spec{.seed = 4, .random_points = 8};
  for (const auto &[name, c] : phk::testing::corpus(30, 11)) {
    std::vector<std::pair<Vec, Vec>> graph;
    for (const auto &x : primal_samples(c, spec)) {
      if (!contains(c, x))
        continue;
      auto k = normal_cone_at(c, x);
      graph.emplace_back(x, random_combination(rng, k.generators(), c.dim()));
    }
    for (const auto &[x1, s1] : graph)
      for (const auto &[x2, s2] : graph)
        EXPECT_GE(dot(sub(x1, x2), sub(s1, s2)), 0) << name;
  }
}
