#pragma once

#include "phk/fitzpatrick.hpp"
#include "phk/lp.hpp"
#include "phk/polyhedra.hpp"
#include "phk/sampling.hpp"

#include <string>
#include <vector>

namespace phk::testing {

struct NamedSet {
  std::string name;
  PartiallyOpenPolyhedron set;
};

PartiallyOpenPolyhedron interval(const Rational &lo, const Rational &hi, bool open_lo = false,
                                 bool open_hi = false);
PartiallyOpenPolyhedron ray_from(const Rational &lo, bool open = false); // [lo, ∞)
PartiallyOpenPolyhedron box(std::size_t dim, const Rational &lo, const Rational &hi,
                            bool open = false);
PartiallyOpenPolyhedron unit_square(bool open = false);
PartiallyOpenPolyhedron half_open_interval(); // (0, 1]
PartiallyOpenPolyhedron closed_set(std::size_t dim, std::vector<Halfspace> rows);
Vec v(std::initializer_list<std::int64_t> xs);

/// Hand-picked sets: intervals, boxes, cones, strips, lower-dimensional sets, ℝⁿ, ∅.
std::vector<NamedSet> fixed_sets();

/// Random nonempty partially open polyhedron, n ≤ 3. A random interior center keeps
/// every row strictly satisfied somewhere, so any strict flags give a valid set.
PartiallyOpenPolyhedron random_set(Rng &rng, std::size_t dim);
/// Random bounded closed polytope (box plus random cuts through a neighbourhood of a center).
PartiallyOpenPolyhedron random_polytope(Rng &rng, std::size_t dim);
/// Closed polytope with one irredundant facet made strict: never portable.
PartiallyOpenPolyhedron random_non_portable(Rng &rng, std::size_t dim);
/// Line-free closed polyhedron, bounded or not.
PartiallyOpenPolyhedron random_line_free(Rng &rng, std::size_t dim);

/// Fixed sets followed by `random_count` seeded random sets with n ∈ {1, 2, 3}.
std::vector<NamedSet> corpus(std::size_t random_count, std::uint64_t seed = 0);

LPProblem random_lp(Rng &rng);

struct PsiInstance {
  MonotoneGraph t;
  PartiallyOpenPolyhedron c;
};

/// Monotone T (a* = M a + q with M's symmetric part PSD) of size ≤ 4 on a box C with
/// one domain point inside int C and some on the boundary.
PsiInstance random_psi_instance(Rng &rng, std::size_t dim);

} // namespace phk::testing
