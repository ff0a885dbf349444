#pragma once

#include "phk/polyhedra.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace phk {

/// Deterministic sample generation. The default structured set is all carrier
/// vertices, edge midpoints and one relative-interior point; `random_points`
/// seeded rational points are appended.
struct SampleSpec {
  std::uint64_t seed{0};
  std::size_t random_points{64};
  std::size_t dual_points{16};
  std::size_t pairs{128};
};

/// mt19937_64 with range reduction done by hand so sequences do not depend on
/// the standard library's distribution implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// k/d with d ∈ [1, max_den] and k/d ∈ [lo, hi].
  Rational rational(const Rational &lo, const Rational &hi, std::int64_t max_den = 4);
  bool coin() { return (engine_() >> 63) != 0; }

private:
  std::mt19937_64 engine_;
};

/// Throws UnsupportedScale above the double-description limit.
std::vector<Vec> primal_samples(const PartiallyOpenPolyhedron &c, const SampleSpec &spec);
/// Zero, ±unit vectors, ± carrier normals, then seeded random vectors.
std::vector<Vec> dual_samples(const PartiallyOpenPolyhedron &c, const SampleSpec &spec);
/// `spec.pairs` pairs cycling through primal and dual samples.
std::vector<std::pair<Vec, Vec>> sample_pairs(const PartiallyOpenPolyhedron &c,
                                              const SampleSpec &spec);
/// Points of the carrier with at least one active row.
std::vector<Vec> boundary_samples(const PartiallyOpenPolyhedron &c, const SampleSpec &spec);

} // namespace phk
