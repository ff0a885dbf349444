#pragma once

#include "phk/ext_value.hpp"
#include "phk/polyhedra.hpp"

#include <optional>
#include <vector>

namespace phk {

/// σ_C(x*) = sup{⟨x, x*⟩ : x ∈ C}, together with whether C itself attains it.
struct SupportEvaluation {
  ExtValue value;
  bool attained_in_c{false};
  std::optional<Vec> witness; // a point of C with ⟨witness, x*⟩ = value
};

/// Support function of C. σ_∅ = -∞. The value is the LP optimum over the
/// carrier; attainment in C is decided by strict feasibility on the optimal face.
SupportEvaluation sigma(const PartiallyOpenPolyhedron &c, std::span<const Rational> xstar);

/// Value of σ_C(x*) only (one LP, no attainment test).
ExtValue support_value(const PartiallyOpenPolyhedron &c, std::span<const Rational> xstar);

/// N_C(x) as the cone of carrier normals active at x. Throws DomainError if x ∉ C.
GeneratedCone normal_cone_at(const PartiallyOpenPolyhedron &c, std::span<const Rational> x);

/// x* ∈ N_C(x), i.e. x ∈ C and σ_C(x*) = ⟨x, x*⟩.
bool in_normal_cone(const PartiallyOpenPolyhedron &c, std::span<const Rational> x,
                    std::span<const Rational> xstar);

/// Carrier rows whose hyperplane meets C. Supp C is C intersected with the union
/// of these hyperplanes; an empty result means Supp C = ∅.
std::vector<std::size_t> supporting_rows(const PartiallyOpenPolyhedron &c);

/// A point of C on the hyperplane of carrier row `row`, if any.
std::optional<Vec> contact_point(const PartiallyOpenPolyhedron &c, std::size_t row);

struct RangeMembership {
  bool member{false};
  std::optional<Vec> witness; // x* ∈ N_C(witness)
};

/// x* ∈ R(N_C): σ_C(x*) is attained at a point of C.
RangeMembership in_range_N(const PartiallyOpenPolyhedron &c, std::span<const Rational> xstar);

/// x ∈ Supp C, i.e. x ∈ C and some carrier row is active at x.
bool is_support_point(const PartiallyOpenPolyhedron &c, std::span<const Rational> x);

} // namespace phk
