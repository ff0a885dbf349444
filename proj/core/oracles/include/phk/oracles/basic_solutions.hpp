#pragma once

#include "phk/ext_value.hpp"
#include "phk/fitzpatrick.hpp"
#include "phk/polyhedra.hpp"

namespace phk::oracles {

/// ψ_{T+N_C}(x, x*) for a closed C by explicit enumeration.
///
/// Graph(T + N_C) is the union over a ∈ D(T) ∩ C of {a} × (a* + cone{g : g active at a}).
/// The lower convex envelope of the coupling over it is a linear program whose
/// columns are the lifted pairs and the directions (0, g) with cost ⟨a, g⟩ = b_g.
/// Its minimum is taken over all basic feasible solutions. Assumes the value is
/// bounded below, which holds when C has nonempty interior. Sizes: n ≤ 2, |T| ≤ 4.
ExtValue psi_sum_enumerated(const MonotoneGraph &t, const PartiallyOpenPolyhedron &c,
                            std::span<const Rational> x, std::span<const Rational> xstar);

} // namespace phk::oracles
