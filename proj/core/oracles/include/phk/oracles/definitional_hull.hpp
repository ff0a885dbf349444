#pragma once

#include "phk/polyhedra.hpp"
#include "phk/portability.hpp"

namespace phk::oracles {

/// C# straight from its definition: the intersection of the half-spaces
/// {y : ⟨y - x, x*⟩ ≤ 0} over (x, x*) ∈ Graph N_C. At a point x of C the normal
/// cone is generated by the rows active at x, so the half-spaces contributed are
/// exactly the carrier rows i with {x ∈ C : row i active} ≠ ∅. Contact is decided
/// by Fourier–Motzkin, not by the LP kernel.
ClosedPolyhedron definitional_hull(const PartiallyOpenPolyhedron &c);

/// The same restricted to contact points in S.
ClosedPolyhedron definitional_partial_hull(const PartiallyOpenPolyhedron &c, const ContactSet &s);

} // namespace phk::oracles
