#pragma once

#include "phk/ext_value.hpp"
#include "phk/lp.hpp"

#include <span>

namespace phk::oracles {

/// Feasibility of a mixed ≤ / < system by Fourier–Motzkin elimination.
/// A combined row is strict if either parent is. Exponential; meant for n ≤ 3.
bool fm_feasible(std::size_t dim, std::span<const StrictRow> rows);

struct FmMaximum {
  bool feasible{false};
  ExtValue value; // +∞ when unbounded; meaningful only if feasible
};

/// max objective·x over the rows, by eliminating x from {z ≤ objective·x} ∪ rows.
FmMaximum fm_maximize(std::span<const Rational> objective, std::span<const Halfspace> rows);

} // namespace phk::oracles
