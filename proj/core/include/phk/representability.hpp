#pragma once

#include "phk/ext_value.hpp"
#include "phk/fitzpatrick.hpp"
#include "phk/polyhedra.hpp"

#include <optional>
#include <string>

namespace phk {

/// ψ_T for a finite graph is taken to be the lsc convex hull of c + ι_{Graph T}:
/// the lower convex envelope of the lifted points (a_i, a_i*, ⟨a_i, a_i*⟩).
struct PsiEvaluation {
  ExtValue value;
  std::optional<Vec> coefficients; // convex weights over the graph pairs used
  std::optional<Vec> dual_shift;   // u* of the inf-convolution (psi_sum only)
};

/// min Σλ_i⟨a_i, a_i*⟩ over λ in the simplex with Σλ_i(a_i, a_i*) = (x, x*); +∞ off the hull.
PsiEvaluation psi_finite(const MonotoneGraph &g, std::span<const Rational> x,
                         std::span<const Rational> xstar);

/// ψ_G(x, x*) = ⟨x, x*⟩.
bool in_psi_eq_c(const MonotoneGraph &g, std::span<const Rational> x,
                 std::span<const Rational> xstar);

/// Graph(T|_C) = Graph T ∩ (C × ℝⁿ).
MonotoneGraph restrict_graph(const MonotoneGraph &t, const PartiallyOpenPolyhedron &c);

/// Some a ∈ D(T) satisfies every carrier row of C strictly.
bool domain_meets_interior(const MonotoneGraph &t, const PartiallyOpenPolyhedron &c);

/// Whether psi_sum and sum_graph_membership insist on D(T) ∩ int C ≠ ∅. The LP is
/// well defined without it (finite T, polyhedral C); `Skip` evaluates it anyway.
enum class InteriorHypothesis { Enforce, Skip };

/// ψ_{T+N_C}(x, x*) = min over u* of ψ_{T|C}(x, x* - u*) + σ_P(u*), P = C#_{D(T)}.
///
/// Solved as one LP in (λ, μ): σ_P(u*) = min{b·μ : Aᵀμ = u*, μ ≥ 0} by LP duality,
/// with u* = Aᵀμ eliminated. C must be closed, and with `Enforce` D(T) ∩ int C ≠ ∅;
/// otherwise PreconditionError.
PsiEvaluation psi_sum(const MonotoneGraph &t, const PartiallyOpenPolyhedron &c,
                      std::span<const Rational> x, std::span<const Rational> xstar,
                      InteriorHypothesis hyp = InteriorHypothesis::Enforce);

struct SumMembership {
  bool lhs{false}; // ψ_{T+N_C}(x, x*) = ⟨x, x*⟩
  bool rhs{false}; // (x, x*) ∈ [ψ_{T|C} = c] + N_C
  std::optional<Vec> tstar;
  std::optional<Vec> nstar;

  [[nodiscard]] bool agrees() const { return lhs == rhs; }
};

SumMembership sum_graph_membership(const MonotoneGraph &t, const PartiallyOpenPolyhedron &c,
                                   std::span<const Rational> x, std::span<const Rational> xstar,
                                   InteriorHypothesis hyp = InteriorHypothesis::Enforce);

/// Rational grid: x over C's bounding box (clamped to [lo, hi]) and x* over [lo, hi]ⁿ.
struct GridSpec {
  Rational step{1, 4};
  Rational lo{-2};
  Rational hi{2};
};

struct ProbeVerdict {
  enum class Kind { CandidateVerifiedOnGrid, Falsified, Refused };
  Kind kind{Kind::Refused};
  std::string reason;
  std::optional<std::pair<Vec, Vec>> witness;
  std::size_t grid_points{0};

  [[nodiscard]] std::string label() const;
};

/// Tests h = ψ_{T|C} as a representative of T in C: h ≥ c, graph points of T|C on
/// [h = c], and no other grid point of C × ℝⁿ on [h = c]. A probe, not a decision.
ProbeVerdict c_representable_probe(const MonotoneGraph &t, const PartiallyOpenPolyhedron &c,
                                   const GridSpec &grid);

} // namespace phk
