#pragma once

#include "phk/ext_value.hpp"
#include "phk/polyhedra.hpp"
#include "phk/sampling.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace phk {

/// C#: intersection of the carrier half-spaces whose hyperplane touches C.
/// ℝⁿ (zero rows) when Supp C = ∅, in particular for C = ∅. Canonicalized.
ClosedPolyhedron portable_hull(const PartiallyOpenPolyhedron &c);

/// The selector S of a partial portable hull: a polyhedral set or finitely many points.
using ContactSet = std::variant<PartiallyOpenPolyhedron, std::vector<Vec>>;

/// C#_S: keeps carrier row i iff its hyperplane meets C ∩ S.
ClosedPolyhedron partial_portable_hull(const PartiallyOpenPolyhedron &c, const ContactSet &s);

/// C ≠ ∅ and C# ⊆ C.
bool is_portable(const PartiallyOpenPolyhedron &c);

struct ConditionTwo {
  bool holds{true};
  std::size_t samples_checked{0};
  // First pair where φ_{N_C}(x, x*) differs from ι_C(x) + σ_C(x*).
  std::optional<std::pair<Vec, Vec>> witness;
  ExtValue phi_at_witness;
  ExtValue rhs_at_witness;
};

/// The four equivalent maximality conditions for N_C, evaluated on one set.
///  (i)   N_C maximal monotone: reported equal to (iii), corroborated on samples.
///  (ii)  φ_{N_C} = ι_C ⊕ σ_C: checked on sampled pairs plus targeted points of C# \ C.
///  (iii) C# ⊆ C: exact.
///  (iv)  C = {x : φ_{N_C}(x, 0) ≤ 0}: exact, that sublevel set being C#.
struct PortabilityReport {
  bool cond_i{false};
  ConditionTwo cond_ii;
  bool cond_iii{false};
  bool cond_iv{false};
  ClosedPolyhedron portable_hull = ClosedPolyhedron::space(1);
  // Monotonically related pairs tested for membership in Graph N_C.
  std::size_t corroboration_pairs{0};
  std::size_t corroboration_in_graph{0};
  std::optional<std::pair<Vec, Vec>> extension_witness; // m.r. pair outside Graph N_C

  [[nodiscard]] bool coherent() const;
};

PortabilityReport ncmm_report(const PartiallyOpenPolyhedron &c, const SampleSpec &spec);

/// A point of C# violating some row of C, if C# ⊄ C.
std::optional<Vec> point_outside(const ClosedPolyhedron &hull, const PartiallyOpenPolyhedron &c);

struct SeparationCertificate {
  Vec nstar;
  Vec support_point;
  Rational margin;
};

struct SeparationResult {
  std::optional<SeparationCertificate> certificate; // nullopt: none exists
  bool in_portable_hull{false};
};

/// For x ∉ C, a support functional n* ∈ R(N_C) with ⟨x, n*⟩ > σ_C(n*), or none when x ∈ C#.
/// Throws PreconditionError when x ∈ C or C = ∅.
SeparationResult separation_certificate(const PartiallyOpenPolyhedron &c,
                                        std::span<const Rational> x);

/// Re-checks a certificate from the definitions (membership, σ by LP, margin).
bool verify_separation(const PartiallyOpenPolyhedron &c, std::span<const Rational> x,
                       const SeparationCertificate &cert);

struct EncReport {
  ClosedPolyhedron hull = ClosedPolyhedron::space(1);
  bool hull_idempotent{false};  // (C#)# = C#
  bool hull_portable{false};    // N_{C#} maximal monotone
  std::size_t cone_points{0};
  bool cones_agree{true};       // N_{C#}(x) = N_C(x) on sampled x ∈ C
  std::size_t graph_pairs{0};
  bool graph_included{true};    // Graph N_C ⊆ Graph N_{C#} on samples
  std::optional<Vec> failing_point;

  [[nodiscard]] bool ok() const {
    return hull_idempotent && hull_portable && cones_agree && graph_included;
  }
};

EncReport enc_check(const PartiallyOpenPolyhedron &c, const SampleSpec &spec);

struct NcsReport {
  ClosedPolyhedron partial_hull = ClosedPolyhedron::space(1);
  bool partial_idempotent{false}; // (C#_S)#_S = C#_S
  bool full_idempotent{false};    // (C#_S)# = C#_S
  bool traces_equal{false};       // S ∩ C = S ∩ C#_S
  std::optional<Vec> trace_witness;
  std::size_t samples{0};
  bool restrictions_equal{true};  // N_C|_S = N_{C#_S}|_S on samples
  std::optional<std::pair<Vec, Vec>> restriction_witness;

  [[nodiscard]] bool iff_agrees() const { return traces_equal == restrictions_equal; }
  [[nodiscard]] bool ok() const { return partial_idempotent && full_idempotent && iff_agrees(); }
};

NcsReport ncs_check(const PartiallyOpenPolyhedron &c, const ContactSet &s, const SampleSpec &spec);

struct Thm7Report {
  bool line_free{false};
  bool bounded{false};
  bool portable{false};
  std::size_t duals_checked{0};
  std::size_t disagreements{0};   // dom σ_C membership ≠ R(N_C) membership
  std::size_t outside_range{0};   // sampled x* ∉ R(N_C)
  std::optional<Vec> failing_dual;

  [[nodiscard]] bool ok() const {
    return (!line_free || portable) && disagreements == 0 && (!bounded || outside_range == 0);
  }
};

/// Line-free closed sets: portability, and dom σ_C vs R(N_C) on the given duals.
Thm7Report thm7_check(const ClosedPolyhedron &c, std::span<const Vec> duals);

struct BoundaryProbeReport {
  std::size_t boundary_points{0};
  std::size_t support_points{0};
  std::optional<Vec> counterexample;

  [[nodiscard]] bool ok() const { return boundary_points == support_points; }
};

/// Every sampled point of C on the carrier boundary must be a support point.
BoundaryProbeReport bp_probe(const PartiallyOpenPolyhedron &c, std::span<const Vec> samples);

} // namespace phk
