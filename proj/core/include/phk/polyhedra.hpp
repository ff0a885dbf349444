#pragma once

#include "phk/lp.hpp"
#include "phk/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace phk {

/// {x ∈ ℝⁿ : normal_i·x ≤ offset_i for every row}. Zero rows encode ℝⁿ.
///
/// Row normals are nonzero. Irredundancy is produced by `canonicalize`, not
/// enforced by the constructor; emptiness is a computed property.
class ClosedPolyhedron {
public:
  ClosedPolyhedron(std::size_t dim, std::vector<Halfspace> rows);
  static ClosedPolyhedron space(std::size_t dim) { return {dim, {}}; }

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<Halfspace> &rows() const { return rows_; }
  [[nodiscard]] std::size_t size() const { return rows_.size(); }
  [[nodiscard]] bool is_space() const { return rows_.empty(); }

  [[nodiscard]] bool contains(std::span<const Rational> x) const;
  [[nodiscard]] bool is_empty() const;
  /// Indices of rows with normal·x = offset.
  [[nodiscard]] std::vector<std::size_t> active_rows(std::span<const Rational> x) const;

  friend bool operator==(const ClosedPolyhedron &, const ClosedPolyhedron &) = default;

private:
  std::size_t dim_;
  std::vector<Halfspace> rows_;
};

/// A closed carrier with some rows made strict:
///   C = {x : rows hold, strict rows hold strictly}.
///
/// Valid instances are nonempty; for those the closure of C is the carrier.
/// The empty set is a distinguished value (`empty(dim)`), never a row system.
class PartiallyOpenPolyhedron {
public:
  /// Throws InvalidSet when the described set is empty.
  static PartiallyOpenPolyhedron create(ClosedPolyhedron carrier, std::vector<bool> strict);
  static PartiallyOpenPolyhedron closed(ClosedPolyhedron carrier);
  static PartiallyOpenPolyhedron from_rows(std::size_t dim, std::span<const StrictRow> rows);
  /// No validation; for diagnostics such as `validate`.
  static PartiallyOpenPolyhedron unchecked(ClosedPolyhedron carrier, std::vector<bool> strict);
  static PartiallyOpenPolyhedron empty(std::size_t dim);
  static PartiallyOpenPolyhedron space(std::size_t dim);

  [[nodiscard]] std::size_t dim() const { return carrier_.dim(); }
  [[nodiscard]] bool is_empty() const { return empty_; }
  [[nodiscard]] const ClosedPolyhedron &carrier() const { return carrier_; }
  [[nodiscard]] const std::vector<Halfspace> &rows() const { return carrier_.rows(); }
  [[nodiscard]] bool is_strict(std::size_t row) const { return strict_.at(row); }
  [[nodiscard]] const std::vector<bool> &strict_flags() const { return strict_; }
  [[nodiscard]] bool is_closed() const;
  [[nodiscard]] std::vector<StrictRow> strict_rows() const;

private:
  PartiallyOpenPolyhedron(ClosedPolyhedron carrier, std::vector<bool> strict, bool empty);
  ClosedPolyhedron carrier_;
  std::vector<bool> strict_;
  bool empty_{false};
};

/// Scales a row so its normal is a primitive integer vector.
Halfspace normalized(const Halfspace &row);

/// Removes redundant rows (one LP per row), drops 0 ≤ b rows, keeps both rows of
/// implicit equalities. nullopt means the system is infeasible.
std::optional<ClosedPolyhedron> canonicalize(std::size_t dim, std::span<const Halfspace> rows);

struct Validation {
  bool nonempty{false};
  bool closure_is_carrier{false};
};
Validation validate(const PartiallyOpenPolyhedron &c);

bool contains(const PartiallyOpenPolyhedron &c, std::span<const Rational> x);

/// Every point of `p` lies in `c` (exact, one LP per row of `c`).
bool closed_subset_of(const ClosedPolyhedron &p, const PartiallyOpenPolyhedron &c);
bool closed_subset_of(const ClosedPolyhedron &p, const ClosedPolyhedron &q);
bool same_set(const ClosedPolyhedron &p, const ClosedPolyhedron &q);

/// Basis of {d : normal·d = 0 for all rows}; empty means line-free. Throws on empty P.
std::vector<Vec> lineality_space(const ClosedPolyhedron &p);

/// Finitely generated cone {Σ t_k g_k : t_k ≥ 0}; no generators means {0}.
class GeneratedCone {
public:
  GeneratedCone(std::size_t dim, std::vector<Vec> generators);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<Vec> &generators() const { return generators_; }
  [[nodiscard]] bool is_trivial() const;
  /// Exact membership via LP feasibility of Σ t_k g_k = v, t ≥ 0.
  [[nodiscard]] bool contains(std::span<const Rational> v) const;
  [[nodiscard]] bool subset_of(const GeneratedCone &other) const;
  [[nodiscard]] bool same_cone(const GeneratedCone &other) const;

private:
  std::size_t dim_;
  std::vector<Vec> generators_;
};

/// conv(vertices) + cone(rays) + span(lineality).
struct VRep {
  std::vector<Vec> vertices;
  std::vector<Vec> rays;
  std::vector<Vec> lineality;

  [[nodiscard]] bool is_empty() const { return vertices.empty(); }
};

/// Largest dimension accepted by the double description routines: 6, or the
/// value of the PHK_MAX_DIM environment variable when set.
std::size_t double_description_limit();

/// Exact H → V conversion. Vertices are minimal-face representatives when the
/// polyhedron has lines. Throws UnsupportedScale above the limit.
VRep h_to_v(const ClosedPolyhedron &p);
/// Exact V → H conversion of a nonempty V-representation, canonicalized.
ClosedPolyhedron v_to_h(std::size_t dim, const VRep &v);

} // namespace phk
