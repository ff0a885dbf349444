#pragma once

#include "phk/ext_value.hpp"
#include "phk/polyhedra.hpp"

#include <vector>

namespace phk {

/// A finite graph {(a, a*)} ⊂ ℝⁿ × ℝⁿ, the model of an operator T.
/// Duplicate pairs are dropped on construction; monotonicity is not assumed.
class MonotoneGraph {
public:
  struct Pair {
    Vec a;
    Vec astar;
    friend bool operator==(const Pair &, const Pair &) = default;
  };

  MonotoneGraph(std::size_t dim, std::vector<Pair> pairs);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<Pair> &pairs() const { return pairs_; }
  [[nodiscard]] std::size_t size() const { return pairs_.size(); }
  [[nodiscard]] bool empty() const { return pairs_.empty(); }
  /// D(T), without repetitions, in pair order.
  [[nodiscard]] std::vector<Vec> domain() const;

private:
  std::size_t dim_;
  std::vector<Pair> pairs_;
};

/// Pairwise ⟨a₁ - a₂, a₁* - a₂*⟩ ≥ 0.
bool is_monotone(const MonotoneGraph &g);

/// φ_T(x, x*) = max over pairs of ⟨x - a, a*⟩ + ⟨a, x*⟩; -∞ for the empty graph.
ExtValue phi_finite(const MonotoneGraph &g, std::span<const Rational> x,
                    std::span<const Rational> xstar);

/// Closed form of the Fitzpatrick function of N_C: ι_{C#}(x) + σ_C(x*).
/// Caches the portable hull so repeated evaluations cost one LP each.
class NormalConeFitzpatrick {
public:
  explicit NormalConeFitzpatrick(PartiallyOpenPolyhedron c);

  [[nodiscard]] ExtValue operator()(std::span<const Rational> x,
                                    std::span<const Rational> xstar) const;
  [[nodiscard]] const ClosedPolyhedron &portable_hull() const { return hull_; }
  [[nodiscard]] const PartiallyOpenPolyhedron &set() const { return c_; }

private:
  PartiallyOpenPolyhedron c_;
  ClosedPolyhedron hull_;
};

ExtValue phi_normal_cone(const PartiallyOpenPolyhedron &c, std::span<const Rational> x,
                         std::span<const Rational> xstar);

/// Brute-force evaluation of sup{⟨x - a, a*⟩ + ⟨a, x*⟩ : (a, a*) ∈ Graph N_C}.
///
/// Enumerates the faces of the carrier from its V-representation. On the relative
/// interior of a face F the active rows are fixed, so N_C is constant there and
/// ⟨x - a, a*⟩ = Σ t_g (g·x - b_g) does not depend on a: the sup over t ≥ 0 is 0 or
/// +∞, and the remaining term is the sup of ⟨a, x*⟩ over F, read off F's generators.
/// Faces whose relative interior misses C contribute nothing. Uses no LP.
class FaceEnumerationOracle {
public:
  static constexpr std::size_t max_dim = 3;
  static constexpr std::size_t max_rows = 16;

  explicit FaceEnumerationOracle(const PartiallyOpenPolyhedron &c);

  [[nodiscard]] ExtValue operator()(std::span<const Rational> x,
                                    std::span<const Rational> xstar) const;

  struct Face {
    Vec representative;
    std::vector<std::size_t> active;
    std::vector<Vec> vertices;
    std::vector<Vec> rays;
    bool meets_c{false};
  };
  [[nodiscard]] const std::vector<Face> &faces() const { return faces_; }
  [[nodiscard]] const std::vector<Vec> &lineality() const { return lineality_; }

private:
  std::size_t dim_;
  bool empty_{false};
  std::vector<Halfspace> rows_;
  std::vector<Face> faces_;
  std::vector<Vec> lineality_;
};

/// One-shot oracle evaluation; throws UnsupportedScale for n > 3.
ExtValue phi_nc_oracle(const PartiallyOpenPolyhedron &c, std::span<const Rational> x,
                       std::span<const Rational> xstar);

/// (x, x*) ∈ Graph N_C⁺, i.e. φ_{N_C}(x, x*) ≤ ⟨x, x*⟩.
bool monotonically_related_nc(const PartiallyOpenPolyhedron &c, std::span<const Rational> x,
                              std::span<const Rational> xstar);

} // namespace phk
