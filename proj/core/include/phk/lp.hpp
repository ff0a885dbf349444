#pragma once

#include "phk/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace phk {

/// The closed half-space {x : normal·x ≤ offset}.
struct Halfspace {
  Vec normal;
  Rational offset;

  friend bool operator==(const Halfspace &, const Halfspace &) = default;
};

/// maximize objective·x subject to every row of `rows`; x is free.
struct LPProblem {
  Vec objective;
  std::vector<Halfspace> rows;

  [[nodiscard]] std::size_t dim() const { return objective.size(); }
};

/// Result of `lp_solve`, carrying a certificate for each status:
///  - Infeasible: `farkas` ≥ 0 with Σ farkas_i·normal_i = 0 and Σ farkas_i·offset_i < 0.
///  - Unbounded: `ray` with normal_i·ray ≤ 0 for every row and objective·ray > 0.
///  - Optimal: `primal` feasible, `dual` ≥ 0 with Σ dual_i·normal_i = objective and
///    Σ dual_i·offset_i = value = objective·primal.
struct LPOutcome {
  enum class Status { Infeasible, Unbounded, Optimal };

  Status status{Status::Infeasible};
  Vec farkas;
  Vec ray;
  Rational value;
  Vec primal;
  Vec dual;

  [[nodiscard]] bool optimal() const { return status == Status::Optimal; }
  [[nodiscard]] bool infeasible() const { return status == Status::Infeasible; }
  [[nodiscard]] bool unbounded() const { return status == Status::Unbounded; }
};

/// Two-phase primal simplex on a dense exact tableau with Bland's rule.
/// Deterministic: identical problems give identical outcomes. Every outcome is
/// re-verified with `verify_certificate` before it is returned.
LPOutcome lp_solve(const LPProblem &problem);

/// Checks the certificate carried by `outcome` against `problem` from scratch.
bool verify_certificate(const LPProblem &problem, const LPOutcome &outcome);

/// Row of a system that may mix `≤` and `<`.
struct StrictRow {
  Vec normal;
  Rational offset;
  bool strict{false};
};

struct StrictFeasibility {
  bool feasible{false};
  std::optional<Vec> witness; // satisfies every row, strict ones strictly
};

/// Decides whether {x : normal·x ≤ offset, and < on strict rows} is nonempty.
///
/// With strict rows present this maximizes a common slack t ≤ 1 on the strict rows;
/// the system is feasible iff the optimal t is positive.
StrictFeasibility strict_system_feasible(std::size_t dim, std::span<const StrictRow> rows);

} // namespace phk
