#include "phk/representability.hpp"

#include "phk/errors.hpp"
#include "phk/lp.hpp"
#include "phk/normal_cones.hpp"
#include "phk/portability.hpp"

#include <algorithm>

namespace phk {

namespace {

void add_equality(LPProblem &p, Vec row, const Rational &rhs) {
  p.rows.push_back({scale(Rational(-1), row), -rhs});
  p.rows.push_back({std::move(row), rhs});
}

void add_nonnegative(LPProblem &p, std::size_t vars) {
  for (std::size_t i = 0; i < vars; ++i)
    p.rows.push_back({scale(Rational(-1), unit(vars, i)), Rational(0)});
}

void require_dims(std::size_t dim, std::span<const Rational> x, std::span<const Rational> xstar,
                  const char *op) {
  if (x.size() != dim || xstar.size() != dim)
    throw InputError(std::string(op) + ": dimension mismatch");
}

// Grid values lo, lo + step, ..., ≤ hi.
std::vector<Rational> axis(const Rational &lo, const Rational &hi, const Rational &step) {
  std::vector<Rational> out;
  for (Rational v = lo; v <= hi; v += step)
    out.push_back(v);
  return out;
}

std::vector<Vec> product(const std::vector<std::vector<Rational>> &axes) {
  std::vector<Vec> out{Vec{}};
  for (const auto &ax : axes) {
    std::vector<Vec> next;
    for (const auto &prefix : out)
      for (const auto &v : ax) {
        Vec p = prefix;
        p.push_back(v);
        next.push_back(std::move(p));
      }
    out = std::move(next);
  }
  return out;
}

} // namespace

PsiEvaluation psi_finite(const MonotoneGraph &g, std::span<const Rational> x,
                         std::span<const Rational> xstar) {
  require_dims(g.dim(), x, xstar, "psi_finite");
  if (g.empty())
    throw PreconditionError("psi_finite requires a nonempty graph");
  const std::size_t n = g.dim();
  const std::size_t k = g.size();
  const auto &pairs = g.pairs();

  LPProblem p{Vec(k), {}};
  for (std::size_t i = 0; i < k; ++i)
    p.objective[i] = -dot(pairs[i].a, pairs[i].astar);
  for (std::size_t j = 0; j < n; ++j) {
    Vec ra(k), rs(k);
    for (std::size_t i = 0; i < k; ++i) {
      ra[i] = pairs[i].a[j];
      rs[i] = pairs[i].astar[j];
    }
    add_equality(p, std::move(ra), x[j]);
    add_equality(p, std::move(rs), xstar[j]);
  }
  add_equality(p, Vec(k, Rational(1)), Rational(1));
  add_nonnegative(p, k);

  auto out = lp_solve(p);
  if (out.infeasible())
    return {ExtValue::pos_inf(), std::nullopt, std::nullopt};
  return {ExtValue(-out.value), out.primal, std::nullopt};
}

bool in_psi_eq_c(const MonotoneGraph &g, std::span<const Rational> x,
                 std::span<const Rational> xstar) {
  auto v = psi_finite(g, x, xstar).value;
  return v.is_finite() && v.value() == dot(x, xstar);
}

MonotoneGraph restrict_graph(const MonotoneGraph &t, const PartiallyOpenPolyhedron &c) {
  if (t.dim() != c.dim())
    throw InputError("restrict_graph: dimension mismatch");
  std::vector<MonotoneGraph::Pair> kept;
  for (const auto &p : t.pairs())
    if (contains(c, p.a))
      kept.push_back(p);
  return {t.dim(), std::move(kept)};
}

bool domain_meets_interior(const MonotoneGraph &t, const PartiallyOpenPolyhedron &c) {
  if (c.is_empty())
    return false;
  return std::any_of(t.pairs().begin(), t.pairs().end(), [&](const MonotoneGraph::Pair &p) {
    return std::all_of(c.rows().begin(), c.rows().end(),
                       [&](const Halfspace &h) { return dot(h.normal, p.a) < h.offset; });
  });
}

PsiEvaluation psi_sum(const MonotoneGraph &t, const PartiallyOpenPolyhedron &c,
                      std::span<const Rational> x, std::span<const Rational> xstar,
                      InteriorHypothesis hyp) {
  require_dims(t.dim(), x, xstar, "psi_sum");
  if (c.dim() != t.dim())
    throw InputError("psi_sum: graph and set dimensions differ");
  if (c.is_empty() || !c.is_closed())
    throw PreconditionError("psi_sum requires a nonempty closed set C");
  if (hyp == InteriorHypothesis::Enforce && !domain_meets_interior(t, c))
    throw PreconditionError("psi_sum requires D(T) ∩ int C ≠ ∅");

  auto tc = restrict_graph(t, c);
  if (tc.empty())
    return {ExtValue::pos_inf(), std::nullopt, std::nullopt};
  auto hull = partial_portable_hull(c, t.domain());

  const std::size_t n = t.dim();
  const std::size_t k = tc.size();
  const std::size_t r = hull.size();
  const std::size_t vars = k + r;
  const auto &pairs = tc.pairs();

  LPProblem p{Vec(vars), {}};
  for (std::size_t i = 0; i < k; ++i)
    p.objective[i] = -dot(pairs[i].a, pairs[i].astar);
  for (std::size_t l = 0; l < r; ++l)
    p.objective[k + l] = -hull.rows()[l].offset;
  for (std::size_t j = 0; j < n; ++j) {
    Vec ra(vars), rs(vars);
    for (std::size_t i = 0; i < k; ++i) {
      ra[i] = pairs[i].a[j];
      rs[i] = pairs[i].astar[j];
    }
    for (std::size_t l = 0; l < r; ++l)
      rs[k + l] = hull.rows()[l].normal[j];
    add_equality(p, std::move(ra), x[j]);
    add_equality(p, std::move(rs), xstar[j]);
  }
  Vec simplex(vars);
  for (std::size_t i = 0; i < k; ++i)
    simplex[i] = 1;
  add_equality(p, std::move(simplex), Rational(1));
  add_nonnegative(p, vars);

  auto out = lp_solve(p);
  if (out.infeasible())
    return {ExtValue::pos_inf(), std::nullopt, std::nullopt};
  if (out.unbounded())
    return {ExtValue::neg_inf(), std::nullopt, std::nullopt};
  Vec lambda(out.primal.begin(), out.primal.begin() + static_cast<std::ptrdiff_t>(k));
  Vec shift(n);
  for (std::size_t l = 0; l < r; ++l)
    shift = add(shift, scale(out.primal[k + l], hull.rows()[l].normal));
  return {ExtValue(-out.value), std::move(lambda), std::move(shift)};
}

SumMembership sum_graph_membership(const MonotoneGraph &t, const PartiallyOpenPolyhedron &c,
                                   std::span<const Rational> x, std::span<const Rational> xstar,
                                   InteriorHypothesis hyp) {
  SumMembership m;
  auto v = psi_sum(t, c, x, xstar, hyp).value;
  Rational coupling = dot(x, xstar);
  m.lhs = v.is_finite() && v.value() == coupling;
  if (!contains(c, x))
    return m;

  auto tc = restrict_graph(t, c);
  auto gens = normal_cone_at(c, x).generators();
  const std::size_t n = t.dim();
  const std::size_t k = tc.size();
  const std::size_t g = gens.size();
  const std::size_t vars = k + g;
  const auto &pairs = tc.pairs();

  LPProblem p{Vec(vars), {}};
  for (std::size_t j = 0; j < n; ++j) {
    Vec ra(vars), rs(vars);
    for (std::size_t i = 0; i < k; ++i) {
      ra[i] = pairs[i].a[j];
      rs[i] = pairs[i].astar[j];
    }
    for (std::size_t l = 0; l < g; ++l)
      rs[k + l] = gens[l][j];
    add_equality(p, std::move(ra), x[j]);
    add_equality(p, std::move(rs), xstar[j]);
  }
  Vec simplex(vars);
  for (std::size_t i = 0; i < k; ++i)
    simplex[i] = 1;
  add_equality(p, std::move(simplex), Rational(1));
  // Σλ_i c_i ≤ ⟨x, x* - Gμ⟩
  Vec gap(vars);
  for (std::size_t i = 0; i < k; ++i)
    gap[i] = dot(pairs[i].a, pairs[i].astar);
  for (std::size_t l = 0; l < g; ++l)
    gap[k + l] = dot(x, gens[l]);
  p.rows.push_back({std::move(gap), coupling});
  add_nonnegative(p, vars);

  auto out = lp_solve(p);
  if (!out.optimal())
    return m;
  Vec nstar(n);
  for (std::size_t l = 0; l < g; ++l)
    nstar = add(nstar, scale(out.primal[k + l], gens[l]));
  Vec tstar = sub(xstar, nstar);
  if (!in_psi_eq_c(tc, x, tstar))
    return m;
  m.rhs = true;
  m.tstar = std::move(tstar);
  m.nstar = std::move(nstar);
  return m;
}

std::string ProbeVerdict::label() const {
  switch (kind) {
  case Kind::CandidateVerifiedOnGrid:
    return "candidate-verified-on-grid";
  case Kind::Falsified:
    return "falsified";
  case Kind::Refused:
    break;
  }
  return "refused";
}

ProbeVerdict c_representable_probe(const MonotoneGraph &t, const PartiallyOpenPolyhedron &c,
                                   const GridSpec &grid) {
  if (grid.step.sign() <= 0 || grid.hi < grid.lo)
    throw InputError("grid needs a positive step and lo ≤ hi");
  ProbeVerdict v;
  if (t.dim() != c.dim())
    throw InputError("c_representable_probe: dimension mismatch");
  if (!is_monotone(t)) {
    v.reason = "T is not monotone";
    return v;
  }
  auto tc = restrict_graph(t, c);
  if (tc.empty()) {
    v.reason = "C ∩ D(T) is empty";
    return v;
  }
  auto falsify = [&](Vec x, Vec xs, std::string why) {
    v.kind = ProbeVerdict::Kind::Falsified;
    v.reason = std::move(why);
    v.witness = {std::move(x), std::move(xs)};
    return v;
  };
  for (const auto &p : tc.pairs())
    if (!in_psi_eq_c(tc, p.a, p.astar))
      return falsify(p.a, p.astar, "graph point of T|C is not on [h = c]");

  const std::size_t n = t.dim();
  std::vector<std::vector<Rational>> x_axes(n), s_axes(n, axis(grid.lo, grid.hi, grid.step));
  Vec lo(n, grid.lo), hi(n, grid.hi);
  if (n <= double_description_limit()) {
    auto vr = h_to_v(c.carrier());
    if (vr.rays.empty() && vr.lineality.empty() && !vr.vertices.empty()) {
      lo = hi = vr.vertices.front();
      for (const auto &p : vr.vertices)
        for (std::size_t j = 0; j < n; ++j) {
          lo[j] = std::min(lo[j], p[j]);
          hi[j] = std::max(hi[j], p[j]);
        }
      for (std::size_t j = 0; j < n; ++j) {
        lo[j] = std::max(lo[j], grid.lo);
        hi[j] = std::min(hi[j], grid.hi);
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    x_axes[j] = axis(lo[j], hi[j], grid.step);
  auto xs_grid = product(s_axes);
  for (const auto &x : product(x_axes)) {
    if (!contains(c, x))
      continue;
    for (const auto &xs : xs_grid) {
      ++v.grid_points;
      auto h = psi_finite(tc, x, xs).value;
      if (!h.is_finite())
        continue;
      Rational cpl = dot(x, xs);
      if (h.value() < cpl)
        return falsify(x, xs, "h < c at a grid point");
      if (h.value() == cpl) {
        MonotoneGraph::Pair pr{x, xs};
        if (std::find(tc.pairs().begin(), tc.pairs().end(), pr) == tc.pairs().end())
          return falsify(x, xs, "[h = c] contains a point outside Graph T|C");
      }
    }
  }
  v.kind = ProbeVerdict::Kind::CandidateVerifiedOnGrid;
  v.reason = "h = psi_{T|C} matches Graph T|C on every grid point";
  return v;
}

} // namespace phk
