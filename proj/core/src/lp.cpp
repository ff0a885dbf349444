#include "phk/lp.hpp"

#include "phk/errors.hpp"

#include <stdexcept>

namespace phk {

namespace {

// Dense tableau over the standard form  M z = rhs, z ≥ 0, rhs ≥ 0.
struct Tableau {
  std::vector<std::vector<mpq_class>> a;
  std::vector<mpq_class> rhs;
  std::vector<std::size_t> basis;
  std::vector<bool> basic;

  [[nodiscard]] std::size_t rows() const { return a.size(); }

  void pivot(std::size_t r, std::size_t c) {
    mpq_class inv = 1 / a[r][c];
    for (auto &x : a[r])
      x *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || sgn(a[i][c]) == 0)
        continue;
      mpq_class f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j)
        if (sgn(a[r][j]) != 0)
          a[i][j] -= f * a[r][j];
      rhs[i] -= f * rhs[r];
    }
    basic[basis[r]] = false;
    basis[r] = c;
    basic[c] = true;
  }

  [[nodiscard]] mpq_class reduced_cost(const std::vector<mpq_class> &cost, std::size_t j) const {
    mpq_class rc = cost[j];
    for (std::size_t i = 0; i < rows(); ++i)
      if (sgn(cost[basis[i]]) != 0 && sgn(a[i][j]) != 0)
        rc -= cost[basis[i]] * a[i][j];
    return rc;
  }

  [[nodiscard]] mpq_class objective(const std::vector<mpq_class> &cost) const {
    mpq_class v = 0;
    for (std::size_t i = 0; i < rows(); ++i)
      v += cost[basis[i]] * rhs[i];
    return v;
  }
};

struct PhaseEnd {
  bool unbounded{false};
  std::size_t column{0};
};

// Maximizes cost·z. Bland: lowest-index improving column enters; ratio ties leave
// by lowest basic variable index.
PhaseEnd run_phase(Tableau &t, const std::vector<mpq_class> &cost, std::size_t allowed_cols) {
  for (;;) {
    std::size_t enter = allowed_cols;
    for (std::size_t j = 0; j < allowed_cols; ++j) {
      if (t.basic[j])
        continue;
      if (sgn(t.reduced_cost(cost, j)) > 0) {
        enter = j;
        break;
      }
    }
    if (enter == allowed_cols)
      return {};
    std::size_t leave = t.rows();
    mpq_class best;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (sgn(t.a[i][enter]) <= 0)
        continue;
      mpq_class ratio = t.rhs[i] / t.a[i][enter];
      if (leave == t.rows() || ratio < best ||
          (ratio == best && t.basis[i] < t.basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == t.rows())
      return {true, enter};
    t.pivot(leave, enter);
  }
}

void check_dimensions(const LPProblem &p) {
  for (std::size_t i = 0; i < p.rows.size(); ++i)
    if (p.rows[i].normal.size() != p.dim())
      throw InputError("LP row " + std::to_string(i) + " has length " +
                       std::to_string(p.rows[i].normal.size()) + ", expected " +
                       std::to_string(p.dim()));
}

} // namespace

LPOutcome lp_solve(const LPProblem &problem) {
  check_dimensions(problem);
  const std::size_t n = problem.dim();
  const std::size_t m = problem.rows.size();

  // Columns: x⁺ [0,n), x⁻ [n,2n), slack [2n,2n+m), artificials after.
  std::vector<int> flip(m, 1);
  std::size_t artificials = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (problem.rows[i].offset.sign() < 0) {
      flip[i] = -1;
      ++artificials;
    }
  const std::size_t real_cols = 2 * n + m;
  const std::size_t cols = real_cols + artificials;

  Tableau t;
  t.a.assign(m, std::vector<mpq_class>(cols, 0));
  t.rhs.resize(m);
  t.basis.resize(m);
  t.basic.assign(cols, false);
  std::vector<std::size_t> initial(m);
  std::size_t next_art = real_cols;
  for (std::size_t i = 0; i < m; ++i) {
    const auto &row = problem.rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      t.a[i][j] = flip[i] * row.normal[j].raw();
      t.a[i][n + j] = -flip[i] * row.normal[j].raw();
    }
    t.a[i][2 * n + i] = flip[i];
    t.rhs[i] = flip[i] * row.offset.raw();
    if (flip[i] > 0) {
      initial[i] = 2 * n + i;
    } else {
      initial[i] = next_art;
      t.a[i][next_art] = 1;
      ++next_art;
    }
    t.basis[i] = initial[i];
    t.basic[initial[i]] = true;
  }

  auto duals = [&](const std::vector<mpq_class> &cost) {
    Vec y(m);
    for (std::size_t i = 0; i < m; ++i) {
      mpq_class s = 0;
      for (std::size_t k = 0; k < m; ++k)
        s += cost[t.basis[k]] * t.a[k][initial[i]];
      y[i] = Rational(mpq_class(flip[i] * s));
    }
    return y;
  };

  LPOutcome out;
  if (artificials > 0) {
    std::vector<mpq_class> phase1(cols, 0);
    for (std::size_t j = real_cols; j < cols; ++j)
      phase1[j] = -1;
    run_phase(t, phase1, cols);
    if (sgn(t.objective(phase1)) < 0) {
      out.status = LPOutcome::Status::Infeasible;
      out.farkas = duals(phase1);
      if (!verify_certificate(problem, out))
        throw std::logic_error("lp_solve: Farkas certificate failed verification");
      return out;
    }
    // Drive zero-level artificials out of the basis where a real column allows it.
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis[i] < real_cols)
        continue;
      for (std::size_t j = 0; j < real_cols; ++j)
        if (!t.basic[j] && sgn(t.a[i][j]) != 0) {
          t.pivot(i, j);
          break;
        }
    }
  }

  std::vector<mpq_class> cost(cols, 0);
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = problem.objective[j].raw();
    cost[n + j] = -problem.objective[j].raw();
  }
  PhaseEnd end = run_phase(t, cost, real_cols);

  if (end.unbounded) {
    std::vector<mpq_class> dz(cols, 0);
    dz[end.column] = 1;
    for (std::size_t i = 0; i < m; ++i)
      dz[t.basis[i]] = -t.a[i][end.column];
    out.status = LPOutcome::Status::Unbounded;
    out.ray.resize(n);
    for (std::size_t j = 0; j < n; ++j)
      out.ray[j] = Rational(mpq_class(dz[j] - dz[n + j]));
    out.ray = primitive(out.ray);
  } else {
    std::vector<mpq_class> z(cols, 0);
    for (std::size_t i = 0; i < m; ++i)
      z[t.basis[i]] = t.rhs[i];
    out.status = LPOutcome::Status::Optimal;
    out.primal.resize(n);
    for (std::size_t j = 0; j < n; ++j)
      out.primal[j] = Rational(mpq_class(z[j] - z[n + j]));
    out.value = dot(problem.objective, out.primal);
    out.dual = duals(cost);
  }
  if (!verify_certificate(problem, out))
    throw std::logic_error("lp_solve: certificate failed verification");
  return out;
}

bool verify_certificate(const LPProblem &problem, const LPOutcome &outcome) {
  const std::size_t n = problem.dim();
  const std::size_t m = problem.rows.size();
  auto combination = [&](const Vec &mult) {
    Vec s(n);
    for (std::size_t i = 0; i < m; ++i)
      if (!mult[i].is_zero())
        for (std::size_t j = 0; j < n; ++j)
          s[j] += mult[i] * problem.rows[i].normal[j];
    return s;
  };
  auto offsets = [&](const Vec &mult) {
    Rational s;
    for (std::size_t i = 0; i < m; ++i)
      s += mult[i] * problem.rows[i].offset;
    return s;
  };
  auto nonnegative = [](const Vec &v) {
    for (const auto &x : v)
      if (x.sign() < 0)
        return false;
    return true;
  };

  switch (outcome.status) {
  case LPOutcome::Status::Infeasible:
    return outcome.farkas.size() == m && nonnegative(outcome.farkas) &&
           is_zero(combination(outcome.farkas)) && offsets(outcome.farkas).sign() < 0;
  case LPOutcome::Status::Unbounded:
    if (outcome.ray.size() != n || dot(problem.objective, outcome.ray).sign() <= 0)
      return false;
    for (const auto &row : problem.rows)
      if (dot(row.normal, outcome.ray).sign() > 0)
        return false;
    return true;
  case LPOutcome::Status::Optimal:
    if (outcome.primal.size() != n || outcome.dual.size() != m || !nonnegative(outcome.dual))
      return false;
    for (const auto &row : problem.rows)
      if (dot(row.normal, outcome.primal) > row.offset)
        return false;
    return combination(outcome.dual) == problem.objective &&
           offsets(outcome.dual) == outcome.value &&
           dot(problem.objective, outcome.primal) == outcome.value;
  }
  return false;
}

StrictFeasibility strict_system_feasible(std::size_t dim, std::span<const StrictRow> rows) {
  bool any_strict = false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].normal.size() != dim)
      throw InputError("strict system row " + std::to_string(i) + " has length " +
                       std::to_string(rows[i].normal.size()) + ", expected " +
                       std::to_string(dim));
    any_strict = any_strict || rows[i].strict;
  }

  if (!any_strict) {
    LPProblem p{zeros(dim), {}};
    for (const auto &r : rows)
      p.rows.push_back({r.normal, r.offset});
    auto out = lp_solve(p);
    if (out.infeasible())
      return {};
    return {true, out.primal};
  }

  // Variables (x, t): maximize t with t added on strict rows, t ≤ 1.
  LPProblem p{unit(dim + 1, dim), {}};
  for (const auto &r : rows) {
    Vec normal = r.normal;
    normal.push_back(r.strict ? Rational(1) : Rational(0));
    p.rows.push_back({std::move(normal), r.offset});
  }
  p.rows.push_back({unit(dim + 1, dim), Rational(1)});
  auto out = lp_solve(p);
  if (!out.optimal() || out.value.sign() <= 0)
    return {};
  Vec x(out.primal.begin(), out.primal.begin() + static_cast<std::ptrdiff_t>(dim));
  return {true, std::move(x)};
}

} // namespace phk
