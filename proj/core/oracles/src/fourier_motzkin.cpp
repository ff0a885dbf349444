#include "phk/oracles/fourier_motzkin.hpp"

#include "phk/errors.hpp"

#include <algorithm>

namespace phk::oracles {

namespace {

struct Row {
  Vec a;
  Rational b;
  bool strict;
  friend bool operator==(const Row &, const Row &) = default;
};

// Scales so the first nonzero coefficient has magnitude 1; keeps duplicates detectable.
Row tidy(Row r) {
  auto it = std::find_if(r.a.begin(), r.a.end(), [](const Rational &v) { return !v.is_zero(); });
  if (it != r.a.end()) {
    Rational s = it->abs();
    for (auto &v : r.a)
      v = v / s;
    r.b = r.b / s;
  }
  return r;
}

// Eliminates variable j; rows with a zero coefficient pass through.
std::vector<Row> eliminate(const std::vector<Row> &rows, std::size_t j) {
  std::vector<Row> pos, neg, out;
  for (const auto &r : rows) {
    int s = r.a[j].sign();
    (s > 0 ? pos : s < 0 ? neg : out).push_back(r);
  }
  for (const auto &p : pos)
    for (const auto &n : neg) {
      Rational wp = -n.a[j], wn = p.a[j];
      Row c{add(scale(wp, p.a), scale(wn, n.a)), wp * p.b + wn * n.b, p.strict || n.strict};
      c.a[j] = 0;
      out.push_back(tidy(std::move(c)));
    }
  std::sort(out.begin(), out.end(), [](const Row &x, const Row &y) {
    if (x.a != y.a)
      return x.a < y.a;
    if (x.b != y.b)
      return x.b < y.b;
    return x.strict < y.strict;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool constant_rows_hold(const std::vector<Row> &rows) {
  return std::all_of(rows.begin(), rows.end(), [](const Row &r) {
    return r.strict ? r.b.sign() > 0 : r.b.sign() >= 0;
  });
}

} // namespace

bool fm_feasible(std::size_t dim, std::span<const StrictRow> rows) {
  std::vector<Row> sys;
  for (const auto &r : rows) {
    if (r.normal.size() != dim)
      throw InputError("fm_feasible: dimension mismatch");
    sys.push_back(tidy({r.normal, r.offset, r.strict}));
  }
  for (std::size_t j = 0; j < dim; ++j)
    sys = eliminate(sys, j);
  return constant_rows_hold(sys);
}

FmMaximum fm_maximize(std::span<const Rational> objective, std::span<const Halfspace> rows) {
  const std::size_t n = objective.size();
  // Variables (x_0..x_{n-1}, z); z - objective·x ≤ 0.
  std::vector<Row> sys;
  Vec zrow(n + 1);
  for (std::size_t j = 0; j < n; ++j)
    zrow[j] = -objective[j];
  zrow[n] = 1;
  sys.push_back(tidy({zrow, Rational(0), false}));
  for (const auto &h : rows) {
    if (h.normal.size() != n)
      throw InputError("fm_maximize: dimension mismatch");
    Vec a = h.normal;
    a.push_back(Rational(0));
    sys.push_back(tidy({std::move(a), h.offset, false}));
  }
  for (std::size_t j = 0; j < n; ++j)
    sys = eliminate(sys, j);

  std::vector<Row> constants, bounds;
  for (auto &r : sys)
    (r.a[n].is_zero() ? constants : bounds).push_back(r);
  FmMaximum out;
  out.feasible = constant_rows_hold(constants);
  if (!out.feasible)
    return out;
  // Every surviving z coefficient is positive: z ≤ b / a.
  Inf best;
  for (const auto &r : bounds)
    best.add(ExtValue(r.b / r.a[n]));
  out.value = best.value();
  return out;
}

} // namespace phk::oracles
