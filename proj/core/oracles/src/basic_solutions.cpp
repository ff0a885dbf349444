#include "phk/oracles/basic_solutions.hpp"

#include "phk/errors.hpp"
#include "phk/linalg.hpp"

#include <algorithm>

namespace phk::oracles {

namespace {

struct Column {
  Vec entries; // (a, a* or g, 1 or 0)
  Rational cost;
};

// Calls f on every k-subset of {0..n-1}, in lexicographic order.
template <class F> void for_each_subset(std::size_t n, std::size_t k, F &&f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i)
    idx[i] = i;
  if (k > n)
    return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

} // namespace

ExtValue psi_sum_enumerated(const MonotoneGraph &t, const PartiallyOpenPolyhedron &c,
                            std::span<const Rational> x, std::span<const Rational> xstar) {
  const std::size_t n = t.dim();
  if (n > 2 || t.size() > 4)
    throw UnsupportedScale("psi_sum_enumerated supports n ≤ 2 and |T| ≤ 4");
  if (!c.is_closed() || c.is_empty())
    throw PreconditionError("psi_sum_enumerated requires a nonempty closed set");

  std::vector<Column> cols;
  std::vector<std::size_t> directions;
  for (const auto &p : t.pairs()) {
    if (!c.carrier().contains(p.a))
      continue;
    Vec e = p.a;
    e.insert(e.end(), p.astar.begin(), p.astar.end());
    e.push_back(Rational(1));
    cols.push_back({std::move(e), dot(p.a, p.astar)});
    for (std::size_t g = 0; g < c.rows().size(); ++g)
      if (dot(c.rows()[g].normal, p.a) == c.rows()[g].offset &&
          std::find(directions.begin(), directions.end(), g) == directions.end())
        directions.push_back(g);
  }
  if (cols.empty())
    return ExtValue::pos_inf();
  for (auto g : directions) {
    Vec e(n, Rational(0));
    e.insert(e.end(), c.rows()[g].normal.begin(), c.rows()[g].normal.end());
    e.push_back(Rational(0));
    cols.push_back({std::move(e), c.rows()[g].offset});
  }

  // Equality system M·w = r with M's columns the entries above.
  const std::size_t m = 2 * n + 1;
  Vec rhs(x.begin(), x.end());
  rhs.insert(rhs.end(), xstar.begin(), xstar.end());
  rhs.push_back(Rational(1));
  Matrix aug(m, Vec(cols.size() + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < cols.size(); ++k)
      aug[i][k] = cols[k].entries[i];
    aug[i][cols.size()] = rhs[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols.size())
    return ExtValue::pos_inf(); // inconsistent
  const std::size_t r = pivots.size();

  Inf best;
  for_each_subset(cols.size(), r, [&](const std::vector<std::size_t> &basis) {
    Matrix sq(r, Vec(r));
    Vec b(r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < r; ++k)
        sq[i][k] = aug[i][basis[k]];
      b[i] = aug[i][cols.size()];
    }
    auto w = solve_square(std::move(sq), std::move(b));
    if (!w || std::any_of(w->begin(), w->end(), [](const Rational &v) { return v.sign() < 0; }))
      return;
    Rational cost;
    for (std::size_t k = 0; k < r; ++k)
      cost += (*w)[k] * cols[basis[k]].cost;
    best.add(ExtValue(cost));
  });
  return best.value();
}

} // namespace phk::oracles
