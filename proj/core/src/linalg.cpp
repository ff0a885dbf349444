#include "phk/linalg.hpp"

#include "phk/errors.hpp"

namespace phk {

std::vector<std::size_t> rref(Matrix &m) {
  std::vector<std::size_t> pivots;
  if (m.empty())
    return pivots;
  std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero())
      ++p;
    if (p == m.size())
      continue;
    std::swap(m[p], m[r]);
    Rational inv = Rational(1) / m[r][c];
    for (auto &x : m[r])
      x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero())
        continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t affine_rank(const std::vector<Vec> &vectors) {
  if (vectors.empty())
    throw InputError("affine_rank of an empty list");
  std::size_t n = vectors.front().size();
  for (const auto &v : vectors)
    if (v.size() != n)
      throw InputError("affine_rank: vectors of different lengths");
  Matrix m = vectors;
  return rref(m).size();
}

std::vector<Vec> null_space(const Matrix &rows, std::size_t cols) {
  Matrix m = rows;
  for (const auto &r : m)
    if (r.size() != cols)
      throw InputError("null_space: row length mismatch");
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    Vec d(cols);
    d[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      d[pivots[i]] = -m[i][free];
    basis.push_back(primitive(d));
  }
  return basis;
}

std::optional<Vec> solve_square(Matrix m, Vec rhs) {
  std::size_t n = m.size();
  if (rhs.size() != n)
    throw InputError("solve_square: rhs length mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n)
      throw InputError("solve_square: matrix is not square");
    m[i].push_back(rhs[i]);
  }
  auto pivots = rref(m);
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1))
    return std::nullopt;
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = m[i][n];
  return x;
}

} // namespace phk
