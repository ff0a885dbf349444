#include "phk/polyhedra.hpp"

#include "phk/errors.hpp"
#include "phk/linalg.hpp"

#include <algorithm>

namespace phk {

ClosedPolyhedron::ClosedPolyhedron(std::size_t dim, std::vector<Halfspace> rows)
    : dim_(dim), rows_(std::move(rows)) {
  if (dim_ == 0)
    throw InputError("polyhedron dimension must be at least 1");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].normal.size() != dim_)
      throw InputError("row " + std::to_string(i) + " has length " +
                       std::to_string(rows_[i].normal.size()) + ", expected " +
                       std::to_string(dim_));
    if (is_zero(rows_[i].normal))
      throw InputError("row " + std::to_string(i) + " has a zero normal");
  }
}

bool ClosedPolyhedron::contains(std::span<const Rational> x) const {
  if (x.size() != dim_)
    throw InputError("point dimension " + std::to_string(x.size()) + " does not match " +
                     std::to_string(dim_));
  return std::all_of(rows_.begin(), rows_.end(),
                     [&](const Halfspace &r) { return dot(r.normal, x) <= r.offset; });
}

bool ClosedPolyhedron::is_empty() const {
  return lp_solve({zeros(dim_), rows_}).infeasible();
}

std::vector<std::size_t> ClosedPolyhedron::active_rows(std::span<const Rational> x) const {
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (dot(rows_[i].normal, x) == rows_[i].offset)
      active.push_back(i);
  return active;
}

PartiallyOpenPolyhedron::PartiallyOpenPolyhedron(ClosedPolyhedron carrier,
                                                 std::vector<bool> strict, bool empty)
    : carrier_(std::move(carrier)), strict_(std::move(strict)), empty_(empty) {
  if (strict_.size() != carrier_.size())
    throw InputError("strictness flags (" + std::to_string(strict_.size()) +
                     ") do not match carrier rows (" + std::to_string(carrier_.size()) + ")");
}

PartiallyOpenPolyhedron PartiallyOpenPolyhedron::unchecked(ClosedPolyhedron carrier,
                                                           std::vector<bool> strict) {
  return {std::move(carrier), std::move(strict), false};
}

PartiallyOpenPolyhedron PartiallyOpenPolyhedron::create(ClosedPolyhedron carrier,
                                                        std::vector<bool> strict) {
  auto c = unchecked(std::move(carrier), std::move(strict));
  auto v = validate(c);
  if (!v.nonempty || !v.closure_is_carrier)
    throw InvalidSet("row system describes the empty set; use the distinguished empty value");
  return c;
}

PartiallyOpenPolyhedron PartiallyOpenPolyhedron::closed(ClosedPolyhedron carrier) {
  std::vector<bool> flags(carrier.size(), false);
  return create(std::move(carrier), std::move(flags));
}

PartiallyOpenPolyhedron PartiallyOpenPolyhedron::from_rows(std::size_t dim,
                                                           std::span<const StrictRow> rows) {
  std::vector<Halfspace> h;
  std::vector<bool> flags;
  for (const auto &r : rows) {
    h.push_back({r.normal, r.offset});
    flags.push_back(r.strict);
  }
  return create(ClosedPolyhedron(dim, std::move(h)), std::move(flags));
}

PartiallyOpenPolyhedron PartiallyOpenPolyhedron::empty(std::size_t dim) {
  return {ClosedPolyhedron::space(dim), {}, true};
}

PartiallyOpenPolyhedron PartiallyOpenPolyhedron::space(std::size_t dim) {
  return {ClosedPolyhedron::space(dim), {}, false};
}

bool PartiallyOpenPolyhedron::is_closed() const {
  return std::none_of(strict_.begin(), strict_.end(), [](bool b) { return b; });
}

std::vector<StrictRow> PartiallyOpenPolyhedron::strict_rows() const {
  std::vector<StrictRow> out;
  out.reserve(rows().size());
  for (std::size_t i = 0; i < rows().size(); ++i)
    out.push_back({rows()[i].normal, rows()[i].offset, strict_[i]});
  return out;
}

Halfspace normalized(const Halfspace &row) {
  Vec p = primitive(row.normal);
  std::size_t k = 0;
  while (row.normal[k].is_zero())
    ++k;
  Rational factor = p[k] / row.normal[k];
  return {std::move(p), factor * row.offset};
}

std::optional<ClosedPolyhedron> canonicalize(std::size_t dim, std::span<const Halfspace> rows) {
  std::vector<Halfspace> kept;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].normal.size() != dim)
      throw InputError("row " + std::to_string(i) + " has length " +
                       std::to_string(rows[i].normal.size()) + ", expected " +
                       std::to_string(dim));
    if (is_zero(rows[i].normal)) {
      if (rows[i].offset.sign() < 0)
        return std::nullopt;
      continue;
    }
    Halfspace h = normalized(rows[i]);
    if (std::find(kept.begin(), kept.end(), h) == kept.end())
      kept.push_back(std::move(h));
  }
  if (lp_solve({zeros(dim), kept}).infeasible())
    return std::nullopt;

  for (std::size_t i = 0; i < kept.size();) {
    std::vector<Halfspace> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i)
        others.push_back(kept[j]);
    auto out = lp_solve({kept[i].normal, others});
    if (out.optimal() && out.value <= kept[i].offset)
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return ClosedPolyhedron(dim, std::move(kept));
}

Validation validate(const PartiallyOpenPolyhedron &c) {
  if (c.is_empty())
    return {};
  auto rows = c.strict_rows();
  bool nonempty = strict_system_feasible(c.dim(), rows).feasible;
  // For a nonempty C the segment from a point of C to any carrier point stays in C
  // except at its endpoint, so cl C is the carrier exactly when C is nonempty.
  return {nonempty, nonempty};
}

bool contains(const PartiallyOpenPolyhedron &c, std::span<const Rational> x) {
  if (x.size() != c.dim())
    throw InputError("point dimension " + std::to_string(x.size()) + " does not match " +
                     std::to_string(c.dim()));
  if (c.is_empty())
    return false;
  for (std::size_t i = 0; i < c.rows().size(); ++i) {
    Rational lhs = dot(c.rows()[i].normal, x);
    if (c.is_strict(i) ? !(lhs < c.rows()[i].offset) : lhs > c.rows()[i].offset)
      return false;
  }
  return true;
}

bool closed_subset_of(const ClosedPolyhedron &p, const PartiallyOpenPolyhedron &c) {
  if (p.dim() != c.dim())
    throw InputError("closed_subset_of: dimension mismatch");
  if (c.is_empty())
    return p.is_empty();
  for (std::size_t i = 0; i < c.rows().size(); ++i) {
    const auto &row = c.rows()[i];
    auto out = lp_solve({row.normal, p.rows()});
    if (out.infeasible())
      return true;
    if (out.unbounded())
      return false;
    if (c.is_strict(i) ? !(out.value < row.offset) : out.value > row.offset)
      return false;
  }
  return true;
}

bool closed_subset_of(const ClosedPolyhedron &p, const ClosedPolyhedron &q) {
  if (p.dim() != q.dim())
    throw InputError("closed_subset_of: dimension mismatch");
  return closed_subset_of(p, PartiallyOpenPolyhedron::unchecked(
                                 q, std::vector<bool>(q.size(), false)));
}

bool same_set(const ClosedPolyhedron &p, const ClosedPolyhedron &q) {
  return closed_subset_of(p, q) && closed_subset_of(q, p);
}

std::vector<Vec> lineality_space(const ClosedPolyhedron &p) {
  if (p.is_empty())
    throw InputError("lineality_space of an empty polyhedron");
  Matrix normals;
  for (const auto &r : p.rows())
    normals.push_back(r.normal);
  return null_space(normals, p.dim());
}

GeneratedCone::GeneratedCone(std::size_t dim, std::vector<Vec> generators)
    : dim_(dim), generators_(std::move(generators)) {
  for (const auto &g : generators_)
    if (g.size() != dim_)
      throw InputError("cone generator has wrong dimension");
}

bool GeneratedCone::is_trivial() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Vec &g) { return is_zero(g); });
}

bool GeneratedCone::contains(std::span<const Rational> v) const {
  if (v.size() != dim_)
    throw InputError("cone membership: dimension mismatch");
  if (generators_.empty())
    return is_zero(v);
  const std::size_t k = generators_.size();
  LPProblem p{zeros(k), {}};
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec row(k);
    for (std::size_t g = 0; g < k; ++g)
      row[g] = generators_[g][j];
    p.rows.push_back({row, v[j]});
    p.rows.push_back({scale(Rational(-1), row), -v[j]});
  }
  for (std::size_t g = 0; g < k; ++g)
    p.rows.push_back({scale(Rational(-1), unit(k, g)), Rational(0)});
  return !lp_solve(p).infeasible();
}

bool GeneratedCone::subset_of(const GeneratedCone &other) const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Vec &g) { return other.contains(g); });
}

bool GeneratedCone::same_cone(const GeneratedCone &other) const {
  return subset_of(other) && other.subset_of(*this);
}

} // namespace phk
