#include "phk/fitzpatrick.hpp"

#include "phk/errors.hpp"
#include "phk/normal_cones.hpp"
#include "phk/portability.hpp"

#include <algorithm>
#include <map>

namespace phk {

MonotoneGraph::MonotoneGraph(std::size_t dim, std::vector<Pair> pairs) : dim_(dim) {
  if (dim_ == 0)
    throw InputError("graph dimension must be at least 1");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].a.size() != dim_ || pairs[i].astar.size() != dim_)
      throw InputError("graph pair " + std::to_string(i) + " has wrong dimension");
    if (std::find(pairs_.begin(), pairs_.end(), pairs[i]) == pairs_.end())
      pairs_.push_back(std::move(pairs[i]));
  }
}

std::vector<Vec> MonotoneGraph::domain() const {
  std::vector<Vec> d;
  for (const auto &p : pairs_)
    if (std::find(d.begin(), d.end(), p.a) == d.end())
      d.push_back(p.a);
  return d;
}

bool is_monotone(const MonotoneGraph &g) {
  const auto &p = g.pairs();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (dot(sub(p[i].a, p[j].a), sub(p[i].astar, p[j].astar)).sign() < 0)
        return false;
  return true;
}

ExtValue phi_finite(const MonotoneGraph &g, std::span<const Rational> x,
                    std::span<const Rational> xstar) {
  if (x.size() != g.dim() || xstar.size() != g.dim())
    throw InputError("phi_finite: dimension mismatch");
  Sup sup;
  for (const auto &p : g.pairs())
    sup.add(dot(sub(x, p.a), p.astar) + dot(p.a, xstar));
  return sup.value();
}

NormalConeFitzpatrick::NormalConeFitzpatrick(PartiallyOpenPolyhedron c)
    : c_(std::move(c)), hull_(phk::portable_hull(c_)) {}

ExtValue NormalConeFitzpatrick::operator()(std::span<const Rational> x,
                                           std::span<const Rational> xstar) const {
  if (x.size() != c_.dim() || xstar.size() != c_.dim())
    throw InputError("phi_normal_cone: dimension mismatch");
  if (c_.is_empty())
    return ExtValue::neg_inf();
  if (!hull_.contains(x))
    return ExtValue::pos_inf();
  return support_value(c_, xstar);
}

ExtValue phi_normal_cone(const PartiallyOpenPolyhedron &c, std::span<const Rational> x,
                         std::span<const Rational> xstar) {
  return NormalConeFitzpatrick(c)(x, xstar);
}

FaceEnumerationOracle::FaceEnumerationOracle(const PartiallyOpenPolyhedron &c)
    : dim_(c.dim()), empty_(c.is_empty()), rows_(c.rows()) {
  if (dim_ > max_dim)
    throw UnsupportedScale("face-enumeration oracle is limited to dimension " +
                           std::to_string(max_dim) + "; got " + std::to_string(dim_));
  if (rows_.size() > max_rows)
    throw UnsupportedScale("face-enumeration oracle is limited to " + std::to_string(max_rows) +
                           " rows; got " + std::to_string(rows_.size()));
  if (empty_)
    return;
  VRep v = h_to_v(c.carrier());
  lineality_ = v.lineality;
  const std::size_t m = rows_.size();
  std::map<std::vector<std::size_t>, Face> by_active;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    Face f;
    for (const auto &vert : v.vertices) {
      bool tight = true;
      for (std::size_t i = 0; i < m && tight; ++i)
        if ((mask >> i & 1U) && dot(rows_[i].normal, vert) != rows_[i].offset)
          tight = false;
      if (tight)
        f.vertices.push_back(vert);
    }
    if (f.vertices.empty())
      continue;
    for (const auto &ray : v.rays) {
      bool tight = true;
      for (std::size_t i = 0; i < m && tight; ++i)
        if ((mask >> i & 1U) && !dot(rows_[i].normal, ray).is_zero())
          tight = false;
      if (tight)
        f.rays.push_back(ray);
    }
    Vec rep(dim_);
    for (const auto &vert : f.vertices)
      rep = add(rep, vert);
    rep = scale(Rational(1, static_cast<std::int64_t>(f.vertices.size())), rep);
    for (const auto &ray : f.rays)
      rep = add(rep, ray);
    for (std::size_t i = 0; i < m; ++i)
      if (dot(rows_[i].normal, rep) == rows_[i].offset)
        f.active.push_back(i);
    f.meets_c = contains(c, rep);
    f.representative = std::move(rep);
    by_active.try_emplace(f.active, std::move(f));
  }
  for (auto &[key, face] : by_active)
    faces_.push_back(std::move(face));
}

ExtValue FaceEnumerationOracle::operator()(std::span<const Rational> x,
                                           std::span<const Rational> xstar) const {
  if (x.size() != dim_ || xstar.size() != dim_)
    throw InputError("phi_nc_oracle: dimension mismatch");
  Sup sup;
  if (empty_)
    return sup.value();
  bool lines_unbounded = std::any_of(lineality_.begin(), lineality_.end(), [&](const Vec &l) {
    return !dot(l, xstar).is_zero();
  });
  for (const auto &f : faces_) {
    if (!f.meets_c)
      continue;
    for (auto i : f.active)
      if (dot(rows_[i].normal, x) > rows_[i].offset)
        return ExtValue::pos_inf();
    bool unbounded = lines_unbounded || std::any_of(f.rays.begin(), f.rays.end(), [&](const Vec &r) {
                       return dot(r, xstar).sign() > 0;
                     });
    if (unbounded) {
      sup.add(ExtValue::pos_inf());
      continue;
    }
    for (const auto &vert : f.vertices)
      sup.add(dot(vert, xstar));
  }
  return sup.value();
}

ExtValue phi_nc_oracle(const PartiallyOpenPolyhedron &c, std::span<const Rational> x,
                       std::span<const Rational> xstar) {
  return FaceEnumerationOracle(c)(x, xstar);
}

bool monotonically_related_nc(const PartiallyOpenPolyhedron &c, std::span<const Rational> x,
                              std::span<const Rational> xstar) {
  return phi_normal_cone(c, x, xstar) <= ExtValue(dot(x, xstar));
}

} // namespace phk
