// Double description (Motzkin et al.) for cones {y : h·y ≤ 0}, used for exact
// H ↔ V conversion at desk scale.
#include "phk/errors.hpp"
#include "phk/linalg.hpp"
#include "phk/polyhedra.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace phk {

namespace {

struct Ray {
  Vec v;
  std::vector<bool> zero; // constraints processed so far that are tight on v
};

struct ConeGenerators {
  std::vector<Vec> lineality;
  std::vector<Vec> rays;
};

bool contains_all(const std::vector<bool> &super, const std::vector<bool> &sub) {
  for (std::size_t i = 0; i < sub.size(); ++i)
    if (sub[i] && !super[i])
      return false;
  return true;
}

ConeGenerators cone_generators(std::size_t d, const std::vector<Vec> &constraints) {
  std::vector<Vec> lineality;
  for (std::size_t i = 0; i < d; ++i)
    lineality.push_back(unit(d, i));
  std::vector<Ray> rays;
  const std::size_t total = constraints.size();

  for (std::size_t k = 0; k < total; ++k) {
    const Vec &h = constraints[k];
    auto pivot = std::find_if(lineality.begin(), lineality.end(),
                              [&](const Vec &l) { return !dot(h, l).is_zero(); });
    if (pivot != lineality.end()) {
      Vec l0 = *pivot;
      lineality.erase(pivot);
      Rational v0 = dot(h, l0);
      for (auto &l : lineality) {
        Rational f = dot(h, l) / v0;
        if (!f.is_zero())
          l = sub(l, scale(f, l0));
      }
      for (auto &r : rays) {
        Rational f = dot(h, r.v) / v0;
        if (!f.is_zero())
          r.v = primitive(sub(r.v, scale(f, l0)));
        r.zero[k] = true;
      }
      Ray fresh{primitive(v0.sign() > 0 ? scale(Rational(-1), l0) : l0),
                std::vector<bool>(total, false)};
      for (std::size_t j = 0; j < k; ++j)
        fresh.zero[j] = true;
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<Rational> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(h, rays[i].v);
      if (value[i].sign() > 0)
        pos.push_back(i);
      else if (value[i].sign() < 0)
        neg.push_back(i);
    }
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (value[i].sign() > 0)
        continue;
      Ray r = rays[i];
      if (value[i].is_zero())
        r.zero[k] = true;
      next.push_back(std::move(r));
    }
    for (auto p : pos) {
      for (auto q : neg) {
        std::vector<bool> common(total, false);
        for (std::size_t j = 0; j < k; ++j)
          common[j] = rays[p].zero[j] && rays[q].zero[j];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && contains_all(rays[r].zero, common))
            adjacent = false;
        if (!adjacent)
          continue;
        Vec combo = sub(scale(value[p], rays[q].v), scale(value[q], rays[p].v));
        common[k] = true;
        next.push_back({primitive(combo), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lineality = std::move(lineality);
  for (auto &r : rays)
    out.rays.push_back(std::move(r.v));
  return out;
}

void check_scale(std::size_t dim) {
  std::size_t limit = double_description_limit();
  if (dim > limit)
    throw UnsupportedScale("double description is limited to dimension " +
                           std::to_string(limit) + " (set PHK_MAX_DIM to raise it); got " +
                           std::to_string(dim));
}

// Reduced, primitive basis so equal spaces print identically.
std::vector<Vec> canonical_basis(std::vector<Vec> basis) {
  if (basis.empty())
    return basis;
  auto pivots = rref(basis);
  basis.resize(pivots.size());
  for (auto &b : basis)
    b = primitive(b);
  return basis;
}

} // namespace

std::size_t double_description_limit() {
  if (const char *env = std::getenv("PHK_MAX_DIM")) {
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
  }
  return 6;
}

VRep h_to_v(const ClosedPolyhedron &p) {
  const std::size_t n = p.dim();
  check_scale(n);
  std::vector<Vec> constraints;
  Vec t_nonneg(n + 1);
  t_nonneg[n] = -1;
  constraints.push_back(t_nonneg);
  for (const auto &row : p.rows()) {
    Vec h = row.normal;
    h.push_back(-row.offset);
    constraints.push_back(std::move(h));
  }
  auto gens = cone_generators(n + 1, constraints);

  VRep v;
  for (auto &r : gens.rays) {
    Vec x(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
    if (r[n].sign() > 0)
      v.vertices.push_back(scale(Rational(1) / r[n], x));
    else
      v.rays.push_back(primitive(x));
  }
  if (v.vertices.empty())
    return {};
  std::vector<Vec> lin;
  for (auto &l : gens.lineality)
    lin.emplace_back(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(n));
  v.lineality = canonical_basis(std::move(lin));
  std::sort(v.vertices.begin(), v.vertices.end());
  std::sort(v.rays.begin(), v.rays.end());
  return v;
}

ClosedPolyhedron v_to_h(std::size_t dim, const VRep &v) {
  check_scale(dim);
  if (v.vertices.empty())
    throw InputError("v_to_h requires at least one vertex");
  auto lifted = [&](const Vec &x, const Rational &last) {
    if (x.size() != dim)
      throw InputError("V-representation element has wrong dimension");
    Vec h = x;
    h.push_back(last);
    return h;
  };
  std::vector<Vec> constraints;
  for (const auto &x : v.vertices)
    constraints.push_back(lifted(x, Rational(-1)));
  for (const auto &r : v.rays)
    constraints.push_back(lifted(r, Rational(0)));
  for (const auto &l : v.lineality) {
    constraints.push_back(lifted(l, Rational(0)));
    constraints.push_back(lifted(scale(Rational(-1), l), Rational(0)));
  }
  auto gens = cone_generators(dim + 1, constraints);

  std::vector<Halfspace> rows;
  auto split = [&](const Vec &g) {
    return Halfspace{Vec(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(dim)), g[dim]};
  };
  for (const auto &g : gens.rays) {
    Halfspace h = split(g);
    if (!is_zero(h.normal))
      rows.push_back(std::move(h));
  }
  for (const auto &g : gens.lineality) {
    Halfspace h = split(g);
    if (is_zero(h.normal))
      continue;
    rows.push_back({scale(Rational(-1), h.normal), -h.offset});
    rows.push_back(std::move(h));
  }
  auto canon = canonicalize(dim, rows);
  if (!canon)
    throw std::logic_error("v_to_h produced an infeasible system");
  return *canon;
}

} // namespace phk
