#include "phk/sampling.hpp"

#include "phk/errors.hpp"
#include "phk/linalg.hpp"

#include <algorithm>

namespace phk {

std::int64_t Rng::integer(std::int64_t lo, std::int64_t hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational Rng::rational(const Rational &lo, const Rational &hi, std::int64_t max_den) {
  std::int64_t d = integer(1, max_den);
  std::int64_t k = integer(0, d);
  return lo + (hi - lo) * Rational(k, d);
}

namespace {

void push_unique(std::vector<Vec> &out, Vec v) {
  if (std::find(out.begin(), out.end(), v) == out.end())
    out.push_back(std::move(v));
}

Vec barycenter(const std::vector<Vec> &pts, std::size_t dim) {
  Vec b(dim);
  for (const auto &p : pts)
    b = add(b, p);
  return scale(Rational(1, static_cast<std::int64_t>(pts.size())), b);
}

struct Box {
  Vec lo, hi;
};

Box bounding_box(const VRep &v, std::size_t dim) {
  Box b{Vec(dim, Rational(-4)), Vec(dim, Rational(4))};
  if (v.vertices.empty())
    return b;
  b.lo = b.hi = v.vertices.front();
  auto widen = [&](const Vec &p) {
    for (std::size_t j = 0; j < dim; ++j) {
      b.lo[j] = std::min(b.lo[j], p[j]);
      b.hi[j] = std::max(b.hi[j], p[j]);
    }
  };
  for (const auto &p : v.vertices)
    widen(p);
  for (const auto &r : v.rays)
    widen(add(v.vertices.front(), scale(Rational(2), r)));
  for (const auto &l : v.lineality) {
    widen(add(v.vertices.front(), scale(Rational(2), l)));
    widen(sub(v.vertices.front(), scale(Rational(2), l)));
  }
  for (std::size_t j = 0; j < dim; ++j) {
    b.lo[j] -= 1;
    b.hi[j] += 1;
  }
  return b;
}

// The structured samples need the V-representation, so h_to_v's scale limit applies.
std::optional<VRep> vrep_of(const PartiallyOpenPolyhedron &c) {
  if (c.is_empty())
    return std::nullopt;
  return h_to_v(c.carrier());
}

// Vertex pairs spanning an edge: the rows tight at both have rank n - dim(lineality) - 1.
std::vector<std::pair<std::size_t, std::size_t>> edges(const ClosedPolyhedron &p, const VRep &v) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t target = p.dim() - v.lineality.size() - 1;
  for (std::size_t i = 0; i < v.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < v.vertices.size(); ++j) {
      Matrix tight;
      for (const auto &row : p.rows())
        if (dot(row.normal, v.vertices[i]) == row.offset &&
            dot(row.normal, v.vertices[j]) == row.offset)
          tight.push_back(row.normal);
      std::size_t rank = tight.empty() ? 0 : rref(tight).size();
      if (rank == target)
        out.emplace_back(i, j);
    }
  return out;
}

// A point of the carrier: random convex combination of vertices plus ray and line terms.
Vec random_carrier_point(const VRep &v, std::size_t dim, Rng &rng) {
  std::vector<Rational> w;
  Rational total;
  for (std::size_t i = 0; i < v.vertices.size(); ++i) {
    w.push_back(Rational(rng.integer(0, 3)));
    total += w.back();
  }
  if (total.is_zero()) {
    w.front() = 1;
    total = 1;
  }
  Vec p(dim);
  for (std::size_t i = 0; i < v.vertices.size(); ++i)
    p = add(p, scale(w[i] / total, v.vertices[i]));
  for (const auto &r : v.rays)
    p = add(p, scale(rng.rational(Rational(0), Rational(2)), r));
  for (const auto &l : v.lineality)
    p = add(p, scale(rng.rational(Rational(-2), Rational(2)), l));
  return p;
}

} // namespace

std::vector<Vec> primal_samples(const PartiallyOpenPolyhedron &c, const SampleSpec &spec) {
  const std::size_t n = c.dim();
  std::vector<Vec> out;
  auto v = vrep_of(c);
  if (v && !v->is_empty()) {
    for (const auto &p : v->vertices)
      push_unique(out, p);
    for (auto [i, j] : edges(c.carrier(), *v))
      push_unique(out, scale(Rational(1, 2), add(v->vertices[i], v->vertices[j])));
    for (const auto &r : v->rays)
      push_unique(out, add(v->vertices.front(), r));
    Vec interior = barycenter(v->vertices, n);
    for (const auto &r : v->rays)
      interior = add(interior, r);
    push_unique(out, interior);
  }
  Rng rng(spec.seed);
  Box box = v ? bounding_box(*v, n) : Box{Vec(n, Rational(-4)), Vec(n, Rational(4))};
  for (std::size_t k = 0; k < spec.random_points; ++k) {
    if (v && !v->is_empty() && rng.coin()) {
      out.push_back(random_carrier_point(*v, n, rng));
      continue;
    }
    Vec p(n);
    for (std::size_t j = 0; j < n; ++j)
      p[j] = rng.rational(box.lo[j], box.hi[j]);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Vec> dual_samples(const PartiallyOpenPolyhedron &c, const SampleSpec &spec) {
  const std::size_t n = c.dim();
  std::vector<Vec> out;
  push_unique(out, zeros(n));
  for (std::size_t j = 0; j < n; ++j) {
    push_unique(out, unit(n, j));
    push_unique(out, scale(Rational(-1), unit(n, j)));
  }
  for (const auto &row : c.rows()) {
    push_unique(out, row.normal);
    push_unique(out, scale(Rational(-1), row.normal));
  }
  Rng rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t k = 0; k < spec.dual_points; ++k) {
    Vec d(n);
    for (std::size_t j = 0; j < n; ++j)
      d[j] = rng.rational(Rational(-3), Rational(3), 3);
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<std::pair<Vec, Vec>> sample_pairs(const PartiallyOpenPolyhedron &c,
                                              const SampleSpec &spec) {
  auto xs = primal_samples(c, spec);
  auto ds = dual_samples(c, spec);
  std::vector<std::pair<Vec, Vec>> out;
  if (xs.empty() || ds.empty())
    return out;
  for (std::size_t k = 0; k < spec.pairs; ++k)
    out.emplace_back(xs[k % xs.size()], ds[(k * 7 + k / xs.size()) % ds.size()]);
  return out;
}

std::vector<Vec> boundary_samples(const PartiallyOpenPolyhedron &c, const SampleSpec &spec) {
  std::vector<Vec> out;
  auto v = vrep_of(c);
  if (!v || v->is_empty())
    return out;
  Rng rng(spec.seed + 1);
  const auto &rows = c.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<Vec> facet;
    for (const auto &p : v->vertices)
      if (dot(rows[i].normal, p) == rows[i].offset)
        facet.push_back(p);
    if (facet.empty())
      continue;
    std::vector<Vec> facet_rays;
    for (const auto &r : v->rays)
      if (dot(rows[i].normal, r).is_zero())
        facet_rays.push_back(r);
    for (const auto &p : facet)
      push_unique(out, p);
    Vec center = barycenter(facet, c.dim());
    for (const auto &r : facet_rays)
      center = add(center, r);
    push_unique(out, center);
    for (int k = 0; k < 4; ++k)
      push_unique(out, random_carrier_point({facet, facet_rays, v->lineality}, c.dim(), rng));
  }
  for (auto &p : primal_samples(c, spec))
    if (c.carrier().contains(p) && !c.carrier().active_rows(p).empty())
      push_unique(out, std::move(p));
  return out;
}

} // namespace phk
