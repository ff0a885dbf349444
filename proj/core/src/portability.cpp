#include "phk/portability.hpp"

#include "phk/errors.hpp"
#include "phk/fitzpatrick.hpp"
#include "phk/normal_cones.hpp"

#include <algorithm>
#include <map>

namespace phk {

namespace {

ClosedPolyhedron canonical_or_throw(std::size_t dim, const std::vector<Halfspace> &rows) {
  auto canon = canonicalize(dim, rows);
  if (!canon)
    throw std::logic_error("portable hull rows are infeasible");
  return *canon;
}

PartiallyOpenPolyhedron as_set(const ClosedPolyhedron &p) {
  return PartiallyOpenPolyhedron::closed(p);
}

// Rows saying "row i of C is violated", strictly first.
std::vector<StrictRow> violation_rows(const PartiallyOpenPolyhedron &c, std::size_t i,
                                      bool deep) {
  const auto &row = c.rows()[i];
  return {{scale(Rational(-1), row.normal), -row.offset, deep || !c.is_strict(i)}};
}

void require_nonempty(const PartiallyOpenPolyhedron &c, const char *op) {
  if (c.is_empty())
    throw PreconditionError(std::string(op) + " requires a nonempty set");
}

} // namespace

ClosedPolyhedron portable_hull(const PartiallyOpenPolyhedron &c) {
  if (c.is_empty())
    return ClosedPolyhedron::space(c.dim());
  std::vector<Halfspace> rows;
  for (auto i : supporting_rows(c))
    rows.push_back(c.rows()[i]);
  return canonical_or_throw(c.dim(), rows);
}

ClosedPolyhedron partial_portable_hull(const PartiallyOpenPolyhedron &c, const ContactSet &s) {
  if (c.is_empty())
    return ClosedPolyhedron::space(c.dim());
  std::vector<Halfspace> rows;
  if (const auto *points = std::get_if<std::vector<Vec>>(&s)) {
    std::vector<Vec> inside;
    for (const auto &p : *points)
      if (contains(c, p))
        inside.push_back(p);
    for (std::size_t i = 0; i < c.rows().size(); ++i) {
      const auto &h = c.rows()[i];
      if (std::any_of(inside.begin(), inside.end(),
                      [&](const Vec &p) { return dot(h.normal, p) == h.offset; }))
        rows.push_back(h);
    }
  } else {
    const auto &sp = std::get<PartiallyOpenPolyhedron>(s);
    if (sp.dim() != c.dim())
      throw InputError("partial_portable_hull: S has dimension " + std::to_string(sp.dim()) +
                       ", C has " + std::to_string(c.dim()));
    if (sp.is_empty())
      return ClosedPolyhedron::space(c.dim());
    auto base = c.strict_rows();
    for (const auto &r : sp.strict_rows())
      base.push_back(r);
    for (std::size_t i = 0; i < c.rows().size(); ++i) {
      if (c.is_strict(i))
        continue;
      auto system = base;
      const auto &h = c.rows()[i];
      system.push_back({scale(Rational(-1), h.normal), -h.offset, false});
      if (strict_system_feasible(c.dim(), system).feasible)
        rows.push_back(h);
    }
  }
  return canonical_or_throw(c.dim(), rows);
}

bool is_portable(const PartiallyOpenPolyhedron &c) {
  return !c.is_empty() && closed_subset_of(portable_hull(c), c);
}

std::optional<Vec> point_outside(const ClosedPolyhedron &hull, const PartiallyOpenPolyhedron &c) {
  std::vector<StrictRow> base;
  for (const auto &r : hull.rows())
    base.push_back({r.normal, r.offset, false});
  for (bool deep : {true, false}) {
    for (std::size_t i = 0; i < c.rows().size(); ++i) {
      auto system = base;
      for (auto &r : violation_rows(c, i, deep))
        system.push_back(std::move(r));
      if (auto f = strict_system_feasible(c.dim(), system); f.feasible)
        return f.witness;
    }
  }
  return std::nullopt;
}

bool PortabilityReport::coherent() const {
  bool all_in_graph = corroboration_in_graph == corroboration_pairs;
  return cond_iii == cond_iv && cond_i == cond_iii &&
         (cond_ii.samples_checked == 0 || cond_ii.holds == cond_iii) &&
         all_in_graph == cond_iii;
}

PortabilityReport ncmm_report(const PartiallyOpenPolyhedron &c, const SampleSpec &spec) {
  require_nonempty(c, "ncmm_report");
  NormalConeFitzpatrick phi(c);
  PortabilityReport r;
  r.portable_hull = phi.portable_hull();
  const auto &hull = r.portable_hull;
  r.cond_iii = closed_subset_of(hull, c);
  r.cond_iv = r.cond_iii && closed_subset_of(c.carrier(), hull);
  r.cond_i = r.cond_iii;

  auto pairs = sample_pairs(c, spec);
  auto outside = point_outside(hull, c);
  if (outside)
    pairs.insert(pairs.begin(), {*outside, zeros(c.dim())});

  std::map<Vec, ExtValue> sigma_cache;
  for (const auto &[x, xs] : pairs) {
    auto [it, fresh] = sigma_cache.try_emplace(xs);
    if (fresh)
      it->second = support_value(c, xs);
    ExtValue rhs = (contains(c, x) ? ExtValue(Rational(0)) : ExtValue::pos_inf()) + it->second;
    ExtValue lhs = phi(x, xs);
    ++r.cond_ii.samples_checked;
    if (lhs != rhs && !r.cond_ii.witness) {
      r.cond_ii.holds = false;
      r.cond_ii.witness = {x, xs};
      r.cond_ii.phi_at_witness = lhs;
      r.cond_ii.rhs_at_witness = rhs;
    }
  }

  // Monotonically related pairs built from Graph N_{C#}; all lie in Graph N_C iff maximal.
  std::vector<Vec> points;
  for (auto &p : primal_samples(c, spec))
    if (hull.contains(p))
      points.push_back(std::move(p));
  if (outside)
    points.push_back(*outside);
  for (const auto &x : points) {
    std::vector<Vec> duals{zeros(c.dim())};
    Vec sum = zeros(c.dim());
    for (auto i : hull.active_rows(x)) {
      duals.push_back(hull.rows()[i].normal);
      sum = add(sum, hull.rows()[i].normal);
    }
    if (duals.size() > 2)
      duals.push_back(sum);
    for (const auto &xs : duals) {
      if (!(phi(x, xs) <= ExtValue(dot(x, xs))))
        continue;
      ++r.corroboration_pairs;
      if (in_normal_cone(c, x, xs))
        ++r.corroboration_in_graph;
      else if (!r.extension_witness)
        r.extension_witness = {x, xs};
    }
  }
  return r;
}

SeparationResult separation_certificate(const PartiallyOpenPolyhedron &c,
                                        std::span<const Rational> x) {
  require_nonempty(c, "separation_certificate");
  if (contains(c, x))
    throw PreconditionError("separation_certificate: point " + to_string(x) + " lies in C");
  for (auto i : supporting_rows(c)) {
    const auto &h = c.rows()[i];
    Rational lhs = dot(h.normal, x);
    if (lhs > h.offset) {
      auto contact = contact_point(c, i);
      return {SeparationCertificate{h.normal, *contact, lhs - h.offset}, false};
    }
  }
  return {std::nullopt, true};
}

bool verify_separation(const PartiallyOpenPolyhedron &c, std::span<const Rational> x,
                       const SeparationCertificate &cert) {
  if (is_zero(cert.nstar) || cert.margin.sign() <= 0)
    return false;
  if (!contains(c, cert.support_point) || !in_normal_cone(c, cert.support_point, cert.nstar))
    return false;
  auto s = support_value(c, cert.nstar);
  return s.is_finite() && dot(x, cert.nstar) - s.value() == cert.margin;
}

EncReport enc_check(const PartiallyOpenPolyhedron &c, const SampleSpec &spec) {
  require_nonempty(c, "enc_check");
  EncReport r;
  r.hull = portable_hull(c);
  auto hull_set = as_set(r.hull);
  r.hull_idempotent = same_set(portable_hull(hull_set), r.hull);
  r.hull_portable = is_portable(hull_set);
  for (const auto &x : primal_samples(c, spec)) {
    if (!contains(c, x))
      continue;
    auto nc = normal_cone_at(c, x);
    auto nh = normal_cone_at(hull_set, x);
    ++r.cone_points;
    if (!nc.same_cone(nh)) {
      r.cones_agree = false;
      if (!r.failing_point)
        r.failing_point = x;
    }
    std::vector<Vec> duals{zeros(c.dim())};
    Vec sum = zeros(c.dim());
    for (const auto &g : nc.generators()) {
      duals.push_back(g);
      sum = add(sum, g);
    }
    duals.push_back(sum);
    for (const auto &xs : duals) {
      ++r.graph_pairs;
      if (!in_normal_cone(hull_set, x, xs)) {
        r.graph_included = false;
        if (!r.failing_point)
          r.failing_point = x;
      }
    }
  }
  return r;
}

NcsReport ncs_check(const PartiallyOpenPolyhedron &c, const ContactSet &s, const SampleSpec &spec) {
  require_nonempty(c, "ncs_check");
  NcsReport r;
  r.partial_hull = partial_portable_hull(c, s);
  const auto &p = r.partial_hull;
  auto p_set = as_set(p);
  r.partial_idempotent = same_set(partial_portable_hull(p_set, s), p);
  r.full_idempotent = same_set(portable_hull(p_set), p);

  // S ∩ C ⊆ S ∩ C#_S always; equality fails iff some point of S ∩ C#_S leaves C.
  std::vector<Vec> points;
  if (const auto *finite = std::get_if<std::vector<Vec>>(&s)) {
    points = *finite;
    r.traces_equal = true;
    for (const auto &pt : *finite)
      if (p.contains(pt) && !contains(c, pt)) {
        r.traces_equal = false;
        r.trace_witness = pt;
        break;
      }
  } else {
    const auto &sp = std::get<PartiallyOpenPolyhedron>(s);
    r.traces_equal = true;
    if (!sp.is_empty()) {
      auto base = sp.strict_rows();
      for (const auto &h : p.rows())
        base.push_back({h.normal, h.offset, false});
      for (bool deep : {true, false}) {
        for (std::size_t i = 0; i < c.rows().size() && r.traces_equal; ++i) {
          auto system = base;
          for (auto &v : violation_rows(c, i, deep))
            system.push_back(std::move(v));
          if (auto f = strict_system_feasible(c.dim(), system); f.feasible) {
            r.traces_equal = false;
            r.trace_witness = f.witness;
          }
        }
      }
      for (auto &pt : primal_samples(sp, spec))
        if (contains(sp, pt))
          points.push_back(std::move(pt));
      if (r.trace_witness)
        points.push_back(*r.trace_witness);
    }
  }

  auto random_duals = dual_samples(c, spec);
  for (const auto &x : points) {
    bool in_c = contains(c, x);
    bool in_p = p.contains(x);
    if (!in_c && !in_p)
      continue;
    std::vector<Vec> duals{zeros(c.dim())};
    if (in_c) {
      auto k = normal_cone_at(c, x);
      duals.insert(duals.end(), k.generators().begin(), k.generators().end());
    }
    if (in_p) {
      auto k = normal_cone_at(p_set, x);
      duals.insert(duals.end(), k.generators().begin(), k.generators().end());
    }
    for (std::size_t k = 0; k < 4 && k < random_duals.size(); ++k)
      duals.push_back(random_duals[random_duals.size() - 1 - k]);
    for (const auto &xs : duals) {
      ++r.samples;
      bool left = in_c && in_normal_cone(c, x, xs);
      bool right = in_p && in_normal_cone(p_set, x, xs);
      if (left != right && r.restrictions_equal) {
        r.restrictions_equal = false;
        r.restriction_witness = {x, xs};
      }
    }
  }
  return r;
}

Thm7Report thm7_check(const ClosedPolyhedron &c, std::span<const Vec> duals) {
  if (c.is_empty())
    throw PreconditionError("thm7_check requires a nonempty closed set");
  auto set = as_set(c);
  Thm7Report r;
  r.line_free = lineality_space(c).empty();
  r.portable = is_portable(set);
  r.bounded = true;
  for (std::size_t j = 0; j < c.dim() && r.bounded; ++j)
    r.bounded = support_value(set, unit(c.dim(), j)).is_finite() &&
                support_value(set, scale(Rational(-1), unit(c.dim(), j))).is_finite();
  for (const auto &xs : duals) {
    ++r.duals_checked;
    bool in_dom = support_value(set, xs).is_finite();
    bool in_range = in_range_N(set, xs).member;
    if (!in_range)
      ++r.outside_range;
    if (in_dom != in_range) {
      ++r.disagreements;
      if (!r.failing_dual)
        r.failing_dual = xs;
    }
  }
  return r;
}

BoundaryProbeReport bp_probe(const PartiallyOpenPolyhedron &c, std::span<const Vec> samples) {
  require_nonempty(c, "bp_probe");
  BoundaryProbeReport r;
  for (const auto &x : samples) {
    if (!contains(c, x))
      continue;
    auto active = c.carrier().active_rows(x);
    if (active.empty())
      continue;
    ++r.boundary_points;
    bool supported = std::any_of(active.begin(), active.end(), [&](std::size_t i) {
      return in_normal_cone(c, x, c.rows()[i].normal);
    });
    if (supported)
      ++r.support_points;
    else if (!r.counterexample)
      r.counterexample = x;
  }
  return r;
}

} // namespace phk
