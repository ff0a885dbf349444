#include "phk/oracles/definitional_hull.hpp"

#include "phk/oracles/fourier_motzkin.hpp"

namespace phk::oracles {

namespace {

std::vector<StrictRow> rows_of(const PartiallyOpenPolyhedron &c) {
  std::vector<StrictRow> out;
  for (std::size_t i = 0; i < c.rows().size(); ++i)
    out.push_back({c.rows()[i].normal, c.rows()[i].offset, c.is_strict(i)});
  return out;
}

bool on_row_somewhere(const std::vector<StrictRow> &base, const Halfspace &h, std::size_t dim) {
  auto sys = base;
  sys.push_back({h.normal, h.offset, false});
  sys.push_back({scale(Rational(-1), h.normal), -h.offset, false});
  return fm_feasible(dim, sys);
}

bool satisfies(const StrictRow &r, const Vec &x) {
  Rational v = dot(r.normal, x);
  return r.strict ? v < r.offset : v <= r.offset;
}

} // namespace

ClosedPolyhedron definitional_hull(const PartiallyOpenPolyhedron &c) {
  if (c.is_empty())
    return ClosedPolyhedron::space(c.dim());
  auto base = rows_of(c);
  std::vector<Halfspace> kept;
  for (const auto &h : c.rows())
    if (on_row_somewhere(base, h, c.dim()))
      kept.push_back(h);
  return {c.dim(), std::move(kept)};
}

ClosedPolyhedron definitional_partial_hull(const PartiallyOpenPolyhedron &c, const ContactSet &s) {
  if (c.is_empty())
    return ClosedPolyhedron::space(c.dim());
  auto base = rows_of(c);
  std::vector<Halfspace> kept;
  if (const auto *pts = std::get_if<std::vector<Vec>>(&s)) {
    for (const auto &h : c.rows()) {
      bool touched = false;
      for (const auto &x : *pts) {
        bool in_c = true;
        for (const auto &r : base)
          in_c = in_c && satisfies(r, x);
        if (in_c && dot(h.normal, x) == h.offset)
          touched = true;
      }
      if (touched)
        kept.push_back(h);
    }
  } else {
    const auto &sp = std::get<PartiallyOpenPolyhedron>(s);
    if (sp.is_empty())
      return ClosedPolyhedron::space(c.dim());
    auto sys = base;
    for (const auto &r : rows_of(sp))
      sys.push_back(r);
    for (const auto &h : c.rows())
      if (on_row_somewhere(sys, h, c.dim()))
        kept.push_back(h);
  }
  return {c.dim(), std::move(kept)};
}

} // namespace phk::oracles
