#include "phk/normal_cones.hpp"

#include "phk/errors.hpp"

namespace phk {

namespace {

void require_dim(const PartiallyOpenPolyhedron &c, std::span<const Rational> v, const char *what) {
  if (v.size() != c.dim())
    throw InputError(std::string(what) + ": dimension " + std::to_string(v.size()) +
                     " does not match set dimension " + std::to_string(c.dim()));
}

} // namespace

SupportEvaluation sigma(const PartiallyOpenPolyhedron &c, std::span<const Rational> xstar) {
  require_dim(c, xstar, "sigma");
  if (c.is_empty())
    return {ExtValue::neg_inf(), false, std::nullopt};
  auto out = lp_solve({Vec(xstar.begin(), xstar.end()), c.rows()});
  if (out.infeasible())
    return {ExtValue::neg_inf(), false, std::nullopt};
  if (out.unbounded())
    return {ExtValue::pos_inf(), false, std::nullopt};

  // Optimal face: carrier ∩ {⟨x, x*⟩ ≥ value}; C meets it iff the strict system is feasible.
  auto rows = c.strict_rows();
  rows.push_back({scale(Rational(-1), Vec(xstar.begin(), xstar.end())), -out.value, false});
  auto face = strict_system_feasible(c.dim(), rows);
  return {ExtValue(out.value), face.feasible, face.witness};
}

ExtValue support_value(const PartiallyOpenPolyhedron &c, std::span<const Rational> xstar) {
  require_dim(c, xstar, "support_value");
  if (c.is_empty())
    return ExtValue::neg_inf();
  auto out = lp_solve({Vec(xstar.begin(), xstar.end()), c.rows()});
  if (out.infeasible())
    return ExtValue::neg_inf();
  if (out.unbounded())
    return ExtValue::pos_inf();
  return ExtValue(out.value);
}

GeneratedCone normal_cone_at(const PartiallyOpenPolyhedron &c, std::span<const Rational> x) {
  require_dim(c, x, "normal_cone_at");
  if (!contains(c, x))
    throw DomainError("normal_cone_at: point " + to_string(x) +
                      " is not in C (the normal cone is empty there)");
  std::vector<Vec> gens;
  for (auto i : c.carrier().active_rows(x))
    gens.push_back(c.rows()[i].normal);
  return {c.dim(), std::move(gens)};
}

bool in_normal_cone(const PartiallyOpenPolyhedron &c, std::span<const Rational> x,
                    std::span<const Rational> xstar) {
  require_dim(c, x, "in_normal_cone");
  require_dim(c, xstar, "in_normal_cone");
  if (!contains(c, x))
    return false;
  auto s = support_value(c, xstar);
  return s.is_finite() && s.value() == dot(x, xstar);
}

std::optional<Vec> contact_point(const PartiallyOpenPolyhedron &c, std::size_t row) {
  if (c.is_empty())
    return std::nullopt;
  auto rows = c.strict_rows();
  const auto &h = c.rows().at(row);
  rows.push_back({scale(Rational(-1), h.normal), -h.offset, false});
  return strict_system_feasible(c.dim(), rows).witness;
}

std::vector<std::size_t> supporting_rows(const PartiallyOpenPolyhedron &c) {
  std::vector<std::size_t> out;
  if (c.is_empty())
    return out;
  for (std::size_t i = 0; i < c.rows().size(); ++i)
    if (!c.is_strict(i) && contact_point(c, i))
      out.push_back(i);
  return out;
}

RangeMembership in_range_N(const PartiallyOpenPolyhedron &c, std::span<const Rational> xstar) {
  auto s = sigma(c, xstar);
  if (!s.attained_in_c)
    return {};
  return {true, s.witness};
}

bool is_support_point(const PartiallyOpenPolyhedron &c, std::span<const Rational> x) {
  return contains(c, x) && !c.carrier().active_rows(x).empty();
}

} // namespace phk
