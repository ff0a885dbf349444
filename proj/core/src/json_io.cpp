#include "phk/json_io.hpp"

#include "phk/errors.hpp"

#include <fstream>
#include <sstream>

namespace phk::json {

namespace {

[[noreturn]] void fail(const std::string &where, const std::string &what) {
  throw InputError(where + ": " + what);
}

const Json &field(const Json &j, const char *key, const std::string &where) {
  if (!j.is_object())
    fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t dim_from(const Json &j, const std::string &where) {
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0)
    fail(where, "expected a positive integer dimension");
  return j.get<std::size_t>();
}

Json pair_json(const std::pair<Vec, Vec> &p) {
  return Json{{"x", to_json(p.first)}, {"xstar", to_json(p.second)}};
}

template <class T> Json optional_json(const std::optional<T> &v) {
  return v ? to_json(*v) : Json(nullptr);
}

Json optional_pair(const std::optional<std::pair<Vec, Vec>> &p) {
  return p ? pair_json(*p) : Json(nullptr);
}

} // namespace

Json parse(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error &e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream msg;
    msg << source << ":" << line << ":" << col << ": malformed JSON";
    throw InputError(msg.str());
  }
}

Json read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

Json to_json(const Rational &r) { return r.str(); }
Json to_json(const ExtValue &v) { return v.str(); }

Json to_json(const Vec &v) {
  Json out = Json::array();
  for (const auto &r : v)
    out.push_back(r.str());
  return out;
}

Json to_json(const std::vector<Vec> &vs) {
  Json out = Json::array();
  for (const auto &v : vs)
    out.push_back(to_json(v));
  return out;
}

Rational rational_from(const Json &j, const std::string &where) {
  if (j.is_number_integer())
    return Rational(j.get<std::int64_t>());
  if (!j.is_string())
    fail(where, "expected a rational as \"p/q\" or an integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const InputError &e) {
    fail(where, e.what());
  }
}

Vec vec_from(const Json &j, const std::string &where) {
  if (!j.is_array())
    fail(where, "expected an array");
  Vec out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(rational_from(j[i], where + "/" + std::to_string(i)));
  return out;
}

Vec vec_from(const Json &j, const std::string &where, std::size_t dim) {
  auto v = vec_from(j, where);
  if (v.size() != dim)
    fail(where, "expected " + std::to_string(dim) + " entries, got " + std::to_string(v.size()));
  return v;
}

PartiallyOpenPolyhedron set_from(const Json &j) {
  if (!j.is_object())
    fail("", "set descriptor must be an object");
  if (j.contains("empty")) {
    if (j["empty"] != true)
      fail("/empty", "must be true");
    std::size_t dim = j.contains("dim") ? dim_from(j["dim"], "/dim") : 1;
    return PartiallyOpenPolyhedron::empty(dim);
  }
  if (j.contains("space"))
    return PartiallyOpenPolyhedron::space(dim_from(j["space"], "/space"));
  std::size_t dim = dim_from(field(j, "dim", ""), "/dim");
  const auto &rows = field(j, "rows", "");
  if (!rows.is_array())
    fail("/rows", "expected an array");
  std::vector<StrictRow> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string at = "/rows/" + std::to_string(i);
    StrictRow r;
    r.normal = vec_from(field(rows[i], "normal", at), at + "/normal", dim);
    r.offset = rational_from(field(rows[i], "offset", at), at + "/offset");
    if (rows[i].contains("strict")) {
      if (!rows[i]["strict"].is_boolean())
        fail(at + "/strict", "expected a boolean");
      r.strict = rows[i]["strict"].get<bool>();
    }
    if (is_zero(r.normal))
      fail(at + "/normal", "zero normal");
    out.push_back(std::move(r));
  }
  return PartiallyOpenPolyhedron::from_rows(dim, out);
}

Json to_json(const PartiallyOpenPolyhedron &c) {
  if (c.is_empty())
    return Json{{"empty", true}, {"dim", c.dim()}};
  Json rows = Json::array();
  for (std::size_t i = 0; i < c.rows().size(); ++i)
    rows.push_back(Json{{"normal", to_json(c.rows()[i].normal)},
                        {"offset", to_json(c.rows()[i].offset)},
                        {"strict", c.is_strict(i)}});
  return Json{{"dim", c.dim()}, {"rows", rows}};
}

Json to_json(const ClosedPolyhedron &p) {
  Json rows = Json::array();
  for (const auto &h : p.rows())
    rows.push_back(Json{{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}});
  return Json{{"dim", p.dim()}, {"rows", rows}};
}

MonotoneGraph graph_from(const Json &j) {
  std::size_t dim = dim_from(field(j, "dim", ""), "/dim");
  const auto &pairs = field(j, "pairs", "");
  if (!pairs.is_array())
    fail("/pairs", "expected an array");
  std::vector<MonotoneGraph::Pair> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::string at = "/pairs/" + std::to_string(i);
    out.push_back({vec_from(field(pairs[i], "a", at), at + "/a", dim),
                   vec_from(field(pairs[i], "astar", at), at + "/astar", dim)});
  }
  return {dim, std::move(out)};
}

Json to_json(const MonotoneGraph &g) {
  Json pairs = Json::array();
  for (const auto &p : g.pairs())
    pairs.push_back(Json{{"a", to_json(p.a)}, {"astar", to_json(p.astar)}});
  return Json{{"dim", g.dim()}, {"pairs", pairs}};
}

ContactSet contact_set_from(const Json &j, std::size_t dim) {
  if (j.is_object() && j.contains("points")) {
    const auto &pts = j["points"];
    if (!pts.is_array())
      fail("/points", "expected an array");
    std::vector<Vec> out;
    for (std::size_t i = 0; i < pts.size(); ++i)
      out.push_back(vec_from(pts[i], "/points/" + std::to_string(i), dim));
    return out;
  }
  auto s = set_from(j);
  if (s.dim() != dim)
    fail("/dim", "subset dimension differs from the set's");
  return s;
}

Json to_json(const GeneratedCone &k) {
  return Json{{"dim", k.dim()}, {"generators", to_json(k.generators())}};
}

Json to_json(const VRep &v) {
  return Json{{"vertices", to_json(v.vertices)},
              {"rays", to_json(v.rays)},
              {"lineality", to_json(v.lineality)}};
}

Json to_json(const LPOutcome &o) {
  switch (o.status) {
  case LPOutcome::Status::Infeasible:
    return Json{{"status", "infeasible"}, {"farkas", to_json(o.farkas)}};
  case LPOutcome::Status::Unbounded:
    return Json{{"status", "unbounded"}, {"ray", to_json(o.ray)}};
  case LPOutcome::Status::Optimal:
    break;
  }
  return Json{{"status", "optimal"},
              {"value", to_json(o.value)},
              {"primal", to_json(o.primal)},
              {"dual", to_json(o.dual)}};
}

Json to_json(const SupportEvaluation &s) {
  return Json{{"value", to_json(s.value)},
              {"attainedInC", s.attained_in_c},
              {"witness", optional_json(s.witness)}};
}

Json to_json(const PortabilityReport &r) {
  return Json{{"condI", r.cond_i},
              {"condII", Json{{"holds", r.cond_ii.holds},
                              {"samplesChecked", r.cond_ii.samples_checked},
                              {"witness", optional_pair(r.cond_ii.witness)},
                              {"phiAtWitness", r.cond_ii.witness
                                                   ? to_json(r.cond_ii.phi_at_witness)
                                                   : Json(nullptr)},
                              {"rhsAtWitness", r.cond_ii.witness
                                                   ? to_json(r.cond_ii.rhs_at_witness)
                                                   : Json(nullptr)}}},
              {"condIII", r.cond_iii},
              {"condIV", r.cond_iv},
              {"portableHull", to_json(r.portable_hull)},
              {"corroboration", Json{{"pairs", r.corroboration_pairs},
                                     {"inGraph", r.corroboration_in_graph},
                                     {"extensionWitness", optional_pair(r.extension_witness)}}},
              {"coherent", r.coherent()}};
}

Json to_json(const SeparationCertificate &c) {
  return Json{{"nstar", to_json(c.nstar)},
              {"supportPoint", to_json(c.support_point)},
              {"margin", to_json(c.margin)}};
}

Json to_json(const EncReport &r) {
  return Json{{"hull", to_json(r.hull)},
              {"hullIdempotent", r.hull_idempotent},
              {"hullPortable", r.hull_portable},
              {"conePoints", r.cone_points},
              {"conesAgree", r.cones_agree},
              {"graphPairs", r.graph_pairs},
              {"graphIncluded", r.graph_included},
              {"failingPoint", optional_json(r.failing_point)},
              {"ok", r.ok()}};
}

Json to_json(const NcsReport &r) {
  return Json{{"partialHull", to_json(r.partial_hull)},
              {"partialIdempotent", r.partial_idempotent},
              {"fullIdempotent", r.full_idempotent},
              {"tracesEqual", r.traces_equal},
              {"traceWitness", optional_json(r.trace_witness)},
              {"samples", r.samples},
              {"restrictionsEqual", r.restrictions_equal},
              {"restrictionWitness", optional_pair(r.restriction_witness)},
              {"ok", r.ok()}};
}

Json to_json(const Thm7Report &r) {
  return Json{{"lineFree", r.line_free},
              {"bounded", r.bounded},
              {"portable", r.portable},
              {"dualsChecked", r.duals_checked},
              {"disagreements", r.disagreements},
              {"outsideRange", r.outside_range},
              {"failingDual", optional_json(r.failing_dual)},
              {"ok", r.ok()}};
}

Json to_json(const BoundaryProbeReport &r) {
  return Json{{"boundaryPoints", r.boundary_points},
              {"supportPoints", r.support_points},
              {"counterexample", optional_json(r.counterexample)},
              {"ok", r.ok()}};
}

Json to_json(const PsiEvaluation &p) {
  return Json{{"value", to_json(p.value)},
              {"coefficients", optional_json(p.coefficients)},
              {"dualShift", optional_json(p.dual_shift)}};
}

Json to_json(const SumMembership &m) {
  return Json{{"lhs", m.lhs},
              {"rhs", m.rhs},
              {"tstar", optional_json(m.tstar)},
              {"nstar", optional_json(m.nstar)},
              {"agrees", m.agrees()}};
}

Json to_json(const ProbeVerdict &v) {
  Json w = nullptr;
  if (v.witness)
    w = pair_json(*v.witness);
  return Json{{"verdict", v.label()},
              {"reason", v.reason},
              {"gridPoints", v.grid_points},
              {"witness", w}};
}

} // namespace phk::json
