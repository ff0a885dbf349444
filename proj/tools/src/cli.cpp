#include "phk/cli/cli.hpp"

#include "phk/errors.hpp"
#include "phk/fitzpatrick.hpp"
#include "phk/json_io.hpp"
#include "phk/lp.hpp"
#include "phk/normal_cones.hpp"
#include "phk/portability.hpp"
#include "phk/representability.hpp"
#include "phk/sampling.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

namespace phk::cli {

namespace {

using json::Json;

struct Options {
  std::string verb;
  std::vector<std::string> inputs;
  std::uint64_t seed{0};
  std::optional<std::size_t> samples;
  std::optional<std::string> grid;
  std::optional<std::string> point;
  std::optional<std::string> dual;
  std::optional<std::string> subset;
  std::optional<std::string> out;
  bool skip_interior{false};
};

struct Check {
  std::string name;
  bool holds;
};

struct Outcome {
  Json result;
  Json witnesses = Json::object();
  std::vector<Check> checks{};
  Json extra = Json::object(); // additional top-level keys
};

Vec parse_vector(const std::string &text, const char *flag) {
  std::string body;
  for (char ch : text)
    if (ch != '[' && ch != ']' && ch != '"' && ch != ' ')
      body.push_back(ch);
  Vec out;
  std::size_t start = 0;
  while (start <= body.size() && !body.empty()) {
    auto end = body.find(',', start);
    auto token = body.substr(start, end == std::string::npos ? std::string::npos : end - start);
    try {
      out.push_back(Rational::parse(token));
    } catch (const InputError &) {
      throw InputError(std::string(flag) + ": bad entry \"" + token + "\" in " + text);
    }
    if (end == std::string::npos)
      break;
    start = end + 1;
  }
  if (out.empty())
    throw InputError(std::string(flag) + ": empty vector");
  return out;
}

Vec require_vector(const std::optional<std::string> &text, const char *flag, std::size_t dim) {
  if (!text)
    throw InputError(std::string("this verb needs ") + flag);
  auto v = parse_vector(*text, flag);
  if (v.size() != dim)
    throw InputError(std::string(flag) + ": expected " + std::to_string(dim) + " entries");
  return v;
}

template <class F> auto with_source(const std::string &path, F &&load) {
  try {
    return load(json::read_file(path));
  } catch (const InputError &e) {
    std::string msg = e.what();
    if (msg.rfind(path, 0) == 0)
      throw;
    throw InputError(path + ": " + msg);
  }
}

PartiallyOpenPolyhedron load_set(const std::string &path) {
  return with_source(path, [](const Json &j) { return json::set_from(j); });
}

MonotoneGraph load_graph(const std::string &path) {
  return with_source(path, [](const Json &j) { return json::graph_from(j); });
}

ContactSet load_subset(const Options &o, std::size_t dim) {
  if (!o.subset)
    throw InputError("this verb needs --subset <file>");
  return with_source(*o.subset, [&](const Json &j) { return json::contact_set_from(j, dim); });
}

const std::string &input(const Options &o, std::size_t i, const char *what) {
  if (o.inputs.size() <= i)
    throw InputError(std::string("missing input file: ") + what);
  return o.inputs[i];
}

SampleSpec sample_spec(const Options &o) {
  SampleSpec s;
  s.seed = o.seed;
  if (o.samples) {
    s.random_points = *o.samples;
    s.pairs = *o.samples;
  }
  return s;
}

InteriorHypothesis hypothesis(const Options &o) {
  return o.skip_interior ? InteriorHypothesis::Skip : InteriorHypothesis::Enforce;
}

bool face_oracle_applies(const PartiallyOpenPolyhedron &c) {
  return c.dim() <= FaceEnumerationOracle::max_dim &&
         c.rows().size() <= FaceEnumerationOracle::max_rows;
}

Outcome do_hull(const Options &o) {
  auto c = load_set(input(o, 0, "set"));
  auto h = portable_hull(c);
  auto hs = PartiallyOpenPolyhedron::closed(h);
  Outcome r{json::to_json(h)};
  r.checks.push_back({"C## = C#", same_set(portable_hull(hs), h)});
  if (!c.is_empty())
    r.checks.push_back({"C ⊆ C#", closed_subset_of(c.carrier(), hs)});
  auto outside = c.is_empty() ? std::nullopt : point_outside(h, c);
  r.witnesses["portable"] = is_portable(c);
  r.witnesses["pointOfHullOutsideC"] = outside ? json::to_json(*outside) : Json(nullptr);
  return r;
}

Outcome do_partial_hull(const Options &o) {
  auto c = load_set(input(o, 0, "set"));
  auto s = load_subset(o, c.dim());
  auto h = partial_portable_hull(c, s);
  auto rep = ncs_check(c, s, sample_spec(o));
  Outcome r{json::to_json(h)};
  r.checks.push_back({"(C#_S)#_S = C#_S", rep.partial_idempotent});
  r.checks.push_back({"(C#_S)# = C#_S", rep.full_idempotent});
  r.witnesses = json::to_json(rep);
  return r;
}

Outcome do_portable(const Options &o) {
  auto c = load_set(input(o, 0, "set"));
  auto rep = ncmm_report(c, sample_spec(o));
  Outcome r{is_portable(c)};
  r.checks.push_back({"N_C maximal monotone ⇔ φ_{N_C} = ι_C ⊕ σ_C ⇔ C# ⊆ C ⇔ C = [φ_{N_C}(·,0) ≤ 0]",
                      rep.coherent()});
  auto outside = c.is_empty() ? std::nullopt : point_outside(rep.portable_hull, c);
  r.witnesses["pointOfHullOutsideC"] = outside ? json::to_json(*outside) : Json(nullptr);
  return r;
}

Outcome do_report(const Options &o) {
  auto c = load_set(input(o, 0, "set"));
  auto rep = ncmm_report(c, sample_spec(o));
  Outcome r{json::to_json(rep)};
  r.checks.push_back({"N_C maximal monotone ⇔ φ_{N_C} = ι_C ⊕ σ_C ⇔ C# ⊆ C ⇔ C = [φ_{N_C}(·,0) ≤ 0]",
                      rep.coherent()});
  r.witnesses["condII"] = r.result["condII"]["witness"];
  r.witnesses["extension"] = r.result["corroboration"]["extensionWitness"];
  return r;
}

Outcome do_phi(const Options &o) {
  const auto &path = input(o, 0, "set or graph");
  auto doc = json::read_file(path);
  if (doc.is_object() && doc.contains("pairs")) {
    auto g = with_source(path, [](const Json &j) { return json::graph_from(j); });
    auto x = require_vector(o.point, "--point", g.dim());
    auto xs = require_vector(o.dual, "--dual", g.dim());
    auto v = phi_finite(g, x, xs);
    Outcome r{json::to_json(v)};
    MonotoneGraph::Pair p{x, xs};
    bool on_graph = std::find(g.pairs().begin(), g.pairs().end(), p) != g.pairs().end();
    if (on_graph && is_monotone(g))
      r.checks.push_back({"φ_T = c on Graph T", v == ExtValue(dot(x, xs))});
    r.witnesses["monotone"] = is_monotone(g);
    return r;
  }
  auto c = load_set(path);
  auto x = require_vector(o.point, "--point", c.dim());
  auto xs = require_vector(o.dual, "--dual", c.dim());
  auto v = phi_normal_cone(c, x, xs);
  Outcome r{json::to_json(v)};
  auto hull = portable_hull(c);
  ExtValue at_zero = phi_normal_cone(c, x, zeros(c.dim()));
  ExtValue indicator = c.is_empty()              ? ExtValue::neg_inf()
                       : hull.contains(x)        ? ExtValue(Rational(0))
                                                 : ExtValue::pos_inf();
  r.checks.push_back({"φ_{N_C}(x,0) = ι_{C#}(x)", at_zero == indicator});
  if (face_oracle_applies(c)) {
    auto ref = phi_nc_oracle(c, x, xs);
    r.checks.push_back({"φ_{N_C} = ι_{C#} ⊕ σ_C", v == ref});
    r.witnesses["faceEnumeration"] = json::to_json(ref);
  }
  r.witnesses["sigma"] = json::to_json(support_value(c, xs));
  r.witnesses["inPortableHull"] = hull.contains(x);
  return r;
}

Outcome do_separate(const Options &o) {
  auto c = load_set(input(o, 0, "set"));
  auto x = require_vector(o.point, "--point", c.dim());
  auto sep = separation_certificate(c, x);
  Outcome r;
  if (sep.certificate) {
    r.result = json::to_json(*sep.certificate);
    r.checks.push_back({"certificate verifies", verify_separation(c, x, *sep.certificate)});
  } else {
    r.result = "none-exists";
  }
  r.checks.push_back({"no certificate ⇔ x ∈ C#", !sep.certificate == sep.in_portable_hull});
  r.extra["inPortableHull"] = sep.in_portable_hull;
  r.witnesses["portable"] = is_portable(c);
  return r;
}

Outcome do_normal_cone(const Options &o) {
  auto c = load_set(input(o, 0, "set"));
  auto x = require_vector(o.point, "--point", c.dim());
  auto k = normal_cone_at(c, x);
  Outcome r{json::to_json(k)};
  bool all = std::all_of(k.generators().begin(), k.generators().end(),
                         [&](const Vec &g) { return in_normal_cone(c, x, g); });
  r.checks.push_back({"generators satisfy σ_C(g) = ⟨x, g⟩", all});
  Json active = Json::array();
  for (auto i : c.carrier().active_rows(x))
    active.push_back(i);
  r.witnesses["activeRows"] = active;
  r.witnesses["supportPoint"] = is_support_point(c, x);
  return r;
}

Outcome do_sigma(const Options &o) {
  auto c = load_set(input(o, 0, "set"));
  auto xs = require_vector(o.dual, "--dual", c.dim());
  auto s = sigma(c, xs);
  Outcome r{json::to_json(s)};
  if (s.witness)
    r.checks.push_back({"witness attains σ_C",
                        contains(c, *s.witness) && ExtValue(dot(*s.witness, xs)) == s.value});
  r.witnesses["inRangeN"] = in_range_N(c, xs).member;
  return r;
}

Outcome do_psi(const Options &o) {
  auto t = load_graph(input(o, 0, "graph"));
  std::optional<PartiallyOpenPolyhedron> c;
  if (o.inputs.size() > 1) {
    c = load_set(o.inputs[1]);
    if (c->dim() != t.dim())
      throw InputError("graph and set dimensions differ");
  }
  if (c && o.grid && !o.point && !o.dual) {
    GridSpec grid;
    grid.step = Rational::parse(*o.grid);
    auto v = c_representable_probe(t, *c, grid);
    Outcome r{json::to_json(v)};
    r.witnesses["assumption"] = "ψ_T is the lower convex envelope of c + ι_{Graph T}";
    return r;
  }
  auto x = require_vector(o.point, "--point", t.dim());
  auto xs = require_vector(o.dual, "--dual", t.dim());
  auto p = c ? psi_sum(t, *c, x, xs, hypothesis(o)) : psi_finite(t, x, xs);
  Outcome r{json::to_json(p.value)};
  if (is_monotone(t) && p.value.is_finite())
    r.checks.push_back({"ψ ≥ c for monotone T", p.value.value() >= dot(x, xs)});
  r.witnesses = json::to_json(p);
  r.witnesses["assumption"] = "ψ_T is the lower convex envelope of c + ι_{Graph T}";
  return r;
}

Outcome do_sum_check(const Options &o) {
  auto t = load_graph(input(o, 0, "graph"));
  auto c = load_set(input(o, 1, "set"));
  if (c.dim() != t.dim())
    throw InputError("graph and set dimensions differ");
  std::vector<std::pair<Vec, Vec>> pairs;
  if (o.point || o.dual) {
    pairs.emplace_back(require_vector(o.point, "--point", t.dim()),
                       require_vector(o.dual, "--dual", t.dim()));
  } else {
    auto spec = sample_spec(o);
    auto tc = restrict_graph(t, c);
    for (const auto &p : tc.pairs()) {
      auto k = normal_cone_at(c, p.a);
      for (const auto &g : k.generators())
        pairs.emplace_back(p.a, add(p.astar, g));
    }
    for (const auto &p : tc.pairs())
      pairs.emplace_back(p.a, p.astar);
    for (auto &pr : sample_pairs(c, spec))
      if (pairs.size() < spec.pairs)
        pairs.push_back(std::move(pr));
  }
  Json rows = Json::array();
  std::size_t disagreements = 0;
  Json first = nullptr;
  for (const auto &[x, xs] : pairs) {
    auto m = sum_graph_membership(t, c, x, xs, hypothesis(o));
    if (!m.agrees()) {
      ++disagreements;
      if (first.is_null())
        first = Json{{"x", json::to_json(x)}, {"xstar", json::to_json(xs)}};
    }
    Json row = json::to_json(m);
    row["x"] = json::to_json(x);
    row["xstar"] = json::to_json(xs);
    rows.push_back(std::move(row));
  }
  Outcome r{Json{{"pairs", pairs.size()}, {"disagreements", disagreements}, {"memberships", rows}}};
  r.checks.push_back({"[ψ_{T+N_C} = c] = [ψ_{T|C} = c] + N_C", disagreements == 0});
  r.witnesses["firstDisagreement"] = first;
  r.witnesses["assumption"] = "ψ_T is the lower convex envelope of c + ι_{Graph T}";
  return r;
}

Outcome do_probe_bp(const Options &o) {
  auto c = load_set(input(o, 0, "set"));
  auto rep = bp_probe(c, boundary_samples(c, sample_spec(o)));
  Outcome r{json::to_json(rep)};
  r.checks.push_back({"Supp C is dense in bd C", rep.ok()});
  r.witnesses["counterexample"] = r.result["counterexample"];
  return r;
}

Outcome do_check_thm7(const Options &o) {
  auto c = load_set(input(o, 0, "set"));
  if (c.is_empty() || !c.is_closed())
    throw PreconditionError("check-thm7 needs a nonempty closed set");
  auto rep = thm7_check(c.carrier(), dual_samples(c, sample_spec(o)));
  Outcome r{json::to_json(rep)};
  r.checks.push_back({"line-free closed C is portable", !rep.line_free || rep.portable});
  r.checks.push_back({"dom σ_C = R(N_C) on samples", rep.disagreements == 0});
  if (rep.bounded)
    r.checks.push_back({"bounded C: every x* in R(N_C)", rep.outside_range == 0});
  r.witnesses["failingDual"] = r.result["failingDual"];
  return r;
}

Outcome do_check_enc(const Options &o) {
  auto c = load_set(input(o, 0, "set"));
  auto rep = enc_check(c, sample_spec(o));
  Outcome r{json::to_json(rep)};
  r.checks.push_back({"C## = C#", rep.hull_idempotent});
  r.checks.push_back({"N_{C#} maximal monotone", rep.hull_portable});
  r.checks.push_back({"N_{C#} extends N_C", rep.cones_agree && rep.graph_included});
  r.witnesses["failingPoint"] = r.result["failingPoint"];
  return r;
}

Outcome do_check_ncs(const Options &o) {
  auto c = load_set(input(o, 0, "set"));
  auto s = load_subset(o, c.dim());
  auto rep = ncs_check(c, s, sample_spec(o));
  Outcome r{json::to_json(rep)};
  r.checks.push_back({"(C#_S)#_S = C#_S", rep.partial_idempotent});
  r.checks.push_back({"(C#_S)# = C#_S", rep.full_idempotent});
  r.checks.push_back({"S ∩ C = S ∩ C#_S ⇔ N_C|_S = N_{C#_S}|_S", rep.iff_agrees()});
  r.witnesses["trace"] = r.result["traceWitness"];
  r.witnesses["restriction"] = r.result["restrictionWitness"];
  return r;
}

PartiallyOpenPolyhedron interval(Rational lo, Rational hi, bool open_lo, bool open_hi) {
  std::vector<StrictRow> rows{{{Rational(-1)}, -lo, open_lo}, {{Rational(1)}, hi, open_hi}};
  return PartiallyOpenPolyhedron::from_rows(1, rows);
}

PartiallyOpenPolyhedron box2(bool open_right) {
  std::vector<StrictRow> rows{{{Rational(1), Rational(0)}, Rational(1), open_right},
                              {{Rational(-1), Rational(0)}, Rational(0), false},
                              {{Rational(0), Rational(1)}, Rational(1), false},
                              {{Rational(0), Rational(-1)}, Rational(0), false}};
  return PartiallyOpenPolyhedron::from_rows(2, rows);
}

Outcome do_selftest(const Options &o) {
  auto spec = sample_spec(o);
  Outcome r;
  Json per_set = Json::array();

  auto half_open = interval(Rational(0), Rational(1), true, false);
  auto expected = ClosedPolyhedron(1, {{{Rational(1)}, Rational(1)}});
  r.checks.push_back({"(0,1]# = (-∞,1]", same_set(portable_hull(half_open), expected)});
  r.checks.push_back({"(0,1] is not portable", !is_portable(half_open)});

  std::vector<std::pair<std::string, PartiallyOpenPolyhedron>> sets{
      {"(0,1]", half_open},
      {"[0,1]", interval(Rational(0), Rational(1), false, false)},
      {"(0,1)", interval(Rational(0), Rational(1), true, true)},
      {"[0,1]^2", box2(false)},
      {"[0,1)x[0,1]", box2(true)},
      {"R^2", PartiallyOpenPolyhedron::space(2)},
      {"empty", PartiallyOpenPolyhedron::empty(2)},
  };
  for (const auto &[name, c] : sets) {
    bool ok = c.is_empty() || (ncmm_report(c, spec).coherent() && enc_check(c, spec).ok() &&
                               bp_probe(c, boundary_samples(c, spec)).ok());
    if (!c.is_empty() && c.is_closed())
      ok = ok && thm7_check(c.carrier(), dual_samples(c, spec)).ok();
    if (face_oracle_applies(c))
      for (const auto &[x, xs] : sample_pairs(c, spec))
        ok = ok && phi_normal_cone(c, x, xs) == phi_nc_oracle(c, x, xs);
    per_set.push_back(Json{{"set", name}, {"ok", ok}});
    r.checks.push_back({"invariants on " + name, ok});
  }

  LPProblem lp{{Rational(1)}, {{{Rational(1)}, Rational(1)}, {{Rational(-1)}, Rational(0)}}};
  auto sol = lp_solve(lp);
  r.checks.push_back({"LP certificate re-verifies", verify_certificate(lp, sol)});

  r.result = Json{{"sets", per_set}};
  return r;
}

using Handler = Outcome (*)(const Options &);

const std::vector<std::pair<std::string, Handler>> &handlers() {
  static const std::vector<std::pair<std::string, Handler>> table{
      {"hull", do_hull},
      {"partial-hull", do_partial_hull},
      {"portable", do_portable},
      {"report", do_report},
      {"phi", do_phi},
      {"separate", do_separate},
      {"normal-cone", do_normal_cone},
      {"sigma", do_sigma},
      {"psi", do_psi},
      {"sum-check", do_sum_check},
      {"probe-bp", do_probe_bp},
      {"check-thm7", do_check_thm7},
      {"check-enc", do_check_enc},
      {"check-ncs", do_check_ncs},
      {"selftest", do_selftest},
  };
  return table;
}

Json inputs_json(const Options &o) {
  Json j{{"files", o.inputs}, {"seed", o.seed}};
  if (o.samples)
    j["samples"] = *o.samples;
  if (o.grid)
    j["grid"] = *o.grid;
  if (o.point)
    j["point"] = *o.point;
  if (o.dual)
    j["dual"] = *o.dual;
  if (o.subset)
    j["subset"] = *o.subset;
  if (o.skip_interior)
    j["skipInteriorCheck"] = true;
  return j;
}

RunResult error_result(const Options &o, const char *kind, const std::string &message) {
  Json doc{{"verb", o.verb},
           {"inputs", inputs_json(o)},
           {"error", Json{{"kind", kind}, {"message", message}}}};
  return {exit_input_error, doc.dump(2) + "\n", o.out.value_or("")};
}

} // namespace

const std::vector<std::string> &verbs() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto &[name, _] : handlers())
      out.push_back(name);
    return out;
  }();
  return names;
}

RunResult run(const std::vector<std::string> &args) {
  Options o;
  CLI::App app{"Portable hulls, normal cones and Fitzpatrick functions of polyhedra"};
  app.name("phk");
  app.add_option("verb", o.verb, "Operation")->required()->check(CLI::IsMember(verbs()));
  app.add_option("inputs", o.inputs, "Input files (set descriptor, graph)");
  app.add_option("--seed", o.seed, "Sampling seed");
  app.add_option("--samples", o.samples, "Number of random samples");
  app.add_option("--grid", o.grid, "Grid step p/q for the representability probe");
  app.add_option("--point", o.point, "Primal point, e.g. \"[1/2, 0]\"");
  app.add_option("--dual", o.dual, "Dual point, e.g. \"[0, 1]\"");
  app.add_option("--subset", o.subset, "Contact set S: set descriptor or {\"points\": [...]}");
  app.add_option("--out", o.out, "Write the report to this path");
  app.add_flag("--skip-interior-check", o.skip_interior,
               "psi/sum-check: evaluate even when D(T) misses int C");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    return {exit_ok, app.help(), ""};
  } catch (const CLI::ParseError &e) {
    return error_result(o, "usage", e.what());
  }

  auto it = std::find_if(handlers().begin(), handlers().end(),
                         [&](const auto &h) { return h.first == o.verb; });
  Outcome out;
  try {
    if (o.grid) {
      auto step = Rational::parse(*o.grid);
      if (step.sign() <= 0)
        throw InputError("--grid: step must be positive");
    }
    out = it->second(o);
  } catch (const UnsupportedScale &e) {
    return error_result(o, "unsupported-scale", e.what());
  } catch (const PreconditionError &e) {
    return error_result(o, "precondition", e.what());
  } catch (const DomainError &e) {
    return error_result(o, "domain", e.what());
  } catch (const InputError &e) {
    return error_result(o, "input", e.what());
  }

  bool falsified = false;
  Json checks = Json::array();
  for (const auto &c : out.checks) {
    checks.push_back(Json{{"name", c.name}, {"holds", c.holds}});
    falsified = falsified || !c.holds;
  }
  Json doc{{"verb", o.verb}, {"inputs", inputs_json(o)}, {"result", out.result}};
  for (auto &[k, v] : out.extra.items())
    doc[k] = v;
  doc["witnesses"] = out.witnesses;
  doc["paperChecks"] = checks;
  return {falsified ? exit_falsified : exit_ok, doc.dump(2) + "\n", o.out.value_or("")};
}

} // namespace phk::cli
