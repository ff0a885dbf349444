#pragma once

#include "phk/ext_value.hpp"
#include "phk/fitzpatrick.hpp"
#include "phk/lp.hpp"
#include "phk/normal_cones.hpp"
#include "phk/polyhedra.hpp"
#include "phk/portability.hpp"
#include "phk/representability.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string_view>

namespace phk::json {

/// Insertion-ordered so that reports come out in a fixed, readable key order.
using Json = nlohmann::ordered_json;

/// Parses a JSON document; syntax errors become InputError with line and column.
Json parse(std::string_view text, std::string_view source = "<input>");
Json read_file(const std::filesystem::path &path);

Json to_json(const Rational &r);
Json to_json(const ExtValue &v);
Json to_json(const Vec &v);
Json to_json(const std::vector<Vec> &vs);

/// Accepts "p/q" strings and integer literals. `where` is a JSON pointer for messages.
Rational rational_from(const Json &j, const std::string &where);
Vec vec_from(const Json &j, const std::string &where, std::size_t dim);
/// Vector of unknown length; the length is taken from the array.
Vec vec_from(const Json &j, const std::string &where);

/// {"dim": n, "rows": [{"normal", "offset", "strict"}]}, {"empty": true[, "dim": n]}, {"space": n}.
PartiallyOpenPolyhedron set_from(const Json &j);
Json to_json(const PartiallyOpenPolyhedron &c);
/// {"dim": n, "rows": [{"normal", "offset"}]}.
Json to_json(const ClosedPolyhedron &p);

/// {"dim": n, "pairs": [{"a", "astar"}]}.
MonotoneGraph graph_from(const Json &j);
Json to_json(const MonotoneGraph &g);

/// A contact set: a set descriptor, or {"points": [[..], ..]}.
ContactSet contact_set_from(const Json &j, std::size_t dim);

Json to_json(const GeneratedCone &k);
Json to_json(const VRep &v);
Json to_json(const LPOutcome &o);
Json to_json(const SupportEvaluation &s);
Json to_json(const PortabilityReport &r);
Json to_json(const SeparationCertificate &c);
Json to_json(const EncReport &r);
Json to_json(const NcsReport &r);
Json to_json(const Thm7Report &r);
Json to_json(const BoundaryProbeReport &r);
Json to_json(const PsiEvaluation &p);
Json to_json(const SumMembership &m);
Json to_json(const ProbeVerdict &v);

} // namespace phk::json
