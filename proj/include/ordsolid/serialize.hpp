#pragma once

// JSON schemas for every structure the CLI reads or writes. Emitters are
// canonical (sorted keys, elements sorted by label) so that parsing an
// emitted document and emitting it again reproduces it byte for byte.
// Parsers throw SchemaError with a "$.path: message" location.

#include <json.hpp>

#include <string>
#include <vector>

#include "ordsolid/category.hpp"
#include "ordsolid/diagram.hpp"
#include "ordsolid/frame.hpp"
#include "ordsolid/ovec.hpp"
#include "ordsolid/slat.hpp"
#include "ordsolid/topo.hpp"

namespace ordsolid {

using Json = nlohmann::json;

/// Non-fatal repairs made while parsing (missing reflexive pairs, opens
/// added by closure).
struct ParseLog {
  std::vector<std::string> warnings;
};

/// {"elements": [...], "leq": [[a, b], ...]} with every related pair listed.
Json emit_preorder(const FinitePreorder& p);
/// Accepts any subset of the relation and closes it, warning about each
/// pair that had to be added. Antisymmetry is checked after closure.
FinitePoset parse_poset(const Json& j, ParseLog* log = nullptr, const std::string& where = "$");
FinitePreorder parse_preorder(const Json& j, ParseLog* log = nullptr, const std::string& where = "$");

/// {"dom": poset, "cod": poset, "graph": [[x, fx], ...]}.
Json emit_map(const FinitePreorder& dom, const FinitePreorder& cod, const IndexMap& f);
/// Only the graph, by labels.
Json emit_graph(const FinitePreorder& dom, const FinitePreorder& cod, const IndexMap& f);
/// Reads either a graph array or an object with a "graph" member; every
/// domain element must appear exactly once.
IndexMap parse_graph(const Json& j, const FinitePreorder& dom, const FinitePreorder& cod,
                     const std::string& where = "$");

/// Poset schema plus "top" and the full "meet" table [[a, b, a^b], ...].
Json emit_slat(const MeetSemilattice& s);
/// "top" and "meet" are optional; when present they are cross-checked.
MeetSemilattice parse_slat(const Json& j, ParseLog* log = nullptr, const std::string& where = "$");

/// Poset schema plus "top", "bottom", "meet" and "join" tables.
Json emit_frame(const Frame& f);
Frame parse_frame(const Json& j, ParseLog* log = nullptr, const std::string& where = "$");

/// {"points": [...], "opens": [[...], ...]}; opens sorted by bit mask.
Json emit_space(const FiniteSpace& s);
/// Closes the given opens under union and intersection, warning about each
/// open set that had to be added.
FiniteSpace parse_space(const Json& j, ParseLog* log = nullptr, const std::string& where = "$");

/// Rationals as "p/q" strings ("p" when integral); integers are also accepted.
Json emit_rational(const Rational& q);
Rational parse_rational(const Json& j, const std::string& where = "$");
Json emit_vector(const RationalVector& v);
RationalVector parse_vector(const Json& j, std::size_t dim, const std::string& where = "$");
/// {"dim": n, "generators": [...], "pointed": b, "generating": b}; the flags
/// are the requirements the space imposes.
Json emit_cone(const ConeSpace& c);
ConeSpace parse_cone(const Json& j, const std::string& where = "$");
Json emit_matrix(const RationalMatrix& m);
RationalMatrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& where = "$");

/// Either a shorthand string ("terminal", "parallel_pair", "span",
/// "discrete:N") or {"objects": [...], "morphisms": [{"name", "dom", "cod"}],
/// "composites": [[g, f, g.f], ...], "leq": [[f, g], ...]}.
Json emit_shape(const FiniteOrderedCategory& c);
FiniteOrderedCategory parse_shape(const Json& j, const std::string& where = "$");

/// Either a shorthand ("walking_two", "cocomma", "constant", {"tensor": poset})
/// or {"at": {object: poset}, "action": {arrow: graph}} on `shape`.
/// Identity actions may be omitted.
Json emit_weight(const Weight& w);
Weight parse_weight(const Json& j, const FiniteOrderedCategory& shape, ParseLog* log = nullptr,
                    const std::string& where = "$");

/// Hasse diagram in Graphviz DOT, edges drawn upward.
std::string to_dot(const FinitePreorder& p, const std::string& name = "P");

/// Reads a JSON document, reporting syntax errors as SchemaError.
Json parse_json_text(const std::string& text);

}  // namespace ordsolid
