#include "ordsolid/serialize.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ordsolid {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& msg) { throw SchemaError(where + ": " + msg); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(where, std::string("missing \"") + key + "\"");
  return *it;
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array");
  return j;
}

std::string string_at(const Json& j, const std::string& where) {
  if (!j.is_string()) schema(where, "expected a string");
  return j.get<std::string>();
}

std::size_t element(const FinitePreorder& p, const Json& j, const std::string& where) {
  auto label = string_at(j, where);
  if (auto i = p.index_of(label)) return *i;
  schema(where, "unknown element '" + label + "'");
}

std::string idx(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }
std::string key(const std::string& where, const std::string& k) { return where + "." + k; }

std::vector<std::string> parse_labels(const Json& j, const std::string& where) {
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < array_at(j, where).size(); ++i) {
    auto s = string_at(j[i], idx(where, i));
    if (!seen.insert(s).second) schema(idx(where, i), "duplicate element '" + s + "'");
    labels.push_back(std::move(s));
  }
  return labels;
}

template <class Fn>
auto rethrow_as_schema(const std::string& where, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    schema(where, e.what());
  }
}

}  // namespace

Json emit_preorder(const FinitePreorder& p) {
  const auto order = label_order(p);
  Json elements = Json::array(), leq = Json::array();
  for (auto a : order) elements.push_back(p.label(a));
  for (auto a : order)
    for (auto b : order)
      if (p.leq(a, b)) leq.push_back({p.label(a), p.label(b)});
  return {{"elements", elements}, {"leq", leq}};
}

FinitePreorder parse_preorder(const Json& j, ParseLog* log, const std::string& where) {
  auto labels = parse_labels(member(j, "elements", where), key(where, "elements"));
  FinitePreorder discrete = FinitePreorder::discrete(labels);
  std::vector<IndexPair> pairs;
  std::set<IndexPair> given;
  const std::string lw = key(where, "leq");
  const auto& leq = array_at(member(j, "leq", where), lw);
  for (std::size_t i = 0; i < leq.size(); ++i) {
    const auto& pr = leq[i];
    if (!pr.is_array() || pr.size() != 2) schema(idx(lw, i), "expected a pair [a, b]");
    auto a = element(discrete, pr[0], idx(idx(lw, i), 0));
    auto b = element(discrete, pr[1], idx(idx(lw, i), 1));
    pairs.emplace_back(a, b);
    given.emplace(a, b);
  }
  auto closed = FinitePreorder::closure(labels, pairs);
  if (log)
    for (auto [a, b] : closed.pairs())
      if (!given.count({a, b}))
        log->warnings.push_back(lw + ": added (" + labels[a] + ", " + labels[b] + ") by closure");
  return closed;
}

FinitePoset parse_poset(const Json& j, ParseLog* log, const std::string& where) {
  auto p = parse_preorder(j, log, where);
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p.equivalent(a, b))
        schema(key(where, "leq"), "not antisymmetric: " + p.label(a) + " and " + p.label(b) + " are equivalent");
  return FinitePoset(std::move(p));
}

Json emit_graph(const FinitePreorder& dom, const FinitePreorder& cod, const IndexMap& f) {
  Json g = Json::array();
  for (auto x : label_order(dom)) g.push_back({dom.label(x), cod.label(f[x])});
  return g;
}

Json emit_map(const FinitePreorder& dom, const FinitePreorder& cod, const IndexMap& f) {
  return {{"cod", emit_preorder(cod)}, {"dom", emit_preorder(dom)}, {"graph", emit_graph(dom, cod, f)}};
}

IndexMap parse_graph(const Json& j, const FinitePreorder& dom, const FinitePreorder& cod, const std::string& where) {
  const Json* g = &j;
  std::string gw = where;
  if (j.is_object()) {
    g = &member(j, "graph", where);
    gw = key(where, "graph");
  }
  array_at(*g, gw);
  IndexMap f(dom.size(), cod.size());
  for (std::size_t i = 0; i < g->size(); ++i) {
    const auto& pr = (*g)[i];
    if (!pr.is_array() || pr.size() != 2) schema(idx(gw, i), "expected a pair [x, f(x)]");
    auto x = element(dom, pr[0], idx(idx(gw, i), 0));
    auto y = element(cod, pr[1], idx(idx(gw, i), 1));
    if (f[x] != cod.size()) schema(idx(gw, i), "element '" + dom.label(x) + "' mapped twice");
    f[x] = y;
  }
  for (std::size_t x = 0; x < dom.size(); ++x)
    if (f[x] == cod.size()) schema(gw, "no image for element '" + dom.label(x) + "'");
  return f;
}

Json emit_slat(const MeetSemilattice& s) {
  Json j = emit_preorder(s.poset());
  const auto order = label_order(s.poset());
  Json meet = Json::array();
  for (auto a : order)
    for (auto b : order) meet.push_back({s.label(a), s.label(b), s.label(s.meet(a, b))});
  j["meet"] = meet;
  j["top"] = s.label(s.top());
  return j;
}

MeetSemilattice parse_slat(const Json& j, ParseLog* log, const std::string& where) {
  auto p = parse_poset(j, log, where);
  if (!is_meet_semilattice(p)) schema(where, "not a meet-semilattice (missing a top or a binary meet)");
  MeetSemilattice s(p);
  if (j.contains("top") && element(p, j["top"], key(where, "top")) != s.top())
    schema(key(where, "top"), "declared top is not the greatest element");
  if (j.contains("meet")) {
    const std::string mw = key(where, "meet");
    const auto& m = array_at(j["meet"], mw);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i].is_array() || m[i].size() != 3) schema(idx(mw, i), "expected [a, b, a^b]");
      auto a = element(p, m[i][0], idx(idx(mw, i), 0));
      auto b = element(p, m[i][1], idx(idx(mw, i), 1));
      auto c = element(p, m[i][2], idx(idx(mw, i), 2));
      if (s.meet(a, b) != c) schema(idx(mw, i), "meet disagrees with the order: expected " + s.label(s.meet(a, b)));
    }
  }
  return s;
}

Json emit_frame(const Frame& f) {
  Json j = emit_slat(f.slat());
  const auto order = label_order(f.poset());
  Json join = Json::array();
  for (auto a : order)
    for (auto b : order) join.push_back({f.label(a), f.label(b), f.label(f.join(a, b))});
  j["join"] = join;
  j["bottom"] = f.label(f.bottom());
  return j;
}

Frame parse_frame(const Json& j, ParseLog* log, const std::string& where) {
  auto s = parse_slat(j, log, where);
  if (!is_frame(s.poset())) schema(where, "not a frame (finite distributive lattice)");
  Frame f(s.poset());
  if (j.contains("bottom") && element(f.poset(), j["bottom"], key(where, "bottom")) != f.bottom())
    schema(key(where, "bottom"), "declared bottom is not the least element");
  if (j.contains("join")) {
    const std::string jw = key(where, "join");
    const auto& t = array_at(j["join"], jw);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!t[i].is_array() || t[i].size() != 3) schema(idx(jw, i), "expected [a, b, a v b]");
      auto a = element(f.poset(), t[i][0], idx(idx(jw, i), 0));
      auto b = element(f.poset(), t[i][1], idx(idx(jw, i), 1));
      auto c = element(f.poset(), t[i][2], idx(idx(jw, i), 2));
      if (f.join(a, b) != c) schema(idx(jw, i), "join disagrees with the order: expected " + f.label(f.join(a, b)));
    }
  }
  return f;
}

Json emit_space(const FiniteSpace& s) {
  Json opens = Json::array();
  for (auto u : s.opens()) {
    Json set = Json::array();
    for (std::size_t x = 0; x < s.size(); ++x)
      if (u >> x & 1) set.push_back(s.label(x));
    opens.push_back(set);
  }
  return {{"opens", opens}, {"points", s.points()}};
}

FiniteSpace parse_space(const Json& j, ParseLog* log, const std::string& where) {
  auto points = parse_labels(member(j, "points", where), key(where, "points"));
  if (points.size() > kSpacePointCap) schema(key(where, "points"), "more than 16 points");
  const auto index = FinitePreorder::discrete(points);
  const std::string ow = key(where, "opens");
  const auto& os = array_at(member(j, "opens", where), ow);
  std::vector<std::uint64_t> masks;
  for (std::size_t i = 0; i < os.size(); ++i) {
    std::uint64_t m = 0;
    for (std::size_t k = 0; k < array_at(os[i], idx(ow, i)).size(); ++k)
      m |= std::uint64_t{1} << element(index, os[i][k], idx(idx(ow, i), k));
    masks.push_back(m);
  }
  auto gen = FiniteSpace::generated(points, masks);
  if (log)
    for (auto u : gen.added)
      if (u != 0 && u != gen.space.full())
        log->warnings.push_back(ow + ": added " + subset_label(index, u) + " by closure");
  return gen.space;
}

Json emit_rational(const Rational& q) {
  // the two-argument mpq_class constructor leaves fractions unreduced
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (!j.is_string()) schema(where, "expected a rational \"p/q\" or an integer");
  const auto s = j.get<std::string>();
  try {
    Rational q(s);
    if (q.get_den() == 0) schema(where, "zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    schema(where, "malformed rational '" + s + "'");
  }
}

Json emit_vector(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(emit_rational(q));
  return out;
}

RationalVector parse_vector(const Json& j, std::size_t dim, const std::string& where) {
  if (array_at(j, where).size() != dim) schema(where, "expected " + std::to_string(dim) + " coordinates");
  RationalVector v;
  for (std::size_t i = 0; i < dim; ++i) v.push_back(parse_rational(j[i], idx(where, i)));
  return v;
}

Json emit_cone(const ConeSpace& c) {
  Json gens = Json::array();
  for (const auto& g : c.generators) gens.push_back(emit_vector(g));
  return {{"dim", c.dim}, {"generating", c.requires_generating}, {"generators", gens}, {"pointed", c.requires_pointed}};
}

ConeSpace parse_cone(const Json& j, const std::string& where) {
  ConeSpace c;
  const auto& d = member(j, "dim", where);
  if (!d.is_number_unsigned()) schema(key(where, "dim"), "expected a nonnegative integer");
  c.dim = d.get<std::size_t>();
  const std::string gw = key(where, "generators");
  const auto& gs = array_at(member(j, "generators", where), gw);
  for (std::size_t i = 0; i < gs.size(); ++i) c.generators.push_back(parse_vector(gs[i], c.dim, idx(gw, i)));
  for (const char* flag : {"pointed", "generating"}) {
    if (!j.contains(flag)) continue;
    if (!j[flag].is_boolean()) schema(key(where, flag), "expected a boolean");
    (std::string(flag) == "pointed" ? c.requires_pointed : c.requires_generating) = j[flag].get<bool>();
  }
  rethrow_as_schema(where, [&] { validate_cone(c); });
  return c;
}

Json emit_matrix(const RationalMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(emit_vector(row));
  return out;
}

RationalMatrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (array_at(j, where).size() != rows) schema(where, "expected " + std::to_string(rows) + " rows");
  RationalMatrix m;
  for (std::size_t r = 0; r < rows; ++r) m.push_back(parse_vector(j[r], cols, idx(where, r)));
  return m;
}

Json emit_shape(const FiniteOrderedCategory& c) {
  Json objects = Json::array(), morphisms = Json::array(), composites = Json::array(), leq = Json::array();
  for (std::size_t o = 0; o < c.object_count(); ++o) objects.push_back(c.object_name(o));
  for (std::size_t m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m)) continue;
    const auto& a = c.arrow(m);
    morphisms.push_back({{"cod", c.object_name(a.cod)}, {"dom", c.object_name(a.dom)}, {"name", a.name}});
  }
  for (std::size_t f = 0; f < c.morphism_count(); ++f)
    for (std::size_t g = 0; g < c.morphism_count(); ++g) {
      if (c.is_identity(f) || c.is_identity(g) || c.arrow(f).cod != c.arrow(g).dom) continue;
      composites.push_back({c.arrow(g).name, c.arrow(f).name, c.arrow(c.compose(g, f)).name});
    }
  for (std::size_t f = 0; f < c.morphism_count(); ++f)
    for (std::size_t g = 0; g < c.morphism_count(); ++g)
      if (f != g && c.arrow(f).dom == c.arrow(g).dom && c.arrow(f).cod == c.arrow(g).cod && c.leq(f, g))
        leq.push_back({c.arrow(f).name, c.arrow(g).name});
  return {{"composites", composites}, {"leq", leq}, {"morphisms", morphisms}, {"objects", objects}};
}

FiniteOrderedCategory parse_shape(const Json& j, const std::string& where) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "terminal") return FiniteOrderedCategory::terminal();
    if (s == "parallel_pair") return FiniteOrderedCategory::parallel_pair();
    if (s == "span") return FiniteOrderedCategory::span();
    if (s.rfind("discrete:", 0) == 0) {
      try {
        std::size_t used = 0;
        auto n = std::stoul(s.substr(9), &used);
        if (used == s.size() - 9) return FiniteOrderedCategory::discrete(n);
      } catch (const std::exception&) {
      }
    }
    schema(where, "unknown shape '" + s + "'");
  }
  return rethrow_as_schema(where, [&] {
    FiniteOrderedCategory c;
    std::map<std::string, std::size_t> objects, arrows;
    const std::string ow = key(where, "objects");
    for (const auto& name : parse_labels(member(j, "objects", where), ow)) {
      objects[name] = c.add_object(name);
      arrows["id_" + name] = c.identity(objects[name]);
    }
    auto object = [&](const Json& v, const std::string& w) {
      auto s = string_at(v, w);
      auto it = objects.find(s);
      if (it == objects.end()) schema(w, "unknown object '" + s + "'");
      return it->second;
    };
    auto arrow = [&](const Json& v, const std::string& w) {
      auto s = string_at(v, w);
      auto it = arrows.find(s);
      if (it == arrows.end()) schema(w, "unknown arrow '" + s + "'");
      return it->second;
    };
    if (j.contains("morphisms")) {
      const std::string mw = key(where, "morphisms");
      const auto& ms = array_at(j["morphisms"], mw);
      for (std::size_t i = 0; i < ms.size(); ++i) {
        const auto w = idx(mw, i);
        auto name = string_at(member(ms[i], "name", w), key(w, "name"));
        if (arrows.count(name)) schema(key(w, "name"), "duplicate arrow '" + name + "'");
        auto dom = object(member(ms[i], "dom", w), key(w, "dom"));
        auto cod = object(member(ms[i], "cod", w), key(w, "cod"));
        arrows[name] = c.add_morphism(name, dom, cod);
      }
    }
    if (j.contains("composites")) {
      const std::string cw = key(where, "composites");
      const auto& cs = array_at(j["composites"], cw);
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (!cs[i].is_array() || cs[i].size() != 3) schema(idx(cw, i), "expected [g, f, g.f]");
        c.define_composite(arrow(cs[i][0], idx(idx(cw, i), 0)), arrow(cs[i][1], idx(idx(cw, i), 1)),
                           arrow(cs[i][2], idx(idx(cw, i), 2)));
      }
    }
    if (j.contains("leq")) {
      const std::string lw = key(where, "leq");
      const auto& ls = array_at(j["leq"], lw);
      for (std::size_t i = 0; i < ls.size(); ++i) {
        if (!ls[i].is_array() || ls[i].size() != 2) schema(idx(lw, i), "expected [f, g]");
        c.declare_leq(arrow(ls[i][0], idx(idx(lw, i), 0)), arrow(ls[i][1], idx(idx(lw, i), 1)));
      }
    }
    c.finalize();
    return c;
  });
}

Json emit_weight(const Weight& w) {
  const auto& s = w.shape;
  Json at = Json::object(), action = Json::object();
  for (std::size_t o = 0; o < s.object_count(); ++o) at[s.object_name(o)] = emit_preorder(w.at[o]);
  for (std::size_t m = 0; m < s.morphism_count(); ++m) {
    if (s.is_identity(m)) continue;
    const auto& a = s.arrow(m);
    action[a.name] = emit_graph(w.at[a.cod], w.at[a.dom], w.action[m]);
  }
  return {{"action", action}, {"at", at}};
}

Weight parse_weight(const Json& j, const FiniteOrderedCategory& shape, ParseLog* log, const std::string& where) {
  auto require_shape = [&](const FiniteOrderedCategory& expected, const char* name) {
    if (!(shape == expected)) schema(where, std::string("weight '") + name + "' needs the matching shape");
  };
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "walking_two") {
      require_shape(FiniteOrderedCategory::parallel_pair(), "walking_two");
      return walking_two_weight();
    }
    if (s == "cocomma") {
      require_shape(FiniteOrderedCategory::span(), "cocomma");
      return cocomma_weight();
    }
    if (s == "constant") return constant_weight(shape);
    schema(where, "unknown weight '" + s + "'");
  }
  if (j.is_object() && j.contains("tensor")) {
    require_shape(FiniteOrderedCategory::terminal(), "tensor");
    return tensor_weight(parse_poset(j["tensor"], log, key(where, "tensor")));
  }
  Weight w{shape, {}, {}};
  const std::string aw = key(where, "at");
  const auto& at = member(j, "at", where);
  for (std::size_t o = 0; o < shape.object_count(); ++o) {
    const auto& name = shape.object_name(o);
    w.at.push_back(parse_poset(member(at, name.c_str(), aw), log, key(aw, name)));
  }
  const std::string mw = key(where, "action");
  for (std::size_t m = 0; m < shape.morphism_count(); ++m) {
    const auto& a = shape.arrow(m);
    if (shape.is_identity(m) && !(j.contains("action") && j["action"].contains(a.name))) {
      w.action.push_back(identity_map(w.at[a.dom].size()));
      continue;
    }
    const auto& acts = member(j, "action", where);
    w.action.push_back(parse_graph(member(acts, a.name.c_str(), mw), w.at[a.cod], w.at[a.dom], key(mw, a.name)));
  }
  rethrow_as_schema(where, [&] { validate_weight(w); });
  return w;
}

std::string to_dot(const FinitePreorder& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n";
  for (auto a : label_order(p)) out << "  \"" << p.label(a) << "\";\n";
  for (auto a : label_order(p))
    for (auto b : label_order(p)) {
      if (a == b || !p.leq(a, b) || p.leq(b, a)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < p.size() && cover; ++c)
        if (c != a && c != b && p.leq(a, c) && p.leq(c, b) && !p.leq(c, a) && !p.leq(b, c)) cover = false;
      if (cover) out << "  \"" << p.label(a) << "\" -> \"" << p.label(b) << "\";\n";
    }
  out << "}\n";
  return out.str();
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("$: ") + e.what());
  }
}

}  // namespace ordsolid
