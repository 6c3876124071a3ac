#pragma once

// Weights, diagrams, weighted cocones and brute-force certification of
// weighted colimits over a bounded universe of test objects.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ordsolid/category.hpp"

namespace ordsolid {

/// Contravariant poset-valued functor on a finite shape: W(d): W(cod d) -> W(dom d).
struct Weight {
  FiniteOrderedCategory shape;
  std::vector<FinitePoset> at;   // by shape object
  std::vector<IndexMap> action;  // by shape morphism
};

/// Checks monotone components, functoriality and d <= d' => Wd <= Wd'.
/// Throws InvalidStructure naming the violation.
void validate_weight(const Weight& w);

/// Every object sent to the one-point poset.
Weight constant_weight(const FiniteOrderedCategory& shape);
/// Weight on the one-object shape with value `w` (tensor weight).
Weight tensor_weight(const FinitePoset& w);
/// W1 = {*}, W0 = {u < v}, Wa(*) = u, Wb(*) = v on the parallel pair.
Weight walking_two_weight();
/// Span 0 -> 1, 0 -> 2 with W0 = {u < v}, W1 = W2 = {*}, Wf(*) = u, Wg(*) = v.
Weight cocomma_weight();

/// Ordered functor from a finite shape into a category C.
template <OrderedCategory C>
struct Diagram {
  FiniteOrderedCategory shape;
  std::vector<typename C::Object> at;
  std::vector<typename C::Morphism> action;
};

/// Diagram on the discrete shape with the given objects.
template <OrderedCategory C>
Diagram<C> discrete_diagram(const C& cat, std::vector<typename C::Object> objects) {
  Diagram<C> d{FiniteOrderedCategory::discrete(objects.size()), std::move(objects), {}};
  for (const auto& o : d.at) d.action.push_back(cat.identity(o));
  return d;
}

/// f, g : A -> B on the parallel-pair shape (object 0 = A, object 1 = B).
template <OrderedCategory C>
Diagram<C> parallel_pair_diagram(const C& cat, typename C::Object a, typename C::Object b,
                                 typename C::Morphism f, typename C::Morphism g) {
  Diagram<C> d{FiniteOrderedCategory::parallel_pair(), {a, b}, {}};
  d.action.resize(d.shape.morphism_count());
  d.action[d.shape.identity(0)] = cat.identity(a);
  d.action[d.shape.identity(1)] = cat.identity(b);
  d.action[d.shape.morphism_named("a")] = std::move(f);
  d.action[d.shape.morphism_named("b")] = std::move(g);
  return d;
}

/// f : A -> B, g : A -> C on the span shape (objects 0, 1, 2 = A, B, C).
template <OrderedCategory C>
Diagram<C> span_diagram(const C& cat, typename C::Object a, typename C::Object b, typename C::Object c,
                        typename C::Morphism f, typename C::Morphism g) {
  Diagram<C> d{FiniteOrderedCategory::span(), {a, b, c}, {}};
  d.action.resize(d.shape.morphism_count());
  for (std::size_t o = 0; o < 3; ++o) d.action[d.shape.identity(o)] = cat.identity(d.at[o]);
  d.action[d.shape.morphism_named("f")] = std::move(f);
  d.action[d.shape.morphism_named("g")] = std::move(g);
  return d;
}

/// A single object on the terminal shape.
template <OrderedCategory C>
Diagram<C> single_diagram(const C& cat, typename C::Object a) {
  Diagram<C> d{FiniteOrderedCategory::terminal(), {a}, {}};
  d.action.push_back(cat.identity(d.at[0]));
  return d;
}

/// Checks functoriality and monotonicity on hom-posets; throws InvalidStructure.
template <OrderedCategory C>
void validate_diagram(const C& cat, const Diagram<C>& d) {
  const auto& s = d.shape;
  if (d.at.size() != s.object_count() || d.action.size() != s.morphism_count())
    throw ShapeMismatch("diagram does not cover its shape");
  for (std::size_t o = 0; o < s.object_count(); ++o)
    if (!(d.action[s.identity(o)] == cat.identity(d.at[o])))
      throw InvalidStructure("diagram does not preserve identity at " + s.object_name(o));
  for (std::size_t f = 0; f < s.morphism_count(); ++f)
    for (std::size_t g = 0; g < s.morphism_count(); ++g) {
      if (s.arrow(f).cod != s.arrow(g).dom) continue;
      if (!(d.action[s.compose(g, f)] == cat.compose(d.action[g], d.action[f])))
        throw InvalidStructure("diagram does not preserve composition");
    }
  for (std::size_t f = 0; f < s.morphism_count(); ++f)
    for (std::size_t g = 0; g < s.morphism_count(); ++g)
      if (f != g && s.leq(f, g) && !cat.leq(d.at[s.arrow(f).cod], d.action[f], d.action[g]))
        throw InvalidStructure("diagram not monotone on hom-posets");
}

/// Components alpha_i^u : D i -> vertex, indexed [i][u].
template <OrderedCategory C>
using CoconeComponents = std::vector<std::vector<typename C::Morphism>>;

template <OrderedCategory C>
struct WeightedCocone {
  Diagram<C> diagram;
  Weight weight;
  typename C::Object vertex;
  CoconeComponents<C> components;
};

enum class CoconeMode { strict, lax, oplax };

/// A verdict of a bounded check: `holds` is only claimed for test objects of
/// size <= cap. `detail` names a witness when the check fails.
struct Certificate {
  bool holds = true;
  std::size_t cap = 0;
  std::string detail;
  explicit operator bool() const noexcept { return holds; }
};

inline Certificate fail(std::size_t cap, std::string detail) { return {false, cap, std::move(detail)}; }

namespace detail {

inline void require_same_shape(const FiniteOrderedCategory& a, const FiniteOrderedCategory& b) {
  if (!(a == b)) throw ShapeMismatch("weight and diagram have different shapes");
}

/// Constraints between cocone slots, grouped by the later slot so a
/// slot-by-slot search can test each one as soon as both ends are assigned.
struct SlotConstraint {
  enum Kind { monotone, natural } kind;
  std::size_t obj_a, slot_a;  // monotone: slot_a <= slot_b; natural: alpha_j^v . Dd  REL  alpha_i^{Wd v}
  std::size_t obj_b, slot_b;
  std::size_t morphism = 0;
};

struct SlotLayout {
  std::vector<std::size_t> offset;  // first flat slot of each object
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  std::vector<std::vector<SlotConstraint>> by_last;  // indexed by flat slot
};

SlotLayout slot_layout(const Weight& w);

}  // namespace detail

/// Strict: alpha_j^v . Dd = alpha_i^{Wd(v)}; lax: <=; oplax: >=. All modes
/// require u <= v => alpha_i^u <= alpha_i^v. Throws ShapeMismatch if the
/// weight and diagram shapes differ or the component table is mis-sized.
template <OrderedCategory C>
bool validate_cocone(const C& cat, const WeightedCocone<C>& c, CoconeMode mode = CoconeMode::strict) {
  detail::require_same_shape(c.weight.shape, c.diagram.shape);
  const auto& w = c.weight;
  if (c.components.size() != w.at.size()) throw ShapeMismatch("cocone components do not cover the shape");
  for (std::size_t i = 0; i < w.at.size(); ++i)
    if (c.components[i].size() != w.at[i].size()) throw ShapeMismatch("cocone components do not cover W i");
  for (std::size_t i = 0; i < w.at.size(); ++i)
    for (std::size_t u = 0; u < w.at[i].size(); ++u)
      for (std::size_t v = 0; v < w.at[i].size(); ++v)
        if (u != v && w.at[i].leq(u, v) && !cat.leq(c.vertex, c.components[i][u], c.components[i][v])) return false;
  const auto& s = w.shape;
  for (std::size_t d = 0; d < s.morphism_count(); ++d) {
    const auto i = s.arrow(d).dom, j = s.arrow(d).cod;
    for (std::size_t v = 0; v < w.at[j].size(); ++v) {
      auto lhs = cat.compose(c.components[j][v], c.diagram.action[d]);
      const auto& rhs = c.components[i][w.action[d][v]];
      bool ok = mode == CoconeMode::strict ? lhs == rhs
              : mode == CoconeMode::lax    ? bool(cat.leq(c.vertex, lhs, rhs))
                                           : bool(cat.leq(c.vertex, rhs, lhs));
      if (!ok) return false;
    }
  }
  return true;
}

/// Candidate morphisms per cocone slot, indexed [i][u].
template <OrderedCategory C>
using SlotCandidates = std::vector<std::vector<std::vector<typename C::Morphism>>>;

/// Every W-weighted cocone over `d` with vertex `b` whose component at (i,u)
/// is drawn from candidates[i][u], by slot-wise search with early pruning.
/// Throws CapExceeded beyond `limit` cocones.
template <OrderedCategory C>
std::vector<CoconeComponents<C>> enumerate_cocones_from(const C& cat, const Diagram<C>& d, const Weight& w,
                                                        const typename C::Object& b,
                                                        const SlotCandidates<C>& candidates,
                                                        CoconeMode mode = CoconeMode::strict,
                                                        std::size_t limit = 1'000'000) {
  detail::require_same_shape(w.shape, d.shape);
  const auto layout = detail::slot_layout(w);
  const std::size_t n = layout.slots.size();
  std::vector<CoconeComponents<C>> out;
  CoconeComponents<C> cur(w.at.size());
  for (std::size_t i = 0; i < w.at.size(); ++i) cur[i].resize(w.at[i].size());
  if (n == 0) {
    out.push_back(cur);
    return out;
  }

  auto check = [&](std::size_t k) {
    for (const auto& con : layout.by_last[k]) {
      const auto& x = cur[con.obj_a][con.slot_a];
      const auto& y = cur[con.obj_b][con.slot_b];
      if (con.kind == detail::SlotConstraint::monotone) {
        if (!cat.leq(b, x, y)) return false;
      } else {
        auto lhs = cat.compose(x, d.action[con.morphism]);
        bool ok = mode == CoconeMode::strict ? lhs == y
                : mode == CoconeMode::lax    ? bool(cat.leq(b, lhs, y))
                                             : bool(cat.leq(b, y, lhs));
        if (!ok) return false;
      }
    }
    return true;
  };

  std::vector<std::size_t> choice(n, 0);
  std::size_t k = 0;
  for (;;) {
    const auto [i, u] = layout.slots[k];
    const auto& cands = candidates[i][u];
    if (choice[k] < cands.size()) {
      cur[i][u] = cands[choice[k]];
      if (check(k)) {
        if (k + 1 == n) {
          out.push_back(cur);
          if (out.size() > limit) throw CapExceeded("cocone enumeration exceeds limit");
        } else {
          choice[++k] = 0;
          continue;
        }
      }
      ++choice[k];
      continue;
    }
    if (k == 0) break;
    ++choice[--k];
  }
  return out;
}

/// Every W-weighted cocone over `d` with vertex `b`.
template <OrderedCategory C>
std::vector<CoconeComponents<C>> enumerate_cocones(const C& cat, const Diagram<C>& d, const Weight& w,
                                                   const typename C::Object& b,
                                                   CoconeMode mode = CoconeMode::strict,
                                                   std::size_t limit = 1'000'000) {
  SlotCandidates<C> cands(w.at.size());
  for (std::size_t i = 0; i < w.at.size(); ++i) cands[i].assign(w.at[i].size(), cat.homs(d.at[i], b));
  return enumerate_cocones_from(cat, d, w, b, cands, mode, limit);
}

/// Postcomposition t . alpha.
template <OrderedCategory C>
CoconeComponents<C> postcompose(const C& cat, const typename C::Morphism& t, const CoconeComponents<C>& alpha) {
  CoconeComponents<C> out = alpha;
  for (auto& row : out)
    for (auto& m : row) m = cat.compose(t, m);
  return out;
}

/// r . alpha <= s . alpha slotwise.
template <OrderedCategory C>
bool components_leq(const C& cat, const typename C::Object& cod, const CoconeComponents<C>& x,
                    const CoconeComponents<C>& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t u = 0; u < x[i].size(); ++u)
      if (!cat.leq(cod, x[i][u], y[i][u])) return false;
  return true;
}

/// True when the components jointly hit every point of the vertex in a
/// pointwise-ordered concrete category; then r . alpha <= s . alpha already
/// forces r <= s and order-epicness needs no search.
template <OrderedCategory C>
bool components_cover(const C& cat, const typename C::Object& vertex, const CoconeComponents<C>& alpha) {
  if constexpr (PointwiseConcrete<C>) {
    std::vector<bool> hit(cat.identity(vertex).size(), false);
    for (const auto& row : alpha)
      for (const auto& m : row)
        for (auto y : m) hit[y] = true;
    return std::find(hit.begin(), hit.end(), false) == hit.end();
  } else {
    return false;
  }
}

/// The map m with m . alpha = beta, read off pointwise; nullopt when two
/// readings clash, some point of `from` is not covered, or m is not a morphism.
template <PointwiseConcrete C>
std::optional<IndexMap> read_off_mediator(const C& cat, const typename C::Object& from, const typename C::Object& to,
                                          const CoconeComponents<C>& alpha, const CoconeComponents<C>& beta) {
  const std::size_t n = cat.identity(from).size();
  IndexMap m(n, 0);
  std::vector<bool> filled(n, false);
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::size_t u = 0; u < alpha[i].size(); ++u)
      for (std::size_t x = 0; x < alpha[i][u].size(); ++x) {
        const auto y = alpha[i][u][x];
        if (filled[y] && m[y] != beta[i][u][x]) return std::nullopt;
        m[y] = beta[i][u][x];
        filled[y] = true;
      }
  if (std::find(filled.begin(), filled.end(), false) != filled.end() || !cat.is_morphism(from, to, m))
    return std::nullopt;
  return m;
}

/// Bounded certificate that `c` is a weighted colimit: for every test object
/// B, (i) each weighted cocone with vertex B has exactly one mediating
/// morphism (uniqueness checked, not assumed), and (ii) the cocone is
/// order-epic against all r, s : vertex -> B.
template <OrderedCategory C>
Certificate is_weighted_colimit(const C& cat, const WeightedCocone<C>& c,
                                const std::vector<typename C::Object>& universe, std::size_t cap,
                                CoconeMode mode = CoconeMode::strict) {
  if (!validate_cocone(cat, c, mode)) return fail(cap, "not a weighted cocone");
  const bool covers = components_cover(cat, c.vertex, c.components);
  for (std::size_t bi = 0; bi < universe.size(); ++bi) {
    const auto& b = universe[bi];
    if constexpr (PointwiseConcrete<C>) {
      // each cocone determines its only possible mediator
      if (covers) {
        for (const auto& beta : enumerate_cocones(cat, c.diagram, c.weight, b, mode))
          if (!read_off_mediator(cat, c.vertex, b, c.components, beta))
            return fail(cap, "test object #" + std::to_string(bi) + ": a cocone does not factor");
        continue;
      }
    }
    const auto homs = cat.homs(c.vertex, b);
    std::map<CoconeComponents<C>, std::size_t> images;
    std::vector<CoconeComponents<C>> composed;
    composed.reserve(homs.size());
    for (const auto& t : homs) {
      composed.push_back(postcompose(cat, t, c.components));
      ++images[composed.back()];
    }
    for (const auto& beta : enumerate_cocones(cat, c.diagram, c.weight, b, mode)) {
      auto it = images.find(beta);
      if (it == images.end()) return fail(cap, "test object #" + std::to_string(bi) + ": a cocone does not factor");
      if (it->second != 1)
        return fail(cap, "test object #" + std::to_string(bi) + ": mediating morphism not unique");
    }
    for (std::size_t r = 0; r < homs.size(); ++r)
      for (std::size_t s = 0; s < homs.size(); ++s) {
        if (cat.leq(b, homs[r], homs[s])) continue;
        if (components_leq(cat, b, composed[r], composed[s]))
          return fail(cap, "test object #" + std::to_string(bi) + ": cocone not order-epic");
      }
  }
  return {true, cap, {}};
}

/// A conical cocone (constant weight 1) from plain legs.
template <OrderedCategory C>
WeightedCocone<C> conical_cocone(Diagram<C> d, typename C::Object vertex, std::vector<typename C::Morphism> legs) {
  Weight w = constant_weight(d.shape);
  CoconeComponents<C> comps;
  for (auto& l : legs) comps.push_back({std::move(l)});
  return {std::move(d), std::move(w), std::move(vertex), std::move(comps)};
}

/// Walking-Two cocone of a co-inserter e : B -> vertex of (f, g).
template <OrderedCategory C>
WeightedCocone<C> coinserter_cocone(const C& cat, Diagram<C> d, typename C::Object vertex,
                                    const typename C::Morphism& e) {
  const auto& s = d.shape;
  CoconeComponents<C> comps{{cat.compose(e, d.action[s.morphism_named("a")]),
                             cat.compose(e, d.action[s.morphism_named("b")])},
                            {e}};
  return {std::move(d), walking_two_weight(), std::move(vertex), std::move(comps)};
}

/// Cocomma-weighted cocone of legs p : B -> vertex, q : C -> vertex.
template <OrderedCategory C>
WeightedCocone<C> cocomma_cocone(const C& cat, Diagram<C> d, typename C::Object vertex,
                                 const typename C::Morphism& p, const typename C::Morphism& q) {
  const auto& s = d.shape;
  CoconeComponents<C> comps{{cat.compose(p, d.action[s.morphism_named("f")]),
                             cat.compose(q, d.action[s.morphism_named("g")])},
                            {p},
                            {q}};
  return {std::move(d), cocomma_weight(), std::move(vertex), std::move(comps)};
}

/// Tensor cocone (lambda^u)_u of W (x) A.
template <OrderedCategory C>
WeightedCocone<C> tensor_cocone(const C& cat, const FinitePoset& w, typename C::Object a,
                                typename C::Object vertex, std::vector<typename C::Morphism> injections) {
  return {single_diagram(cat, std::move(a)), tensor_weight(w), std::move(vertex), {std::move(injections)}};
}

/// The same cocone moved along a vertex isomorphism: components iso . alpha.
template <OrderedCategory C>
WeightedCocone<C> transport_vertex(const C& cat, const WeightedCocone<C>& c, typename C::Object new_vertex,
                                   const typename C::Morphism& iso) {
  return {c.diagram, c.weight, std::move(new_vertex), postcompose(cat, iso, c.components)};
}

}  // namespace ordsolid
