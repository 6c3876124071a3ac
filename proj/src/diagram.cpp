#include "ordsolid/diagram.hpp"

namespace ordsolid {

void validate_weight(const Weight& w) {
  const auto& s = w.shape;
  if (w.at.size() != s.object_count() || w.action.size() != s.morphism_count())
    throw ShapeMismatch("weight does not cover its shape");
  for (std::size_t d = 0; d < s.morphism_count(); ++d) {
    const auto& arr = s.arrow(d);
    if (!is_monotone(w.at[arr.cod], w.at[arr.dom], w.action[d]))
      throw InvalidStructure("weight action of " + arr.name + " is not a monotone map W(cod) -> W(dom)");
  }
  for (std::size_t o = 0; o < s.object_count(); ++o)
    if (w.action[s.identity(o)] != identity_map(w.at[o].size()))
      throw InvalidStructure("weight does not preserve identity at " + s.object_name(o));
  // contravariance: W(g . f) = Wf . Wg
  for (std::size_t f = 0; f < s.morphism_count(); ++f)
    for (std::size_t g = 0; g < s.morphism_count(); ++g) {
      if (s.arrow(f).cod != s.arrow(g).dom) continue;
      if (w.action[s.compose(g, f)] != compose(w.action[f], w.action[g]))
        throw InvalidStructure("weight not functorial at " + s.arrow(g).name + " . " + s.arrow(f).name);
    }
  for (std::size_t f = 0; f < s.morphism_count(); ++f)
    for (std::size_t g = 0; g < s.morphism_count(); ++g)
      if (f != g && s.leq(f, g) && !pointwise_leq(w.at[s.arrow(f).dom], w.action[f], w.action[g]))
        throw InvalidStructure("weight not monotone on hom-posets");
}

Weight constant_weight(const FiniteOrderedCategory& shape) {
  Weight w{shape, {}, {}};
  for (std::size_t o = 0; o < shape.object_count(); ++o) w.at.push_back(FinitePoset::single());
  for (std::size_t m = 0; m < shape.morphism_count(); ++m) w.action.push_back({0});
  return w;
}

Weight tensor_weight(const FinitePoset& p) {
  auto shape = FiniteOrderedCategory::terminal();
  return {shape, {p}, {identity_map(p.size())}};
}

Weight walking_two_weight() {
  auto shape = FiniteOrderedCategory::parallel_pair();
  FinitePoset two = FinitePoset::from_pairs({"u", "v"}, std::vector<IndexPair>{{0, 1}});
  Weight w{shape, {two, FinitePoset::single()}, {}};
  w.action.resize(shape.morphism_count());
  w.action[shape.identity(0)] = identity_map(2);
  w.action[shape.identity(1)] = {0};
  w.action[shape.morphism_named("a")] = {0};
  w.action[shape.morphism_named("b")] = {1};
  validate_weight(w);
  return w;
}

Weight cocomma_weight() {
  auto shape = FiniteOrderedCategory::span();
  FinitePoset two = FinitePoset::from_pairs({"u", "v"}, std::vector<IndexPair>{{0, 1}});
  Weight w{shape, {two, FinitePoset::single(), FinitePoset::single()}, {}};
  w.action.resize(shape.morphism_count());
  w.action[shape.identity(0)] = identity_map(2);
  w.action[shape.identity(1)] = {0};
  w.action[shape.identity(2)] = {0};
  w.action[shape.morphism_named("f")] = {0};
  w.action[shape.morphism_named("g")] = {1};
  validate_weight(w);
  return w;
}

namespace detail {

SlotLayout slot_layout(const Weight& w) {
  SlotLayout l;
  for (std::size_t i = 0; i < w.at.size(); ++i) {
    l.offset.push_back(l.slots.size());
    for (std::size_t u = 0; u < w.at[i].size(); ++u) l.slots.emplace_back(i, u);
  }
  l.by_last.resize(l.slots.size());
  for (std::size_t i = 0; i < w.at.size(); ++i)
    for (std::size_t u = 0; u < w.at[i].size(); ++u)
      for (std::size_t v = 0; v < w.at[i].size(); ++v)
        if (u != v && w.at[i].leq(u, v)) {
          auto last = std::max(l.offset[i] + u, l.offset[i] + v);
          l.by_last[last].push_back({SlotConstraint::monotone, i, u, i, v, 0});
        }
  const auto& s = w.shape;
  for (std::size_t d = 0; d < s.morphism_count(); ++d) {
    if (s.is_identity(d)) continue;
    const auto i = s.arrow(d).dom, j = s.arrow(d).cod;
    for (std::size_t v = 0; v < w.at[j].size(); ++v) {
      const auto wv = w.action[d][v];
      auto last = std::max(l.offset[j] + v, l.offset[i] + wv);
      l.by_last[last].push_back({SlotConstraint::natural, j, v, i, wv, d});
    }
  }
  return l;
}

}  // namespace detail

}  // namespace ordsolid
