#include "ordsolid/category.hpp"

namespace ordsolid {

FiniteOrderedCategory::Object FiniteOrderedCategory::add_object(std::string name) {
  if (finalized_) throw InvalidStructure("category already finalized");
  const Object o = objects_.size();
  objects_.push_back(name);
  identity_of_.push_back(arrows_.size());
  arrows_.push_back({"id_" + name, o, o});
  return o;
}

FiniteOrderedCategory::Morphism FiniteOrderedCategory::add_morphism(std::string name, Object dom, Object cod) {
  if (finalized_) throw InvalidStructure("category already finalized");
  if (dom >= objects_.size() || cod >= objects_.size()) throw InvalidStructure("arrow endpoint out of range");
  arrows_.push_back({std::move(name), dom, cod});
  return arrows_.size() - 1;
}

void FiniteOrderedCategory::define_composite(Morphism g, Morphism f, Morphism h) {
  if (arrows_[f].cod != arrows_[g].dom) throw InvalidStructure("composite of non-composable arrows");
  if (arrows_[h].dom != arrows_[f].dom || arrows_[h].cod != arrows_[g].cod)
    throw InvalidStructure("composite has wrong endpoints");
  composite_[{g, f}] = h;
}

void FiniteOrderedCategory::declare_leq(Morphism f, Morphism g) {
  if (arrows_[f].dom != arrows_[g].dom || arrows_[f].cod != arrows_[g].cod)
    throw InvalidStructure("order between non-parallel arrows");
  declared_leq_.emplace_back(f, g);
}

FiniteOrderedCategory::Object FiniteOrderedCategory::object_named(std::string_view name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return i;
  throw InvalidStructure("unknown object '" + std::string(name) + "'");
}

FiniteOrderedCategory::Morphism FiniteOrderedCategory::morphism_named(std::string_view name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return i;
  throw InvalidStructure("unknown arrow '" + std::string(name) + "'");
}

std::vector<FiniteOrderedCategory::Morphism> FiniteOrderedCategory::homs(Object a, Object b) const {
  std::vector<Morphism> out;
  for (std::size_t m = 0; m < arrows_.size(); ++m)
    if (arrows_[m].dom == a && arrows_[m].cod == b) out.push_back(m);
  return out;
}

FiniteOrderedCategory::Morphism FiniteOrderedCategory::compose(Morphism g, Morphism f) const {
  if (arrows_[f].cod != arrows_[g].dom)
    throw InvalidStructure("cannot compose " + arrows_[g].name + " after " + arrows_[f].name);
  if (is_identity(g)) return f;
  if (is_identity(f)) return g;
  auto it = composite_.find({g, f});
  if (it == composite_.end())
    throw InvalidStructure("missing composite " + arrows_[g].name + " . " + arrows_[f].name);
  return it->second;
}

void FiniteOrderedCategory::finalize() {
  const std::size_t m = arrows_.size();
  // every composable non-identity pair needs a composite
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g)
      if (arrows_[f].cod == arrows_[g].dom) (void)compose(g, f);
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g) {
      if (arrows_[f].cod != arrows_[g].dom) continue;
      for (std::size_t h = 0; h < m; ++h) {
        if (arrows_[g].cod != arrows_[h].dom) continue;
        if (compose(h, compose(g, f)) != compose(compose(h, g), f))
          throw InvalidStructure("composition not associative at " + arrows_[h].name + "," + arrows_[g].name +
                                 "," + arrows_[f].name);
      }
    }
  order_.assign(m * m, 0);
  for (std::size_t f = 0; f < m; ++f) order_[f * m + f] = 1;
  for (auto [f, g] : declared_leq_) order_[f * m + g] = 1;
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t a = 0; a < m; ++a)
      if (order_[a * m + k])
        for (std::size_t b = 0; b < m; ++b)
          if (order_[k * m + b]) order_[a * m + b] = 1;
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = f + 1; g < m; ++g)
      if (order_[f * m + g] && order_[g * m + f])
        throw InvalidStructure("hom order not antisymmetric at " + arrows_[f].name + "," + arrows_[g].name);
  // composition monotone in both arguments
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t f2 = 0; f2 < m; ++f2) {
      if (!order_[f * m + f2]) continue;
      for (std::size_t g = 0; g < m; ++g)
        for (std::size_t g2 = 0; g2 < m; ++g2) {
          if (!order_[g * m + g2] || arrows_[f].cod != arrows_[g].dom) continue;
          if (!order_[compose(g, f) * m + compose(g2, f2)])
            throw InvalidStructure("composition not monotone at " + arrows_[g].name + " . " + arrows_[f].name);
        }
    }
  finalized_ = true;
}

FiniteOrderedCategory FiniteOrderedCategory::discrete(std::size_t n) {
  FiniteOrderedCategory c;
  for (std::size_t i = 0; i < n; ++i) c.add_object(std::to_string(i));
  c.finalize();
  return c;
}

FiniteOrderedCategory FiniteOrderedCategory::parallel_pair() {
  FiniteOrderedCategory c;
  auto o0 = c.add_object("0");
  auto o1 = c.add_object("1");
  c.add_morphism("a", o0, o1);
  c.add_morphism("b", o0, o1);
  c.finalize();
  return c;
}

FiniteOrderedCategory FiniteOrderedCategory::span() {
  FiniteOrderedCategory c;
  auto o0 = c.add_object("0");
  auto o1 = c.add_object("1");
  auto o2 = c.add_object("2");
  c.add_morphism("f", o0, o1);
  c.add_morphism("g", o0, o2);
  c.finalize();
  return c;
}

TableFunctor::TableFunctor(const Source& src, const Target& tgt, std::vector<Target::Object> on_objects,
                           std::vector<Target::Morphism> on_morphisms)
    : src_(&src), tgt_(&tgt), objects_(std::move(on_objects)), morphisms_(std::move(on_morphisms)) {
  if (objects_.size() != src.object_count() || morphisms_.size() != src.morphism_count())
    throw InvalidStructure("functor table sizes do not match the source category");
  for (std::size_t m = 0; m < src.morphism_count(); ++m) {
    const auto& a = src.arrow(m);
    const auto& b = tgt.arrow(morphisms_[m]);
    if (b.dom != objects_[a.dom] || b.cod != objects_[a.cod])
      throw InvalidStructure("functor does not respect endpoints of " + a.name);
  }
  for (std::size_t o = 0; o < src.object_count(); ++o)
    if (morphisms_[src.identity(o)] != tgt.identity(objects_[o]))
      throw InvalidStructure("functor does not preserve identities");
  for (std::size_t f = 0; f < src.morphism_count(); ++f)
    for (std::size_t g = 0; g < src.morphism_count(); ++g) {
      if (src.arrow(f).cod != src.arrow(g).dom) continue;
      if (morphisms_[src.compose(g, f)] != tgt.compose(morphisms_[g], morphisms_[f]))
        throw InvalidStructure("functor does not preserve composition");
    }
  for (std::size_t f = 0; f < src.morphism_count(); ++f)
    for (std::size_t g = 0; g < src.morphism_count(); ++g)
      if (src.leq(f, g) && !tgt.leq(morphisms_[f], morphisms_[g]))
        throw InvalidStructure("functor not monotone on hom-posets");
}

}  // namespace ordsolid
