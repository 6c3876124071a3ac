#pragma once

// Ordered categories as data. Generic algorithms are written against the
// OrderedCategory / OrderedFunctor concepts; concrete categories (Pos, Ord,
// SLat, Frm, Top) use IndexMap morphisms, explicit finite categories use
// morphism ids into a composition table.

#include <concepts>
#include <map>
#include <string>
#include <vector>

#include "ordsolid/order.hpp"

namespace ordsolid {

template <class C>
concept OrderedCategory = requires(const C& cat, const typename C::Object& a, const typename C::Morphism& f) {
  { cat.homs(a, a) } -> std::same_as<std::vector<typename C::Morphism>>;
  { cat.compose(f, f) } -> std::same_as<typename C::Morphism>;
  { cat.identity(a) } -> std::same_as<typename C::Morphism>;
  // f <= g for parallel f, g with codomain `a`
  { cat.leq(a, f, f) } -> std::convertible_to<bool>;
  { f == f } -> std::convertible_to<bool>;
  { a == a } -> std::convertible_to<bool>;
};

template <class F>
concept OrderedFunctor = requires(const F& p, const typename F::Source::Object& a,
                                  const typename F::Source::Morphism& m) {
  requires OrderedCategory<typename F::Source>;
  requires OrderedCategory<typename F::Target>;
  { p.source() } -> std::convertible_to<const typename F::Source&>;
  { p.target() } -> std::convertible_to<const typename F::Target&>;
  { p.object(a) } -> std::convertible_to<typename F::Target::Object>;
  { p.morphism(m) } -> std::convertible_to<typename F::Target::Morphism>;
};

/// Categories of finite structured sets whose hom order is the pointwise
/// order of the codomain's underlying preorder.
template <class C>
concept PointwiseConcrete = OrderedCategory<C> && std::same_as<typename C::Morphism, IndexMap> && C::pointwise_order &&
                            requires(const C& cat, const typename C::Object& a, const IndexMap& m) {
                              { cat.is_morphism(a, a, m) } -> std::convertible_to<bool>;
                            };

/// A finite category whose hom-sets are posets and whose composition is
/// monotone in both arguments. Identities are created with each object.
/// Used for diagram shapes and for abstract top/base categories.
class FiniteOrderedCategory {
 public:
  using Object = std::size_t;
  using Morphism = std::size_t;

  struct Arrow {
    std::string name;
    Object dom;
    Object cod;
    friend bool operator==(const Arrow&, const Arrow&) = default;
  };

  Object add_object(std::string name);
  Morphism add_morphism(std::string name, Object dom, Object cod);
  /// Declares g . f = h (identities compose automatically).
  void define_composite(Morphism g, Morphism f, Morphism h);
  /// Declares f <= g in their hom-poset; the order is closed reflexively and
  /// transitively by finalize().
  void declare_leq(Morphism f, Morphism g);
  /// Closes hom orders and checks: every composable pair has a composite,
  /// associativity, unit laws, antisymmetric hom orders, and monotone
  /// composition. Throws InvalidStructure with the first violation.
  void finalize();

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t morphism_count() const noexcept { return arrows_.size(); }
  const std::string& object_name(Object o) const { return objects_[o]; }
  const Arrow& arrow(Morphism m) const { return arrows_[m]; }
  Object object_named(std::string_view name) const;
  Morphism morphism_named(std::string_view name) const;
  bool is_identity(Morphism m) const { return identity_of_[arrows_[m].dom] == m; }
  /// True when the only morphisms are identities.
  bool is_discrete() const noexcept { return arrows_.size() == objects_.size(); }

  std::vector<Morphism> homs(Object a, Object b) const;
  Morphism compose(Morphism g, Morphism f) const;
  Morphism identity(Object a) const { return identity_of_[a]; }
  bool leq(Object, Morphism f, Morphism g) const { return order_[f * arrows_.size() + g] != 0; }
  bool leq(Morphism f, Morphism g) const { return order_[f * arrows_.size() + g] != 0; }

  /// Same objects and arrows (by name and endpoints), composition and order.
  friend bool operator==(const FiniteOrderedCategory& a, const FiniteOrderedCategory& b) {
    return a.objects_ == b.objects_ && a.arrows_ == b.arrows_ && a.composite_ == b.composite_ &&
           a.order_ == b.order_;
  }

  /// n objects "0".."n-1" and nothing else.
  static FiniteOrderedCategory discrete(std::size_t n);
  /// One object "0".
  static FiniteOrderedCategory terminal() { return discrete(1); }
  /// Objects 0, 1 and arrows a, b: 0 -> 1, discretely ordered.
  static FiniteOrderedCategory parallel_pair();
  /// Objects 0, 1, 2 and arrows f: 0 -> 1, g: 0 -> 2.
  static FiniteOrderedCategory span();

 private:
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<Morphism> identity_of_;
  std::map<std::pair<Morphism, Morphism>, Morphism> composite_;
  std::vector<std::uint8_t> order_;  // morphism_count^2 after finalize()
  std::vector<std::pair<Morphism, Morphism>> declared_leq_;
  bool finalized_ = false;
};

/// Ordered functor between explicit finite ordered categories, by tables.
class TableFunctor {
 public:
  using Source = FiniteOrderedCategory;
  using Target = FiniteOrderedCategory;

  TableFunctor(const Source& src, const Target& tgt, std::vector<Target::Object> on_objects,
               std::vector<Target::Morphism> on_morphisms);

  const Source& source() const noexcept { return *src_; }
  const Target& target() const noexcept { return *tgt_; }
  Target::Object object(Source::Object a) const { return objects_[a]; }
  Target::Morphism morphism(Source::Morphism m) const { return morphisms_[m]; }

 private:
  const Source* src_;
  const Target* tgt_;
  std::vector<Target::Object> objects_;
  std::vector<Target::Morphism> morphisms_;
};

/// Ord: finite preorders, monotone maps, pointwise preorder on homs.
/// (Preorder-enriched; hom "orders" need not be antisymmetric.)
struct OrdCat {
  using Object = FinitePreorder;
  using Morphism = IndexMap;
  Caps caps{};
  static constexpr bool pointwise_order = true;

  std::vector<Morphism> homs(const Object& a, const Object& b) const { return monotone_maps(a, b, caps); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return ordsolid::compose(g, f); }
  bool is_morphism(const Object& a, const Object& b, const Morphism& f) const { return is_monotone(a, b, f); }
  Morphism identity(const Object& a) const { return identity_map(a.size()); }
  bool leq(const Object& cod, const Morphism& f, const Morphism& g) const { return pointwise_leq(cod, f, g); }
};

/// Pos: finite posets, monotone maps, pointwise order on homs.
struct PosCat {
  using Object = FinitePoset;
  using Morphism = IndexMap;
  Caps caps{};
  static constexpr bool pointwise_order = true;

  std::vector<Morphism> homs(const Object& a, const Object& b) const { return monotone_maps(a, b, caps); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return ordsolid::compose(g, f); }
  bool is_morphism(const Object& a, const Object& b, const Morphism& f) const { return is_monotone(a, b, f); }
  Morphism identity(const Object& a) const { return identity_map(a.size()); }
  bool leq(const Object& cod, const Morphism& f, const Morphism& g) const { return pointwise_leq(cod, f, g); }
};

/// The identity functor on a category C.
template <OrderedCategory C>
class IdentityFunctor {
 public:
  using Source = C;
  using Target = C;
  explicit IdentityFunctor(const C& cat) : cat_(&cat) {}
  const C& source() const noexcept { return *cat_; }
  const C& target() const noexcept { return *cat_; }
  typename C::Object object(const typename C::Object& a) const { return a; }
  typename C::Morphism morphism(const typename C::Morphism& m) const { return m; }

 private:
  const C* cat_;
};

}  // namespace ordsolid
