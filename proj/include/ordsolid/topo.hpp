#pragma once

// Finite topological spaces, the specialization preorder, T0 reflection and
// the universal S-extension of a family of spaces into a preorder.

#include <cstdint>
#include <string>
#include <vector>

#include "ordsolid/extension.hpp"

namespace ordsolid {

inline constexpr std::size_t kSpacePointCap = 16;

class FiniteSpace {
 public:
  struct Generated;

  FiniteSpace() = default;
  /// Opens as point masks. Throws InvalidStructure unless the family holds
  /// the empty set and the whole space and is closed under union and
  /// intersection. Opens are stored sorted.
  FiniteSpace(std::vector<std::string> points, std::vector<std::uint64_t> opens);
  /// Closes `opens` under union and intersection and adds the empty set and
  /// the whole space, reporting which sets were added.
  static Generated generated(std::vector<std::string> points, std::vector<std::uint64_t> opens);
  static FiniteSpace discrete(std::size_t n);
  static FiniteSpace indiscrete(std::size_t n);
  /// Points x, y with opens {}, {x}, {x,y}.
  static FiniteSpace sierpinski();

  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::string& label(std::size_t i) const { return points_[i]; }
  const std::vector<std::uint64_t>& opens() const noexcept { return opens_; }
  bool is_open(std::uint64_t mask) const;
  std::uint64_t full() const noexcept { return size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1; }

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  std::vector<std::string> points_;
  std::vector<std::uint64_t> opens_;
};

struct FiniteSpace::Generated {
  FiniteSpace space;
  std::vector<std::uint64_t> added;
};

/// x <= y iff every open containing y contains x, so opens are down-closed.
FinitePreorder specialization(const FiniteSpace& sp);
bool is_t0(const FiniteSpace& sp);

std::uint64_t preimage(const IndexMap& f, std::uint64_t mask);
bool is_continuous(const FiniteSpace& dom, const FiniteSpace& cod, const IndexMap& f);
std::vector<IndexMap> continuous_maps(const FiniteSpace& dom, const FiniteSpace& cod, const Caps& caps = {});

/// Top with the specialization preorder on hom-sets (preorder-enriched).
struct TopCat {
  using Object = FiniteSpace;
  using Morphism = IndexMap;
  Caps caps{};
  static constexpr bool pointwise_order = true;

  std::vector<Morphism> homs(const Object& a, const Object& b) const { return continuous_maps(a, b, caps); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return ordsolid::compose(g, f); }
  bool is_morphism(const Object& a, const Object& b, const Morphism& f) const { return is_continuous(a, b, f); }
  Morphism identity(const Object& a) const { return identity_map(a.size()); }
  bool leq(const Object& cod, const Morphism& f, const Morphism& g) const {
    return pointwise_leq(specialization(cod), f, g);
  }
};

/// The specialization functor Top -> Ord.
class SPrimeFunctor {
 public:
  using Source = TopCat;
  using Target = OrdCat;
  SPrimeFunctor() = default;
  explicit SPrimeFunctor(Caps caps) : top_{caps}, base_{caps} {}
  const TopCat& source() const noexcept { return top_; }
  const OrdCat& target() const noexcept { return base_; }
  FinitePreorder object(const FiniteSpace& a) const { return specialization(a); }
  IndexMap morphism(const IndexMap& m) const { return m; }

 private:
  TopCat top_;
  OrdCat base_;
};

struct T0Reflection {
  FiniteSpace space;
  IndexMap quotient;
};
/// Identifies points lying in the same opens.
T0Reflection t0_reflection(const FiniteSpace& sp);

/// Opens are the down-closed U of X whose preimage under every xi_i is open;
/// q is the identity on points and alpha_i = xi_i.
ExtensionOf<SPrimeFunctor> universal_S_extension(const FinitePreorder& x, const std::vector<FiniteSpace>& family,
                                                 const std::vector<IndexMap>& xi);

}  // namespace ordsolid
