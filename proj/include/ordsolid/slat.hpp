#pragma once

// Finite meet-semilattices: free objects, congruences and quotients, the
// universal V-extension of a family into a poset, and colimits in SLat.

#include <span>
#include <vector>

#include "ordsolid/extension.hpp"
#include "ordsolid/pos_weighted.hpp"

namespace ordsolid {

/// Largest carrier a construction may build before CapExceeded.
inline constexpr std::size_t kSlatCarrierCap = 1024;
/// Meet tables larger than this skip the cubic associativity check; every
/// such table in the library is a componentwise product or a quotient of one.
inline constexpr std::size_t kAssociativityCheckLimit = 128;

class MeetSemilattice {
 public:
  MeetSemilattice() = default;
  /// Throws InvalidStructure unless `p` has a top and all binary meets.
  explicit MeetSemilattice(FinitePoset p);
  /// Order recovered as x <= y iff x ^ y = x. Idempotence, commutativity,
  /// associativity (up to kAssociativityCheckLimit) and a unit are checked.
  static MeetSemilattice from_meet_table(std::vector<std::string> labels, std::vector<std::size_t> meet);

  const FinitePoset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  std::size_t top() const noexcept { return top_; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  bool leq(std::size_t a, std::size_t b) const { return poset_.leq(a, b); }
  const std::string& label(std::size_t a) const { return poset_.label(a); }

  friend bool operator==(const MeetSemilattice&, const MeetSemilattice&) = default;

 private:
  FinitePoset poset_;
  std::size_t top_ = 0;
  std::vector<std::size_t> meet_;
};

/// Greatest lower bound of a and b, if unique.
std::optional<std::size_t> meet_of(const FinitePreorder& p, std::size_t a, std::size_t b);
bool is_meet_semilattice(const FinitePoset& p);

bool is_slat_hom(const MeetSemilattice& a, const MeetSemilattice& b, const IndexMap& f);
/// All meet- and top-preserving maps, by pruned search.
std::vector<IndexMap> slat_homs(const MeetSemilattice& a, const MeetSemilattice& b, const Caps& caps = {});

struct SlatCat {
  using Object = MeetSemilattice;
  using Morphism = IndexMap;
  Caps caps{};
  static constexpr bool pointwise_order = true;

  std::vector<Morphism> homs(const Object& a, const Object& b) const { return slat_homs(a, b, caps); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return ordsolid::compose(g, f); }
  bool is_morphism(const Object& a, const Object& b, const Morphism& f) const { return is_slat_hom(a, b, f); }
  Morphism identity(const Object& a) const { return identity_map(a.size()); }
  bool leq(const Object& cod, const Morphism& f, const Morphism& g) const {
    return pointwise_leq(cod.poset(), f, g);
  }
};

/// Underlying poset functor V : SLat -> Pos.
class VFunctor {
 public:
  using Source = SlatCat;
  using Target = PosCat;
  VFunctor() = default;
  explicit VFunctor(Caps caps) : top_{caps}, base_{caps} {}
  const SlatCat& source() const noexcept { return top_; }
  const PosCat& target() const noexcept { return base_; }
  FinitePoset object(const MeetSemilattice& a) const { return a.poset(); }
  IndexMap morphism(const IndexMap& m) const { return m; }

 private:
  SlatCat top_;
  PosCat base_;
};

struct FreeSlat {
  MeetSemilattice object;  // up-sets under reverse inclusion
  IndexMap unit;           // x -> up-closure of x
  std::vector<std::uint64_t> sets;
};
FreeSlat free_slat(const FinitePoset& x);

struct SlatCongruence {
  MeetSemilattice carrier;
  /// Block of each element; blocks are numbered by first member.
  std::vector<std::size_t> block;
  std::size_t block_count = 0;
};
/// Least congruence containing `pairs`, by a union-find worklist that pushes
/// every meet-translate (x ^ c, y ^ c) of each merged pair.
SlatCongruence slat_congruence_closure(const MeetSemilattice& a, std::span<const IndexPair> pairs);
bool is_congruence(const SlatCongruence& c);

struct SlatQuotient {
  MeetSemilattice object;
  IndexMap projection;
};
/// Blocks labelled by their first member, [x] ^ [y] = [x ^ y], and
/// [x] <= [y] iff [x ^ y] = [x].
SlatQuotient quotient_slat(const SlatCongruence& c);

/// A vertex with legs, as in PosCocone.
struct SlatCocone {
  MeetSemilattice vertex;
  std::vector<IndexMap> legs;
};

/// The product, which is also the coproduct: leg k sends a to the tuple
/// with a at k and top elsewhere. Labels "(a,b,...)".
SlatCocone coproduct_slat(std::span<const MeetSemilattice> objects);
/// Copower of A by an n-element set.
SlatCocone copower_slat(const MeetSemilattice& a, std::size_t n);
/// Legs: {e : B -> vertex}.
SlatCocone coequalizer_slat(const MeetSemilattice& a, const MeetSemilattice& b, const IndexMap& f,
                            const IndexMap& g);
/// Legs: {B -> vertex, C -> vertex}.
SlatCocone pushout_slat(const MeetSemilattice& a, const MeetSemilattice& b, const MeetSemilattice& c,
                        const IndexMap& f, const IndexMap& g);
/// Legs: {A -> vertex, B_0 -> vertex, ...}.
SlatCocone wide_pushout_slat(const MeetSemilattice& a, std::span<const MeetSemilattice> objects,
                             std::span<const IndexMap> maps);

struct SlatTensor {
  MeetSemilattice object;
  std::vector<IndexMap> injections;
};
/// Copower A^(W0) modulo (p_u(a) ^ p_v(a), p_u(a)) for u <= v.
SlatTensor tensor_slat(const MeetSemilattice& a, const FinitePoset& w);

struct SlatCocomma {
  MeetSemilattice object;
  IndexMap p;
  IndexMap q;
};
/// B x C modulo (f(a), r) ~ (f(a), s) for r, s >= g(a); legs b -> (b, top), c -> (top, c).
SlatCocomma cocomma_slat(const MeetSemilattice& a, const MeetSemilattice& b, const MeetSemilattice& c,
                         const IndexMap& f, const IndexMap& g);

struct SlatInserter {
  MeetSemilattice object;
  IndexMap inclusion;
};
SlatInserter inserter_slat(const MeetSemilattice& a, const MeetSemilattice& b, const IndexMap& r,
                           const IndexMap& s);

/// B modulo (f(a) ^ g(a), f(a)).
SlatQuotient coinserter_slat(const MeetSemilattice& a, const MeetSemilattice& b, const IndexMap& f,
                             const IndexMap& g);

/// Product of all Di indexed by (i, u) modulo the order relations of each Wi
/// and the naturality identifications.
WeightedCocone<SlatCat> weighted_colimit_slat(const Diagram<SlatCat>& d, const Weight& w);

/// Example construction for V: free semilattice on X modulo
/// up(xi(a ^ b)) ~ up(xi a) u up(xi b) and up(xi top) ~ empty set.
ExtensionOf<VFunctor> universal_V_extension(const FinitePoset& x, const std::vector<MeetSemilattice>& family,
                                            const std::vector<IndexMap>& xi);

}  // namespace ordsolid
