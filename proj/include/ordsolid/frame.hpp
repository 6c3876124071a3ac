#pragma once

// Finite frames (finite distributive lattices), down-set frames, the
// saturation quotient by a relation, the universal U-extension of a family
// of frames into a semilattice, and the binary frame coproduct.

#include <span>
#include <vector>

#include "ordsolid/slat.hpp"

namespace ordsolid {

/// Frame carriers are held as 64-bit masks of down- and up-sets.
inline constexpr std::size_t kFrameCarrierCap = 64;
/// Largest |C_i| for which the universal U-extension enumerates subsets.
inline constexpr std::size_t kFramePowersetCap = 16;

class Frame {
 public:
  Frame() = default;
  /// Throws InvalidStructure unless `p` is a distributive bounded lattice.
  explicit Frame(FinitePoset p);

  const FinitePoset& poset() const noexcept { return slat_.poset(); }
  const MeetSemilattice& slat() const noexcept { return slat_; }
  std::size_t size() const noexcept { return slat_.size(); }
  std::size_t top() const noexcept { return slat_.top(); }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t meet(std::size_t a, std::size_t b) const { return slat_.meet(a, b); }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  bool leq(std::size_t a, std::size_t b) const { return slat_.leq(a, b); }
  const std::string& label(std::size_t a) const { return slat_.label(a); }

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  MeetSemilattice slat_;
  std::size_t bottom_ = 0;
  std::vector<std::size_t> join_;
};

/// Bounded lattice in which x ^ (y v z) = (x ^ y) v (x ^ z) for all triples.
bool is_frame(const FinitePoset& p);

bool is_frame_hom(const Frame& a, const Frame& b, const IndexMap& f);
/// Maps preserving binary meets and joins, top and bottom, by pruned search.
std::vector<IndexMap> frame_homs(const Frame& a, const Frame& b, const Caps& caps = {});

struct FrmCat {
  using Object = Frame;
  using Morphism = IndexMap;
  Caps caps{};
  static constexpr bool pointwise_order = true;

  std::vector<Morphism> homs(const Object& a, const Object& b) const { return frame_homs(a, b, caps); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return ordsolid::compose(g, f); }
  bool is_morphism(const Object& a, const Object& b, const Morphism& f) const { return is_frame_hom(a, b, f); }
  Morphism identity(const Object& a) const { return identity_map(a.size()); }
  bool leq(const Object& cod, const Morphism& f, const Morphism& g) const {
    return pointwise_leq(cod.poset(), f, g);
  }
};

/// Underlying semilattice functor U : Frm -> SLat.
class UFunctor {
 public:
  using Source = FrmCat;
  using Target = SlatCat;
  UFunctor() = default;
  explicit UFunctor(Caps caps) : top_{caps}, base_{caps} {}
  const FrmCat& source() const noexcept { return top_; }
  const SlatCat& target() const noexcept { return base_; }
  MeetSemilattice object(const Frame& a) const { return a.slat(); }
  IndexMap morphism(const IndexMap& m) const { return m; }

 private:
  FrmCat top_;
  SlatCat base_;
};

struct DownSetFrame {
  Frame object;  // down-sets under inclusion
  IndexMap unit; // x -> down-closure of x
  std::vector<std::uint64_t> sets;
};
DownSetFrame down_set_frame(const FinitePreorder& x);

/// Elements s with a ^ c <= s iff b ^ c <= s for every (a, b) in `r` and every c.
std::vector<std::size_t> saturated_elements(const Frame& a, std::span<const IndexPair> r);

struct FrameQuotient {
  Frame object;          // the saturated elements, labelled as in A
  IndexMap projection;   // x -> least saturated element above x
  IndexMap carrier;      // quotient element -> its index in A
};
/// Throws InvalidStructure if the saturated elements are not closed under
/// meets, which would indicate a bug rather than bad input.
FrameQuotient frame_quotient(const Frame& a, std::span<const IndexPair> r);

/// Every frame hom g : A -> B identifying each related pair factors as
/// h . projection for exactly one h, for B in `universe`.
Certificate frame_quotient_universal(const Frame& a, std::span<const IndexPair> r, const FrameQuotient& q,
                                     const std::vector<Frame>& universe, std::size_t cap);

/// Down-sets of X modulo down(xi(v K)) ~ union of down(xi a) over a in K, for
/// every K included in C_i (the empty K identifies down(xi bottom) with the
/// empty set). Throws CapExceeded when some |C_i| > kFramePowersetCap.
ExtensionOf<UFunctor> universal_U_extension(const MeetSemilattice& x, const std::vector<Frame>& family,
                                            const std::vector<IndexMap>& xi);

struct FrameCoproduct {
  Frame object;
  std::vector<IndexMap> injections;
  ExtensionOf<UFunctor> extension;  // over the semilattice coproduct
};
/// The universal U-extension of the semilattice coproduct injections.
FrameCoproduct frame_coproduct(const Frame& a, const Frame& b);

struct FrameInserter {
  Frame object;
  IndexMap inclusion;
};
/// {a : r(a) <= s(a)}, a subframe.
FrameInserter inserter_frm(const Frame& a, const Frame& b, const IndexMap& r, const IndexMap& s);

/// Join-irreducible elements with the induced order.
FinitePoset join_irreducibles(const Frame& a);

}  // namespace ordsolid
