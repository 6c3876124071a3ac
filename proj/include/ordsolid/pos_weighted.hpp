#pragma once

// Conical and weighted colimits in Pos, inserters, and the cocomma and
// co-inserter routes through each other.

#include <span>
#include <vector>

#include "ordsolid/diagram.hpp"

namespace ordsolid {

/// A colimit vertex with its legs, one per diagram object listed by the
/// producing function.
struct PosCocone {
  FinitePoset vertex;
  std::vector<IndexMap> legs;
};

struct InserterResult {
  FinitePoset object;
  IndexMap inclusion;
};

struct CoinserterResult {
  FinitePoset object;
  IndexMap projection;
};

struct CocommaResult {
  FinitePoset object;
  IndexMap p;  // from B
  IndexMap q;  // from C
};

struct TensorResult {
  FinitePoset object;
  std::vector<IndexMap> injections;  // indexed by the weight's elements
};

/// Disjoint union; labels "inl:x"/"inr:x" for two summands, "in<k>:x" otherwise.
PosCocone coproduct_pos(std::span<const FinitePoset> objects);
/// Legs: {e : B -> vertex}.
PosCocone coequalizer_pos(const FinitePoset& a, const FinitePoset& b, const IndexMap& f, const IndexMap& g);
/// Legs: {B -> vertex, C -> vertex}.
PosCocone pushout_pos(const FinitePoset& a, const FinitePoset& b, const FinitePoset& c, const IndexMap& f,
                      const IndexMap& g);
/// Legs: {A -> vertex, B_0 -> vertex, B_1 -> vertex, ...}. An empty family
/// yields A itself with the identity leg.
PosCocone wide_pushout_pos(const FinitePoset& a, std::span<const FinitePoset> objects,
                           std::span<const IndexMap> maps);

enum class ConicalKind { coproduct, coequalizer, pushout, wide_pushout };

/// coproduct: objects = summands, maps empty;
/// coequalizer: objects = {A, B}, maps = {f, g};
/// pushout: objects = {A, B, C}, maps = {f: A->B, g: A->C};
/// wide_pushout: objects = {A, B_0, ...}, maps = {f_k: A->B_k}.
struct ConicalData {
  std::vector<FinitePoset> objects;
  std::vector<IndexMap> maps;
};
PosCocone conical_colimit_pos(ConicalKind kind, const ConicalData& data);

/// {a : r(a) <= s(a)} with the induced order.
InserterResult inserter_pos(const FinitePoset& a, const FinitePoset& b, const IndexMap& r, const IndexMap& s);
/// Reflection of B under the preorder generated by <=_B and f(a) <= g(a).
CoinserterResult coinserter_pos(const FinitePoset& a, const FinitePoset& b, const IndexMap& f, const IndexMap& g);
CocommaResult cocomma_pos(const FinitePoset& a, const FinitePoset& b, const FinitePoset& c, const IndexMap& f,
                          const IndexMap& g);
/// W x A with the product order, labels "(u,a)", injection u sends a to (u,a).
TensorResult tensor_pos(const FinitePoset& w, const FinitePoset& a);

/// Cocomma as the co-inserter of (inl.f, inr.g) out of the coproduct B + C.
CocommaResult cocomma_via_coinserter(const FinitePoset& a, const FinitePoset& b, const FinitePoset& c,
                                     const IndexMap& f, const IndexMap& g);
/// Co-inserter as the coequalizer of the cocomma legs (p, q).
CoinserterResult coinserter_via_cocomma(const FinitePoset& a, const FinitePoset& b, const IndexMap& f,
                                        const IndexMap& g);

/// Colimit of `d` weighted by `w`: the coproduct of the Wi x Di modulo the
/// identifications (j, v, Dd x) = (i, Wd v, x), reflected to a poset.
/// Vertex labels are "<object>:(<u>,<x>)" of the least representative.
WeightedCocone<PosCat> weighted_colimit_pos(const Diagram<PosCat>& d, const Weight& w);

}  // namespace ordsolid
