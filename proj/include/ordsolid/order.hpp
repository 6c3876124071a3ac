#pragma once

// Finite preorders and posets, monotone maps between them, the posetal
// reflection, hom-posets, and isomorphism testing by canonical form.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordsolid/error.hpp"

namespace ordsolid {

/// A function between finite carriers, given by the image index of each
/// domain element. Every concrete category in this library uses it as its
/// morphism type.
using IndexMap = std::vector<std::size_t>;
using IndexPair = std::pair<std::size_t, std::size_t>;

/// Explicit size bounds. Exceeding one is an error, never a silent truncation.
struct Caps {
  std::size_t poset_size = 6;
  std::size_t hom_maps = 1'000'000;
};

class FinitePreorder {
 public:
  FinitePreorder() = default;

  /// `relation` is row-major n*n with relation[a*n+b] != 0 iff a <= b.
  /// Throws InvalidStructure unless reflexive and transitive, and labels unique.
  FinitePreorder(std::vector<std::string> labels, std::vector<std::uint8_t> relation);

  /// Least preorder on `labels` containing `pairs`.
  static FinitePreorder closure(std::vector<std::string> labels, std::span<const IndexPair> pairs);
  static FinitePreorder discrete(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  bool leq(std::size_t a, std::size_t b) const { return rel_[a * labels_.size() + b] != 0; }
  bool equivalent(std::size_t a, std::size_t b) const { return leq(a, b) && leq(b, a); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(std::string_view label) const;
  /// Like index_of but throws InvalidStructure naming the missing label.
  std::size_t at(std::string_view label) const;

  const std::vector<std::uint8_t>& relation() const noexcept { return rel_; }
  /// All related pairs (a,b), a <= b, including reflexive ones.
  std::vector<IndexPair> pairs() const;
  bool is_antisymmetric() const;

  /// Elements with no strictly greater (resp. smaller) element.
  std::vector<std::size_t> maximal() const;
  std::vector<std::size_t> minimal() const;
  std::optional<std::size_t> top() const;
  std::optional<std::size_t> bottom() const;

  friend bool operator==(const FinitePreorder&, const FinitePreorder&) = default;

 protected:
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> rel_;
};

class FinitePoset : public FinitePreorder {
 public:
  FinitePoset() = default;
  /// Throws InvalidStructure if `p` is not antisymmetric.
  explicit FinitePoset(FinitePreorder p);
  FinitePoset(std::vector<std::string> labels, std::vector<std::uint8_t> relation);

  /// Closure of `pairs`, which must not create a cycle.
  static FinitePoset from_pairs(std::vector<std::string> labels, std::span<const IndexPair> pairs);
  /// Chain 0 < 1 < ... < n-1, labelled by decimal index.
  static FinitePoset chain(std::size_t n);
  /// Antichain labelled a, b, c, ... (then e26, e27, ... past z).
  static FinitePoset antichain(std::size_t n);
  static FinitePoset single(std::string label = "*");
};

std::vector<std::string> letter_labels(std::size_t n);

IndexMap identity_map(std::size_t n);
IndexMap constant_map(std::size_t dom_size, std::size_t value);
/// g after f.
IndexMap compose(const IndexMap& g, const IndexMap& f);

bool is_monotone(const FinitePreorder& dom, const FinitePreorder& cod, const IndexMap& f);
/// f <= g pointwise in `cod`.
bool pointwise_leq(const FinitePreorder& cod, const IndexMap& f, const IndexMap& g);
bool is_surjective(const IndexMap& f, std::size_t cod_size);
bool is_injective(const IndexMap& f);
/// Order-embedding: a <= b iff f(a) <= f(b).
bool is_order_embedding(const FinitePreorder& dom, const FinitePreorder& cod, const IndexMap& f);
/// Throws InvalidStructure mentioning `what` unless f is monotone dom -> cod.
void require_monotone(const FinitePreorder& dom, const FinitePreorder& cod, const IndexMap& f,
                      std::string_view what);

/// A monotone map carrying its domain and codomain; validated on construction.
class MonotoneMap {
 public:
  MonotoneMap(FinitePreorder dom, FinitePreorder cod, IndexMap assignment);

  const FinitePreorder& dom() const noexcept { return dom_; }
  const FinitePreorder& cod() const noexcept { return cod_; }
  const IndexMap& assignment() const noexcept { return map_; }
  std::size_t operator()(std::size_t x) const { return map_[x]; }

  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;

 private:
  FinitePreorder dom_;
  FinitePreorder cod_;
  IndexMap map_;
};

/// Strongly connected components of <= collapsed to a poset.
/// Each class is labelled by the label of its smallest-index member, and
/// classes are numbered in order of first member, so a poset reflects to
/// itself with the identity quotient.
struct Reflection {
  FinitePoset poset;
  IndexMap quotient;
};
Reflection posetal_reflection(const FinitePreorder& p);

/// Depth-first enumeration of maps {0..n_dom-1} -> {0..n_cod-1}. `ok(f, k)`
/// is called after f[k] is assigned and must only inspect f[0..k]; returning
/// false prunes the branch. `emit(f)` sees each complete surviving map.
template <class Ok, class Emit>
void enumerate_maps(std::size_t n_dom, std::size_t n_cod, Ok&& ok, Emit&& emit) {
  IndexMap f(n_dom, 0);
  if (n_dom == 0) {
    emit(f);
    return;
  }
  if (n_cod == 0) return;
  std::size_t k = 0;
  f[0] = 0;
  for (;;) {
    bool advance = ok(f, k);
    if (advance && k + 1 == n_dom) {
      emit(f);
      advance = false;
    }
    if (advance) {
      ++k;
      f[k] = 0;
      continue;
    }
    // next sibling, backtracking as needed
    while (f[k] + 1 == n_cod) {
      if (k == 0) return;
      --k;
    }
    ++f[k];
  }
}

/// All monotone maps dom -> cod in lexicographic order of assignment.
/// Throws CapExceeded if the enumeration would produce more than caps.hom_maps.
std::vector<IndexMap> monotone_maps(const FinitePreorder& dom, const FinitePreorder& cod,
                                    const Caps& caps = {});

/// Every monotone map dom -> cod, ordered pointwise.
struct HomPoset {
  FinitePoset dom;
  FinitePoset cod;
  std::vector<IndexMap> maps;
  /// Labels "h0", "h1", ... in the order of `maps`.
  FinitePoset order;
};
/// Throws CapExceeded beyond caps.hom_maps monotone maps.
HomPoset hom_poset(const FinitePoset& dom, const FinitePoset& cod, const Caps& caps = {});

/// Joint surjectivity of a family into a poset with `cod_size` points; in
/// Pos this decides joint order-epicness.
bool is_jointly_order_epic(std::size_t cod_size, std::span<const IndexMap> family);

/// Bounded-quantifier oracle: for every test poset B and monotone r, s: A -> B,
/// (r.alpha_i <= s.alpha_i for all i) implies r <= s.
bool jointly_order_epic_by_quantifier(const FinitePoset& a, std::span<const IndexMap> family,
                                      std::span<const FinitePoset> test_objects);

/// Canonical code of a preorder: equal codes iff isomorphic (labels ignored).
std::vector<std::uint8_t> canonical_code(const FinitePreorder& p);
/// Permutation realising canonical_code: element i goes to position perm[i].
IndexMap canonical_permutation(const FinitePreorder& p);
bool is_isomorphic(const FinitePreorder& a, const FinitePreorder& b);
/// An order-isomorphism a -> b, if one exists.
std::optional<IndexMap> find_isomorphism(const FinitePreorder& a, const FinitePreorder& b);

/// Copy of `p` with elements renamed by `labels` (same order).
FinitePoset relabel(const FinitePoset& p, std::vector<std::string> labels);
/// Sub-poset on `keep` (in the given order) with induced order.
FinitePoset induced_subposet(const FinitePoset& p, std::span<const std::size_t> keep);
FinitePoset product_poset(const FinitePoset& a, const FinitePoset& b);

/// Elements of p sorted by label; used for deterministic output.
std::vector<std::size_t> label_order(const FinitePreorder& p);

/// Down-closed subsets of p as bit masks (p.size() <= 63), in increasing
/// numeric order of the mask.
std::vector<std::uint64_t> down_sets(const FinitePreorder& p);
std::vector<std::uint64_t> up_sets(const FinitePreorder& p);
/// "{a,b}" listing the members of `mask` in index order.
std::string subset_label(const FinitePreorder& p, std::uint64_t mask);

}  // namespace ordsolid
