#include "ordsolid/order.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace ordsolid {

namespace {

void check_labels_unique(const std::vector<std::string>& labels) {
  std::set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw InvalidStructure("duplicate element label '" + l + "'");
  }
}

}  // namespace

FinitePreorder::FinitePreorder(std::vector<std::string> labels, std::vector<std::uint8_t> relation)
    : labels_(std::move(labels)), rel_(std::move(relation)) {
  const std::size_t n = labels_.size();
  if (rel_.size() != n * n) throw InvalidStructure("relation size does not match element count");
  check_labels_unique(labels_);
  for (auto& r : rel_) r = r ? 1 : 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq(a, a)) throw InvalidStructure("relation not reflexive at '" + labels_[a] + "'");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (leq(a, b))
        for (std::size_t c = 0; c < n; ++c)
          if (leq(b, c) && !leq(a, c))
            throw InvalidStructure("relation not transitive: " + labels_[a] + " <= " + labels_[b] +
                                   " <= " + labels_[c]);
}

FinitePreorder FinitePreorder::closure(std::vector<std::string> labels, std::span<const IndexPair> pairs) {
  const std::size_t n = labels.size();
  std::vector<std::uint8_t> rel(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) rel[a * n + a] = 1;
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw InvalidStructure("pair index out of range");
    rel[a * n + b] = 1;
  }
  // Warshall
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (rel[a * n + k])
        for (std::size_t b = 0; b < n; ++b)
          if (rel[k * n + b]) rel[a * n + b] = 1;
  return FinitePreorder(std::move(labels), std::move(rel));
}

FinitePreorder FinitePreorder::discrete(std::vector<std::string> labels) {
  return closure(std::move(labels), {});
}

std::optional<std::size_t> FinitePreorder::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::size_t FinitePreorder::at(std::string_view label) const {
  if (auto i = index_of(label)) return *i;
  throw InvalidStructure("unknown element '" + std::string(label) + "'");
}

std::vector<IndexPair> FinitePreorder::pairs() const {
  std::vector<IndexPair> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (leq(a, b)) out.emplace_back(a, b);
  return out;
}

bool FinitePreorder::is_antisymmetric() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (leq(a, b) && leq(b, a)) return false;
  return true;
}

std::vector<std::size_t> FinitePreorder::maximal() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a) {
    bool is_max = true;
    for (std::size_t b = 0; b < size() && is_max; ++b)
      if (leq(a, b) && !leq(b, a)) is_max = false;
    if (is_max) out.push_back(a);
  }
  return out;
}

std::vector<std::size_t> FinitePreorder::minimal() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a) {
    bool is_min = true;
    for (std::size_t b = 0; b < size() && is_min; ++b)
      if (leq(b, a) && !leq(a, b)) is_min = false;
    if (is_min) out.push_back(a);
  }
  return out;
}

std::optional<std::size_t> FinitePreorder::top() const {
  for (std::size_t t = 0; t < size(); ++t) {
    bool all = true;
    for (std::size_t a = 0; a < size() && all; ++a) all = leq(a, t);
    if (all) return t;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinitePreorder::bottom() const {
  for (std::size_t t = 0; t < size(); ++t) {
    bool all = true;
    for (std::size_t a = 0; a < size() && all; ++a) all = leq(t, a);
    if (all) return t;
  }
  return std::nullopt;
}

FinitePoset::FinitePoset(FinitePreorder p) : FinitePreorder(std::move(p)) {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (leq(a, b) && leq(b, a))
        throw InvalidStructure("order not antisymmetric: '" + label(a) + "' and '" + label(b) +
                               "' are equivalent");
}

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<std::uint8_t> relation)
    : FinitePoset(FinitePreorder(std::move(labels), std::move(relation))) {}

FinitePoset FinitePoset::from_pairs(std::vector<std::string> labels, std::span<const IndexPair> pairs) {
  return FinitePoset(FinitePreorder::closure(std::move(labels), pairs));
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<IndexPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) pairs.emplace_back(i - 1, i);
  }
  return from_pairs(std::move(labels), pairs);
}

FinitePoset FinitePoset::antichain(std::size_t n) {
  return FinitePoset(FinitePreorder::discrete(letter_labels(n)));
}

FinitePoset FinitePoset::single(std::string label) {
  return FinitePoset(FinitePreorder::discrete({std::move(label)}));
}

std::vector<std::string> letter_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::to_string(i));
  return out;
}

IndexMap identity_map(std::size_t n) {
  IndexMap f(n);
  std::iota(f.begin(), f.end(), std::size_t{0});
  return f;
}

IndexMap constant_map(std::size_t dom_size, std::size_t value) { return IndexMap(dom_size, value); }

IndexMap compose(const IndexMap& g, const IndexMap& f) {
  IndexMap h(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = g[f[i]];
  return h;
}

bool is_monotone(const FinitePreorder& dom, const FinitePreorder& cod, const IndexMap& f) {
  if (f.size() != dom.size()) return false;
  for (auto x : f)
    if (x >= cod.size()) return false;
  for (std::size_t a = 0; a < dom.size(); ++a)
    for (std::size_t b = 0; b < dom.size(); ++b)
      if (dom.leq(a, b) && !cod.leq(f[a], f[b])) return false;
  return true;
}

void require_monotone(const FinitePreorder& dom, const FinitePreorder& cod, const IndexMap& f,
                      std::string_view what) {
  if (!is_monotone(dom, cod, f)) throw InvalidStructure(std::string(what) + " is not a monotone map");
}

bool pointwise_leq(const FinitePreorder& cod, const IndexMap& f, const IndexMap& g) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!cod.leq(f[i], g[i])) return false;
  return true;
}

bool is_surjective(const IndexMap& f, std::size_t cod_size) {
  std::vector<bool> hit(cod_size, false);
  for (auto x : f) hit[x] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_injective(const IndexMap& f) {
  std::set<std::size_t> seen(f.begin(), f.end());
  return seen.size() == f.size();
}

bool is_order_embedding(const FinitePreorder& dom, const FinitePreorder& cod, const IndexMap& f) {
  for (std::size_t a = 0; a < dom.size(); ++a)
    for (std::size_t b = 0; b < dom.size(); ++b)
      if (dom.leq(a, b) != cod.leq(f[a], f[b])) return false;
  return true;
}

MonotoneMap::MonotoneMap(FinitePreorder dom, FinitePreorder cod, IndexMap assignment)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(assignment)) {
  if (map_.size() != dom_.size()) throw InvalidStructure("map is not total on its domain");
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] >= cod_.size()) throw InvalidStructure("map sends '" + dom_.label(i) + "' outside the codomain");
  for (std::size_t a = 0; a < dom_.size(); ++a)
    for (std::size_t b = 0; b < dom_.size(); ++b)
      if (dom_.leq(a, b) && !cod_.leq(map_[a], map_[b]))
        throw InvalidStructure("map not monotone at " + dom_.label(a) + " <= " + dom_.label(b));
}

Reflection posetal_reflection(const FinitePreorder& p) {
  const std::size_t n = p.size();
  IndexMap cls(n, n);
  std::vector<std::size_t> reps;
  for (std::size_t a = 0; a < n; ++a) {
    if (cls[a] != n) continue;
    const std::size_t c = reps.size();
    reps.push_back(a);
    for (std::size_t b = a; b < n; ++b)
      if (p.equivalent(a, b)) cls[b] = c;
  }
  std::vector<std::string> labels;
  for (auto r : reps) labels.push_back(p.label(r));
  std::vector<std::uint8_t> rel(reps.size() * reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) rel[i * reps.size() + j] = p.leq(reps[i], reps[j]);
  return {FinitePoset(std::move(labels), std::move(rel)), std::move(cls)};
}

std::vector<IndexMap> monotone_maps(const FinitePreorder& dom, const FinitePreorder& cod, const Caps& caps) {
  std::vector<IndexMap> out;
  enumerate_maps(
      dom.size(), cod.size(),
      [&](const IndexMap& f, std::size_t k) {
        for (std::size_t j = 0; j < k; ++j) {
          if (dom.leq(j, k) && !cod.leq(f[j], f[k])) return false;
          if (dom.leq(k, j) && !cod.leq(f[k], f[j])) return false;
        }
        return true;
      },
      [&](const IndexMap& f) {
        out.push_back(f);
        if (out.size() > caps.hom_maps)
          throw CapExceeded("monotone map enumeration exceeds cap " + std::to_string(caps.hom_maps));
      });
  return out;
}

HomPoset hom_poset(const FinitePoset& dom, const FinitePoset& cod, const Caps& caps) {
  HomPoset h{dom, cod, monotone_maps(dom, cod, caps), {}};
  const std::size_t m = h.maps.size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back("h" + std::to_string(i));
  std::vector<std::uint8_t> rel(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) rel[i * m + j] = pointwise_leq(cod, h.maps[i], h.maps[j]);
  h.order = FinitePoset(std::move(labels), std::move(rel));
  return h;
}

bool is_jointly_order_epic(std::size_t cod_size, std::span<const IndexMap> family) {
  std::vector<bool> hit(cod_size, false);
  for (const auto& f : family)
    for (auto x : f) hit[x] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool jointly_order_epic_by_quantifier(const FinitePoset& a, std::span<const IndexMap> family,
                                      std::span<const FinitePoset> test_objects) {
  for (const auto& b : test_objects) {
    const auto homs = monotone_maps(a, b);
    for (const auto& r : homs)
      for (const auto& s : homs) {
        if (pointwise_leq(b, r, s)) continue;
        bool below = true;
        for (const auto& f : family) {
          if (!pointwise_leq(b, compose(r, f), compose(s, f))) {
            below = false;
            break;
          }
        }
        if (below) return false;
      }
  }
  return true;
}

namespace {

// Refine element classes by (down-degree, up-degree) and then by the
// multiset of neighbour classes until stable. Returns class ids ordered so
// the ordering itself is isomorphism-invariant.
std::vector<std::size_t> invariant_classes(const FinitePreorder& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::size_t>> sig(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t down = 0, up = 0;
    for (std::size_t b = 0; b < n; ++b) {
      down += p.leq(b, a);
      up += p.leq(a, b);
    }
    sig[a] = {down, up};
  }
  std::vector<std::size_t> cls(n, 0);
  std::size_t count = 0;
  for (;;) {
    std::vector<std::vector<std::size_t>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t a = 0; a < n; ++a)
      cls[a] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[a]) - sorted.begin());
    if (sorted.size() == count) break;
    count = sorted.size();
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<std::size_t> below, above;
      for (std::size_t b = 0; b < n; ++b) {
        if (b == a) continue;
        if (p.leq(b, a)) below.push_back(cls[b]);
        if (p.leq(a, b)) above.push_back(cls[b]);
      }
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      sig[a] = {cls[a], below.size(), above.size()};
      sig[a].insert(sig[a].end(), below.begin(), below.end());
      sig[a].push_back(static_cast<std::size_t>(-1));
      sig[a].insert(sig[a].end(), above.begin(), above.end());
    }
  }
  return cls;
}

struct CanonSearch {
  const FinitePreorder& p;
  std::vector<std::size_t> cls;
  std::size_t n;
  std::vector<std::size_t> order;  // order[pos] = element
  std::vector<bool> used;
  std::vector<std::uint8_t> best;
  std::vector<std::size_t> best_order;
  std::vector<std::uint8_t> cur;

  // Code layout: for position k, the k-th row segment is rel(order[k], order[j])
  // and rel(order[j], order[k]) for j <= k.
  void run(std::size_t k) {
    if (k == n) {
      if (best.empty() || cur < best) {
        best = cur;
        best_order = order;
      }
      return;
    }
    // positions are filled class by class, so the next class is fixed
    std::size_t want = static_cast<std::size_t>(-1);
    for (std::size_t a = 0; a < n; ++a)
      if (!used[a]) want = std::min(want, cls[a]);
    for (std::size_t a = 0; a < n; ++a) {
      if (used[a] || cls[a] != want) continue;
      const std::size_t mark = cur.size();
      for (std::size_t j = 0; j < k; ++j) {
        cur.push_back(p.leq(order[j], a));
        cur.push_back(p.leq(a, order[j]));
      }
      // prune: prefix already worse than best
      bool worse = false;
      if (!best.empty()) {
        auto cmp = std::lexicographical_compare_three_way(cur.begin(), cur.end(), best.begin(),
                                                          best.begin() + static_cast<std::ptrdiff_t>(cur.size()));
        worse = cmp > 0;
      }
      if (!worse) {
        used[a] = true;
        order[k] = a;
        run(k + 1);
        used[a] = false;
      }
      cur.resize(mark);
    }
  }
};

CanonSearch canon(const FinitePreorder& p) {
  CanonSearch s{p, invariant_classes(p), p.size(), std::vector<std::size_t>(p.size()),
                std::vector<bool>(p.size(), false), {}, {}, {}};
  s.run(0);
  return s;
}

}  // namespace

std::vector<std::uint8_t> canonical_code(const FinitePreorder& p) {
  auto s = canon(p);
  // class sequence is part of the code so that equal relation codes with
  // different invariants cannot collide
  std::vector<std::uint8_t> code;
  code.push_back(static_cast<std::uint8_t>(p.size()));
  code.insert(code.end(), s.best.begin(), s.best.end());
  return code;
}

IndexMap canonical_permutation(const FinitePreorder& p) {
  auto s = canon(p);
  IndexMap perm(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) perm[s.best_order[k]] = k;
  return perm;
}

bool is_isomorphic(const FinitePreorder& a, const FinitePreorder& b) {
  return a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

std::optional<IndexMap> find_isomorphism(const FinitePreorder& a, const FinitePreorder& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto sa = canon(a);
  auto sb = canon(b);
  if (sa.best != sb.best) return std::nullopt;
  IndexMap iso(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) iso[sa.best_order[k]] = sb.best_order[k];
  return iso;
}

FinitePoset relabel(const FinitePoset& p, std::vector<std::string> labels) {
  return FinitePoset(std::move(labels), p.relation());
}

FinitePoset induced_subposet(const FinitePoset& p, std::span<const std::size_t> keep) {
  std::vector<std::string> labels;
  for (auto k : keep) labels.push_back(p.label(k));
  std::vector<std::uint8_t> rel(keep.size() * keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) rel[i * keep.size() + j] = p.leq(keep[i], keep[j]);
  return FinitePoset(std::move(labels), std::move(rel));
}

FinitePoset product_poset(const FinitePoset& a, const FinitePoset& b) {
  const std::size_t n = a.size() * b.size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  std::vector<std::uint8_t> rel(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      rel[x * n + y] = a.leq(x / b.size(), y / b.size()) && b.leq(x % b.size(), y % b.size());
  return FinitePoset(std::move(labels), std::move(rel));
}

std::vector<std::size_t> label_order(const FinitePreorder& p) {
  std::vector<std::size_t> idx = identity_map(p.size());
  std::sort(idx.begin(), idx.end(), [&](auto x, auto y) { return p.label(x) < p.label(y); });
  return idx;
}

std::vector<std::uint64_t> down_sets(const FinitePreorder& p) {
  const std::size_t n = p.size();
  if (n > 63) throw CapExceeded("down-set enumeration limited to 63 elements");
  // below[a] = mask of elements <= a
  std::vector<std::uint64_t> below(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (p.leq(b, a)) below[a] |= std::uint64_t{1} << b;
  std::vector<std::uint64_t> out;
  // grow down-sets by adding elements in index order; a mask is down-closed
  // iff it contains below[a] for each member a
  std::vector<std::uint64_t> frontier{0};
  std::set<std::uint64_t> seen{0};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (auto m : frontier) {
      for (std::size_t a = 0; a < n; ++a) {
        if (m >> a & 1) continue;
        auto grown = m | below[a];
        if (seen.insert(grown).second) next.push_back(grown);
      }
    }
    frontier = std::move(next);
  }
  out.assign(seen.begin(), seen.end());
  return out;
}

std::vector<std::uint64_t> up_sets(const FinitePreorder& p) {
  const std::size_t n = p.size();
  // complements of down-sets
  auto downs = down_sets(p);
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> out;
  for (auto d : downs) out.push_back(full & ~d);
  std::sort(out.begin(), out.end());
  return out;
}

std::string subset_label(const FinitePreorder& p, std::uint64_t mask) {
  std::string out = "{";
  for (std::size_t i = 0; i < p.size(); ++i)
    if (mask >> i & 1) {
      if (out.size() > 1) out += ',';
      out += p.label(i);
    }
  return out + "}";
}

}  // namespace ordsolid
