#include "ordsolid/slat.hpp"

#include <deque>
#include <map>
#include <numeric>

namespace ordsolid {

namespace {

void require_slat_hom(const MeetSemilattice& a, const MeetSemilattice& b, const IndexMap& f, std::string_view what) {
  if (!is_slat_hom(a, b, f)) throw InvalidStructure(std::string(what) + " is not a semilattice homomorphism");
}

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

SlatCocone quotient_cocone(const SlatCocone& base, const std::vector<IndexPair>& pairs) {
  auto q = quotient_slat(slat_congruence_closure(base.vertex, pairs));
  SlatCocone out{std::move(q.object), {}};
  for (const auto& leg : base.legs) out.legs.push_back(compose(q.projection, leg));
  return out;
}

}  // namespace

std::optional<std::size_t> meet_of(const FinitePreorder& p, std::size_t a, std::size_t b) {
  std::vector<std::size_t> lower;
  for (std::size_t c = 0; c < p.size(); ++c)
    if (p.leq(c, a) && p.leq(c, b)) lower.push_back(c);
  std::optional<std::size_t> glb;
  for (auto g : lower) {
    bool greatest = true;
    for (auto l : lower) greatest = greatest && p.leq(l, g);
    if (greatest) {
      if (glb && !p.equivalent(*glb, g)) return std::nullopt;
      if (!glb) glb = g;
    }
  }
  return glb;
}

bool is_meet_semilattice(const FinitePoset& p) {
  if (!p.top()) return false;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (!meet_of(p, a, b)) return false;
  return true;
}

MeetSemilattice::MeetSemilattice(FinitePoset p) : poset_(std::move(p)) {
  auto t = poset_.top();
  if (!t) throw InvalidStructure("semilattice needs a top element");
  top_ = *t;
  const std::size_t n = poset_.size();
  meet_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto m = meet_of(poset_, a, b);
      if (!m) throw InvalidStructure("no meet of '" + poset_.label(a) + "' and '" + poset_.label(b) + "'");
      meet_[a * n + b] = *m;
    }
}

MeetSemilattice MeetSemilattice::from_meet_table(std::vector<std::string> labels, std::vector<std::size_t> meet) {
  const std::size_t n = labels.size();
  if (n == 0) throw InvalidStructure("semilattice needs a top element");
  if (meet.size() != n * n) throw InvalidStructure("meet table size does not match element count");
  auto m = [&](std::size_t a, std::size_t b) { return meet[a * n + b]; };
  for (auto v : meet)
    if (v >= n) throw InvalidStructure("meet table entry out of range");
  for (std::size_t a = 0; a < n; ++a) {
    if (m(a, a) != a) throw InvalidStructure("meet not idempotent at '" + labels[a] + "'");
    for (std::size_t b = 0; b < n; ++b) {
      if (m(a, b) != m(b, a)) throw InvalidStructure("meet not commutative");
      for (std::size_t c = 0; c < n && n <= kAssociativityCheckLimit; ++c)
        if (m(m(a, b), c) != m(a, m(b, c))) throw InvalidStructure("meet not associative");
    }
  }
  std::optional<std::size_t> top;
  for (std::size_t t = 0; t < n && !top; ++t) {
    bool unit = true;
    for (std::size_t a = 0; a < n && unit; ++a) unit = m(t, a) == a;
    if (unit) top = t;
  }
  if (!top) throw InvalidStructure("semilattice needs a top element");
  std::vector<std::uint8_t> rel(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rel[a * n + b] = m(a, b) == a;
  MeetSemilattice s;
  s.poset_ = FinitePoset(std::move(labels), std::move(rel));
  s.top_ = *top;
  s.meet_ = std::move(meet);
  return s;
}

bool is_slat_hom(const MeetSemilattice& a, const MeetSemilattice& b, const IndexMap& f) {
  if (f.size() != a.size()) return false;
  for (auto x : f)
    if (x >= b.size()) return false;
  if (f[a.top()] != b.top()) return false;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (f[a.meet(x, y)] != b.meet(f[x], f[y])) return false;
  return true;
}

std::vector<IndexMap> slat_homs(const MeetSemilattice& a, const MeetSemilattice& b, const Caps& caps) {
  // each meet equation is checked as soon as its last index is assigned
  struct Eq {
    std::size_t x, y, m;
  };
  std::vector<std::vector<Eq>> by_last(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = x + 1; y < a.size(); ++y) {
      const auto m = a.meet(x, y);
      by_last[std::max({x, y, m})].push_back({x, y, m});
    }
  std::vector<IndexMap> out;
  enumerate_maps(
      a.size(), b.size(),
      [&](const IndexMap& f, std::size_t k) {
        if (k == a.top() && f[k] != b.top()) return false;
        for (const auto& e : by_last[k])
          if (f[e.m] != b.meet(f[e.x], f[e.y])) return false;
        return true;
      },
      [&](const IndexMap& f) {
        out.push_back(f);
        if (out.size() > caps.hom_maps) throw CapExceeded("semilattice hom enumeration exceeds cap");
      });
  return out;
}

FreeSlat free_slat(const FinitePoset& x) {
  if (x.size() > 20) throw CapExceeded("free semilattice on more than 20 generators");
  auto sets = up_sets(x);
  std::map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < sets.size(); ++i) index[sets[i]] = i;
  const std::size_t n = sets.size();
  std::vector<std::size_t> meet(n * n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(subset_label(x, sets[i]));
    for (std::size_t j = 0; j < n; ++j) meet[i * n + j] = index.at(sets[i] | sets[j]);
  }
  IndexMap unit(x.size());
  for (std::size_t v = 0; v < x.size(); ++v) {
    std::uint64_t up = 0;
    for (std::size_t y = 0; y < x.size(); ++y)
      if (x.leq(v, y)) up |= std::uint64_t{1} << y;
    unit[v] = index.at(up);
  }
  return {MeetSemilattice::from_meet_table(std::move(labels), std::move(meet)), std::move(unit), std::move(sets)};
}

SlatCongruence slat_congruence_closure(const MeetSemilattice& a, std::span<const IndexPair> pairs) {
  const std::size_t n = a.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::deque<IndexPair> work(pairs.begin(), pairs.end());
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    if (x >= n || y >= n) throw InvalidStructure("congruence pair out of range");
    auto rx = find(parent, x), ry = find(parent, y);
    if (rx == ry) continue;
    parent[std::max(rx, ry)] = std::min(rx, ry);
    for (std::size_t c = 0; c < n; ++c) work.emplace_back(a.meet(x, c), a.meet(y, c));
  }
  SlatCongruence out{a, std::vector<std::size_t>(n), 0};
  std::map<std::size_t, std::size_t> number;
  for (std::size_t x = 0; x < n; ++x) {
    auto [it, fresh] = number.try_emplace(find(parent, x), out.block_count);
    if (fresh) ++out.block_count;
    out.block[x] = it->second;
  }
  return out;
}

bool is_congruence(const SlatCongruence& c) {
  const auto& a = c.carrier;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = x + 1; y < a.size(); ++y) {
      if (c.block[x] != c.block[y]) continue;
      for (std::size_t z = 0; z < a.size(); ++z)
        if (c.block[a.meet(x, z)] != c.block[a.meet(y, z)]) return false;
    }
  return true;
}

SlatQuotient quotient_slat(const SlatCongruence& c) {
  const auto& a = c.carrier;
  const std::size_t k = c.block_count;
  std::vector<std::size_t> rep(k, a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    if (rep[c.block[x]] == a.size()) rep[c.block[x]] = x;
  std::vector<std::string> labels;
  std::vector<std::size_t> meet(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(a.label(rep[i]));
    for (std::size_t j = 0; j < k; ++j) meet[i * k + j] = c.block[a.meet(rep[i], rep[j])];
  }
  return {MeetSemilattice::from_meet_table(std::move(labels), std::move(meet)), c.block};
}

SlatCocone coproduct_slat(std::span<const MeetSemilattice> objects) {
  if (objects.size() == 1) return {objects[0], {identity_map(objects[0].size())}};
  std::size_t total = 1;
  for (const auto& o : objects) {
    total *= o.size();
    if (total > kSlatCarrierCap) throw CapExceeded("semilattice product exceeds carrier cap");
  }
  // mixed radix, first component most significant
  std::vector<std::size_t> stride(objects.size(), 1);
  for (std::size_t k = objects.size(); k-- > 1;) stride[k - 1] = stride[k] * objects[k].size();
  auto digit = [&](std::size_t e, std::size_t k) { return e / stride[k] % objects[k].size(); };
  std::vector<std::string> labels(total);
  std::vector<std::size_t> meet(total * total);
  for (std::size_t e = 0; e < total; ++e) {
    std::string l = "(";
    for (std::size_t k = 0; k < objects.size(); ++k) l += (k ? "," : "") + objects[k].label(digit(e, k));
    labels[e] = l + ")";
    for (std::size_t f = 0; f < total; ++f) {
      std::size_t m = 0;
      for (std::size_t k = 0; k < objects.size(); ++k) m += objects[k].meet(digit(e, k), digit(f, k)) * stride[k];
      meet[e * total + f] = m;
    }
  }
  std::size_t top = 0;
  for (std::size_t k = 0; k < objects.size(); ++k) top += objects[k].top() * stride[k];
  SlatCocone out{MeetSemilattice::from_meet_table(std::move(labels), std::move(meet)), {}};
  for (std::size_t k = 0; k < objects.size(); ++k) {
    IndexMap leg(objects[k].size());
    for (std::size_t a = 0; a < objects[k].size(); ++a) leg[a] = top - objects[k].top() * stride[k] + a * stride[k];
    out.legs.push_back(std::move(leg));
  }
  return out;
}

SlatCocone copower_slat(const MeetSemilattice& a, std::size_t n) {
  std::vector<MeetSemilattice> copies(n, a);
  return coproduct_slat(copies);
}

SlatCocone coequalizer_slat(const MeetSemilattice& a, const MeetSemilattice& b, const IndexMap& f,
                            const IndexMap& g) {
  require_slat_hom(a, b, f, "coequalizer f");
  require_slat_hom(a, b, g, "coequalizer g");
  std::vector<IndexPair> pairs;
  for (std::size_t x = 0; x < a.size(); ++x) pairs.emplace_back(f[x], g[x]);
  return quotient_cocone({b, {identity_map(b.size())}}, pairs);
}

SlatCocone pushout_slat(const MeetSemilattice& a, const MeetSemilattice& b, const MeetSemilattice& c,
                        const IndexMap& f, const IndexMap& g) {
  require_slat_hom(a, b, f, "pushout f");
  require_slat_hom(a, c, g, "pushout g");
  const MeetSemilattice parts[] = {b, c};
  auto cp = coproduct_slat(parts);
  std::vector<IndexPair> pairs;
  for (std::size_t x = 0; x < a.size(); ++x) pairs.emplace_back(cp.legs[0][f[x]], cp.legs[1][g[x]]);
  return quotient_cocone(cp, pairs);
}

SlatCocone wide_pushout_slat(const MeetSemilattice& a, std::span<const MeetSemilattice> objects,
                             std::span<const IndexMap> maps) {
  if (objects.size() != maps.size()) throw ShapeMismatch("wide pushout needs one map per object");
  if (objects.empty()) return {a, {identity_map(a.size())}};
  for (std::size_t k = 0; k < maps.size(); ++k) require_slat_hom(a, objects[k], maps[k], "wide pushout leg");
  auto cp = coproduct_slat(objects);
  std::vector<IndexPair> pairs;
  for (std::size_t k = 1; k < maps.size(); ++k)
    for (std::size_t x = 0; x < a.size(); ++x) pairs.emplace_back(cp.legs[0][maps[0][x]], cp.legs[k][maps[k][x]]);
  auto out = quotient_cocone(cp, pairs);
  out.legs.insert(out.legs.begin(), compose(out.legs[0], maps[0]));
  return out;
}

SlatTensor tensor_slat(const MeetSemilattice& a, const FinitePoset& w) {
  auto cp = copower_slat(a, w.size());
  const auto& v = cp.vertex;
  std::vector<IndexPair> pairs;
  for (auto [u, u2] : w.pairs()) {
    if (u == u2) continue;
    for (std::size_t x = 0; x < a.size(); ++x)
      pairs.emplace_back(v.meet(cp.legs[u][x], cp.legs[u2][x]), cp.legs[u][x]);
  }
  auto q = quotient_cocone(cp, pairs);
  return {std::move(q.vertex), std::move(q.legs)};
}

SlatCocomma cocomma_slat(const MeetSemilattice& a, const MeetSemilattice& b, const MeetSemilattice& c,
                         const IndexMap& f, const IndexMap& g) {
  require_slat_hom(a, b, f, "cocomma f");
  require_slat_hom(a, c, g, "cocomma g");
  const MeetSemilattice parts[] = {b, c};
  auto cp = coproduct_slat(parts);
  std::vector<IndexPair> pairs;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t r = 0; r < c.size(); ++r)
      for (std::size_t s = 0; s < c.size(); ++s)
        if (r != s && c.leq(g[x], r) && c.leq(g[x], s))
          pairs.emplace_back(f[x] * c.size() + r, f[x] * c.size() + s);
  auto q = quotient_cocone(cp, pairs);
  return {std::move(q.vertex), std::move(q.legs[0]), std::move(q.legs[1])};
}

SlatInserter inserter_slat(const MeetSemilattice& a, const MeetSemilattice& b, const IndexMap& r,
                           const IndexMap& s) {
  require_slat_hom(a, b, r, "inserter r");
  require_slat_hom(a, b, s, "inserter s");
  IndexMap keep;
  std::vector<bool> in(a.size(), false);
  for (std::size_t x = 0; x < a.size(); ++x)
    if (b.leq(r[x], s[x])) {
      keep.push_back(x);
      in[x] = true;
    }
  if (!in[a.top()]) throw InvalidStructure("inserter misses the top");
  for (auto x : keep)
    for (auto y : keep)
      if (!in[a.meet(x, y)]) throw InvalidStructure("inserter not closed under meets");
  return {MeetSemilattice(induced_subposet(a.poset(), keep)), keep};
}

SlatQuotient coinserter_slat(const MeetSemilattice& a, const MeetSemilattice& b, const IndexMap& f,
                             const IndexMap& g) {
  require_slat_hom(a, b, f, "co-inserter f");
  require_slat_hom(a, b, g, "co-inserter g");
  std::vector<IndexPair> pairs;
  for (std::size_t x = 0; x < a.size(); ++x) pairs.emplace_back(b.meet(f[x], g[x]), f[x]);
  return quotient_slat(slat_congruence_closure(b, pairs));
}

WeightedCocone<SlatCat> weighted_colimit_slat(const Diagram<SlatCat>& d, const Weight& w) {
  detail::require_same_shape(w.shape, d.shape);
  validate_weight(w);
  validate_diagram(SlatCat{}, d);
  const auto& s = d.shape;
  std::vector<MeetSemilattice> copies;
  std::vector<std::size_t> offset;
  for (std::size_t i = 0; i < s.object_count(); ++i) {
    offset.push_back(copies.size());
    for (std::size_t u = 0; u < w.at[i].size(); ++u) copies.push_back(d.at[i]);
  }
  auto cp = coproduct_slat(copies);
  auto leg = [&](std::size_t i, std::size_t u) -> const IndexMap& { return cp.legs[offset[i] + u]; };
  const auto& v = cp.vertex;
  std::vector<IndexPair> pairs;
  for (std::size_t i = 0; i < s.object_count(); ++i)
    for (auto [u, u2] : w.at[i].pairs()) {
      if (u == u2) continue;
      for (std::size_t x = 0; x < d.at[i].size(); ++x)
        pairs.emplace_back(v.meet(leg(i, u)[x], leg(i, u2)[x]), leg(i, u)[x]);
    }
  for (std::size_t m = 0; m < s.morphism_count(); ++m) {
    if (s.is_identity(m)) continue;
    const auto i = s.arrow(m).dom, j = s.arrow(m).cod;
    for (std::size_t wv = 0; wv < w.at[j].size(); ++wv)
      for (std::size_t x = 0; x < d.at[i].size(); ++x)
        pairs.emplace_back(leg(j, wv)[d.action[m][x]], leg(i, w.action[m][wv])[x]);
  }
  auto q = quotient_cocone(cp, pairs);
  CoconeComponents<SlatCat> comps(s.object_count());
  for (std::size_t i = 0; i < s.object_count(); ++i)
    for (std::size_t u = 0; u < w.at[i].size(); ++u) comps[i].push_back(q.legs[offset[i] + u]);
  return {d, w, std::move(q.vertex), std::move(comps)};
}

ExtensionOf<VFunctor> universal_V_extension(const FinitePoset& x, const std::vector<MeetSemilattice>& family,
                                            const std::vector<IndexMap>& xi) {
  if (family.size() != xi.size()) throw ShapeMismatch("one map per family member required");
  for (std::size_t i = 0; i < family.size(); ++i) require_monotone(family[i].poset(), x, xi[i], "family map");
  auto ex = free_slat(x);
  const auto& e = ex.object;
  std::vector<IndexPair> pairs;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& c = family[i];
    auto up = [&](std::size_t a) { return ex.unit[xi[i][a]]; };
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b) pairs.emplace_back(up(c.meet(a, b)), e.meet(up(a), up(b)));
    pairs.emplace_back(up(c.top()), e.top());
  }
  auto q = quotient_slat(slat_congruence_closure(e, pairs));
  std::vector<IndexMap> alpha;
  for (std::size_t i = 0; i < family.size(); ++i) {
    alpha.push_back(compose(q.projection, compose(ex.unit, xi[i])));
    require_slat_hom(family[i], q.object, alpha.back(), "induced extension map");
  }
  return family_extension<SlatCat, PosCat>(SlatCat{}, family, x, xi, q.object, std::move(alpha),
                                           compose(q.projection, ex.unit));
}

}  // namespace ordsolid
