#include "ordsolid/pos_weighted.hpp"

namespace ordsolid {

namespace {

// Adds `generated` to the order of base.vertex, reflects, and pushes every
// leg through the quotient.
PosCocone quotient(const PosCocone& base, const std::vector<IndexPair>& generated) {
  auto pairs = base.vertex.pairs();
  pairs.insert(pairs.end(), generated.begin(), generated.end());
  auto refl = posetal_reflection(FinitePreorder::closure(base.vertex.labels(), pairs));
  PosCocone out{std::move(refl.poset), {}};
  for (const auto& leg : base.legs) out.legs.push_back(compose(refl.quotient, leg));
  return out;
}

void identify(std::vector<IndexPair>& out, std::size_t x, std::size_t y) {
  out.emplace_back(x, y);
  out.emplace_back(y, x);
}

}  // namespace

PosCocone coproduct_pos(std::span<const FinitePoset> objects) {
  if (objects.size() == 1) return {objects[0], {identity_map(objects[0].size())}};
  std::vector<std::string> labels;
  std::vector<IndexPair> pairs;
  PosCocone out;
  for (std::size_t k = 0; k < objects.size(); ++k) {
    const auto& o = objects[k];
    const std::string prefix = objects.size() == 2 ? (k == 0 ? "inl:" : "inr:") : "in" + std::to_string(k) + ":";
    const std::size_t off = labels.size();
    IndexMap leg(o.size());
    for (std::size_t x = 0; x < o.size(); ++x) {
      labels.push_back(prefix + o.label(x));
      leg[x] = off + x;
    }
    for (auto [x, y] : o.pairs()) pairs.emplace_back(off + x, off + y);
    out.legs.push_back(std::move(leg));
  }
  out.vertex = FinitePoset::from_pairs(std::move(labels), pairs);
  return out;
}

PosCocone coequalizer_pos(const FinitePoset& a, const FinitePoset& b, const IndexMap& f, const IndexMap& g) {
  require_monotone(a, b, f, "coequalizer f");
  require_monotone(a, b, g, "coequalizer g");
  std::vector<IndexPair> gen;
  for (std::size_t x = 0; x < a.size(); ++x) identify(gen, f[x], g[x]);
  return quotient({b, {identity_map(b.size())}}, gen);
}

PosCocone pushout_pos(const FinitePoset& a, const FinitePoset& b, const FinitePoset& c, const IndexMap& f,
                      const IndexMap& g) {
  require_monotone(a, b, f, "pushout f");
  require_monotone(a, c, g, "pushout g");
  const FinitePoset parts[] = {b, c};
  auto cp = coproduct_pos(parts);
  std::vector<IndexPair> gen;
  for (std::size_t x = 0; x < a.size(); ++x) identify(gen, cp.legs[0][f[x]], cp.legs[1][g[x]]);
  return quotient(cp, gen);
}

PosCocone wide_pushout_pos(const FinitePoset& a, std::span<const FinitePoset> objects,
                           std::span<const IndexMap> maps) {
  if (objects.size() != maps.size()) throw ShapeMismatch("wide pushout needs one map per object");
  if (objects.empty()) return {a, {identity_map(a.size())}};
  for (std::size_t k = 0; k < maps.size(); ++k) require_monotone(a, objects[k], maps[k], "wide pushout leg");
  auto cp = coproduct_pos(objects);
  std::vector<IndexPair> gen;
  for (std::size_t k = 1; k < maps.size(); ++k)
    for (std::size_t x = 0; x < a.size(); ++x) identify(gen, cp.legs[0][maps[0][x]], cp.legs[k][maps[k][x]]);
  auto out = quotient(cp, gen);
  out.legs.insert(out.legs.begin(), compose(out.legs[0], maps[0]));
  return out;
}

PosCocone conical_colimit_pos(ConicalKind kind, const ConicalData& data) {
  const auto& o = data.objects;
  const auto& m = data.maps;
  switch (kind) {
    case ConicalKind::coproduct:
      if (!m.empty()) throw ShapeMismatch("coproduct takes no maps");
      return coproduct_pos(o);
    case ConicalKind::coequalizer:
      if (o.size() != 2 || m.size() != 2) throw ShapeMismatch("coequalizer takes objects {A,B} and maps {f,g}");
      return coequalizer_pos(o[0], o[1], m[0], m[1]);
    case ConicalKind::pushout:
      if (o.size() != 3 || m.size() != 2) throw ShapeMismatch("pushout takes objects {A,B,C} and maps {f,g}");
      return pushout_pos(o[0], o[1], o[2], m[0], m[1]);
    case ConicalKind::wide_pushout:
      if (o.empty() || m.size() + 1 != o.size())
        throw ShapeMismatch("wide pushout takes objects {A,B_0,...} and one map per B_k");
      return wide_pushout_pos(o[0], std::span(o).subspan(1), m);
  }
  throw ShapeMismatch("unknown conical kind");
}

InserterResult inserter_pos(const FinitePoset& a, const FinitePoset& b, const IndexMap& r, const IndexMap& s) {
  require_monotone(a, b, r, "inserter r");
  require_monotone(a, b, s, "inserter s");
  IndexMap keep;
  for (std::size_t x = 0; x < a.size(); ++x)
    if (b.leq(r[x], s[x])) keep.push_back(x);
  return {induced_subposet(a, keep), keep};
}

CoinserterResult coinserter_pos(const FinitePoset& a, const FinitePoset& b, const IndexMap& f, const IndexMap& g) {
  require_monotone(a, b, f, "co-inserter f");
  require_monotone(a, b, g, "co-inserter g");
  std::vector<IndexPair> gen;
  for (std::size_t x = 0; x < a.size(); ++x) gen.emplace_back(f[x], g[x]);
  auto q = quotient({b, {identity_map(b.size())}}, gen);
  return {std::move(q.vertex), std::move(q.legs[0])};
}

CocommaResult cocomma_pos(const FinitePoset& a, const FinitePoset& b, const FinitePoset& c, const IndexMap& f,
                          const IndexMap& g) {
  require_monotone(a, b, f, "cocomma f");
  require_monotone(a, c, g, "cocomma g");
  const FinitePoset parts[] = {b, c};
  auto cp = coproduct_pos(parts);
  auto pairs = cp.vertex.pairs();
  for (std::size_t y = 0; y < b.size(); ++y)
    for (std::size_t z = 0; z < c.size(); ++z)
      for (std::size_t x = 0; x < a.size(); ++x)
        if (b.leq(y, f[x]) && c.leq(g[x], z)) {
          pairs.emplace_back(cp.legs[0][y], cp.legs[1][z]);
          break;
        }
  return {FinitePoset::from_pairs(cp.vertex.labels(), pairs), cp.legs[0], cp.legs[1]};
}

TensorResult tensor_pos(const FinitePoset& w, const FinitePoset& a) {
  TensorResult out{product_poset(w, a), {}};
  for (std::size_t u = 0; u < w.size(); ++u) {
    IndexMap lam(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) lam[x] = u * a.size() + x;
    out.injections.push_back(std::move(lam));
  }
  return out;
}

CocommaResult cocomma_via_coinserter(const FinitePoset& a, const FinitePoset& b, const FinitePoset& c,
                                     const IndexMap& f, const IndexMap& g) {
  const FinitePoset parts[] = {b, c};
  auto cp = coproduct_pos(parts);
  auto ci = coinserter_pos(a, cp.vertex, compose(cp.legs[0], f), compose(cp.legs[1], g));
  return {ci.object, compose(ci.projection, cp.legs[0]), compose(ci.projection, cp.legs[1])};
}

CoinserterResult coinserter_via_cocomma(const FinitePoset& a, const FinitePoset& b, const IndexMap& f,
                                        const IndexMap& g) {
  auto cc = cocomma_pos(a, b, b, f, g);
  auto ce = coequalizer_pos(b, cc.object, cc.p, cc.q);
  return {ce.vertex, compose(ce.legs[0], cc.p)};
}

WeightedCocone<PosCat> weighted_colimit_pos(const Diagram<PosCat>& d, const Weight& w) {
  detail::require_same_shape(w.shape, d.shape);
  validate_weight(w);
  validate_diagram(PosCat{}, d);
  const auto& s = d.shape;
  // element (i, u, x) of the coproduct of the Wi x Di
  std::vector<std::size_t> offset;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < s.object_count(); ++i) {
    offset.push_back(labels.size());
    for (std::size_t u = 0; u < w.at[i].size(); ++u)
      for (std::size_t x = 0; x < d.at[i].size(); ++x)
        labels.push_back(s.object_name(i) + ":(" + w.at[i].label(u) + "," + d.at[i].label(x) + ")");
  }
  auto idx = [&](std::size_t i, std::size_t u, std::size_t x) { return offset[i] + u * d.at[i].size() + x; };
  std::vector<IndexPair> pairs;
  for (std::size_t i = 0; i < s.object_count(); ++i)
    for (auto [u, u2] : w.at[i].pairs())
      for (auto [x, x2] : d.at[i].pairs()) pairs.emplace_back(idx(i, u, x), idx(i, u2, x2));
  for (std::size_t m = 0; m < s.morphism_count(); ++m) {
    if (s.is_identity(m)) continue;
    const auto i = s.arrow(m).dom, j = s.arrow(m).cod;
    for (std::size_t v = 0; v < w.at[j].size(); ++v)
      for (std::size_t x = 0; x < d.at[i].size(); ++x) identify(pairs, idx(j, v, d.action[m][x]), idx(i, w.action[m][v], x));
  }
  auto refl = posetal_reflection(FinitePreorder::closure(std::move(labels), pairs));
  CoconeComponents<PosCat> comps(s.object_count());
  for (std::size_t i = 0; i < s.object_count(); ++i)
    for (std::size_t u = 0; u < w.at[i].size(); ++u) {
      IndexMap alpha(d.at[i].size());
      for (std::size_t x = 0; x < d.at[i].size(); ++x) alpha[x] = refl.quotient[idx(i, u, x)];
      comps[i].push_back(std::move(alpha));
    }
  return {d, w, std::move(refl.poset), std::move(comps)};
}

}  // namespace ordsolid
