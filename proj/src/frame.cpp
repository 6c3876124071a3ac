#include "ordsolid/frame.hpp"

#include <map>

namespace ordsolid {

namespace {

void require_frame_hom(const Frame& a, const Frame& b, const IndexMap& f, std::string_view what) {
  if (!is_frame_hom(a, b, f)) throw InvalidStructure(std::string(what) + " is not a frame homomorphism");
}

}  // namespace

Frame::Frame(FinitePoset p) {
  const std::size_t n = p.size();
  if (n == 0) throw InvalidStructure("a frame needs a top and a bottom");
  if (n > kFrameCarrierCap) throw CapExceeded("frame carrier exceeds 64 elements");
  std::vector<std::uint64_t> down(n, 0), up(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p.leq(x, y)) {
        down[y] |= std::uint64_t{1} << x;
        up[x] |= std::uint64_t{1} << y;
      }
  std::map<std::uint64_t, std::size_t> by_down, by_up;
  for (std::size_t x = 0; x < n; ++x) {
    by_down[down[x]] = x;
    by_up[up[x]] = x;
  }
  auto bot = p.bottom();
  if (!p.top() || !bot) throw InvalidStructure("a frame needs a top and a bottom");
  std::vector<std::size_t> meet(n * n);
  join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto m = by_down.find(down[a] & down[b]);
      auto j = by_up.find(up[a] & up[b]);
      if (m == by_down.end() || j == by_up.end())
        throw InvalidStructure("'" + p.label(a) + "' and '" + p.label(b) + "' have no meet or no join");
      meet[a * n + b] = m->second;
      join_[a * n + b] = j->second;
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (meet[x * n + join_[y * n + z]] != join_[meet[x * n + y] * n + meet[x * n + z]])
          throw InvalidStructure("lattice is not distributive at ('" + p.label(x) + "', '" + p.label(y) + "', '" +
                                 p.label(z) + "')");
  slat_ = MeetSemilattice::from_meet_table(p.labels(), std::move(meet));
  bottom_ = *bot;
}

bool is_frame(const FinitePoset& p) {
  try {
    Frame f(p);
    return true;
  } catch (const InvalidStructure&) {
    return false;
  }
}

bool is_frame_hom(const Frame& a, const Frame& b, const IndexMap& f) {
  if (!is_slat_hom(a.slat(), b.slat(), f)) return false;
  if (f[a.bottom()] != b.bottom()) return false;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (f[a.join(x, y)] != b.join(f[x], f[y])) return false;
  return true;
}

std::vector<IndexMap> frame_homs(const Frame& a, const Frame& b, const Caps& caps) {
  struct Eq {
    std::size_t x, y, m, j;
  };
  std::vector<std::vector<Eq>> by_last(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = x + 1; y < a.size(); ++y) {
      const auto m = a.meet(x, y), j = a.join(x, y);
      by_last[std::max({x, y, m, j})].push_back({x, y, m, j});
    }
  std::vector<IndexMap> out;
  enumerate_maps(
      a.size(), b.size(),
      [&](const IndexMap& f, std::size_t k) {
        if (k == a.top() && f[k] != b.top()) return false;
        if (k == a.bottom() && f[k] != b.bottom()) return false;
        for (const auto& e : by_last[k])
          if (f[e.m] != b.meet(f[e.x], f[e.y]) || f[e.j] != b.join(f[e.x], f[e.y])) return false;
        return true;
      },
      [&](const IndexMap& f) {
        out.push_back(f);
        if (out.size() > caps.hom_maps) throw CapExceeded("frame hom enumeration exceeds cap");
      });
  return out;
}

DownSetFrame down_set_frame(const FinitePreorder& x) {
  auto sets = down_sets(x);
  if (sets.size() > kFrameCarrierCap) throw CapExceeded("down-set frame exceeds 64 elements");
  const std::size_t n = sets.size();
  std::vector<std::string> labels;
  std::vector<std::uint8_t> rel(n * n);
  std::map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(subset_label(x, sets[i]));
    index[sets[i]] = i;
    for (std::size_t j = 0; j < n; ++j) rel[i * n + j] = (sets[i] & ~sets[j]) == 0;
  }
  IndexMap unit(x.size());
  for (std::size_t v = 0; v < x.size(); ++v) {
    std::uint64_t down = 0;
    for (std::size_t y = 0; y < x.size(); ++y)
      if (x.leq(y, v)) down |= std::uint64_t{1} << y;
    unit[v] = index.at(down);
  }
  return {Frame(FinitePoset(std::move(labels), std::move(rel))), std::move(unit), std::move(sets)};
}

std::vector<std::size_t> saturated_elements(const Frame& a, std::span<const IndexPair> r) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < a.size(); ++s) {
    bool sat = true;
    for (auto [x, y] : r)
      for (std::size_t c = 0; c < a.size() && sat; ++c) sat = a.leq(a.meet(x, c), s) == a.leq(a.meet(y, c), s);
    if (sat) out.push_back(s);
  }
  return out;
}

FrameQuotient frame_quotient(const Frame& a, std::span<const IndexPair> r) {
  for (auto [x, y] : r)
    if (x >= a.size() || y >= a.size()) throw InvalidStructure("relation pair out of range");
  auto sat = saturated_elements(a, r);
  std::vector<bool> is_sat(a.size(), false);
  std::vector<std::size_t> index(a.size(), a.size());
  for (std::size_t k = 0; k < sat.size(); ++k) {
    is_sat[sat[k]] = true;
    index[sat[k]] = k;
  }
  for (auto s : sat)
    for (auto t : sat)
      if (!is_sat[a.meet(s, t)]) throw InvalidStructure("saturated elements not closed under meets");
  IndexMap projection(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    std::size_t least = a.top();
    for (auto s : sat)
      if (a.leq(x, s)) least = a.meet(least, s);
    projection[x] = index[least];
  }
  return {Frame(induced_subposet(a.poset(), sat)), std::move(projection), std::move(sat)};
}

Certificate frame_quotient_universal(const Frame& a, std::span<const IndexPair> r, const FrameQuotient& q,
                                     const std::vector<Frame>& universe, std::size_t cap) {
  if (!is_frame_hom(a, q.object, q.projection)) return fail(cap, "projection is not a frame homomorphism");
  for (auto [x, y] : r)
    if (q.projection[x] != q.projection[y]) return fail(cap, "projection does not identify a related pair");
  for (std::size_t bi = 0; bi < universe.size(); ++bi) {
    const auto& b = universe[bi];
    std::map<IndexMap, std::size_t> factored;
    for (const auto& h : frame_homs(q.object, b)) ++factored[compose(h, q.projection)];
    for (const auto& g : frame_homs(a, b)) {
      bool respects = true;
      for (auto [x, y] : r) respects = respects && g[x] == g[y];
      if (!respects) continue;
      auto it = factored.find(g);
      if (it == factored.end() || it->second != 1)
        return fail(cap, "test frame #" + std::to_string(bi) + ": a map identifying R does not factor uniquely");
    }
  }
  return {true, cap, {}};
}

ExtensionOf<UFunctor> universal_U_extension(const MeetSemilattice& x, const std::vector<Frame>& family,
                                            const std::vector<IndexMap>& xi) {
  if (family.size() != xi.size()) throw ShapeMismatch("one map per family member required");
  for (std::size_t i = 0; i < family.size(); ++i)
    if (!is_slat_hom(family[i].slat(), x, xi[i])) throw InvalidStructure("family map is not a semilattice hom");
  auto dx = down_set_frame(x.poset());
  const auto& d = dx.object;
  std::vector<IndexPair> r;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& c = family[i];
    if (c.size() > kFramePowersetCap) throw CapExceeded("frame too large for the subset relation scheme");
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << c.size()); ++k) {
      std::size_t join_c = c.bottom(), union_d = d.bottom();
      for (std::size_t a = 0; a < c.size(); ++a)
        if (k >> a & 1) {
          join_c = c.join(join_c, a);
          union_d = d.join(union_d, dx.unit[xi[i][a]]);
        }
      r.emplace_back(dx.unit[xi[i][join_c]], union_d);
    }
  }
  auto fq = frame_quotient(d, r);
  auto q = compose(fq.projection, dx.unit);
  std::vector<IndexMap> alpha;
  for (std::size_t i = 0; i < family.size(); ++i) {
    alpha.push_back(compose(q, xi[i]));
    require_frame_hom(family[i], fq.object, alpha.back(), "induced extension map");
  }
  return family_extension<FrmCat, SlatCat>(FrmCat{}, family, x, xi, std::move(fq.object), std::move(alpha),
                                           std::move(q));
}

FrameCoproduct frame_coproduct(const Frame& a, const Frame& b) {
  const MeetSemilattice parts[] = {a.slat(), b.slat()};
  auto cp = coproduct_slat(parts);
  auto ext = universal_U_extension(cp.vertex, {a, b}, cp.legs);
  FrameCoproduct out{ext.vertex, {ext.alpha[0][0], ext.alpha[1][0]}, std::move(ext)};
  return out;
}

FrameInserter inserter_frm(const Frame& a, const Frame& b, const IndexMap& r, const IndexMap& s) {
  require_frame_hom(a, b, r, "inserter r");
  require_frame_hom(a, b, s, "inserter s");
  IndexMap keep;
  for (std::size_t x = 0; x < a.size(); ++x)
    if (b.leq(r[x], s[x])) keep.push_back(x);
  return {Frame(induced_subposet(a.poset(), keep)), keep};
}

FinitePoset join_irreducibles(const Frame& a) {
  IndexMap keep;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (x == a.bottom()) continue;
    std::size_t below = a.bottom();
    for (std::size_t y = 0; y < a.size(); ++y)
      if (y != x && a.leq(y, x)) below = a.join(below, y);
    if (below != x) keep.push_back(x);
  }
  return induced_subposet(a.poset(), keep);
}

}  // namespace ordsolid
