#include "ordsolid/topo.hpp"

#include <algorithm>
#include <set>

namespace ordsolid {

FiniteSpace::FiniteSpace(std::vector<std::string> points, std::vector<std::uint64_t> opens)
    : points_(std::move(points)), opens_(std::move(opens)) {
  if (points_.size() > kSpacePointCap) throw CapExceeded("space exceeds 16 points");
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  for (auto u : opens_)
    if (u & ~full()) throw InvalidStructure("open set mentions a point outside the space");
  if (!is_open(0) || !is_open(full())) throw InvalidStructure("opens must contain the empty set and the whole space");
  for (auto u : opens_)
    for (auto v : opens_)
      if (!is_open(u | v) || !is_open(u & v)) throw InvalidStructure("opens not closed under union and intersection");
}

FiniteSpace::Generated FiniteSpace::generated(std::vector<std::string> points, std::vector<std::uint64_t> opens) {
  if (points.size() > kSpacePointCap) throw CapExceeded("space exceeds 16 points");
  const std::uint64_t all = (std::uint64_t{1} << points.size()) - 1;
  std::set<std::uint64_t> given(opens.begin(), opens.end());
  std::set<std::uint64_t> closed = given;
  closed.insert(0);
  closed.insert(all);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::uint64_t> now(closed.begin(), closed.end());
    for (auto u : now)
      for (auto v : now) {
        if (closed.insert(u | v).second) grew = true;
        if (closed.insert(u & v).second) grew = true;
      }
  }
  std::vector<std::uint64_t> added;
  for (auto u : closed)
    if (!given.count(u)) added.push_back(u);
  return {FiniteSpace(std::move(points), {closed.begin(), closed.end()}), std::move(added)};
}

FiniteSpace FiniteSpace::discrete(std::size_t n) {
  std::vector<std::uint64_t> all;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) all.push_back(m);
  return FiniteSpace(letter_labels(n), std::move(all));
}

FiniteSpace FiniteSpace::indiscrete(std::size_t n) {
  return FiniteSpace(letter_labels(n), {0, (std::uint64_t{1} << n) - 1});
}

FiniteSpace FiniteSpace::sierpinski() { return FiniteSpace({"x", "y"}, {0, 1, 3}); }

bool FiniteSpace::is_open(std::uint64_t mask) const { return std::binary_search(opens_.begin(), opens_.end(), mask); }

FinitePreorder specialization(const FiniteSpace& sp) {
  const std::size_t n = sp.size();
  std::vector<std::uint8_t> rel(n * n, 1);
  for (auto u : sp.opens())
    for (std::size_t y = 0; y < n; ++y)
      if (u >> y & 1)
        for (std::size_t x = 0; x < n; ++x)
          if (!(u >> x & 1)) rel[x * n + y] = 0;
  return FinitePreorder(sp.points(), std::move(rel));
}

bool is_t0(const FiniteSpace& sp) { return specialization(sp).is_antisymmetric(); }

std::uint64_t preimage(const IndexMap& f, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (std::size_t x = 0; x < f.size(); ++x)
    if (mask >> f[x] & 1) out |= std::uint64_t{1} << x;
  return out;
}

bool is_continuous(const FiniteSpace& dom, const FiniteSpace& cod, const IndexMap& f) {
  if (f.size() != dom.size()) return false;
  for (auto x : f)
    if (x >= cod.size()) return false;
  for (auto u : cod.opens())
    if (!dom.is_open(preimage(f, u))) return false;
  return true;
}

std::vector<IndexMap> continuous_maps(const FiniteSpace& dom, const FiniteSpace& cod, const Caps& caps) {
  // continuous maps are monotone for the specialization preorders; the
  // preimage test then filters the candidates
  std::vector<IndexMap> out;
  for (auto& f : monotone_maps(specialization(dom), specialization(cod), caps))
    if (is_continuous(dom, cod, f)) out.push_back(std::move(f));
  return out;
}

T0Reflection t0_reflection(const FiniteSpace& sp) {
  auto refl = posetal_reflection(specialization(sp));
  std::vector<std::uint64_t> opens;
  for (auto u : sp.opens()) {
    std::uint64_t image = 0;
    for (std::size_t x = 0; x < sp.size(); ++x)
      if (u >> x & 1) image |= std::uint64_t{1} << refl.quotient[x];
    opens.push_back(image);
  }
  return {FiniteSpace(refl.poset.labels(), std::move(opens)), std::move(refl.quotient)};
}

ExtensionOf<SPrimeFunctor> universal_S_extension(const FinitePreorder& x, const std::vector<FiniteSpace>& family,
                                                 const std::vector<IndexMap>& xi) {
  if (family.size() != xi.size()) throw ShapeMismatch("one map per family member required");
  for (std::size_t i = 0; i < family.size(); ++i) require_monotone(specialization(family[i]), x, xi[i], "family map");
  std::vector<std::uint64_t> tau;
  for (auto u : down_sets(x)) {
    bool open = true;
    for (std::size_t i = 0; i < family.size() && open; ++i) open = family[i].is_open(preimage(xi[i], u));
    if (open) tau.push_back(u);
  }
  FiniteSpace vertex(x.labels(), std::move(tau));
  return family_extension<TopCat, OrdCat>(TopCat{}, family, x, xi, std::move(vertex), xi, identity_map(x.size()));
}

}  // namespace ordsolid
