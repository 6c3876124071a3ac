#pragma once

// Seeded generators and brute-force oracles shared by the unit tests. The
// oracles deliberately avoid the library code they are compared against.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ordsolid/enumerate.hpp"

namespace ordsolid::testing {

using Rng = std::mt19937_64;

inline Rng rng_for(std::uint64_t seed) { return Rng(seed * 0x9e3779b97f4a7c15ULL + 1); }

inline std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

/// Random poset on n points: a random strict relation compatible with a
/// random linear order, closed transitively.
inline FinitePoset random_poset(Rng& rng, std::size_t n, double density = 0.4) {
  std::vector<std::size_t> rank(n);
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);
  std::bernoulli_distribution edge(density);
  std::vector<IndexPair> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (rank[a] < rank[b] && edge(rng)) pairs.emplace_back(a, b);
  return FinitePoset::from_pairs(letter_labels(n), pairs);
}

/// Random preorder: a random relation closed reflexively and transitively.
inline FinitePreorder random_preorder(Rng& rng, std::size_t n, double density = 0.3) {
  std::bernoulli_distribution edge(density);
  std::vector<IndexPair> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && edge(rng)) pairs.emplace_back(a, b);
  return FinitePreorder::closure(letter_labels(n), pairs);
}

/// Same order moved along the permutation perm (element i becomes perm[i]).
inline FinitePoset permuted(const FinitePoset& p, const std::vector<std::size_t>& perm) {
  const std::size_t n = p.size();
  std::vector<std::uint8_t> rel(n * n, 0);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[perm[a]] = p.label(a);
    for (std::size_t b = 0; b < n; ++b) rel[perm[a] * n + perm[b]] = p.leq(a, b);
  }
  return FinitePoset(std::move(labels), std::move(rel));
}

inline std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Every function dom -> cod in lexicographic order, by counting in base
/// |cod| with the last position least significant.
inline std::vector<IndexMap> all_functions(std::size_t dom, std::size_t cod) {
  std::vector<IndexMap> out;
  if (cod == 0) {
    if (dom == 0) out.emplace_back();
    return out;
  }
  IndexMap f(dom, 0);
  for (;;) {
    out.push_back(f);
    std::size_t k = dom;
    while (k > 0 && ++f[k - 1] == cod) f[--k] = 0;
    if (k == 0) return out;
  }
}

inline bool brute_monotone(const FinitePreorder& a, const FinitePreorder& b, const IndexMap& f) {
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a.leq(x, y) && !b.leq(f[x], f[y])) return false;
  return true;
}

inline std::vector<IndexMap> brute_monotone_maps(const FinitePreorder& a, const FinitePreorder& b) {
  std::vector<IndexMap> out;
  for (auto& f : all_functions(a.size(), b.size()))
    if (brute_monotone(a, b, f)) out.push_back(f);
  return out;
}

/// Isomorphism by trying every bijection.
inline bool brute_isomorphic(const FinitePreorder& a, const FinitePreorder& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < a.size() && ok; ++x)
      for (std::size_t y = 0; y < a.size() && ok; ++y)
        if (a.leq(x, y) != b.leq(perm[x], perm[y])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Relations on n points that are reflexive, antisymmetric and transitive,
/// counted directly from the bit patterns of the full relation.
inline std::vector<std::vector<std::uint8_t>> brute_poset_relations(std::size_t n) {
  std::vector<std::vector<std::uint8_t>> out;
  const std::size_t cells = n * n;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
    auto r = [&](std::size_t a, std::size_t b) { return (bits >> (a * n + b) & 1) != 0; };
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = r(a, a);
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (a != b && r(a, b) && r(b, a)) ok = false;
        for (std::size_t c = 0; c < n && ok; ++c)
          if (r(a, b) && r(b, c) && !r(a, c)) ok = false;
      }
    if (!ok) continue;
    std::vector<std::uint8_t> rel(cells);
    for (std::size_t k = 0; k < cells; ++k) rel[k] = bits >> k & 1;
    out.push_back(std::move(rel));
  }
  return out;
}

/// Number of isomorphism classes among the given posets, by pairwise brute
/// isomorphism tests.
inline std::size_t brute_class_count(const std::vector<FinitePoset>& ps) {
  std::vector<const FinitePoset*> reps;
  for (const auto& p : ps) {
    bool seen = false;
    for (auto* r : reps)
      if (brute_isomorphic(*r, p)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(&p);
  }
  return reps.size();
}

}  // namespace ordsolid::testing
