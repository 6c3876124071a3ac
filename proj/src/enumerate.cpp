#include "ordsolid/enumerate.hpp"

#include <set>

namespace ordsolid {

std::vector<FinitePoset> labeled_posets(std::size_t n) {
  if (n > kLabeledPosetCap) throw CapExceeded("labelled poset enumeration limited to 5 elements");
  std::vector<IndexPair> off;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) off.emplace_back(a, b);
  std::vector<FinitePoset> out;
  const auto labels = letter_labels(n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << off.size()); ++bits) {
    std::vector<std::uint8_t> rel(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) rel[a * n + a] = 1;
    for (std::size_t k = 0; k < off.size(); ++k)
      if (bits >> k & 1) rel[off[k].first * n + off[k].second] = 1;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (a != b && rel[a * n + b] && rel[b * n + a]) ok = false;
        for (std::size_t c = 0; c < n && ok; ++c)
          if (rel[a * n + b] && rel[b * n + c] && !rel[a * n + c]) ok = false;
      }
    if (ok) out.emplace_back(labels, std::move(rel));
  }
  return out;
}

std::vector<FinitePoset> posets_up_to_iso(std::size_t n) {
  if (n > kPosetIsoCap) throw CapExceeded("poset enumeration up to isomorphism limited to 7 elements");
  std::vector<FinitePoset> level{FinitePoset({}, {})};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<FinitePoset> next;
    std::set<std::vector<std::uint8_t>> seen;
    const auto labels = letter_labels(k);
    for (const auto& p : level)
      for (auto d : down_sets(p)) {
        std::vector<std::uint8_t> rel(k * k, 0);
        for (std::size_t a = 0; a + 1 < k; ++a) {
          for (std::size_t b = 0; b + 1 < k; ++b) rel[a * k + b] = p.leq(a, b);
          rel[a * k + k - 1] = d >> a & 1;
        }
        rel[k * k - 1] = 1;
        FinitePoset q(labels, std::move(rel));
        if (seen.insert(canonical_code(q)).second) next.push_back(std::move(q));
      }
    level = std::move(next);
  }
  return level;
}

std::vector<MeetSemilattice> semilattices(std::size_t n, bool up_to_iso) {
  std::vector<MeetSemilattice> out;
  for (const auto& p : up_to_iso ? posets_up_to_iso(n) : labeled_posets(n))
    if (is_meet_semilattice(p)) out.emplace_back(p);
  return out;
}

std::vector<Frame> frames_up_to_iso(std::size_t n) {
  if (n > kFrameSizeCap) throw CapExceeded("frame enumeration limited to 9 elements");
  std::vector<Frame> out;
  if (n == 0) return out;
  if (n == 1) {
    out.emplace_back(FinitePoset::single("0"));
    return out;
  }
  for (const auto& mid : posets_up_to_iso(n - 2)) {
    std::vector<std::string> labels{"0"};
    for (std::size_t a = 0; a < mid.size(); ++a) labels.push_back(mid.label(a));
    labels.push_back("1");
    std::vector<std::uint8_t> rel(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      rel[0 * n + a] = 1;
      rel[a * n + n - 1] = 1;
    }
    for (std::size_t a = 0; a < mid.size(); ++a)
      for (std::size_t b = 0; b < mid.size(); ++b) rel[(a + 1) * n + b + 1] = mid.leq(a, b);
    FinitePoset p(std::move(labels), std::move(rel));
    if (is_frame(p)) out.emplace_back(std::move(p));
  }
  return out;
}

std::vector<FiniteSpace> spaces(std::size_t n, bool up_to_iso) {
  if (n > kSpaceCap) throw CapExceeded("space enumeration limited to 4 points");
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> proper;
  for (std::uint64_t m = 1; m < all; ++m) proper.push_back(m);
  std::vector<FiniteSpace> out;
  std::set<std::vector<std::uint8_t>> seen;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << proper.size()); ++pick) {
    std::set<std::uint64_t> opens{0, all};
    for (std::size_t k = 0; k < proper.size(); ++k)
      if (pick >> k & 1) opens.insert(proper[k]);
    bool closed = true;
    for (auto u : opens)
      for (auto v : opens)
        if (!opens.count(u | v) || !opens.count(u & v)) closed = false;
    if (!closed) continue;
    FiniteSpace sp(letter_labels(n), {opens.begin(), opens.end()});
    if (up_to_iso && !seen.insert(canonical_code(specialization(sp))).second) continue;
    out.push_back(std::move(sp));
  }
  return out;
}

std::size_t enumeration_count(const EnumerationSpec& spec) {
  switch (spec.kind) {
    case StructureKind::poset:
      return spec.up_to_iso ? posets_up_to_iso(spec.size).size() : labeled_posets(spec.size).size();
    case StructureKind::semilattice:
      return semilattices(spec.size, spec.up_to_iso).size();
    case StructureKind::frame:
      if (!spec.up_to_iso) throw CapExceeded("labelled frame enumeration is not provided");
      return frames_up_to_iso(spec.size).size();
    case StructureKind::space:
      return spaces(spec.size, spec.up_to_iso).size();
  }
  return 0;
}

std::vector<FinitePoset> poset_universe(std::size_t hi, std::size_t lo) {
  std::vector<FinitePoset> out;
  for (std::size_t n = lo; n <= hi; ++n)
    for (auto& p : posets_up_to_iso(n)) out.push_back(std::move(p));
  return out;
}

std::vector<MeetSemilattice> slat_universe(std::size_t hi, std::size_t lo) {
  std::vector<MeetSemilattice> out;
  for (std::size_t n = lo; n <= hi; ++n)
    for (auto& s : semilattices(n)) out.push_back(std::move(s));
  return out;
}

std::vector<Frame> frame_universe(std::size_t hi, std::size_t lo) {
  std::vector<Frame> out;
  for (std::size_t n = lo; n <= hi; ++n)
    for (auto& f : frames_up_to_iso(n)) out.push_back(std::move(f));
  return out;
}

std::vector<FiniteSpace> space_universe(std::size_t hi, std::size_t lo) {
  std::vector<FiniteSpace> out;
  for (std::size_t n = lo; n <= hi; ++n)
    for (auto& s : spaces(n)) out.push_back(std::move(s));
  return out;
}

}  // namespace ordsolid
