#pragma once

// Exhaustive enumeration of small posets, semilattices, frames and spaces,
// labelled or up to isomorphism, in a deterministic order.

#include <vector>

#include "ordsolid/frame.hpp"
#include "ordsolid/topo.hpp"

namespace ordsolid {

enum class StructureKind { poset, semilattice, frame, space };

struct EnumerationSpec {
  StructureKind kind = StructureKind::poset;
  std::size_t size = 1;  // exact size
  bool up_to_iso = true;
};

inline constexpr std::size_t kLabeledPosetCap = 5;
inline constexpr std::size_t kPosetIsoCap = 7;
inline constexpr std::size_t kFrameSizeCap = 9;
inline constexpr std::size_t kSpaceCap = 4;

/// All partial orders on {a, b, ...} by testing every relation.
std::vector<FinitePoset> labeled_posets(std::size_t n);
/// One poset per isomorphism class, grown by adding a maximal element above
/// each down-set of the smaller classes, deduplicated by canonical code.
std::vector<FinitePoset> posets_up_to_iso(std::size_t n);
/// Posets with a top and all binary meets.
std::vector<MeetSemilattice> semilattices(std::size_t n, bool up_to_iso = true);
/// Distributive lattices of size n, from bounded posets (a bottom "0" and top
/// "1" around each poset of size n - 2), up to isomorphism.
std::vector<Frame> frames_up_to_iso(std::size_t n);
/// Every topology on n points, optionally one per homeomorphism class.
std::vector<FiniteSpace> spaces(std::size_t n, bool up_to_iso = true);

/// Number of structures the spec describes.
std::size_t enumeration_count(const EnumerationSpec& spec);

/// Unions of the exact-size lists for sizes lo..hi, up to isomorphism.
std::vector<FinitePoset> poset_universe(std::size_t hi, std::size_t lo = 1);
std::vector<MeetSemilattice> slat_universe(std::size_t hi, std::size_t lo = 1);
std::vector<Frame> frame_universe(std::size_t hi, std::size_t lo = 1);
std::vector<FiniteSpace> space_universe(std::size_t hi, std::size_t lo = 1);

}  // namespace ordsolid
